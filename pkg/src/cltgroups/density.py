"""Approximating targets in (0, 1] by CLT-degrees of explicit groups.

The building blocks are the groups G(p, q, n) = (C_p^2 ⋊ C_q) × C_q^n, whose
degree is (3n+5)/(3n+6). Degrees multiply over direct products of groups of
coprime order, so a finite index set I with one prime pair per index gives
a group of degree prod_{n in I} (3n+5)/(3n+6).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .constructions import g_pqn, g_pqn_description
from .errors import DomainError
from .numtheory import find_dirichlet_prime, is_prime
from .permgroup import PermGroup, direct_product, trivial_group
from .spectrum import oracle_cap, spectrum

ORACLE_VERIFIED = "oracle_verified"
CERTIFICATE_ONLY = "certificate_only"
MAX_ORDER_DIGITS = 4000


def lemma32_value(n: int) -> Fraction:
    """CLT-degree of G(p, q, n): (3n+5)/(3n+6)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return Fraction(3 * n + 5, 3 * n + 6)


def verify_lemma32(p: int, q: int, n: int, cap: Optional[int] = None) -> bool:
    """Oracle check: G(p, q, n) misses exactly the order p*q^(n+1) and has the closed-form degree."""
    G = g_pqn(p, q, n)
    rep = spectrum(G, cap)
    return rep.missing_orders == (p * q ** (n + 1),) and rep.degree == lemma32_value(n)


@dataclass
class ApproxResult:
    target: Fraction
    epsilon: Fraction
    index_set: Tuple[int, ...]
    product: Fraction
    pairs: List[Tuple[int, int, int]]

    @property
    def witness_order(self) -> int:
        return math.prod(p * p * q ** (n + 1) for p, q, n in self.pairs)

    @property
    def witness_order_factorization(self) -> List[Tuple[int, int]]:
        # the pairs use pairwise distinct primes, so exponents never merge
        return sorted([(p, 2) for p, _, _ in self.pairs] + [(q, n + 1) for _, q, n in self.pairs])

    @property
    def witness_order_log10(self) -> float:
        return sum(e * math.log10(p) for p, e in self.witness_order_factorization)


def _greedy_indices(t: Fraction, eps: Fraction) -> Tuple[Tuple[int, ...], Fraction]:
    chosen = []
    P = Fraction(1)
    n = 0
    while P - t >= eps:
        f = lemma32_value(n)
        if P * f >= t:
            P *= f
            chosen.append(n)
        n += 1
    return tuple(chosen), P


def assign_pairs(indices: Tuple[int, ...]) -> List[Tuple[int, int, int]]:
    """One (p, q, n) per index, all 2k primes distinct.

    q runs through the odd primes in increasing order, skipping any already
    used; p is the least unused prime with q | p + 1.
    """
    used: set = set()
    pairs = []
    q = 1
    for n in indices:
        q += 2
        while not is_prime(q) or q in used:
            q += 2
        p = find_dirichlet_prime(q, used | {q})
        used |= {p, q}
        pairs.append((p, q, n))
    return pairs


def approximate_target(t, eps) -> ApproxResult:
    """Greedy finite product of (3n+5)/(3n+6) landing in [t, t + eps).

    Scans n = 0, 1, 2, ... and keeps a factor whenever the running product
    stays >= t. Once n is skipped, P - t < P/(3n+6), so the gap closes.
    """
    t, eps = Fraction(t), Fraction(eps)
    if not 0 < t <= 1:
        raise DomainError(f"target must lie in (0, 1], got {t}")
    if eps <= 0:
        raise DomainError(f"epsilon must be positive, got {eps}")
    indices, P = _greedy_indices(t, eps)
    return ApproxResult(t, eps, indices, P, assign_pairs(indices))


@dataclass
class Witness:
    description: str
    order: Optional[int]  # None once the exact integer would exceed MAX_ORDER_DIGITS digits
    verified: str
    group: Optional[PermGroup] = field(default=None, repr=False)
    degree: Optional[Fraction] = None


def witness_description(result: ApproxResult, cap: Optional[int] = None) -> Witness:
    """Describe the product group and, when it fits the oracle cap, build and check it."""
    cap = oracle_cap() if cap is None else cap
    if not result.pairs:
        desc = "1"
    else:
        desc = " × ".join(g_pqn_description(p, q, n) for p, q, n in result.pairs)
    log10 = result.witness_order_log10
    if log10 >= MAX_ORDER_DIGITS:
        return Witness(desc, None, CERTIFICATE_ONLY)
    order = result.witness_order
    if order > cap:
        return Witness(desc, order, CERTIFICATE_ONLY)
    G = trivial_group(1)
    for p, q, n in result.pairs:
        G = direct_product(G, g_pqn(p, q, n))
    degree = spectrum(G, cap).degree
    if degree != result.product:
        raise AssertionError(f"witness degree {degree} differs from the product {result.product}")
    return Witness(desc, order, ORACLE_VERIFIED, G, degree)


def result_to_dict(result: ApproxResult, witness: Optional[Witness] = None) -> dict:
    """JSON-ready summary. Past MAX_ORDER_DIGITS digits the order is given only by its factorization."""
    factors = result.witness_order_factorization
    log10 = result.witness_order_log10
    out = {
        "target": f"{result.target.numerator}/{result.target.denominator}",
        "epsilon": f"{result.epsilon.numerator}/{result.epsilon.denominator}",
        "index_set": list(result.index_set),
        "product": f"{result.product.numerator}/{result.product.denominator}",
        "pairs": [list(pqn) for pqn in result.pairs],
        "witness_order": None,
        "witness_order_factorization": [list(pe) for pe in factors],
        "witness_order_log10": round(log10, 3),
    }
    if log10 < MAX_ORDER_DIGITS:
        out["witness_order"] = result.witness_order
    if witness is not None:
        out["description"] = witness.description
        out["verification"] = witness.verified
    return out
