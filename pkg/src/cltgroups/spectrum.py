"""Brute-force subgroup enumeration and the CLT-degree.

Subgroups are found by join-closure: starting from the trivial subgroup,
every known subgroup H is joined with every element x, ``<H, x>``, until
nothing new appears. Every subgroup is reachable this way since it is the
join of its cyclic subgroups, added one at a time.

Two reductions keep this fast without changing the result:

* only one representative per conjugacy class of subgroups is expanded;
  the others are reached by conjugating (``<H^g, y> = <H, y^(g^-1)>^g``);
* while expanding H, once ``<H, x>`` is known, every ``h1 x^k h2`` with
  ``h1, h2`` in H and ``k`` prime to the order of x gives the same join and
  is skipped.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import DomainError, ResourceError
from .numtheory import divisors, factorize, tau
from .permgroup import (
    PermGroup,
    compose,
    conjugation_maps,
    direct_product,
    is_normal,
    quotient_group,
    small_generating_set,
    symmetric_group,
)

DEFAULT_ORACLE_CAP = 2000
SIMPLE_ENUMERATOR_CAP = 48
SN_FRONTIER = 6
SN_SLOW_FRONTIER = 7

Subgroup = Tuple[int, ...]


def oracle_cap() -> int:
    """Default oracle cap, overridable through ``CLT_ORACLE_CAP``."""
    env = os.environ.get("CLT_ORACLE_CAP")
    return int(env) if env else DEFAULT_ORACLE_CAP


@dataclass
class Lattice:
    """All subgroups of a group as boolean masks over its element table."""

    masks: List[np.ndarray]
    class_count: int

    def subgroups(self) -> List[Subgroup]:
        subs = [tuple(np.flatnonzero(m).tolist()) for m in self.masks]
        subs.sort(key=lambda s: (len(s), s))
        return subs


def _key(mask: np.ndarray) -> bytes:
    return np.packbits(mask).tobytes()


def _join(T: np.ndarray, mask: np.ndarray, gens: Sequence[int]) -> np.ndarray:
    """Subgroup generated by the subgroup ``mask`` and the elements ``gens``."""
    mask = mask.copy()
    g = np.asarray(gens, dtype=np.int64)
    frontier = np.flatnonzero(mask)
    while frontier.size:
        cand = np.unique(T[np.ix_(frontier, g)].ravel())
        cand = cand[~mask[cand]]
        mask[cand] = True
        frontier = cand
    return mask


class _Enumerator:
    def __init__(self, G: PermGroup):
        self.G = G
        self.T = G.table.astype(np.int64)
        self.n = G.order
        self.conj = [c.astype(np.int64) for c in conjugation_maps(G)]
        # powers[x] = the generators x^k (k prime to ord x) of the cyclic group <x>
        self.powers = [self._generators_of_cyclic(x) for x in range(self.n)]

    def _generators_of_cyclic(self, x: int) -> np.ndarray:
        seq = [x]
        y = x
        while y != 0:
            y = int(self.T[y, x])
            seq.append(y)
        order = len(seq)
        return np.array([seq[k - 1] for k in range(1, order + 1) if math.gcd(k, order) == 1])

    def children(self, item, candidates=None, bound=None):
        """Joins ``<H, x>``; with ``bound``, joins whose order does not divide it are dropped."""
        mask, gens = item
        T = self.T
        done = mask.copy()
        h = np.flatnonzero(mask)
        out = []
        for x in range(self.n) if candidates is None else candidates:
            if done[x]:
                continue
            K = _join(T, mask, gens + [x])
            if bound is None or bound % int(K.sum()) == 0:
                out.append((K, gens + [x]))
            left = T[np.ix_(h, self.powers[x])].ravel()
            done[T[np.ix_(left, h)].ravel()] = True
        return out

    def orbit(self, mask: np.ndarray) -> List[np.ndarray]:
        """Conjugacy class of the subgroup ``mask``."""
        orbit = [mask]
        keys = {_key(mask)}
        i = 0
        while i < len(orbit):
            idx = np.flatnonzero(orbit[i])
            for c in self.conj:
                m = np.zeros(self.n, dtype=bool)
                m[c[idx]] = True
                k = _key(m)
                if k not in keys:
                    keys.add(k)
                    orbit.append(m)
            i += 1
        return orbit

    def run(self, workers: int = 1, start=None, candidates=None, bound=None,
            reduce: bool = True, stop_at=None) -> Lattice:
        """Join-closure from ``start`` (default: the trivial subgroup).

        ``candidates`` restricts the elements x tried in ``<H, x>``; ``bound``
        keeps only subgroups whose order divides it; ``reduce`` expands one
        subgroup per conjugacy class, which is only valid when the family
        being enumerated is closed under conjugation. Stops early once a
        subgroup of order ``stop_at`` appears.
        """
        if start is None:
            start = np.zeros(self.n, dtype=bool)
            start[0] = True
            start = (start, [])
        seen: Dict[bytes, np.ndarray] = {}
        classes = 0

        def expand(item):
            return self.children(item, candidates, bound)

        def admit(item):
            nonlocal classes
            classes += 1
            for m in self.orbit(item[0]) if reduce else [item[0]]:
                seen[_key(m)] = m

        admit(start)
        frontier = [start]
        pool = ThreadPoolExecutor(workers) if workers > 1 else None
        try:
            while frontier:
                if pool is None:
                    results = [expand(item) for item in frontier]
                else:
                    results = list(pool.map(expand, frontier))
                nxt = []
                for kids in results:
                    for item in kids:
                        if _key(item[0]) in seen:
                            continue
                        admit(item)
                        nxt.append(item)
                        if stop_at is not None and int(item[0].sum()) == stop_at:
                            return Lattice(list(seen.values()), classes)
                frontier = nxt
        finally:
            if pool is not None:
                pool.shutdown()
        return Lattice(list(seen.values()), classes)


def _check_cap(G: PermGroup, cap: int | None) -> None:
    cap = oracle_cap() if cap is None else cap
    if G.order > cap:
        raise ResourceError(f"group order {G.order} exceeds the oracle cap {cap}")


def lattice(G: PermGroup, cap: int | None = None, workers: int = 1) -> Lattice:
    """Subgroup lattice of G, cached on the group object for single-worker runs."""
    _check_cap(G, cap)
    if workers > 1:
        return _Enumerator(G).run(workers)
    cached = G.__dict__.get("_lattice")
    if cached is None:
        cached = _Enumerator(G).run(1)
        G.__dict__["_lattice"] = cached
    return cached


def enumerate_subgroups(G: PermGroup, cap: int | None = None, workers: int = 1) -> List[Subgroup]:
    """Every subgroup of G as a sorted tuple of element indices.

    Ordered by size, then lexicographically.
    """
    return lattice(G, cap, workers).subgroups()


def enumerate_subgroups_simple(G: PermGroup) -> List[Subgroup]:
    """Reference enumerator working on raw permutations.

    Grows subgroups one element at a time, closing each time by plain BFS
    over compositions. Only meant for small groups.
    """
    if G.order > SIMPLE_ENUMERATOR_CAP:
        raise ResourceError(f"simple enumerator is limited to order {SIMPLE_ENUMERATOR_CAP}")

    def close(gens):
        ident = G.elements[0]
        out = {ident}
        stack = [ident]
        while stack:
            e = stack.pop()
            for g in gens:
                y = compose(e, g)
                if y not in out:
                    out.add(y)
                    stack.append(y)
        return frozenset(out)

    start = frozenset([G.elements[0]])
    found = {start}
    stack = [start]
    while stack:
        H = stack.pop()
        for x in G.elements:
            if x in H:
                continue
            K = close(list(H) + [x])
            if K not in found:
                found.add(K)
                stack.append(K)
    subs = [tuple(sorted(G.index[e] for e in H)) for H in found]
    subs.sort(key=lambda s: (len(s), s))
    return subs


def has_subgroup_of_order(G: PermGroup, k: int, cap: int | None = None) -> bool:
    """Whether G has a subgroup of order k, without enumerating the whole lattice.

    Prime-power orders are settled by Sylow's theorem. Otherwise let p be the
    largest prime dividing k and p^a its part of k. A subgroup K of order k
    contains a subgroup of order p^a, conjugate to one of the class
    representatives P found first; conjugating K, it contains P itself and
    is reached from P by joins that stay inside K, so every intermediate
    order divides k.
    """
    _check_cap(G, cap)
    n = G.order
    if k < 1 or n % k:
        return False
    if k == 1 or len(factorize(k).parts) == 1:
        return True
    p, a = factorize(k).parts[-1]
    enum = _Enumerator(G)
    orders = G.element_orders()
    p_elements = [x for x in range(n) if orders[x] > 1 and p**a % orders[x] == 0]
    p_sub = enum.run(candidates=p_elements, bound=p**a)
    for P in _class_representatives(enum, [m for m in p_sub.masks if m.sum() == p**a]):
        start = (P, small_generating_set(G, np.flatnonzero(P).tolist()))
        found = enum.run(start=start, bound=k, reduce=False, stop_at=k)
        if any(m.sum() == k for m in found.masks):
            return True
    return False


def _class_representatives(enum: _Enumerator, masks: List[np.ndarray]) -> List[np.ndarray]:
    reps = []
    covered = set()
    for m in masks:
        if _key(m) in covered:
            continue
        reps.append(m)
        covered.update(_key(c) for c in enum.orbit(m))
    return reps


def join(G: PermGroup, H: Sequence[int], K: Sequence[int]) -> Subgroup:
    """The subgroup generated by two subgroups."""
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens = list(H) + list(K)
    return tuple(np.flatnonzero(_join(G.table.astype(np.int64), mask, gens)).tolist())


@dataclass(frozen=True)
class SpectrumReport:
    group_order: int
    realized_orders: Tuple[int, ...]
    missing_orders: Tuple[int, ...]
    D: int
    tau: int
    degree: Fraction
    subgroup_count: int
    conjugacy_class_count: int

    def to_dict(self) -> dict:
        return {
            "group_order": self.group_order,
            "realized_orders": list(self.realized_orders),
            "missing_orders": list(self.missing_orders),
            "D": self.D,
            "tau": self.tau,
            "degree": f"{self.degree.numerator}/{self.degree.denominator}",
            "subgroup_count": self.subgroup_count,
            "conjugacy_class_count": self.conjugacy_class_count,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SpectrumReport":
        return cls(
            group_order=data["group_order"],
            realized_orders=tuple(data["realized_orders"]),
            missing_orders=tuple(data["missing_orders"]),
            D=data["D"],
            tau=data["tau"],
            degree=Fraction(data["degree"]),
            subgroup_count=data["subgroup_count"],
            conjugacy_class_count=data["conjugacy_class_count"],
        )


def spectrum(G: PermGroup, cap: int | None = None, workers: int = 1) -> SpectrumReport:
    lat = lattice(G, cap, workers)
    realized = sorted({int(m.sum()) for m in lat.masks})
    divs = divisors(G.order)
    missing = [d for d in divs if d not in set(realized)]
    return SpectrumReport(
        group_order=G.order,
        realized_orders=tuple(realized),
        missing_orders=tuple(missing),
        D=len(realized),
        tau=tau(G.order),
        degree=Fraction(len(realized), len(divs)),
        subgroup_count=len(lat.masks),
        conjugacy_class_count=lat.class_count,
    )


def clt_degree(G: PermGroup, cap: int | None = None) -> Fraction:
    return spectrum(G, cap).degree


def is_clt(G: PermGroup, cap: int | None = None) -> bool:
    return not spectrum(G, cap).missing_orders


def check_report_invariants(report: SpectrumReport) -> None:
    """Raise AssertionError if a report breaks Lagrange, Sylow or the counting identities."""
    n = report.group_order
    realized = set(report.realized_orders)
    assert 1 in realized and n in realized
    assert all(n % d == 0 for d in realized), "Lagrange violated"
    if n > 1:
        for p, e in factorize(n).parts:
            for k in range(1, e + 1):
                assert p**k in realized, f"missing p-subgroup of order {p**k}"
    assert report.D + len(report.missing_orders) == report.tau == tau(n)
    assert realized.isdisjoint(report.missing_orders)
    assert 0 < report.degree <= 1
    assert (report.degree == 1) == (not report.missing_orders)
    assert report.degree == Fraction(report.D, report.tau)


@dataclass(frozen=True)
class LowerBoundCheck:
    degree: Fraction
    bound: Fraction
    equality: bool
    proper_subgroups_prime_power: bool

    @property
    def holds(self) -> bool:
        return self.degree >= self.bound

    def __bool__(self) -> bool:
        return self.holds


def lower_bound(order: int) -> Fraction:
    """(sum n_i + 2) / prod(n_i + 1) for an order with at least two prime factors."""
    parts = factorize(order).parts if order > 1 else ()
    if len(parts) < 2:
        raise DomainError(f"lower bound needs at least two distinct primes, |G| = {order}")
    return Fraction(sum(e for _, e in parts) + 2, math.prod(e + 1 for _, e in parts))


def _is_prime_power_or_one(n: int) -> bool:
    return n == 1 or len(factorize(n).parts) == 1


def check_lower_bound(G: PermGroup, cap: int | None = None) -> LowerBoundCheck:
    bound = lower_bound(G.order)
    rep = spectrum(G, cap)
    proper = [len(H) for H in enumerate_subgroups(G, cap) if len(H) < G.order]
    return LowerBoundCheck(
        degree=rep.degree,
        bound=bound,
        equality=rep.degree == bound,
        proper_subgroups_prime_power=all(_is_prime_power_or_one(k) for k in proper),
    )


@dataclass(frozen=True)
class QuotientCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def __bool__(self) -> bool:
        return self.holds


def check_quotient_inequality(G: PermGroup, N: Sequence[int], cap: int | None = None) -> QuotientCheck:
    """Compare d(G/N) against tau(|G|)/tau(|G/N|) * d(G)."""
    if not is_normal(G, N):
        raise DomainError("quotient inequality needs a normal subgroup")
    Q = quotient_group(G, N)
    lhs = clt_degree(Q, cap)
    rhs = Fraction(tau(G.order), tau(Q.order)) * clt_degree(G, cap)
    return QuotientCheck(lhs, rhs)


@dataclass(frozen=True)
class MultiplicativityCheck:
    product_degree: Fraction
    factor_degrees: Tuple[Fraction, Fraction]

    @property
    def holds(self) -> bool:
        return self.product_degree == self.factor_degrees[0] * self.factor_degrees[1]

    def __bool__(self) -> bool:
        return self.holds


def check_multiplicativity(G1: PermGroup, G2: PermGroup, cap: int | None = None) -> MultiplicativityCheck:
    if math.gcd(G1.order, G2.order) != 1:
        raise DomainError(f"orders {G1.order} and {G2.order} are not coprime")
    prod = direct_product(G1, G2)
    return MultiplicativityCheck(clt_degree(prod, cap), (clt_degree(G1, cap), clt_degree(G2, cap)))


def sn_report(n: int, allow_slow: bool = False, workers: int = 1) -> SpectrumReport:
    """Spectrum of the symmetric group on n points."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    limit = SN_SLOW_FRONTIER if allow_slow else SN_FRONTIER
    if n > limit:
        hint = "" if allow_slow or n > SN_SLOW_FRONTIER else " (pass allow_slow to permit n = 7)"
        raise ResourceError(f"S_{n} is beyond the feasibility frontier n <= {limit}{hint}")
    G = symmetric_group(n)
    cap = max(oracle_cap(), G.order)
    return spectrum(G, cap, workers)
