"""Affine groups over finite fields and groups with no subgroup of a given order.

``theorem1_construct(d)`` follows the induction on the number of distinct
primes of d:

* two primes, ``d = p1^n1 * p2^n2``: pick the orientation where
  ``a = ord(p1 mod p2^n2)`` does not divide n1, take the least r with
  ``r*a > n1`` and return ``C_p1^(ra) ⋊ C_(p2^n2)`` inside AGL(1, p1^(ra)).
  A subgroup of order d there would be Frobenius with kernel of order
  ``p1^n1`` and complement of order ``p2^n2``, forcing ``p2^n2 | p1^n1 - 1``,
  i.e. ``a | n1``.
* three or more primes: strip the largest prime power and take the direct
  product of the recursive witness with a cyclic group of that order.

The order-q multiplications in ``g_pqn`` act irreducibly on C_p^2: they act
without fixed points, and since q is odd with ``q | p + 1`` we get
``q ∤ p - 1``, so no 1-dimensional subspace of GF(p)^2 is invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .errors import DomainError, ResourceError
from .finitefield import FIELD_SIZE_CAP, field_construct
from .numtheory import Factorization, factorize, is_prime, mult_order, prime_set
from .permgroup import ELEMENT_CAP, PermGroup, cyclic_group, direct_product, generate
from .spectrum import has_subgroup_of_order, oracle_cap

ORACLE_VERIFIED = "oracle_verified"
CERTIFICATE_ONLY = "certificate_only"


def _affine_generators(p: int, m: int, h: int) -> tuple:
    F = field_construct(p, m)
    q = F.size
    if (q - 1) % h:
        raise DomainError(f"{h} does not divide {p}^{m} - 1 = {q - 1}")
    gens = [tuple(F.add(x, p**i) for x in range(q)) for i in range(m)]
    if h > 1:
        c = F.pow(F.primitive, (q - 1) // h)
        gens.append(tuple(F.mul(c, x) for x in range(q)))
    return q, gens


def frobenius_subgroup(p: int, m: int, h: int, cap: int = ELEMENT_CAP) -> PermGroup:
    """C_p^m ⋊ C_h inside AGL(1, p^m): all translations and multiplication by an element of order h."""
    if h < 1:
        raise DomainError(f"h must be >= 1, got {h}")
    if p**m * h > cap:
        raise ResourceError(f"order {p}^{m}*{h} exceeds the element cap {cap}")
    q, gens = _affine_generators(p, m, h)
    return generate(q, gens, cap)


def agl1(p: int, m: int, cap: int = ELEMENT_CAP) -> PermGroup:
    """AGL(1, p^m) acting on the p^m field elements."""
    return frobenius_subgroup(p, m, p**m - 1, cap)


def translation_subgroup(G: PermGroup, p: int, m: int) -> tuple:
    """Indices of the translations x -> x + t of an affine group on p^m points."""
    F = field_construct(p, m)
    q = F.size
    return tuple(sorted(G.index[tuple(F.add(x, t) for x in range(q))] for t in range(q)))


def _check_pq(p: int, q: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if q % 2 == 0 or not is_prime(q):
        raise DomainError(f"q must be an odd prime, got {q}")
    if q == p:
        raise DomainError("p and q must differ")
    if (p + 1) % q:
        raise DomainError(f"{q} does not divide {p} + 1")


def g_pqn(p: int, q: int, n: int, cap: int = ELEMENT_CAP) -> PermGroup:
    """(C_p^2 ⋊ C_q) × C_q^n."""
    _check_pq(p, q)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if p * p * q ** (n + 1) > cap:
        raise ResourceError(f"order {p * p * q ** (n + 1)} exceeds the element cap {cap}")
    G = frobenius_subgroup(p, 2, q, cap)
    for _ in range(n):
        G = direct_product(G, cyclic_group(q), cap)
    return G


def g_pqn_description(p: int, q: int, n: int) -> str:
    core = f"(C_{p}^2 ⋊ C_{q})"
    if n == 0:
        return core
    return core + f" × C_{q}" + (f"^{n}" if n > 1 else "")


# --- missing-order recursion ------------------------------------------------

@dataclass
class TraceStep:
    kind: str
    # case1
    p1: Optional[int] = None
    n1: Optional[int] = None
    p2: Optional[int] = None
    n2: Optional[int] = None
    a: Optional[int] = None
    r: Optional[int] = None
    order: Optional[int] = None
    # case2: the stripped prime power and the reduced target
    stripped_prime: Optional[int] = None
    stripped_exponent: Optional[int] = None
    reduced_d: Optional[int] = None

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}

    @classmethod
    def from_dict(cls, data: dict) -> "TraceStep":
        return cls(**data)


@dataclass
class ConstructionCert:
    d: Factorization
    description: str
    order: int
    trace: List[TraceStep]
    verified: str
    group: Optional[PermGroup] = field(default=None, repr=False)
    full_agl: bool = False
    missing_confirmed: Optional[bool] = None

    def to_dict(self) -> dict:
        out = {
            "d": self.d.value,
            "factorization": [list(pe) for pe in self.d.parts],
            "description": self.description,
            "order": self.order,
            "full_agl": self.full_agl,
            "trace": [s.to_dict() for s in self.trace],
            "verified": self.verified,
            "missing_order_confirmed": self.missing_confirmed,
        }
        if self.group is not None:
            out["degree"] = self.group.degree
            out["generators"] = [[x + 1 for x in g] for g in self.group.generators]
        return out


def _choose_orientation(d: Factorization) -> TraceStep:
    (pa, na), (pb, nb) = d.parts
    best = None
    for p1, n1, p2, n2 in ((pa, na, pb, nb), (pb, nb, pa, na)):
        a = mult_order(p1, p2**n2)
        if n1 % a == 0:
            continue
        r = n1 // a + 1
        step = TraceStep("case1", p1=p1, n1=n1, p2=p2, n2=n2, a=a, r=r, order=p1 ** (r * a) * p2**n2)
        if best is None or (step.order, step.p1) < (best.order, best.p1):
            best = step
    if best is None:
        raise AssertionError(f"no valid orientation for {d}; impossible for distinct primes")
    return best


def plan(d: int) -> List[TraceStep]:
    """The recursion trace for d, outermost step first; pure arithmetic."""
    if d < 6:
        raise DomainError(f"d must be >= 6 and not a prime power, got {d}")
    f = factorize(d)
    if len(f.parts) == 1:
        raise DomainError(f"{d} is a prime power; every group of order divisible by it has such a subgroup")
    if len(f.parts) == 2:
        return [_choose_orientation(f)]
    pk, nk = f.parts[-1]
    reduced = d // pk**nk
    return [TraceStep("case2", stripped_prime=pk, stripped_exponent=nk, reduced_d=reduced)] + plan(reduced)


def check_trace(d: int, trace: List[TraceStep]) -> None:
    """Assert the arithmetic invariants of every step; raises AssertionError."""
    target = d
    for step in trace:
        if step.kind == "case2":
            pe = step.stripped_prime**step.stripped_exponent
            assert step.stripped_prime == max(factorize(target).primes)
            assert target % pe == 0 and step.reduced_d == target // pe
            assert step.reduced_d % step.stripped_prime != 0
            target = step.reduced_d
        elif step.kind == "case1":
            p1, n1, p2, n2, a, r = step.p1, step.n1, step.p2, step.n2, step.a, step.r
            assert p1**n1 * p2**n2 == target, "case1 step does not match the reduced d"
            assert a == mult_order(p1, p2**n2)
            assert n1 % a != 0, "a divides n1"
            assert (r - 1) * a < n1 < r * a, "r out of range"
            assert (p1 ** (r * a) - 1) % p2**n2 == 0, "p2^n2 does not divide p1^(ra) - 1"
            assert step.order == p1 ** (r * a) * p2**n2
        else:
            raise AssertionError(f"unknown trace step {step.kind!r}")
    assert trace and trace[-1].kind == "case1"


def describe(trace: List[TraceStep], full_agl: bool) -> tuple:
    base = trace[-1]
    m = base.r * base.a
    h = base.p1**m - 1 if full_agl else base.p2**base.n2
    power = f"^{m}" if m > 1 else ""
    desc = f"(C_{base.p1}{power} ⋊ C_{h})"
    order = base.p1**m * h
    for step in reversed(trace[:-1]):
        pe = step.stripped_prime**step.stripped_exponent
        desc += f" × C_{pe}"
        order *= pe
    return desc, order


def _build(trace: List[TraceStep], full_agl: bool) -> PermGroup:
    base = trace[-1]
    m = base.r * base.a
    if full_agl:
        G = agl1(base.p1, m)
    else:
        G = frobenius_subgroup(base.p1, m, base.p2**base.n2)
    for step in reversed(trace[:-1]):
        G = direct_product(G, cyclic_group(step.stripped_prime**step.stripped_exponent))
    return G


def theorem1_construct(d: int, full_agl: bool = False, verify: bool = True,
                       cap: Optional[int] = None, materialize: bool = False) -> ConstructionCert:
    """A solvable group G with d | |G|, pi(G) = pi(d) and no subgroup of order d.

    The group is built when its order is within the oracle cap (``cap``) and
    then oracle-checked unless ``verify`` is off. ``materialize`` also builds
    larger witnesses, up to the field and element caps.
    """
    trace = plan(d)
    check_trace(d, trace)
    description, order = describe(trace, full_agl)
    assert order % d == 0 and prime_set(order) == prime_set(d)

    cap = oracle_cap() if cap is None else cap
    base = trace[-1]
    group = None
    fits = base.p1 ** (base.r * base.a) <= FIELD_SIZE_CAP and order <= ELEMENT_CAP
    if fits and (order <= cap or materialize):
        group = _build(trace, full_agl)
        assert group.order == order

    verified, confirmed = CERTIFICATE_ONLY, None
    if verify and group is not None and order <= cap:
        confirmed = not has_subgroup_of_order(group, d, cap)
        if not confirmed:
            raise AssertionError(f"oracle found a subgroup of order {d} in {description}")
        verified = ORACLE_VERIFIED
    return ConstructionCert(factorize(d), description, order, trace, verified, group, full_agl, confirmed)
