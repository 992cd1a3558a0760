"""Explicit GF(p^m) with integer-indexed elements.

An element is the coefficient vector ``(c_0, ..., c_{m-1})`` of a polynomial
of degree < m, encoded as the index ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``.
Index 0 is zero and index 1 is one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .errors import DomainError, ResourceError
from .numtheory import factorize, is_prime

FIELD_SIZE_CAP = 10**4


def _poly_mod(a: List[int], f: Sequence[int], p: int) -> List[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f`` (low degree first)."""
    a = list(a)
    m = len(f) - 1
    for top in range(len(a) - 1, m - 1, -1):
        c = a[top] % p
        if c:
            shift = top - m
            for i, fc in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fc) % p
    return [x % p for x in a[:m]] + [0] * max(0, m - len(a))


def _divides(g: Sequence[int], f: Sequence[int], p: int) -> bool:
    return not any(_poly_mod(list(f), g, p))


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division of the monic ``f`` by every monic polynomial of degree <= deg/2."""
    m = len(f) - 1
    if m < 1 or f[-1] % p != 1:
        raise DomainError("expected a monic polynomial of positive degree")
    if m == 1:
        return True
    for k in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if _divides(list(low) + [1], f, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m (low coefficients compared first)."""
    for low in itertools.product(range(p), repeat=m):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


@dataclass(frozen=True)
class FiniteField:
    p: int
    m: int
    modulus: Tuple[int, ...]
    primitive: int = field(default=0)

    @property
    def size(self) -> int:
        return self.p**self.m

    def digits(self, a: int) -> List[int]:
        self._check(a)
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def index(self, coeffs: Sequence[int]) -> int:
        idx = 0
        for c in reversed(list(coeffs)):
            idx = idx * self.p + c % self.p
        return idx

    def _check(self, a: int) -> None:
        if not 0 <= a < self.size:
            raise DomainError(f"element index {a} outside [0, {self.size})")

    def add(self, a: int, b: int) -> int:
        self._check(b)
        return self.index([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        return self.index([-x for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.index(_poly_mod(prod, self.modulus, self.p))

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DomainError("zero has no multiplicative order")
        x, e = a, 1
        while x != 1:
            x = self.mul(x, a)
            e += 1
        return e

    def inverse(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero is not invertible")
        return self.pow(a, self.size - 2)


def field_construct(p: int, m: int, cap: int = FIELD_SIZE_CAP) -> FiniteField:
    """Build GF(p^m) with the canonical modulus and smallest primitive element."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if m < 1:
        raise DomainError(f"extension degree must be >= 1, got {m}")
    if p**m > cap:
        raise ResourceError(f"field size {p}^{m} exceeds the cap {cap}")
    F = FiniteField(p, m, smallest_irreducible(p, m))
    q1 = p**m - 1
    # a has order q-1 iff a^((q-1)/r) != 1 for each prime r | q-1
    cofactors = [q1 // r for r in factorize(q1).primes] if q1 > 1 else []
    for a in range(1, p**m):
        if all(F.pow(a, c) != 1 for c in cofactors):
            return FiniteField(p, m, F.modulus, a)
    raise AssertionError("multiplicative group is not cyclic")
