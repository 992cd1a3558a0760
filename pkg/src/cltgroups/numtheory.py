"""Elementary number theory at desk scale.

Everything here is trial division or direct iteration; the integers that
flow through the group constructions are small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .errors import DomainError

DIRICHLET_SEARCH_CAP = 10**6


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its prime decomposition.

    ``parts`` lists ``(prime, exponent)`` pairs with strictly increasing
    primes.
    """

    value: int
    parts: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.parts:
            if p <= last or e < 1 or not is_prime(p):
                raise DomainError(f"invalid factorization part {(p, e)}")
            prod *= p**e
            last = p
        if prod != self.value:
            raise DomainError(f"parts multiply to {prod}, not {self.value}")

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.parts]

    @property
    def prime_powers(self) -> List[int]:
        return [p**e for p, e in self.parts]

    def __str__(self) -> str:
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.parts)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for i in range(3, math.isqrt(n) + 1, 2):
        if n % i == 0:
            return False
    return True


def factorize(n: int) -> Factorization:
    """Trial-division factorization of ``n >= 2``."""
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    parts = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            parts.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        parts.append((m, 1))
    return Factorization(n, tuple(parts))


def prime_set(n: int) -> frozenset:
    """pi(n): the set of primes dividing n (empty for n = 1)."""
    if n == 1:
        return frozenset()
    return frozenset(factorize(n).primes)


def tau(n: int) -> int:
    """Number of positive divisors of ``n``."""
    if n < 1:
        raise DomainError(f"tau needs n >= 1, got {n}")
    if n == 1:
        return 1
    return math.prod(e + 1 for _, e in factorize(n).parts)


def divisors(n: int) -> List[int]:
    """Sorted list of the positive divisors of ``n``."""
    if n < 1:
        raise DomainError(f"divisors needs n >= 1, got {n}")
    divs = [1]
    if n > 1:
        for p, e in factorize(n).parts:
            divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mult_order(a: int, m: int) -> int:
    """Smallest ``e >= 1`` with ``a**e == 1 (mod m)``, by direct iteration."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise DomainError(f"{a} is not a unit modulo {m}")
    a %= m
    x = a
    e = 1
    while x != 1:
        x = x * a % m
        e += 1
        if e > m:
            raise RuntimeError("mult_order iteration exceeded the modulus")
    return e


def is_prime_power(n: int) -> bool:
    if n < 2:
        raise DomainError(f"is_prime_power needs n >= 2, got {n}")
    return len(factorize(n).parts) == 1


def find_dirichlet_prime(q: int, excluded: Iterable[int] = ()) -> int:
    """Smallest prime ``p`` outside ``excluded`` with ``q | p + 1``.

    Scans the progression ``p = -1 (mod q)`` upward.
    """
    if q < 3 or not is_prime(q):
        raise DomainError(f"q must be an odd prime, got {q}")
    excluded = set(excluded)
    p = q - 1
    for _ in range(DIRICHLET_SEARCH_CAP):
        if p not in excluded and is_prime(p):
            return p
        p += q
    raise RuntimeError(f"no prime = -1 mod {q} within {DIRICHLET_SEARCH_CAP} candidates")
