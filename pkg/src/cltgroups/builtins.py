"""Named groups available from the command line."""

from __future__ import annotations

import itertools
from typing import Callable, Dict, List, Tuple

from .constructions import agl1, g_pqn
from .errors import DomainError
from .permgroup import PermGroup, cyclic_group, from_cycles, generate, symmetric_group

# documented orders, checked by the test suite
BUILTIN_ORDERS = {"A4": 12, "S3": 6, "S4": 24, "S5": 120, "S6": 720, "SL23": 24, "V4": 4, "Q8": 8}


def _matrix_group(mats: List[Tuple[Tuple[int, int], Tuple[int, int]]], p: int = 3) -> PermGroup:
    """Matrices over GF(p) acting on the nonzero column vectors of GF(p)^2."""
    vecs = [v for v in itertools.product(range(p), repeat=2) if v != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def act(m, v):
        return ((m[0][0] * v[0] + m[0][1] * v[1]) % p, (m[1][0] * v[0] + m[1][1] * v[1]) % p)

    return generate(len(vecs), [tuple(pos[act(m, v)] for v in vecs) for m in mats])


def sl23() -> PermGroup:
    return _matrix_group([((1, 1), (0, 1)), ((1, 0), (1, 1))])


def q8() -> PermGroup:
    return _matrix_group([((0, 2), (1, 0)), ((1, 1), (1, 2))])


NAMED: Dict[str, Callable[[], PermGroup]] = {
    "A4": lambda: generate(4, [from_cycles(4, (1, 2), (3, 4)), from_cycles(4, (1, 2, 3))]),
    "S3": lambda: symmetric_group(3),
    "S4": lambda: symmetric_group(4),
    "S5": lambda: symmetric_group(5),
    "S6": lambda: symmetric_group(6),
    "SL23": sl23,
    "V4": lambda: generate(4, [from_cycles(4, (1, 2), (3, 4)), from_cycles(4, (1, 3), (2, 4))]),
    "Q8": q8,
}

PARAMETRIC = {"agl": (2, agl1), "cyclic": (1, cyclic_group), "gpqn": (3, g_pqn), "sym": (1, symmetric_group)}


def resolve(name: str) -> PermGroup:
    """Look up ``A4``, ``SL23``, ... or a parametric form such as ``agl:3:2`` or ``gpqn:2:3:1``."""
    if name in NAMED:
        return NAMED[name]()
    head, *args = name.split(":")
    if head not in PARAMETRIC:
        known = ", ".join(list(NAMED) + [f"{k}:..." for k in PARAMETRIC])
        raise DomainError(f"unknown builtin {name!r} (known: {known})")
    arity, build = PARAMETRIC[head]
    if len(args) != arity or not all(a.isdigit() for a in args):
        raise DomainError(f"builtin {head} takes {arity} non-negative integer parameter(s)")
    return build(*map(int, args))
