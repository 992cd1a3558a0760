"""Permutation groups with a full, BFS-ordered element table.

Permutations are tuples of 0-based images. The product ``a * b`` applies
``a`` first, then ``b``: ``compose(a, b)[i] == b[a[i]]``. Points are 1-based
only in the text file format at the bottom of this module.

Subgroups are passed around as collections of element indices into the
parent group's element table; the canonical form is a sorted tuple.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, ResourceError

Perm = Tuple[int, ...]

ELEMENT_CAP = 10**5
TABLE_CAP = 6000


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(a: Perm, b: Perm) -> Perm:
    """``a`` then ``b``."""
    return tuple(b[x] for x in a)


def invert(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def check_perm(images: Sequence[int], degree: int) -> Perm:
    perm = tuple(images)
    if len(perm) != degree or sorted(perm) != list(range(degree)):
        raise DomainError(f"{list(images)} is not a permutation of {degree} points")
    return perm


def from_cycles(degree: int, *cycles: Sequence[int]) -> Perm:
    """Build a permutation from 1-based cycles, e.g. ``from_cycles(4, (1, 2), (3, 4))``."""
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            images[a - 1] = b - 1
    return check_perm(images, degree)


def perm_order(a: Perm) -> int:
    seen = [False] * len(a)
    order = 1
    for start in range(len(a)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


class PermGroup:
    """A permutation group with its elements listed in BFS order from the identity."""

    def __init__(self, degree: int, generators: List[Perm], elements: List[Perm],
                 parent: List[int], via: List[int], rmul: List[List[int]]):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.index: Dict[Perm, int] = {e: i for i, e in enumerate(elements)}
        self._parent = parent
        self._via = via
        self._rmul = rmul

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"

    @property
    def generator_indices(self) -> List[int]:
        return [self.index[g] for g in self.generators]

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        n = self.order
        if n > TABLE_CAP:
            raise ResourceError(f"multiplication table for order {n} exceeds the cap {TABLE_CAP}")
        dtype = np.int16 if n < 2**15 else np.int32
        rmul = [np.asarray(r, dtype=dtype) for r in self._rmul]
        T = np.empty((n, n), dtype=dtype)
        T[:, 0] = np.arange(n, dtype=dtype)
        # elements[j] = elements[parent[j]] * gen[via[j]]
        for j in range(1, n):
            T[:, j] = rmul[self._via[j]][T[:, self._parent[j]]]
        return T

    @cached_property
    def inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self.table == 0)
        inv = np.empty(self.order, dtype=np.int64)
        inv[rows] = cols
        return inv

    def element_orders(self) -> List[int]:
        return [perm_order(e) for e in self.elements]

    def mask(self, subset: Iterable[int]) -> np.ndarray:
        m = np.zeros(self.order, dtype=bool)
        idx = np.fromiter(subset, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= self.order):
            raise DomainError("subgroup index outside the element table")
        m[idx] = True
        return m


def generate(degree: int, gens: Sequence[Sequence[int]], cap: int = ELEMENT_CAP) -> PermGroup:
    """Breadth-first closure of ``gens``; raises ResourceError past ``cap`` elements."""
    gens = [check_perm(g, degree) for g in gens]
    ident = identity(degree)
    elements = [ident]
    index = {ident: 0}
    parent, via = [-1], [-1]
    rmul: List[List[int]] = [[] for _ in gens]
    i = 0
    while i < len(elements):
        e = elements[i]
        for gi, g in enumerate(gens):
            y = compose(e, g)
            j = index.get(y)
            if j is None:
                if len(elements) >= cap:
                    raise ResourceError(f"group closure exceeds the element cap {cap}")
                j = len(elements)
                index[y] = j
                elements.append(y)
                parent.append(i)
                via.append(gi)
            rmul[gi].append(j)
        i += 1
    return PermGroup(degree, gens, elements, parent, via, rmul)


def trivial_group(degree: int = 1) -> PermGroup:
    return generate(degree, [])


def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise DomainError(f"cyclic group order must be >= 1, got {n}")
    return generate(n, [tuple((i + 1) % n for i in range(n))])


def symmetric_group(n: int, cap: int = ELEMENT_CAP) -> PermGroup:
    if n < 1:
        raise DomainError(f"symmetric group degree must be >= 1, got {n}")
    if n == 1:
        return trivial_group(1)
    gens = [from_cycles(n, (1, 2))]
    if n > 2:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return generate(n, gens, cap)


def direct_product(G: PermGroup, H: PermGroup, cap: int = ELEMENT_CAP) -> PermGroup:
    """G on points ``0..deg(G)-1``, H on the following block."""
    if G.order * H.order > cap:
        raise ResourceError(f"direct product of order {G.order * H.order} exceeds the cap {cap}")
    dg, dh = G.degree, H.degree
    gens = [tuple(g) + tuple(range(dg, dg + dh)) for g in G.generators]
    gens += [tuple(range(dg)) + tuple(x + dg for x in h) for h in H.generators]
    return generate(dg + dh, gens, cap)


def closure(G: PermGroup, subset: Iterable[int]) -> Tuple[int, ...]:
    """Subgroup of G generated by the given element indices."""
    T = G.table
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens = np.unique(np.fromiter(subset, dtype=np.int64))
    frontier = np.array([0])
    while frontier.size:
        cand = np.unique(T[np.ix_(frontier, gens)].ravel()) if gens.size else np.array([], dtype=int)
        new = cand[~mask[cand]]
        mask[new] = True
        frontier = new
    return tuple(np.flatnonzero(mask).tolist())


def is_subgroup(G: PermGroup, H: Iterable[int]) -> bool:
    m = G.mask(H)
    idx = np.flatnonzero(m)
    if idx.size == 0 or not m[0]:
        return False
    return bool(m[G.table[np.ix_(idx, idx)]].all())


def _require_subgroup(G: PermGroup, H: Iterable[int]) -> np.ndarray:
    m = G.mask(H)
    if not is_subgroup(G, np.flatnonzero(m)):
        raise DomainError("element set is not closed under the group operation")
    return m


def is_normal(G: PermGroup, H: Iterable[int]) -> bool:
    """True iff ``g h g^-1`` lies in H for every generator g of G and every h in H."""
    m = _require_subgroup(G, H)
    idx = np.flatnonzero(m)
    T, inv = G.table, G.inverses
    for g in G.generator_indices:
        conj = T[T[inv[g], idx], g]
        if not m[conj].all():
            return False
    return True


def conjugation_maps(G: PermGroup) -> List[np.ndarray]:
    """For each generator g, the index map ``x -> g^-1 x g``."""
    T, inv = G.table, G.inverses
    return [T[T[inv[g], :], g] for g in G.generator_indices]


def small_generating_set(G: PermGroup, H: Iterable[int]) -> List[int]:
    """Greedy generating set for the subgroup H (element indices)."""
    gens: List[int] = []
    span = {0}
    for h in sorted(H):
        if h not in span:
            gens.append(h)
            span = set(closure(G, gens))
    return gens


def subgroup_as_group(G: PermGroup, H: Iterable[int]) -> Tuple[PermGroup, List[int]]:
    """Materialize a subgroup as its own PermGroup.

    Returns the group and, for each of its elements, the index of the same
    permutation in G.
    """
    H = list(H)
    gens = [G.elements[h] for h in small_generating_set(G, H)]
    K = generate(G.degree, gens)
    return K, [G.index[e] for e in K.elements]


def quotient_group(G: PermGroup, N: Iterable[int]) -> PermGroup:
    """G/N as the permutation action of G on the cosets of N.

    Cosets are numbered in order of their first element in G's table.
    """
    m = _require_subgroup(G, N)
    if not is_normal(G, np.flatnonzero(m)):
        raise DomainError("quotient requires a normal subgroup")
    idx = np.flatnonzero(m)
    T = G.table
    coset = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for x in range(G.order):
        if coset[x] < 0:
            coset[T[idx, x]] = len(reps)
            reps.append(x)
    gens = [tuple(int(coset[T[r, g]]) for r in reps) for g in G.generator_indices]
    return generate(len(reps), gens)


def intersection(H: Iterable[int], K: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(set(H) & set(K)))


def centralizes_nothing(G: PermGroup, H: Iterable[int], N: Iterable[int]) -> bool:
    """True iff no nonidentity element of H commutes with a nonidentity element of N."""
    h = np.array([x for x in H if x != 0], dtype=np.int64)
    n = np.array([x for x in N if x != 0], dtype=np.int64)
    if h.size == 0 or n.size == 0:
        return True
    T = G.table
    return not (T[np.ix_(h, n)] == T[np.ix_(n, h)].T).any()


def find_frobenius_complement(G: PermGroup, N: Iterable[int]) -> Optional[Tuple[int, ...]]:
    """A complement H of the normal subgroup N acting fixed-point-freely, if any."""
    from .spectrum import enumerate_subgroups

    N = tuple(sorted(N))
    if len(N) in (1, G.order) or not is_normal(G, N):
        return None
    target = G.order // len(N)
    for H in enumerate_subgroups(G):
        if len(H) == target and intersection(H, N) == (0,) and centralizes_nothing(G, H, N):
            return H
    return None


def verify_frobenius(G: PermGroup, N: Iterable[int]) -> bool:
    """Frobenius test: N normal with a complement whose nontrivial elements centralize no nontrivial element of N."""
    return find_frobenius_complement(G, N) is not None


IN_KERNEL = "in_kernel"
TRIVIAL_MEET = "trivial_meet"
FROBENIUS_SUB = "frobenius_sub"


def classify_in_frobenius(G: PermGroup, N: Iterable[int], K: Iterable[int]) -> str:
    """Which alternative of the Frobenius subgroup trichotomy K falls under.

    The trivial subgroup satisfies both of the first two alternatives; it is
    reported as ``in_kernel``.
    """
    N, K = set(N), set(K)
    if K <= N:
        return IN_KERNEL
    meet = K & N
    if meet == {0}:
        return TRIVIAL_MEET
    sub, back = subgroup_as_group(G, K)
    where = {g: i for i, g in enumerate(back)}
    if not verify_frobenius(sub, [where[x] for x in meet]):
        raise AssertionError("subgroup meets the kernel nontrivially but is not Frobenius")
    return FROBENIUS_SUB


# --- text file format -------------------------------------------------------

class GroupFileError(DomainError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_group_file(text: str, cap: int = ELEMENT_CAP) -> PermGroup:
    """Parse ``degree N`` followed by ``gen i1 ... iN`` lines (1-based images)."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head == "degree":
            if degree is not None:
                raise GroupFileError(lineno, "duplicate degree line")
            if len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise GroupFileError(lineno, "expected 'degree <N>' with N >= 1")
            degree = int(rest[0])
        elif head == "gen":
            if degree is None:
                raise GroupFileError(lineno, "gen line before degree line")
            try:
                images = [int(x) - 1 for x in rest]
                gens.append(check_perm(images, degree))
            except (ValueError, DomainError) as exc:
                raise GroupFileError(lineno, f"bad generator: {exc}") from None
        else:
            raise GroupFileError(lineno, f"unknown directive {head!r}")
    if degree is None:
        raise GroupFileError(0, "missing degree line")
    return generate(degree, gens, cap)


def format_group_file(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines += ["gen " + " ".join(str(x + 1) for x in g) for g in G.generators]
    return "\n".join(lines) + "\n"
