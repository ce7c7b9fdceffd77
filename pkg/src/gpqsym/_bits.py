"""Small bitmask helpers shared by the combinatorial modules.

Element ``i`` of a ground set of positive integers sits on bit ``i - 1``.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Callable, Hashable, Iterable, Iterator, Sequence


def to_mask(s: Iterable[int]) -> int:
    m = 0
    for i in s:
        m |= 1 << (i - 1)
    return m


def from_mask(m: int) -> frozenset:
    return frozenset(i + 1 for i in range(m.bit_length()) if m >> i & 1)


def popcount(m: int) -> int:
    return bin(m).count("1")


def bits(m: int) -> list[int]:
    """Bit positions set in ``m``, ascending (0-based)."""
    return [i for i in range(m.bit_length()) if m >> i & 1]


def submasks(m: int) -> Iterator[int]:
    """All submasks of ``m`` including 0 and ``m``, in increasing order."""
    sub = 0
    while True:
        yield sub
        if sub == m:
            return
        sub = (sub - m) & m


def compress(mask: int, ground: int) -> int:
    """Re-index the bits of ``mask`` (a submask of ``ground``) to 0..k-1, order-preserving."""
    out, j = 0, 0
    g = ground
    i = 0
    while g:
        if g & 1:
            if mask >> i & 1:
                out |= 1 << j
            j += 1
        g >>= 1
        i += 1
    return out


def permute(mask: int, perm: Sequence[int]) -> int:
    """Send bit ``i`` to bit ``perm[i]``."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def refined_permutations(invariants: Sequence[Hashable]) -> Iterator[tuple[int, ...]]:
    """Relabelings that sort points by an isomorphism-invariant key.

    Points are grouped into cells of equal invariant, cells are laid out in
    sorted invariant order and every permutation inside each cell is tried.
    Minimizing a form over these relabelings yields a canonical form.
    """
    n = len(invariants)
    cells: dict = {}
    for i, inv in enumerate(invariants):
        cells.setdefault(inv, []).append(i)
    ordered = [cells[k] for k in sorted(cells)]
    offsets, off = [], 0
    for cell in ordered:
        offsets.append(off)
        off += len(cell)
    for choice in product(*(permutations(c) for c in ordered)):
        perm = [0] * n
        for cell_perm, start in zip(choice, offsets):
            for j, src in enumerate(cell_perm):
                perm[src] = start + j
        yield tuple(perm)


def canonical_min(n: int, invariants: Sequence[Hashable], form: Callable[[Sequence[int]], Hashable]):
    best = None
    for perm in refined_permutations(invariants):
        cand = form(perm)
        if best is None or cand < best:
            best = cand
    return (tuple(sorted(invariants)), best)


class DSU:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def classes(self) -> list[list[int]]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return sorted((sorted(v) for v in out.values()), key=lambda c: c[0])
