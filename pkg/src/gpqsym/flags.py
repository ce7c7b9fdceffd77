"""Flags of subsets of ``{1..n}``, stored as ordered set partitions.

A flag ``0 = F_0 < F_1 < ... < F_{k+1} = [n]`` is kept as its list of
difference blocks ``F_j minus F_{j-1}``.  Throughout the package the blocks
are ordered by *increasing* weight: for a weight vector ``omega`` the first
block holds the coordinates with the smallest value.  With that orientation
the lattice-point enumerator of a braid cone is exactly ``M_type``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_N = 9


@dataclass(frozen=True)
class Flag:
    blocks: tuple[frozenset, ...]

    def __post_init__(self):
        blocks = tuple(frozenset(int(x) for x in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set = set()
        for b in blocks:
            if not b:
                raise ValueError("flag blocks must be nonempty")
            if seen & b:
                raise ValueError("flag blocks must be disjoint")
            seen |= b
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError(f"flag blocks must cover 1..n, got {sorted(seen)}")

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> Flag:
        return cls(tuple(frozenset(b) for b in blocks))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def length(self) -> int:
        """Number of proper nonempty subsets in the chain: blocks minus one."""
        return len(self.blocks) - 1

    def __len__(self) -> int:
        return self.length

    def chain(self) -> list[frozenset]:
        """The subsets ``F_1 < ... < F_{k+1} = [n]``."""
        out, acc = [], frozenset()
        for b in self.blocks:
            acc = acc | b
            out.append(acc)
        return out

    def masks(self) -> tuple[int, ...]:
        """Blocks as bitmasks, element ``i`` on bit ``i - 1``."""
        return tuple(sum(1 << (i - 1) for i in b) for b in self.blocks)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Flag:
        return cls(tuple(frozenset(i + 1 for i in range(m.bit_length()) if m >> i & 1) for m in masks))

    def to_json(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    @classmethod
    def from_json(cls, data) -> Flag:
        return cls(tuple(frozenset(b) for b in data))

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)
        return f"Flag({inner})"


def _check_n(n: int, max_n: int) -> None:
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in 1..{max_n}, got {n}")


@lru_cache(maxsize=16)
def _mask_flags(n: int) -> tuple[tuple[int, ...], ...]:
    out = []

    def rec(remaining: int, prefix: tuple):
        if not remaining:
            out.append(prefix)
            return
        # nonempty submasks of `remaining` in increasing binary order
        sub = 0
        while True:
            sub = (sub - remaining) & remaining
            if not sub:
                break
            rec(remaining & ~sub, prefix + (sub,))

    rec((1 << n) - 1, ())
    return tuple(out)


def enumerate_flag_masks(n: int, max_n: int = DEFAULT_MAX_N) -> tuple[tuple[int, ...], ...]:
    """All ordered set partitions of ``{1..n}`` as tuples of block bitmasks."""
    _check_n(n, max_n)
    return _mask_flags(n)


def enumerate_flags(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Flag]:
    """Yield every flag on ``{1..n}`` once, in a fixed order.

    The first block runs over nonempty subsets in binary-mask order, then the
    rest is filled recursively.
    """
    for masks in enumerate_flag_masks(n, max_n):
        yield Flag.from_masks(masks)


def flag_type(f: Flag) -> tuple[int, ...]:
    return tuple(len(b) for b in f.blocks)


def opposite(f: Flag) -> Flag:
    return Flag(f.blocks[::-1])


def refines(f: Flag, g: Flag) -> bool:
    """True iff every block of ``g`` is a union of consecutive blocks of ``f``."""
    if f.n != g.n:
        raise ValueError(f"ground sizes differ: {f.n} vs {g.n}")
    i = 0
    for gb in g.blocks:
        acc: frozenset = frozenset()
        while i < len(f.blocks) and len(acc) < len(gb):
            acc = acc | f.blocks[i]
            i += 1
        if acc != gb:
            return False
    return i == len(f.blocks)


def coarsenings(f: Flag) -> Iterator[Flag]:
    """All flags refined by ``f``; there are ``2 ** f.length`` of them."""
    k = len(f.blocks)
    for mask in range(1 << (k - 1)):
        blocks, acc = [], f.blocks[0]
        for i in range(1, k):
            if mask >> (i - 1) & 1:
                blocks.append(acc)
                acc = f.blocks[i]
            else:
                acc = acc | f.blocks[i]
        blocks.append(acc)
        yield Flag(tuple(blocks))


def flag_from_weight(omega: Sequence[int]) -> Flag:
    """Flag whose braid cone contains ``omega`` in its relative interior.

    Blocks are the level sets of ``omega`` in increasing order of value.
    """
    omega = list(omega)
    if not omega:
        raise ValueError("weight vector must be nonempty")
    if any(w < 1 for w in omega):
        raise ValueError(f"weights must be positive integers: {omega}")
    levels: dict[int, set] = {}
    for i, w in enumerate(omega, start=1):
        levels.setdefault(w, set()).add(i)
    return Flag(tuple(frozenset(levels[w]) for w in sorted(levels)))


def flag_masks_from_weight(omega: Sequence[int]) -> tuple[int, ...]:
    levels: dict[int, int] = {}
    for i, w in enumerate(omega):
        levels[w] = levels.get(w, 0) | (1 << i)
    return tuple(levels[w] for w in sorted(levels))
