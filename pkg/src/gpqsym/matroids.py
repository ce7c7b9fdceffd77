"""Matroids given by their bases, and the enumerator of their base polytopes.

Orientation
-----------
Flags elsewhere in the package list blocks by increasing weight.  The face
of ``P_M`` maximized by ``omega`` is built greedily from the *largest*
weights down, so the chain fed to the minor decomposition is read from the
last block to the first.  ``orientation="paper"`` skips that reversal and
reproduces expressions written with the opposite convention; the two
results differ exactly by :func:`gpqsym.qsym.reverse`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Optional, Sequence

from . import _bits
from ._bits import DSU, bits, compress, from_mask, popcount, to_mask
from .errors import ValidationError
from .flags import Flag
from .invariants import RankProvider, fpolynomial, fq_from_provider
from .qpoly import ONE, QPolynomial
from .qsym import M, QSymExpr, concat_product, power_of_m1, unit

ORIENTATIONS = ("canonical", "paper")


@dataclass(frozen=True)
class Matroid:
    """A matroid on a ground set of positive integers, stored as its bases."""

    ground: frozenset
    bases: frozenset

    @cached_property
    def n(self) -> int:
        return len(self.ground)

    @cached_property
    def rank(self) -> int:
        return len(next(iter(self.bases)))

    @cached_property
    def ground_mask(self) -> int:
        return to_mask(self.ground)

    @cached_property
    def base_masks(self) -> frozenset:
        return frozenset(to_mask(B) for B in self.bases)

    def __repr__(self) -> str:
        bs = sorted(sorted(B) for B in self.bases)
        return f"Matroid(ground={sorted(self.ground)}, rank={self.rank}, bases={bs})"

    def to_text(self) -> str:
        if self.ground != frozenset(range(1, self.n + 1)):
            raise ValueError("file format needs ground set 1..n; relabel first")
        lines = [f"{self.n} {self.rank}"]
        lines += [" ".join(map(str, sorted(B))) for B in sorted(sorted(B) for B in self.bases)]
        return "\n".join(lines) + "\n"


def _from_masks(ground_mask: int, base_masks: Iterable[int]) -> Matroid:
    return Matroid(from_mask(ground_mask), frozenset(from_mask(b) for b in base_masks))


def exchange_violation(base_masks: frozenset) -> Optional[tuple[int, int, int]]:
    """First ``(B1, B2, i)`` where no ``j`` in ``B2 - B1`` repairs ``B1 - i``; ``None`` if valid."""
    for B1 in sorted(base_masks):
        for B2 in sorted(base_masks):
            diff = B2 & ~B1
            for i in bits(B1 & ~B2):
                base = B1 & ~(1 << i)
                if not any((base | (1 << j)) in base_masks for j in bits(diff)):
                    return (B1, B2, i)
    return None


def validate(bases: Iterable[Iterable[int]], n: int) -> Matroid:
    """Check equicardinality and the exchange axiom on ``{1..n}``."""
    bs = frozenset(frozenset(int(x) for x in B) for B in bases)
    if not bs:
        raise ValidationError("a matroid needs at least one base")
    ground = frozenset(range(1, n + 1))
    for B in bs:
        if not B <= ground:
            raise ValidationError(f"base {sorted(B)} is not a subset of 1..{n}")
    sizes = {len(B) for B in bs}
    if len(sizes) > 1:
        raise ValidationError(f"bases have different sizes {sorted(sizes)}")
    masks = frozenset(to_mask(B) for B in bs)
    bad = exchange_violation(masks)
    if bad:
        B1, B2, i = bad
        raise ValidationError(
            f"exchange fails for B1={sorted(from_mask(B1))}, B2={sorted(from_mask(B2))}, i={i + 1}"
        )
    return Matroid(ground, bs)


def uniform(n: int, r: int) -> Matroid:
    if not 0 <= r <= n:
        raise ValueError(f"uniform matroid needs 0 <= r <= n, got n={n}, r={r}")
    return Matroid(frozenset(range(1, n + 1)), frozenset(frozenset(c) for c in combinations(range(1, n + 1), r)))


def rank_of(M: Matroid, A: Iterable[int]) -> int:
    a = to_mask(A)
    return max(popcount(b & a) for b in M.base_masks)


def _restrict_masks(base_masks, A: int) -> frozenset:
    inter = {b & A for b in base_masks}
    top = max(popcount(x) for x in inter)
    return frozenset(x for x in inter if popcount(x) == top)


def _contract_masks(base_masks, A: int) -> frozenset:
    top = max(popcount(b & A) for b in base_masks)
    return frozenset(b & ~A for b in base_masks if popcount(b & A) == top)


def restriction(M: Matroid, A: Iterable[int]) -> Matroid:
    """``M|A``: bases are the maximal intersections ``B & A``."""
    a = to_mask(A)
    if a & ~M.ground_mask:
        raise ValueError("restriction set must lie in the ground set")
    return _from_masks(a, _restrict_masks(M.base_masks, a))


def contraction(M: Matroid, A: Iterable[int]) -> Matroid:
    """``M/A``: bases ``B - A`` over bases meeting ``A`` in ``r(A)`` elements."""
    a = to_mask(A)
    if a & ~M.ground_mask:
        raise ValueError("contraction set must lie in the ground set")
    return _from_masks(M.ground_mask & ~a, _contract_masks(M.base_masks, a))


def dual(M: Matroid) -> Matroid:
    g = M.ground_mask
    return _from_masks(g, (g & ~b for b in M.base_masks))


def relabeled(M: Matroid) -> Matroid:
    g = M.ground_mask
    return _from_masks((1 << M.n) - 1, (compress(b, g) for b in M.base_masks))


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """``M1`` on ``1..n1`` plus ``M2`` shifted to ``n1+1..n1+n2``."""
    a, b = relabeled(M1), relabeled(M2)
    return _from_masks(
        (1 << (a.n + b.n)) - 1,
        (x | (y << a.n) for x in a.base_masks for y in b.base_masks),
    )


def _component_masks(ground: int, base_masks) -> list[int]:
    dsu = DSU(bits(ground))
    for b in base_masks:
        outside = ground & ~b
        for i in bits(b):
            rest = b & ~(1 << i)
            for j in bits(outside):
                if (rest | (1 << j)) in base_masks:
                    dsu.union(i, j)
    return [sum(1 << x for x in cls) for cls in dsu.classes()]


def components(M: Matroid) -> list[frozenset]:
    """Classes of the transitive closure of single-element base exchange."""
    return [from_mask(c) for c in _component_masks(M.ground_mask, M.base_masks)]


def num_components(M: Matroid) -> int:
    return len(_component_masks(M.ground_mask, M.base_masks))


def dimension(M: Matroid) -> int:
    """``dim P_M = n - c(M)``."""
    return M.n - num_components(M)


def canonical_form(M: Matroid) -> tuple:
    """Sorted base masks minimized over invariant-respecting relabelings."""
    rm = relabeled(M)
    n = rm.n
    masks = sorted(rm.base_masks)
    inv = [sum(1 for b in masks if b >> i & 1) for i in range(n)]

    def form(perm):
        return tuple(sorted(_bits.permute(b, perm) for b in masks))

    return (n, _bits.canonical_min(n, inv, form)[1])


def isomorphic(M1: Matroid, M2: Matroid) -> bool:
    if M1.n != M2.n or len(M1.bases) != len(M2.bases):
        return False
    return canonical_form(M1) == canonical_form(M2)


# ---------------------------------------------------------------------------
# flags


@dataclass(frozen=True)
class FlagMinorDecomposition:
    """Minors ``(M|F_i)/F_{i-1}`` along a chain, with their component total."""

    minors: tuple
    total_components: int
    flag_rank: int


def _greedy_chain_masks(masks: Sequence[int], orientation: str) -> Sequence[int]:
    if orientation == "canonical":
        return masks[::-1]
    if orientation == "paper":
        return masks
    raise ValueError(f"orientation must be one of {ORIENTATIONS}")


def flag_decomposition(M: Matroid, F: Flag, orientation: str = "canonical") -> FlagMinorDecomposition:
    """Decompose the face of ``P_M`` selected by ``F``.

    With the canonical orientation ``F`` lists blocks by increasing weight and
    the chain is built from its last block backwards.
    """
    if M.ground != frozenset(range(1, M.n + 1)):
        raise ValueError("flag operations need ground set 1..n; relabel first")
    if F.n != M.n:
        raise ValueError(f"flag on {F.n} elements, matroid on {M.n}")
    minors, total, prev = [], 0, 0
    for b in _greedy_chain_masks(F.masks(), orientation):
        cur = prev | b
        restricted = _restrict_masks(M.base_masks, cur)
        minor = _from_masks(cur & ~prev, _contract_masks(restricted, prev))
        minors.append(minor)
        total += num_components(minor)
        prev = cur
    return FlagMinorDecomposition(tuple(minors), total, M.n - total)


class _MinorTable:
    def __init__(self, M: Matroid):
        self.bases = M.base_masks
        self.cache: dict = {}

    def minor(self, S: int, T: int) -> frozenset:
        key = (S, T)
        val = self.cache.get(key)
        if val is None:
            bases = _contract_masks(_restrict_masks(self.bases, T), S)
            val = (bases, len(_component_masks(T & ~S, bases)))
            self.cache[key] = val
        return val

    def rank(self, chain: Sequence[int]) -> int:
        total, prev = 0, 0
        for b in chain:
            cur = prev | b
            total += self.minor(prev, cur)[1]
            prev = cur
        return popcount(prev) - total


_FACE_FPOLY: dict = {}


def _component_fpoly(n: int, base_masks: frozenset) -> QPolynomial:
    key = (n, base_masks)
    val = _FACE_FPOLY.get(key)
    if val is None:
        if n == 1:
            val = ONE
        else:
            val = fpolynomial(fq_matroid(_from_masks((1 << n) - 1, base_masks)))
        _FACE_FPOLY[key] = val
    return val


def matroid_provider(M: Matroid, orientation: str = "canonical") -> RankProvider:
    """Face data of ``P_M``: a face is named by its set of vertices (bases).

    The f-polynomial of a face multiplies those of the connected components
    of its matroid, each computed from its own enumerator.
    """
    if M.ground != frozenset(range(1, M.n + 1)):
        M = relabeled(M)
    table = _MinorTable(M)
    n = M.n

    def rank_of(masks):
        return table.rank(_greedy_chain_masks(masks, orientation))

    def face_of(masks):
        parts, prev = [], 0
        for b in _greedy_chain_masks(masks, orientation):
            cur = prev | b
            parts.append(table.minor(prev, cur)[0])
            prev = cur
        # the face's vertices: one base of every minor, glued
        verts = {0}
        for p in parts:
            verts = {v | x for v in verts for x in p}
        return frozenset(verts)

    def fpoly_of(key):
        ground = (1 << n) - 1
        out = ONE
        for comp in _component_masks(ground, key):
            k = popcount(comp)
            local = frozenset(compress(b & comp, comp) for b in key)
            out = out * _component_fpoly(k, local)
        return out

    return RankProvider(n, rank_of, face_of, fpoly_of, name="matroid base polytope")


def fq_matroid(M: Matroid, orientation: str = "canonical") -> QSymExpr:
    """``F_q(P_M)``: sum over flags of ``q^rank M_type``."""
    if M.n == 0:
        return unit()
    return fq_from_provider(matroid_provider(M, orientation))


def max_weight_bases(M: Matroid, omega: Sequence[int]) -> frozenset:
    """Bases of largest total ``omega``-weight, found by direct weighing."""
    if len(omega) != M.n:
        raise ValueError("weight vector length must equal the ground size")
    ground = sorted(M.ground)
    w = {x: omega[i] for i, x in enumerate(ground)}
    weights = {B: sum(w[x] for x in B) for B in M.bases}
    top = max(weights.values())
    return frozenset(B for B, v in weights.items() if v == top)


def bases_satisfying_block_ranks(M: Matroid, omega: Sequence[int]) -> frozenset:
    """Bases meeting each level set of ``omega`` (largest first) in its rank jump."""
    levels: dict = {}
    for i, x in enumerate(sorted(M.ground)):
        levels.setdefault(omega[i], set()).add(x)
    chain, acc = [], set()
    for w in sorted(levels, reverse=True):
        acc = acc | levels[w]
        chain.append(frozenset(acc))
    ranks = [0] + [rank_of(M, F) for F in chain]
    blocks = [levels[w] for w in sorted(levels, reverse=True)]
    return frozenset(
        B for B in M.bases
        if all(len(B & blk) == ranks[i + 1] - ranks[i] for i, blk in enumerate(blocks))
    )


# ---------------------------------------------------------------------------
# uniform matroids


def fq_uniform_closed_form(n: int, r: int) -> QSymExpr:
    """Closed form for hypersimplices, in the opposite (largest-weight-first) orientation.

    ``C(n,r) (M_1)^r o (M_1)^(n-r) + sum C(n,r') C(n-r',l) q^(l-1) (M_1)^r' o M_l o (M_1)^(n-r'-l)``
    over ``0 <= r' < r < r' + l <= n``.
    """
    if not 0 < r < n:
        raise ValueError(f"closed form needs 0 < r < n, got n={n}, r={r}")
    out = concat_product(power_of_m1(r), power_of_m1(n - r)).scale(comb(n, r))
    for rp in range(r):
        for lam in range(r - rp + 1, n - rp + 1):
            coeff = QPolynomial.monomial(lam - 1, comb(n, rp) * comb(n - rp, lam))
            term = concat_product(concat_product(power_of_m1(rp), M(lam)), power_of_m1(n - rp - lam))
            out = out + term.scale(coeff)
    return out


def fvector_uniform(n: int, r: int) -> list[int]:
    """f-vector of the hypersimplex ``P_{U_{n,r}}`` from trinomial coefficients."""
    if not 0 < r < n:
        raise ValueError(f"needs 0 < r < n, got n={n}, r={r}")
    f = [comb(n, r)]
    for k in range(2, n + 1):
        total = 0
        for rp in range(0, r):
            if r < rp + k <= n:
                total += factorial(n) // (factorial(rp) * factorial(k) * factorial(n - rp - k))
        f.append(total)
    return f


# ---------------------------------------------------------------------------
# named examples


def _all_triples_but(excluded) -> list:
    ex = {frozenset(e) for e in excluded}
    return [c for c in combinations(range(1, 7), 3) if frozenset(c) not in ex]


def example_matroids() -> tuple[Matroid, Matroid]:
    """Two rank-3 matroids on ``[6]`` with equal ``F`` but different ``F_q``.

    ``M1`` drops the triples 123 and 456; ``M2`` drops 123 and 345.
    """
    m1 = validate(_all_triples_but([(1, 2, 3), (4, 5, 6)]), 6)
    m2 = validate(_all_triples_but([(1, 2, 3), (3, 4, 5)]), 6)
    return m1, m2


def builtin(name: str, *args: int) -> Matroid:
    if name == "uniform":
        return uniform(*args)
    if name == "m1":
        return example_matroids()[0]
    if name == "m2":
        return example_matroids()[1]
    raise KeyError(f"unknown matroid {name!r}")


def all_matroids(n: int) -> list[Matroid]:
    """Every matroid on ``{1..n}`` up to isomorphism, by exhaustive base-family search.

    Only practical for ``n <= 5``.
    """
    if n > 5:
        raise ValueError("exhaustive matroid enumeration is limited to n <= 5")
    seen: dict = {}
    for r in range(n + 1):
        cands = [to_mask(c) for c in combinations(range(1, n + 1), r)]
        for pick in range(1, 1 << len(cands)):
            masks = frozenset(cands[i] for i in bits(pick))
            if exchange_violation(masks) is not None:
                continue
            Mt = _from_masks((1 << n) - 1, masks)
            key = canonical_form(Mt)
            seen.setdefault(key, Mt)
    return sorted(seen.values(), key=lambda m: (m.rank, len(m.bases), sorted(m.base_masks)))


def parse_matroid(text: str) -> Matroid:
    """Parse ``n r`` on the first line, then one base of ``r`` elements per line."""
    lines = [(i, ln.split("#")[0].strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ValidationError("empty matroid file")
    i0, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise ValidationError(f"line {i0}: expected 'n r', got {head!r}")
    try:
        n, r = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValidationError(f"line {i0}: expected integers 'n r', got {head!r}") from None
    if n < 1 or not 0 <= r <= n:
        raise ValidationError(f"line {i0}: need n >= 1 and 0 <= r <= n")
    bases = []
    for i, ln in lines[1:]:
        try:
            B = [int(x) for x in ln.split()]
        except ValueError:
            raise ValidationError(f"line {i}: non-integer entry in {ln!r}") from None
        if len(B) != r or len(set(B)) != r:
            raise ValidationError(f"line {i}: expected {r} distinct elements, got {ln!r}")
        if any(not 1 <= x <= n for x in B):
            raise ValidationError(f"line {i}: element out of range 1..{n}")
        bases.append(B)
    if r == 0 and not bases:
        bases = [[]]
    return validate(bases, n)
