"""Building sets, their minors, and the nestohedron enumerator.

A building set keeps its original ground labels through restrictions and
contractions, so the minors along a chain stay comparable with the chain
itself.  Label-free canonical forms are only computed when memoizing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from . import _bits
from ._bits import DSU, bits, compress, from_mask, popcount, to_mask
from .errors import ValidationError
from .flags import Flag, enumerate_flag_masks
from .invariants import RankProvider, fq_from_provider
from .qpoly import ONE, QPolynomial
from .qsym import M, QSymExpr, quasi_shuffle, shift, unit


@dataclass(frozen=True)
class BuildingSet:
    """A building set on a finite ground set of positive integers."""

    ground: frozenset
    members: frozenset

    @cached_property
    def n(self) -> int:
        return len(self.ground)

    @cached_property
    def ground_mask(self) -> int:
        return to_mask(self.ground)

    @cached_property
    def member_masks(self) -> tuple[int, ...]:
        return tuple(sorted(to_mask(I) for I in self.members))

    def __contains__(self, subset) -> bool:
        return frozenset(subset) in self.members

    def __repr__(self) -> str:
        ms = sorted((sorted(I) for I in self.members), key=lambda s: (len(s), s))
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in ms)
        return f"BuildingSet(ground={sorted(self.ground)}, members=[{body}])"

    def to_text(self) -> str:
        """Serialize to the flat file format; requires ground ``{1..n}``."""
        if self.ground != frozenset(range(1, self.n + 1)):
            raise ValueError("file format needs ground set 1..n; relabel first")
        ms = sorted((sorted(I) for I in self.members), key=lambda s: (len(s), s))
        return "\n".join([str(self.n)] + [" ".join(map(str, s)) for s in ms]) + "\n"


def _from_masks(ground_mask: int, masks: Iterable[int]) -> BuildingSet:
    return BuildingSet(from_mask(ground_mask), frozenset(from_mask(m) for m in masks))


def check_axioms(ground: frozenset, members: frozenset) -> Optional[str]:
    for i in ground:
        if frozenset((i,)) not in members:
            return f"singleton {{{i}}} is missing"
    ms = sorted(members, key=lambda s: (len(s), sorted(s)))
    for a_idx, I in enumerate(ms):
        if not I or not I <= ground:
            return f"member {sorted(I)} is not a nonempty subset of the ground set"
        for J in ms[a_idx + 1:]:
            if I & J and (I | J) not in members:
                return f"{sorted(I)} and {sorted(J)} intersect but their union {sorted(I | J)} is missing"
    return None


def validate(members: Iterable[Iterable[int]], n: int) -> BuildingSet:
    """Build and check a building set on ``{1..n}``.

    Raises :class:`ValidationError` naming the violated axiom.
    """
    ground = frozenset(range(1, n + 1))
    mem = frozenset(frozenset(int(x) for x in I) for I in members)
    for I in mem:
        if not I or not I <= ground:
            raise ValidationError(f"member {sorted(I)} is not a nonempty subset of 1..{n}")
    problem = check_axioms(ground, mem)
    if problem:
        raise ValidationError(problem)
    return BuildingSet(ground, mem)


def boolean(n: int) -> BuildingSet:
    """All nonempty subsets of ``[n]``; the nestohedron is the permutohedron."""
    full = (1 << n) - 1
    return _from_masks(full, range(1, full + 1))


def simplex(n: int) -> BuildingSet:
    """Singletons plus ``[n]``; the nestohedron is a simplex."""
    full = (1 << n) - 1
    return _from_masks(full, [1 << i for i in range(n)] + [full])


def discrete(n: int) -> BuildingSet:
    full = (1 << n) - 1
    return _from_masks(full, [1 << i for i in range(n)])


def restriction(B: BuildingSet, S: Iterable[int]) -> BuildingSet:
    S = frozenset(S)
    if not S:
        raise ValueError("restriction to the empty set")
    if not S <= B.ground:
        raise ValueError("restriction set must lie in the ground set")
    return BuildingSet(S, frozenset(I for I in B.members if I <= S))


def contraction(B: BuildingSet, S: Iterable[int]) -> BuildingSet:
    """``B/S``: the sets ``I`` off ``S`` with ``I`` or some ``I + S'`` (``S'`` in ``S``) in ``B``."""
    S = frozenset(S)
    if not S <= B.ground:
        raise ValueError("contraction set must lie in the ground set")
    if S == B.ground:
        raise ValueError("cannot contract the whole ground set")
    return BuildingSet(B.ground - S, frozenset(I - S for I in B.members if I - S))


def relabeled(B: BuildingSet) -> BuildingSet:
    """Order-preserving relabeling of the ground set onto ``1..n``."""
    g = B.ground_mask
    return _from_masks((1 << B.n) - 1, (compress(m, g) for m in B.member_masks))


def disjoint_union(B1: BuildingSet, B2: BuildingSet) -> BuildingSet:
    """``B1`` on ``1..n1`` next to ``B2`` shifted to ``n1+1..n1+n2`` (both relabeled)."""
    a, b = relabeled(B1), relabeled(B2)
    shift_by = a.n
    return _from_masks(
        (1 << (a.n + b.n)) - 1,
        list(a.member_masks) + [m << shift_by for m in b.member_masks],
    )


def _component_masks(ground: int, members: Iterable[int]) -> list[int]:
    dsu = DSU(bits(ground))
    for m in members:
        bs = bits(m)
        for x in bs[1:]:
            dsu.union(bs[0], x)
    return [sum(1 << i for i in cls) for cls in dsu.classes()]


def components(B: BuildingSet) -> list[frozenset]:
    """Inclusion-maximal members; they partition the ground set."""
    return [from_mask(m) for m in _component_masks(B.ground_mask, B.member_masks)]


def num_components(B: BuildingSet) -> int:
    return len(_component_masks(B.ground_mask, B.member_masks))


def connected(B: BuildingSet) -> bool:
    return B.ground in B.members


def rank(B: BuildingSet) -> int:
    """``gr(B) - c(B)``: the dimension of the nestohedron."""
    return B.n - num_components(B)


def _canonical(ground: int, masks: Sequence[int]) -> tuple:
    """Canonical form of a building set given as compressed masks on ``0..n-1``."""
    n = popcount(ground)
    inv = []
    for i in range(n):
        inv.append(tuple(sorted(popcount(m) for m in masks if m >> i & 1)))

    def form(perm):
        return tuple(sorted(_bits.permute(m, perm) for m in masks))

    return (n, _bits.canonical_min(n, inv, form)[1])


_CANON: dict = {}


def canonical_form(B: BuildingSet) -> tuple:
    """Label-free key: sorted member masks minimized over relabelings.

    The search runs over relabelings that sort vertices by the multiset of
    member sizes through them, so it stays brute force but small.
    """
    rb = relabeled(B)
    key = (rb.n, rb.member_masks)
    if key not in _CANON:
        _CANON[key] = _canonical((1 << rb.n) - 1, rb.member_masks)
    return _CANON[key]


def from_canonical(form: tuple) -> BuildingSet:
    n, masks = form
    return _from_masks((1 << n) - 1, masks)


# ---------------------------------------------------------------------------
# chains and ranks


def _check_flag(B: BuildingSet, L: Flag) -> None:
    if B.ground != frozenset(range(1, B.n + 1)):
        raise ValueError("chain operations need ground set 1..n; relabel first")
    if L.n != B.n:
        raise ValueError(f"flag on {L.n} elements, building set on {B.n}")


def quotient_by_chain(B: BuildingSet, L: Flag) -> list[BuildingSet]:
    """Minors ``B|I_j / I_{j-1}`` along the chain of ``L``, in order."""
    _check_flag(B, L)
    out, prev = [], frozenset()
    for cur in L.chain():
        R = restriction(B, cur)
        out.append(contraction(R, prev) if prev else R)
        prev = cur
    return out


def chain_rank(B: BuildingSet, L: Flag) -> int:
    return sum(rank(m) for m in quotient_by_chain(B, L))


class _MinorTable:
    """Component counts of ``B|T / S`` keyed by the pair of masks ``(S, T)``."""

    def __init__(self, B: BuildingSet):
        self.masks = B.member_masks
        self.cache: dict = {}

    def minor_masks(self, S: int, T: int) -> list[int]:
        return sorted({m & ~S for m in self.masks if not m & ~T and m & ~S})

    def components(self, S: int, T: int) -> int:
        key = (S, T)
        c = self.cache.get(key)
        if c is None:
            c = len(_component_masks(T & ~S, self.minor_masks(S, T)))
            self.cache[key] = c
        return c

    def rank(self, masks: Sequence[int]) -> int:
        total, prev = 0, 0
        for b in masks:
            cur = prev | b
            total += self.components(prev, cur)
            prev = cur
        return popcount(prev) - total


def building_set_provider(B: BuildingSet) -> RankProvider:
    """Face data of the nestohedron ``P_B`` for the generic flag machinery.

    A face is identified exactly by the face each summand simplex takes:
    for every member ``I``, the elements of ``I`` of largest weight.  The
    key also carries the canonical forms of the quotient's components,
    which fix the face's f-polynomial.
    """
    if B.ground != frozenset(range(1, B.n + 1)):
        B = relabeled(B)
    table = _MinorTable(B)
    members = B.member_masks

    def face_of(masks):
        exact = []
        for m in members:
            for b in reversed(masks):
                if b & m:
                    exact.append(b & m)
                    break
        parts, prev = [], 0
        for b in masks:
            cur = prev | b
            minor = table.minor_masks(prev, cur)
            for comp in _component_masks(b, minor):
                sub = [compress(x, comp) for x in minor if not x & ~comp]
                parts.append(_canonical((1 << popcount(comp)) - 1, sub))
            prev = cur
        return (tuple(exact), tuple(sorted(parts)))

    def fpoly_of(key):
        out = ONE
        for form in key[1]:
            out = out * fpoly_recurrence(from_canonical(form))
        return out

    return RankProvider(B.n, table.rank, face_of, fpoly_of, name="nestohedron")


def fq_flag_sum(B: BuildingSet) -> QSymExpr:
    """``F_q(P_B)`` as the sum over chains of ``q^rank M_type``."""
    if B.n == 0:
        return unit()
    return fq_from_provider(building_set_provider(B))


# ---------------------------------------------------------------------------
# recurrences

_FQ_MEMO: dict = {}
_FPOLY_MEMO: dict = {}


def split_components(B: BuildingSet) -> list[BuildingSet]:
    return [restriction(B, C) for C in components(B)]


def fq_recurrence(B: BuildingSet) -> QSymExpr:
    """``F_q(P_B)`` from the singleton / product / connected recurrence."""
    if B.n == 0:
        return unit()
    if not connected(B):
        out = unit()
        for part in split_components(B):
            out = quasi_shuffle(out, fq_recurrence(part))
        return out
    key = canonical_form(B)
    if key in _FQ_MEMO:
        return _FQ_MEMO[key]
    n = B.n
    if n == 1:
        val = M(1)
    else:
        val = QSymExpr()
        ground = sorted(B.ground)
        for sub in range((1 << n) - 1):
            I = [ground[i] for i in bits(sub)]
            k = n - len(I)
            inner = fq_recurrence(restriction(B, I)) if I else unit()
            val = val + shift(inner, k).scale(QPolynomial.monomial(k - 1))
    _FQ_MEMO[key] = val
    return val


def fpoly_recurrence(B: BuildingSet) -> QPolynomial:
    """f-polynomial of ``P_B`` by the nestohedron recurrence, without QSym."""
    if B.n == 0:
        return ONE
    if not connected(B):
        out = ONE
        for part in split_components(B):
            out = out * fpoly_recurrence(part)
        return out
    key = canonical_form(B)
    if key in _FPOLY_MEMO:
        return _FPOLY_MEMO[key]
    n = B.n
    if n == 1:
        val = ONE
    else:
        val = QPolynomial()
        ground = sorted(B.ground)
        for sub in range((1 << n) - 1):
            I = [ground[i] for i in bits(sub)]
            k = n - len(I)
            inner = fpoly_recurrence(restriction(B, I)) if I else ONE
            val = val + inner * QPolynomial.monomial(k - 1)
    _FPOLY_MEMO[key] = val
    return val


def splitting_chain_count(B: BuildingSet, alpha: Sequence[int]) -> int:
    """Number of chains of type ``alpha`` all of whose minors are discrete."""
    alpha = tuple(alpha)
    if sum(alpha) != B.n:
        raise ValueError(f"|alpha| = {sum(alpha)} but the ground set has {B.n} elements")
    if B.ground != frozenset(range(1, B.n + 1)):
        B = relabeled(B)
    table = _MinorTable(B)
    count = 0
    for masks in enumerate_flag_masks(B.n, max(B.n, 9)):
        if tuple(popcount(b) for b in masks) != alpha:
            continue
        prev, ok = 0, True
        for b in masks:
            cur = prev | b
            if table.components(prev, cur) != popcount(b):
                ok = False
                break
            prev = cur
        count += ok
    return count


# ---------------------------------------------------------------------------
# dual 1-skeleton


def nested_complex_skeleton(B: BuildingSet) -> dict[frozenset, set]:
    """1-skeleton of the dual of ``P_B`` as an adjacency map.

    Vertices are the members other than the ground set; ``I`` and ``J`` are
    adjacent when they are nested, or disjoint with union outside ``B``.
    """
    if not connected(B):
        raise ValueError("nested set skeleton needs a connected building set")
    verts = [I for I in B.members if I != B.ground]
    adj: dict = {I: set() for I in verts}
    for a, I in enumerate(verts):
        for J in verts[a + 1:]:
            if I <= J or J <= I or (not (I & J) and (I | J) not in B.members):
                adj[I].add(J)
                adj[J].add(I)
    return adj


def skeleton_degree_histogram(B: BuildingSet) -> dict[int, int]:
    """Degree -> number of vertices, keyed in decreasing degree."""
    hist: dict = {}
    for nbrs in nested_complex_skeleton(B).values():
        hist[len(nbrs)] = hist.get(len(nbrs), 0) + 1
    return dict(sorted(hist.items(), reverse=True))


# ---------------------------------------------------------------------------
# file format


def parse_building_set(text: str) -> BuildingSet:
    """Parse ``n`` on the first line, then one member per line."""
    lines = [(i, ln.split("#")[0].strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ValidationError("empty building-set file")
    i0, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ValidationError(f"line {i0}: expected ground size, got {head!r}") from None
    if n < 1:
        raise ValidationError(f"line {i0}: ground size must be positive")
    members = []
    for i, ln in lines[1:]:
        try:
            s = [int(x) for x in ln.split()]
        except ValueError:
            raise ValidationError(f"line {i}: non-integer entry in {ln!r}") from None
        if any(not 1 <= x <= n for x in s):
            raise ValidationError(f"line {i}: element out of range 1..{n}")
        members.append(s)
    return validate(members, n)
