"""Face-count invariants derived from a weighted enumerator.

A :class:`RankProvider` describes a generalized permutohedron through the
map from flags of ``[n]`` to its faces: the dimension of the face each flag
is deformed into, an identifier of that face, and the f-polynomial of the
face.  Building sets and matroids both produce providers; everything in
this module works for either.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Hashable

from .flags import Flag, enumerate_flag_masks
from .qpoly import QPolynomial
from .qsym import QSymExpr, antipode, principal_specialization

MaskFlag = tuple  # tuple of block bitmasks, increasing-weight order


@dataclass(frozen=True)
class RankProvider:
    """Face data of a polytope, indexed by flags given as block bitmasks.

    ``rank_of`` returns the dimension of the face a flag is deformed into,
    ``face_of`` an exact hashable face identifier, and ``fpoly_of`` maps a
    face identifier to that face's f-polynomial.
    """

    n: int
    rank_of: Callable[[MaskFlag], int]
    face_of: Callable[[MaskFlag], Hashable]
    fpoly_of: Callable[[Hashable], QPolynomial]
    name: str = ""

    def rank(self, f: Flag) -> int:
        return self.rank_of(f.masks())

    def face_id(self, f: Flag) -> Hashable:
        return self.face_of(f.masks())

    def face_fpoly(self, key: Hashable) -> QPolynomial:
        return self.fpoly_of(key)


def _type(masks: MaskFlag) -> tuple:
    return tuple(bin(m).count("1") for m in masks)


def _opposite(masks: MaskFlag) -> MaskFlag:
    return masks[::-1]


def fq_from_provider(p: RankProvider, max_n: int = 9) -> QSymExpr:
    """Flag sum ``sum over flags F of q^rank(F) M_type(F)``."""
    counts: dict = defaultdict(lambda: defaultdict(int))
    for masks in enumerate_flag_masks(p.n, max(max_n, p.n)):
        counts[_type(masks)][p.rank_of(masks)] += 1
    terms = {}
    for alpha, byrank in counts.items():
        top = max(byrank)
        coeffs = [0] * (top + 1)
        for r, c in byrank.items():
            coeffs[r] = c
        terms[alpha] = QPolynomial(coeffs)
    return QSymExpr(terms)


def fpolynomial(f: QSymExpr) -> QPolynomial:
    """f-polynomial ``(-1)^n ps(F_{-q})(-1)`` of the polytope with enumerator ``f``."""
    n = f.homogeneous_degree
    if n is None:
        raise ValueError("fpolynomial needs a nonzero homogeneous expression")
    neg = QSymExpr({a: c.negate_variable() for a, c in f.items()})
    ps = principal_specialization(neg, -1)
    return ps if n % 2 == 0 else -ps


def euler_characteristic(f: QSymExpr) -> int:
    return fpolynomial(f)(-1)


def euler_check(f: QSymExpr) -> bool:
    """``f(Q, -1) == 1``."""
    return euler_characteristic(f) == 1


def antipode_face_expansion(p: RankProvider, max_n: int = 9) -> QSymExpr:
    """``(-1)^n sum over flags G of f(face opposite to G, -q) M_type(G)``."""
    sign = -1 if p.n % 2 else 1
    cache: dict = {}
    acc: dict = defaultdict(QPolynomial)
    for masks in enumerate_flag_masks(p.n, max(max_n, p.n)):
        key = p.face_of(_opposite(masks))
        if key not in cache:
            fp = p.fpoly_of(key)
            if fp is None:
                raise KeyError(f"no f-polynomial for face {key!r}")
            cache[key] = fp.negate_variable()
        acc[_type(masks)] = acc[_type(masks)] + cache[key]
    return QSymExpr({a: c * sign for a, c in acc.items()})


def antipode_corollary_value(f: QSymExpr) -> QPolynomial:
    return principal_specialization(antipode(f), -1)


def antipode_corollary_check(f: QSymExpr, dim: int) -> bool:
    """``ps(S(f))(-1) == q^dim``."""
    return antipode_corollary_value(f) == QPolynomial.monomial(dim)


def euler_relation_by_face(p: RankProvider, max_n: int = 9) -> dict:
    """Per face: ``(sum of (-1)^length over its flags, expected sign)``.

    The expected value is ``(-1)^(n - dim - 1)``; a face passes when both agree.
    """
    sums: dict = defaultdict(int)
    dims: dict = {}
    for masks in enumerate_flag_masks(p.n, max(max_n, p.n)):
        key = p.face_of(masks)
        sums[key] += -1 if (len(masks) - 1) % 2 else 1
        r = p.rank_of(masks)
        if dims.setdefault(key, r) != r:
            raise ValueError(f"rank not constant on face {key!r}")
    return {k: (s, -1 if (p.n - dims[k] - 1) % 2 else 1) for k, s in sums.items()}


def provider_consistency(p: RankProvider, max_n: int = 9) -> list[str]:
    """Check the provider contract; returns a list of violations (empty if fine)."""
    problems = []
    for key, (got, want) in euler_relation_by_face(p, max_n).items():
        if got != want:
            problems.append(f"Euler relation fails on face {key!r}: {got} != {want}")
    for masks in enumerate_flag_masks(p.n, max(max_n, p.n)):
        key = p.face_of(masks)
        deg = p.fpoly_of(key).degree
        if deg != p.rank_of(masks):
            problems.append(f"face {key!r}: f-polynomial degree {deg} != rank {p.rank_of(masks)}")
            break
    return problems
