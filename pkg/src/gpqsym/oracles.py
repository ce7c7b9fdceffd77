"""Brute-force cross-checks in finitely many variables.

Quasisymmetric expressions are expanded into honest polynomials in
``x_1..x_m`` and compared with direct lattice-point sums.  Nothing here
goes through the flag-sum or quasi-shuffle code it is meant to check.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Optional, Sequence

from .errors import BudgetExceeded
from .flags import flag_masks_from_weight
from .invariants import RankProvider
from .qpoly import QPolynomial
from .qsym import QSymExpr

DEFAULT_BUDGET = 10**6


@dataclass
class TruncatedSeries:
    """Polynomial in ``x_1..x_m`` with ``Z[q]`` coefficients, keyed by exponent vectors."""

    num_vars: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(e): c for e, c in self.terms.items() if c}
        for e in self.terms:
            if len(e) != self.num_vars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if self.num_vars != other.num_vars:
            raise ValueError("variable counts differ")
        out: dict = defaultdict(QPolynomial)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2
        return TruncatedSeries(self.num_vars, dict(out))

    def __len__(self) -> int:
        return len(self.terms)


def truncate(f: QSymExpr, m: int) -> TruncatedSeries:
    """Expand every ``M_alpha`` over increasing index tuples in ``1..m``."""
    if m < 1:
        raise ValueError("need at least one variable")
    out: dict = defaultdict(QPolynomial)
    for alpha, c in f.items():
        k = len(alpha)
        for idx in combinations(range(m), k):
            e = [0] * m
            for i, a in zip(idx, alpha):
                e[i] = a
            key = tuple(e)
            out[key] = out[key] + c
    return TruncatedSeries(m, dict(out))


def _check_budget(m: int, n: int, budget: int) -> None:
    if m**n > budget:
        raise BudgetExceeded(f"{m}^{n} = {m**n} lattice points exceeds the budget {budget}")


def enumerate_weighted(n: int, m: int, rank: Callable[[Sequence[int]], int],
                       budget: int = DEFAULT_BUDGET) -> TruncatedSeries:
    """``sum over omega in [1..m]^n of q^rank(omega) x_omega``."""
    _check_budget(m, n, budget)
    counts: dict = defaultdict(lambda: defaultdict(int))
    for omega in product(range(1, m + 1), repeat=n):
        e = [0] * m
        for w in omega:
            e[w - 1] += 1
        counts[tuple(e)][rank(omega)] += 1
    terms = {}
    for e, byrank in counts.items():
        coeffs = [0] * (max(byrank) + 1)
        for r, c in byrank.items():
            coeffs[r] = c
        terms[e] = QPolynomial(coeffs)
    return TruncatedSeries(m, terms)


def enumerate_fq(p: RankProvider, m: int, budget: int = DEFAULT_BUDGET) -> TruncatedSeries:
    """Direct lattice-point sum of ``F_q`` truncated to ``m`` variables."""
    return enumerate_weighted(p.n, m, lambda omega: p.rank_of(flag_masks_from_weight(omega)), budget)


def enumerate_fq_matroid_greedy(M, m: int, budget: int = DEFAULT_BUDGET) -> TruncatedSeries:
    """Like :func:`enumerate_fq` for ``P_M``, ranking each ``omega`` by weighing bases.

    The face maximized by ``omega`` is the matroid of maximum-weight bases;
    its dimension is ``n`` minus its component count.
    """
    from .matroids import Matroid, max_weight_bases, num_components

    def rank(omega):
        face = Matroid(M.ground, max_weight_bases(M, omega))
        return M.n - num_components(face)

    return enumerate_weighted(M.n, m, rank, budget)


def diff_report(left: TruncatedSeries, right: TruncatedSeries, limit: int = 10) -> dict:
    """JSON-ready comparison listing up to ``limit`` mismatching monomials."""
    keys = sorted(set(left.terms) | set(right.terms))
    bad = []
    for e in keys:
        a = left.terms.get(e, QPolynomial())
        b = right.terms.get(e, QPolynomial())
        if a != b:
            bad.append({"exponents": list(e), "left": a.to_json(), "right": b.to_json()})
    return {
        "num_vars": left.num_vars,
        "match": not bad and left.num_vars == right.num_vars,
        "num_mismatches": len(bad),
        "mismatches": bad[:limit],
    }


def check_provider(p: RankProvider, fq: QSymExpr, m: Optional[int] = None,
                   budget: int = DEFAULT_BUDGET) -> dict:
    """Compare the lattice-point sum with the truncated flag-sum expression."""
    m = p.n if m is None else m
    return diff_report(enumerate_fq(p, m, budget), truncate(fq, m))


def series_product_check(f: QSymExpr, g: QSymExpr, m: int, budget: int = DEFAULT_BUDGET) -> bool:
    """``truncate(f) * truncate(g) == truncate(f * g)`` in ``m`` variables."""
    deg = max((sum(a) for a in f), default=0) + max((sum(a) for a in g), default=0)
    if (deg + 1) ** m > budget:
        raise BudgetExceeded(f"series product in {m} variables up to degree {deg} is over budget")
    return truncate(f, m) * truncate(g, m) == truncate(f * g, m)
