"""Weighted quasisymmetric enumerators of generalized permutohedra.

Exact arithmetic throughout: coefficients are polynomials in ``q`` with
Python integer coefficients.
"""

from .building_sets import BuildingSet, fq_flag_sum, fq_recurrence
from .errors import BudgetExceeded, OracleMismatch, ValidationError
from .flags import Flag, enumerate_flags
from .graphs import Graph, collision_search, dual_skeleton_degrees, fq_graph
from .invariants import RankProvider, fpolynomial, fq_from_provider
from .matroids import Matroid, fq_matroid, uniform
from .qpoly import QPolynomial
from .qsym import M, QSymExpr, antipode, eval_q, principal_specialization, quasi_shuffle

__all__ = [
    "BuildingSet", "BudgetExceeded", "Flag", "Graph", "M", "Matroid", "OracleMismatch",
    "QPolynomial", "QSymExpr", "RankProvider", "ValidationError", "antipode",
    "collision_search", "dual_skeleton_degrees", "enumerate_flags", "eval_q",
    "fpolynomial", "fq_flag_sum", "fq_from_provider", "fq_graph", "fq_matroid",
    "fq_recurrence", "principal_specialization", "quasi_shuffle", "uniform",
]
__version__ = "0.1.0"
