"""
Quasisymmetric functions with polynomial coefficients
=====================================================

A short walk through the algebra every other demo relies on.
"""

from gpqsym.qpoly import QPolynomial
from gpqsym.qsym import M, antipode, compositions, principal_specialization, quasi_shuffle

# Monomial quasisymmetric functions are indexed by compositions.  There are
# 2^(n-1) compositions of n, listed by length and then lexicographically.
print(list(compositions(4)))

# The product is the quasi-shuffle: shuffle the parts and optionally merge
# one part from each side.
print(quasi_shuffle(M(1), M(2)))
print(M(1) * M(1))

# Coefficients live in Z[q], so q-graded expressions are ordinary values.
q = QPolynomial((0, 1))
f = M(2, coeff=q) + M(1, 1, coeff=2)
print(f, "in degree", f.homogeneous_degree)

# The antipode has a closed form summing over coarsenings of the reversed
# composition.  Applying it twice gives back the input.
print(antipode(M(1, 2)))
assert antipode(antipode(f)) == f

# Principal specialization sets x_1 = ... = x_m = 1.  At m = -1 it reads off
# f-polynomials, as the next demos show.
print(principal_specialization(f, 3), principal_specialization(f, -1))
