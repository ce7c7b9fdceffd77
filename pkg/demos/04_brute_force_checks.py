"""
Checking the flag sum against lattice points
============================================

In m variables a quasisymmetric function is an honest polynomial.  This demo
expands F_q and compares it with a direct sum over all weight vectors in
[1..m]^n.
"""

from gpqsym import building_sets as bs
from gpqsym import matroids as mt
from gpqsym.oracles import check_provider, enumerate_fq, series_product_check, truncate
from gpqsym.qsym import M

# A weight vector omega contributes q^rank x_omega, where rank is the
# dimension of the face omega maximizes.
p = mt.matroid_provider(mt.uniform(4, 2))
series = enumerate_fq(p, 4)
print(len(series), "monomials in four variables")
print(series == truncate(mt.fq_matroid(mt.uniform(4, 2)), 4))

# check_provider wraps the same comparison and returns a JSON-ready report.
B = bs.boolean(4)
print(check_provider(bs.building_set_provider(B), bs.fq_flag_sum(B)))

# Products of truncations match truncations of quasi-shuffles.
print(series_product_check(M(1, 2), M(2, 1) + M(3), 4))
