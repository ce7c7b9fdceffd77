"""
Base polytopes of matroids
==========================

The octahedron as a hypersimplex, a pair of matroids separated only by the
q-grading, and the two flag orientations.
"""

from gpqsym import matroids as mt
from gpqsym.invariants import fpolynomial
from gpqsym.qsym import eval_q, reverse

U42 = mt.uniform(4, 2)
f = mt.fq_matroid(U42)
print(f)
print("f-polynomial:", fpolynomial(f), " trinomial f-vector:", mt.fvector_uniform(4, 2))

# Both matroids below are rank 3 on six elements with two nonbases each.
m1, m2 = mt.example_matroids()
f1, f2 = mt.fq_matroid(m1), mt.fq_matroid(m2)
print("equal at q=0:", eval_q(f1, 0) == eval_q(f2, 0))
print("equal F_q:", f1 == f2)
print("M(1,4,1) coefficients:", f1.coefficient((1, 4, 1)), "|", f2.coefficient((1, 4, 1)))

# Flags are stored with blocks in increasing weight, while the greedy
# algorithm for matroids fills bases from the heaviest block down.  The
# "paper" orientation skips the reversal and matches the closed form for
# uniform matroids directly.
U52 = mt.uniform(5, 2)
print(mt.fq_matroid(U52, orientation="paper") == mt.fq_uniform_closed_form(5, 2))
print(reverse(mt.fq_matroid(U52)) == mt.fq_uniform_closed_form(5, 2))

# Duality complements every base and reverses every composition.
print(mt.fq_matroid(mt.dual(m2)) == reverse(f2))
