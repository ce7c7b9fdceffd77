"""
Two graph-associahedra that the enumerator cannot tell apart
============================================================

Two six-vertex graphs share the weighted enumerator F_q and hence the
f-vector of their graph-associahedra, yet the polytopes differ.
"""

from gpqsym import building_sets as bs
from gpqsym import graphs as gr
from gpqsym.cli import render_rows
from gpqsym.invariants import fpolynomial

g1, g2 = gr.gamma1(), gr.gamma2()
print(g1)
print(g2)
print("isomorphic:", gr.isomorphic(g1, g2))

# F_q sums q^rank over all 4683 ordered set partitions of six elements.
f1, f2 = gr.fq_graph(g1), gr.fq_graph(g2)
print("equal F_q:", f1 == f2)
print(render_rows(f1))

# The same value comes out of the vertex-deletion recurrence.
assert gr.fq_graph(g1, method="recurrence") == f1

# The f-polynomial follows from a principal specialization at -1.
print("f-polynomial:", fpolynomial(f1))

# The dual 1-skeleton separates the two polytopes.  Vertices are the proper
# tubes; two tubes are adjacent when nested, or disjoint with a
# disconnected union.
print("G1 degrees:", gr.dual_skeleton_degrees(g1))
print("G2 degrees:", gr.dual_skeleton_degrees(g2))

# Searching every connected graph on six vertices finds exactly three
# colliding pairs.
report = gr.collision_search(6, connected_only=True)
print(report.num_graphs, "classes,", report.num_pairs, "colliding pairs")
for cls in report.classes:
    print("  ", " vs ".join(repr(G) for G in cls))

# Building sets need not come from graphs.  The Boolean building set gives
# the permutohedron, and singletons plus the ground set give a simplex.
print(fpolynomial(bs.fq_flag_sum(bs.boolean(4))))
print(fpolynomial(bs.fq_flag_sum(bs.simplex(4))))
