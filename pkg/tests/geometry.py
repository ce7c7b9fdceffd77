"""Floating-point realization of nestohedra, used only as an independent oracle.

Vertices come from the normal-fan description: for a generic weight order,
each member of the building set charges its highest-ranked element, giving
the vertex of the Minkowski sum of the member simplices maximizing that
weight.  Facets and ridges are then read off a convex hull.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np
from scipy.spatial import ConvexHull


def nestohedron_vertices(B) -> np.ndarray:
    n = B.n
    members = [sorted(I) for I in B.members]
    verts = set()
    for order in permutations(range(n)):
        rank = [0] * n
        for r, i in enumerate(order):
            rank[i] = r
        v = [0] * n
        for I in members:
            v[max(I, key=lambda x: rank[x - 1]) - 1] += 1
        verts.add(tuple(v))
    return np.array(sorted(verts), dtype=float)


def hull_data(B):
    """(number of vertices, facet vertex sets, degree histogram of the dual graph)."""
    V = nestohedron_vertices(B)
    P = V[:, :-1]  # all points lie on a hyperplane sum = const
    hull = ConvexHull(P)
    facets: dict = {}
    for eq in hull.equations:
        key = tuple(np.round(eq, 6))
        if key not in facets:
            facets[key] = frozenset(np.where(np.abs(P @ eq[:-1] + eq[-1]) < 1e-4)[0])
    fs = list(set(facets.values()))
    d = P.shape[1]
    deg = [0] * len(fs)
    for a, b in combinations(range(len(fs)), 2):
        common = sorted(fs[a] & fs[b])
        if len(common) < d - 1:
            continue
        X = P[common] - P[common[0]]
        if np.linalg.matrix_rank(X, 1e-8) == d - 2:
            deg[a] += 1
            deg[b] += 1
    hist: dict = {}
    for x in deg:
        hist[x] = hist.get(x, 0) + 1
    return len(V), fs, dict(sorted(hist.items(), reverse=True))
