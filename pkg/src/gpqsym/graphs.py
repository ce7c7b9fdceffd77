"""Simple graphs, graph-associahedra and the graph invariant ``F_q(G)``.

Vertices are always ``1..n``.  ``induced`` and ``contract_through`` relabel
the surviving vertices order-preservingly; internally the flag sum works on
bitmask minors so labels never need to move.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from . import _bits
from ._bits import bits, compress, popcount
from .building_sets import BuildingSet, skeleton_degree_histogram, _from_masks
from .errors import ValidationError
from .flags import enumerate_flag_masks
from .qpoly import QPolynomial
from .qsym import M, QSymExpr, eval_q, quasi_shuffle, shift, unit

MAX_CANONICAL_N = 8


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValidationError(f"edge {u}-{v} out of range 1..{self.n}")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of each vertex (0-based index)."""
        a = [0] * self.n
        for u, v in self.edges:
            a[u - 1] |= 1 << (v - 1)
            a[v - 1] |= 1 << (u - 1)
        return tuple(a)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v - 1])

    def to_text(self) -> str:
        return "\n".join([str(self.n)] + [f"{u} {v}" for u, v in sorted(self.edges)]) + "\n"

    def __repr__(self) -> str:
        es = ",".join(f"{u}{v}" if self.n < 10 else f"{u}-{v}" for u, v in sorted(self.edges))
        return f"Graph(n={self.n}, edges={{{es}}})"


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def empty(n: int) -> Graph:
    return Graph(n)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    return Graph.from_edges(G.n + H.n, list(G.edges) + [(u + G.n, v + G.n) for u, v in H.edges])


def relabel(G: Graph, perm: dict) -> Graph:
    return Graph.from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges])


# ---------------------------------------------------------------------------
# bitmask internals


def _component_masks(adj, vertices: int) -> list[int]:
    comps, left = [], vertices
    while left:
        seed = left & -left
        comp, frontier = seed, seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & vertices & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps


def _contract_adj(adj, S: int, T: int) -> tuple[int, ...]:
    """Adjacency of ``G|T / S`` on the vertex set ``T - S`` (masks in original bits).

    ``u ~ v`` iff adjacent, or joined by a path whose interior lies in ``S``.
    """
    out = list(adj)
    keep = T & ~S
    through = {}
    for comp in _component_masks(adj, S & T):
        reach = 0
        for v in bits(comp):
            reach |= adj[v]
        through[comp] = reach & keep
    for v in bits(keep):
        nb = adj[v] & keep
        for comp, reach in through.items():
            if reach >> v & 1:
                nb |= reach
        out[v] = nb & ~(1 << v)
    return tuple(out)


class _GraphMinors:
    def __init__(self, G: Graph):
        self.adj = G.adj
        self.cache: dict = {}

    def components(self, S: int, T: int) -> int:
        key = (S, T)
        c = self.cache.get(key)
        if c is None:
            c = len(_component_masks(_contract_adj(self.adj, S, T), T & ~S))
            self.cache[key] = c
        return c

    def rank(self, masks) -> int:
        total, prev = 0, 0
        for b in masks:
            cur = prev | b
            total += self.components(prev, cur)
            prev = cur
        return popcount(prev) - total


def _sub_graph(G: Graph, keep: int, adj=None) -> Graph:
    adj = G.adj if adj is None else adj
    edges = []
    for v in bits(keep):
        for u in bits(adj[v] & keep):
            if u > v:
                edges.append((compress(1 << v, keep).bit_length(), compress(1 << u, keep).bit_length()))
    return Graph.from_edges(popcount(keep), edges)


# ---------------------------------------------------------------------------
# minors


def _subset_mask(G: Graph, I: Iterable[int]) -> int:
    m = 0
    for v in I:
        if not 1 <= v <= G.n:
            raise ValueError(f"vertex {v} out of range")
        m |= 1 << (v - 1)
    return m


def induced(G: Graph, I: Iterable[int]) -> Graph:
    """Induced subgraph on ``I``, relabeled order-preservingly."""
    m = _subset_mask(G, I)
    if not m:
        raise ValueError("induced subgraph on the empty set")
    return _sub_graph(G, m)


def contract_through(G: Graph, I: Iterable[int]) -> Graph:
    """``G / I``: the graph on ``V - I`` joining vertices linked through ``I``."""
    m = _subset_mask(G, I)
    full = (1 << G.n) - 1
    if m == full:
        raise ValueError("cannot contract the whole vertex set")
    return _sub_graph(G, full & ~m, _contract_adj(G.adj, m, full))


def num_components(G: Graph) -> int:
    return len(_component_masks(G.adj, (1 << G.n) - 1))


def is_connected(G: Graph) -> bool:
    return G.n > 0 and num_components(G) == 1


def components(G: Graph) -> list[Graph]:
    return [_sub_graph(G, c) for c in _component_masks(G.adj, (1 << G.n) - 1)]


def graphical_building_set(G: Graph) -> BuildingSet:
    """Vertex subsets inducing connected subgraphs (the tubes)."""
    full = (1 << G.n) - 1
    tubes = [s for s in range(1, full + 1) if len(_component_masks(G.adj, s)) == 1]
    return _from_masks(full, tubes)


# ---------------------------------------------------------------------------
# isomorphism


def canonical_form(G: Graph) -> tuple:
    """Lexicographically minimal sorted edge list over invariant-respecting relabelings.

    Vertices are first sorted by (degree, sorted neighbour degrees); every
    permutation within the resulting cells is then tried.
    """
    if G.n > MAX_CANONICAL_N:
        raise ValueError(f"canonical form is brute force; n must be <= {MAX_CANONICAL_N}")
    adj = G.adj
    deg = [popcount(a) for a in adj]
    inv = [(deg[v], tuple(sorted(deg[u] for u in bits(adj[v])))) for v in range(G.n)]
    edges = [(u - 1, v - 1) for u, v in G.edges]

    def form(perm):
        return tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))

    return (G.n, _bits.canonical_min(G.n, inv, form))


def canonical_graph(G: Graph) -> Graph:
    """A fixed representative of the isomorphism class of ``G``."""
    n, (_, edges) = canonical_form(G)
    return Graph.from_edges(n, [(u + 1, v + 1) for u, v in edges])


def isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    return canonical_form(G) == canonical_form(H)


def graph_classes(n: int, connected_only: bool = False) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Classes are grown edge by edge from the empty graph, deduplicating by
    canonical form at every level.
    """
    if n > 7:
        raise ValueError("graph enumeration is limited to n <= 7")
    level = {canonical_form(Graph(n)): canonical_graph(Graph(n))}
    out = list(level.values())
    all_pairs = list(combinations(range(1, n + 1), 2))
    for _ in range(len(all_pairs)):
        nxt: dict = {}
        for G in level.values():
            for e in all_pairs:
                if e in G.edges:
                    continue
                H = Graph(n, G.edges | {e})
                key = canonical_form(H)
                if key not in nxt:
                    nxt[key] = canonical_graph(H)
        out.extend(nxt.values())
        level = nxt
    if connected_only:
        out = [G for G in out if is_connected(G)]
    return out


# ---------------------------------------------------------------------------
# the invariant

_FQ_MEMO: dict = {}
_F0_MEMO: dict = {}


def fq_graph_flags(G: Graph) -> QSymExpr:
    """Chain sum ``sum_L q^rk(L) M_type(L)`` with graph minors ``G|I_j / I_{j-1}``."""
    if G.n == 0:
        return unit()
    minors = _GraphMinors(G)
    counts: dict = defaultdict(lambda: defaultdict(int))
    for masks in enumerate_flag_masks(G.n, max(G.n, 9)):
        counts[tuple(popcount(b) for b in masks)][minors.rank(masks)] += 1
    terms = {}
    for alpha, byrank in counts.items():
        coeffs = [0] * (max(byrank) + 1)
        for r, c in byrank.items():
            coeffs[r] = c
        terms[alpha] = QPolynomial(coeffs)
    return QSymExpr(terms)


def fq_graph_recurrence(G: Graph) -> QSymExpr:
    """``F_q`` from the one-vertex / disjoint-union / connected recurrence."""
    if G.n == 0:
        return unit()
    comps = _component_masks(G.adj, (1 << G.n) - 1)
    if len(comps) > 1:
        out = unit()
        for c in comps:
            out = quasi_shuffle(out, fq_graph_recurrence(_sub_graph(G, c)))
        return out
    key = canonical_form(G) if G.n <= MAX_CANONICAL_N else None
    if key is not None and key in _FQ_MEMO:
        return _FQ_MEMO[key]
    n = G.n
    if n == 1:
        val = M(1)
    else:
        val = QSymExpr()
        for I in range((1 << n) - 1):
            k = n - popcount(I)
            inner = fq_graph_recurrence(_sub_graph(G, I)) if I else unit()
            val = val + shift(inner, k).scale(QPolynomial.monomial(k - 1))
    if key is not None:
        _FQ_MEMO[key] = val
    return val


def fq_graph(G: Graph, method: str = "flags") -> QSymExpr:
    """Weighted enumerator ``F_q`` of the graph-associahedron of ``G``.

    ``method`` is ``"flags"`` (chain sum) or ``"recurrence"``.
    """
    if method == "flags":
        return fq_graph_flags(G)
    if method == "recurrence":
        return fq_graph_recurrence(G)
    raise ValueError(f"unknown method {method!r}")


def f0_deletion(G: Graph) -> dict:
    """``F(G) = F_q(G)|_{q=0}`` by the vertex-deletion recurrence, as composition -> int."""
    return eval_q(_f0(G), 0)


def _f0(G: Graph) -> QSymExpr:
    if G.n == 0:
        return unit()
    comps = _component_masks(G.adj, (1 << G.n) - 1)
    if len(comps) > 1:
        out = unit()
        for c in comps:
            out = quasi_shuffle(out, _f0(_sub_graph(G, c)))
        return out
    if G.n == 1:
        return M(1)
    key = canonical_form(G) if G.n <= MAX_CANONICAL_N else None
    if key is not None and key in _F0_MEMO:
        return _F0_MEMO[key]
    full = (1 << G.n) - 1
    val = QSymExpr()
    for v in range(G.n):
        val = val + shift(_f0(_sub_graph(G, full & ~(1 << v))), 1)
    if key is not None:
        _F0_MEMO[key] = val
    return val


def dual_skeleton_degrees(G: Graph) -> dict[int, int]:
    """Degree histogram of the 1-skeleton of the dual graph-associahedron."""
    if not is_connected(G):
        raise ValueError("dual skeleton needs a connected graph")
    return skeleton_degree_histogram(graphical_building_set(G))


# ---------------------------------------------------------------------------
# collisions


@dataclass
class CollisionReport:
    n: int
    universe: str  # "connected" or "all"
    mode: str  # "q0" (F) or "fq" (F_q)
    num_graphs: int
    classes: list  # lists of canonical graphs sharing one invariant

    @property
    def num_pairs(self) -> int:
        return sum(len(c) * (len(c) - 1) // 2 for c in self.classes)

    def pairs(self) -> list[tuple[Graph, Graph]]:
        return [p for c in self.classes for p in combinations(c, 2)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "universe": self.universe,
            "mode": self.mode,
            "num_graphs": self.num_graphs,
            "num_pairs": self.num_pairs,
            "classes": [[sorted(map(list, G.edges)) for G in c] for c in self.classes],
        }

    @classmethod
    def from_json(cls, data: dict) -> CollisionReport:
        n = data["n"]
        classes = [[Graph.from_edges(n, map(tuple, es)) for es in c] for c in data["classes"]]
        return cls(n, data["universe"], data["mode"], data["num_graphs"], classes)


def _invariant_key(G: Graph, mode: str) -> str:
    f = fq_graph(G)
    if mode == "q0":
        return repr(sorted(eval_q(f, 0).items()))
    if mode == "fq":
        return repr([(a, f[a].coeffs) for a in f])
    raise ValueError(f"unknown mode {mode!r}")


def collision_search(n: int, connected_only: bool = True, mode: str = "q0",
                     graphs: Optional[list] = None) -> CollisionReport:
    """Group isomorphism classes on ``n`` vertices by their invariant.

    Invariants are compared through an exact canonical serialization.  Only
    groups with at least two non-isomorphic graphs are reported.
    """
    if n > 7:
        raise ValueError("collision search is limited to n <= 7")
    if graphs is None:
        graphs = graph_classes(n, connected_only=connected_only)
    groups: dict = defaultdict(list)
    for G in graphs:
        groups[_invariant_key(G, mode)].append(G)
    classes = [sorted(g, key=lambda H: sorted(H.edges)) for g in groups.values() if len(g) > 1]
    classes.sort(key=lambda c: sorted(c[0].edges))
    return CollisionReport(n, "connected" if connected_only else "all", mode, len(graphs), classes)


# ---------------------------------------------------------------------------
# named graphs


def _edges(text: str) -> list[tuple[int, int]]:
    return [(int(e[0]), int(e[1])) for e in text.split(",")]


GAMMA1_EDGES = _edges("12,13,14,15,23,34,45,26,36,46,56")
GAMMA2_EDGES = _edges("12,13,14,15,23,24,34,45,26,36,56")


def gamma1() -> Graph:
    return Graph.from_edges(6, GAMMA1_EDGES)


def gamma2() -> Graph:
    return Graph.from_edges(6, GAMMA2_EDGES)


def gamma1_minus_14() -> Graph:
    return Graph.from_edges(6, [e for e in GAMMA1_EDGES if e != (1, 4)])


def gamma2_minus_14_26() -> Graph:
    return Graph.from_edges(6, [e for e in GAMMA2_EDGES if e not in ((1, 4), (2, 6))])


def delete_edges(G: Graph, *edges: tuple[int, int]) -> Graph:
    gone = {(min(e), max(e)) for e in edges}
    missing = gone - G.edges
    if missing:
        raise ValidationError(f"edges {sorted(missing)} are not in the graph")
    return Graph(G.n, G.edges - gone)


BUILTIN_GRAPHS = {
    "gamma1": gamma1,
    "gamma2": gamma2,
    "gamma1-minus-14": gamma1_minus_14,
    "gamma2-minus-14-26": gamma2_minus_14_26,
    # the two smaller colliding pairs found by collision_search
    "gamma1-minus-26": lambda: delete_edges(gamma1(), (2, 6)),
    "gamma2-minus-26": lambda: delete_edges(gamma2(), (2, 6)),
    "gamma1-minus-15-26": lambda: delete_edges(gamma1(), (1, 5), (2, 6)),
    "gamma2-minus-15-26": lambda: delete_edges(gamma2(), (1, 5), (2, 6)),
    "point": lambda: Graph(1),
}


def parse_graph(text: str) -> Graph:
    """Parse ``n`` on the first line, then ``u v`` per edge (1-based)."""
    lines = [(i, ln.split("#")[0].strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ValidationError("empty graph file")
    i0, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ValidationError(f"line {i0}: expected vertex count, got {head!r}") from None
    if n < 1:
        raise ValidationError(f"line {i0}: vertex count must be positive")
    edges = []
    for i, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValidationError(f"line {i}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValidationError(f"line {i}: non-integer vertex in {ln!r}") from None
        if u == v:
            raise ValidationError(f"line {i}: loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValidationError(f"line {i}: vertex out of range 1..{n}")
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ValidationError(f"line {i}: repeated edge {u} {v}")
        edges.append(e)
    return Graph.from_edges(n, edges)
