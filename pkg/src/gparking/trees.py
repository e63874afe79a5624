"""Safe spanning trees and the bijections with orientations and parking functions.

Two pairs of maps live here, both driven by the domination order of a rooted
tree (see ``Arborescence.dominates``):

* safe trees <-> acyclic orientations whose unique sink is the root
  (``safe_tree_to_orientation`` / ``orientation_to_safe_tree``);
* all spanning trees <-> all parking functions
  (``tree_to_parking`` / ``parking_to_tree``), which restricts to
  safe trees <-> maximum parking functions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyNeighborSet,
    NotAcyclic,
    NotSafeTree,
    NotSpanningTree,
    SinkNotUnique,
)
from .graph import FORWARD, BACKWARD, UNDIRECTED, Arborescence, MixedOrientation, Orientation, enumerate_spanning_trees
from .orientations import is_acyclic
from .parking import ParkingFunction


class SpanningTree:
    """A spanning tree of ``graph`` as a set of ``n - 1`` edge indices."""

    __slots__ = ("graph", "edges")

    def __init__(self, graph, edges):
        edges = frozenset(int(k) for k in edges)
        if len(edges) != graph.n - 1 or any(not 0 <= k < graph.m for k in edges):
            raise NotSpanningTree(f"need {graph.n - 1} valid edge indices, got {sorted(edges)}")
        parent = list(range(graph.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in edges:
            a, b = (find(x) for x in graph.edges[k])
            if a == b:
                raise NotSpanningTree(f"edge {k} closes a cycle")
            parent[a] = b
        self.graph = graph
        self.edges = edges

    @classmethod
    def _from_trusted(cls, graph, edges):
        t = object.__new__(cls)
        t.graph, t.edges = graph, frozenset(edges)
        return t

    def rooted(self, q):
        return Arborescence.from_edges(self.graph, q, self.edges)

    def tree_path(self, a, b):
        """Edge indices on the tree path between ``a`` and ``b``."""
        t = self.rooted(a)
        out = []
        while b != a:
            p, k = t.parent(b)
            out.append(k)
            b = p
        return out

    def __eq__(self, other):
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.edges == other.edges and self.graph == other.graph

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return f"SpanningTree({sorted(self.edges)})"


def all_spanning_trees(g):
    for edges in enumerate_spanning_trees(g):
        yield SpanningTree._from_trusted(g, edges)


@dataclass(frozen=True)
class BrokenCircuitReport:
    """Non-tree edges that are the largest edge of their fundamental cycle."""

    tree: SpanningTree
    violating_edges: frozenset

    @property
    def safe(self):
        return not self.violating_edges


def _broken(t, arb):
    # arb: the tree rooted anywhere; a non-tree edge is broken iff it beats its cycle
    g = t.graph
    out = set()
    for k, (a, b) in enumerate(g.edges):
        if k in t.edges:
            continue
        _, ea, eb = arb._climb(a, b)
        if max(ea, eb) < k:
            out.add(k)
    return frozenset(out)


def broken_circuit_edges(t):
    return BrokenCircuitReport(t, _broken(t, t.rooted(0)))


def is_safe(t):
    return not _broken(t, t.rooted(0))


def safe_trees(g):
    return [t for t in all_spanning_trees(g) if is_safe(t)]


def _orient_by_domination(arb, ks):
    g = arb.graph
    direction = [UNDIRECTED] * g.m
    for k in ks:
        u, v = g.edges[k]
        direction[k] = FORWARD if arb.dominates(u, v) else BACKWARD
    return direction


def safe_tree_to_orientation(t, q):
    """Orient each edge from the dominating endpoint; the root becomes the unique sink."""
    arb = t.rooted(q)
    bad = _broken(t, arb)
    if bad:
        raise NotSafeTree(f"edges {sorted(bad)} form broken circuits with the tree")
    return Orientation(t.graph, _orient_by_domination(arb, range(t.graph.m)))


def induced_orientation(arb):
    """Orientation of every edge by domination w.r.t. a spanning arborescence."""
    return Orientation(arb.graph, _orient_by_domination(arb, range(arb.graph.m)))


def _check_unique_sink(o, q):
    if not is_acyclic(o):
        raise NotAcyclic("orientation contains a directed cycle")
    sinks = o.sinks()
    if sinks != [q]:
        raise SinkNotUnique(f"orientation has sinks {sinks}, expected only {q}")


def orientation_to_safe_tree(o, q):
    """Grow a safe tree from the root by absorbing sinks of the unlabeled part.

    The sink taken at each step is the smallest index; it is attached to the
    out-neighbor ``v`` maximizing the edge ``(u, v)`` among those whose edge
    beats ``e(x, v)``, where ``x`` dominates the other out-neighbors.
    """
    _check_unique_sink(o, q)
    g = o.graph
    outs = [[] for _ in range(g.n)]
    for a, b in o.arcs():
        outs[a].append(b)
    arb = Arborescence(g, q)
    labeled = {q}
    while len(labeled) < g.n:
        u = min(v for v in range(g.n) if v not in labeled and all(w in labeled for w in outs[v]))
        xu = outs[u]
        x = arb.dominator(xu)
        best = None
        for v in xu:
            k = g.edge_index(u, v)
            e = arb.path_max_edge(x, v)
            if (e is None or k > e) and (best is None or k > best[1]):
                best = (v, k)
        arb = arb.extend(u, best[0], best[1])
        labeled.add(u)
    return SpanningTree._from_trusted(g, arb.edges)


def power_order(t, u, xu):
    """Order the labeled neighbors ``xu`` of ``u`` from most to least powerful.

    Repeatedly: ``x`` is the dominator of what is left, the candidates are the
    ``v`` whose edge ``(u, v)`` beats ``e(x, v)`` (``x`` always qualifies), and
    the candidate with the largest edge to ``u`` is taken next.
    """
    left = list(xu)
    if not left:
        raise EmptyNeighborSet(f"vertex {u} has no labeled neighbors")
    g = t.graph
    order = []
    while left:
        x = t.dominator(left)
        best = None
        for v in left:
            k = g.edge_index(u, v)
            e = t.path_max_edge(x, v)
            if (e is None or k > e) and (best is None or k > best[1]):
                best = (v, k)
        order.append(best[0])
        left.remove(best[0])
    return order


def tree_to_mixed_orientation(t, q):
    """Tree edges and non-broken edges oriented by domination; broken edges left undirected."""
    arb = t.rooted(q)
    bad = _broken(t, arb)
    keep = [k for k in range(t.graph.m) if k not in bad]
    return MixedOrientation(t.graph, _orient_by_domination(arb, keep))


def tree_to_parking(t, q):
    """Parking function ``outdegree - 1`` of the mixed orientation of ``t``."""
    mixed = tree_to_mixed_orientation(t, q)
    return ParkingFunction(t.graph, q, [d - 1 for d in mixed.outdegrees()])


def parking_to_tree(f, check=False):
    """Spanning tree of a parking function, built one vertex per step.

    Each step considers the vertices ``S`` with more labeled neighbors than
    their value.  Every ``u`` in ``S`` picks ``M(u)``, the
    ``(|X_u| - f(u))``-th vertex of the power order of its labeled neighbors
    ``X_u``; after tentatively attaching all of ``S`` this way, the member of
    ``S`` dominated by all others is added for real.

    With ``check=True`` assert that every new vertex dominates all earlier ones.
    """
    g, q = f.graph, f.root
    arb = Arborescence(g, q)
    labeled = [q]
    inside = [False] * g.n
    inside[q] = True
    while len(labeled) < g.n:
        choice = {}
        for u in range(g.n):
            if inside[u]:
                continue
            xu = [w for w in g.neighbors(u) if inside[w]]
            if len(xu) > f[u]:
                order = power_order(arb, u, xu)
                choice[u] = order[len(xu) - f[u] - 1]
        tentative = arb
        for u, w in choice.items():
            tentative = tentative.extend(u, w)
        u = tentative.dominated(choice)
        arb = arb.extend(u, choice[u])
        if check:
            for w in labeled:
                assert arb.dominates(u, w), f"new vertex {u} does not dominate {w}"
        labeled.append(u)
        inside[u] = True
    return SpanningTree._from_trusted(g, arb.edges)
