"""Graphs with a fixed edge order, orientations and rooted arborescences.

The position of an edge in ``Graph.edges`` is its rank in the total edge
order: edge ``k`` is *larger* than edge ``j`` iff ``k > j``.  Every
algorithm in the package that compares edges compares these indices.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from .errors import (
    DimensionTooLarge,
    Disconnected,
    DuplicateEdge,
    EqualVertices,
    IndexOutOfRange,
    NotAcyclic,
    NotSpanningTree,
    OrientationError,
    SelfLoop,
)

FORWARD = 1
BACKWARD = -1
UNDIRECTED = 0

MAX_HYPERCUBE_DIMENSION = 16


class Graph:
    """Simple connected undirected graph on vertices ``0..n-1``.

    ``edges[k] = (u, v)`` is the edge of rank ``k``.  The endpoint order is
    kept as given, since it defines the *forward* direction of orientations.
    """

    __slots__ = ("n", "edges", "_adj", "_index")

    def __init__(self, n, edges):
        n = int(n)
        if n < 1:
            raise IndexOutOfRange(f"graph needs at least one vertex, got n={n}")
        edges = tuple((int(u), int(v)) for u, v in edges)
        adj = [[] for _ in range(n)]
        index = {}
        for k, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge {k} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"edge {k} is a self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise DuplicateEdge(f"edge {k} = ({u}, {v}) duplicates edge {index[key]}")
            index[key] = k
            adj[u].append((v, k))
            adj[v].append((u, k))

        seen = [False] * n
        seen[0] = True
        stack = [0]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        if not all(seen):
            missing = [v for v in range(n) if not seen[v]]
            raise Disconnected(f"vertices {missing} are not reachable from vertex 0")

        self.n = n
        self.edges = edges
        self._adj = tuple(tuple(a) for a in adj)
        self._index = index

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return len(self._adj[v])

    def degrees(self):
        return [len(a) for a in self._adj]

    def neighbors(self, v):
        return [w for w, _ in self._adj[v]]

    def incident(self, v):
        """``(neighbor, edge index)`` pairs at ``v``, in edge order."""
        return self._adj[v]

    def edge_index(self, u, v):
        key = (u, v) if u < v else (v, u)
        return self._index[key]

    def has_edge(self, u, v):
        key = (u, v) if u < v else (v, u)
        return key in self._index

    def other_end(self, k, v):
        a, b = self.edges[k]
        return b if v == a else a

    def is_tree(self):
        return self.m == self.n - 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n, edges):
    return Graph(n, edges)


def _canonical(n, pairs):
    return Graph(n, sorted((min(u, v), max(u, v)) for u, v in pairs))


def hypercube(n):
    """The n-cube: vertex ``v`` is the binary vector of its index, edges join
    vectors at Hamming distance one, sorted by ``(min endpoint, max endpoint)``."""
    if n < 1:
        raise IndexOutOfRange(f"hypercube dimension must be >= 1, got {n}")
    if n > MAX_HYPERCUBE_DIMENSION:
        raise DimensionTooLarge(f"hypercube dimension {n} exceeds {MAX_HYPERCUBE_DIMENSION}")
    pairs = [(v, v | (1 << b)) for v in range(1 << n) for b in range(n) if not v >> b & 1]
    return _canonical(1 << n, pairs)


def cartesian_product(g1, g2):
    """``g1 □ g2`` with vertex ``(u, v)`` encoded as ``u * g2.n + v``."""
    n2 = g2.n
    pairs = [(a * n2 + v, b * n2 + v) for a, b in g1.edges for v in range(n2)]
    pairs += [(u * n2 + c, u * n2 + d) for c, d in g2.edges for u in range(g1.n)]
    return _canonical(g1.n * n2, pairs)


# small named families ----------------------------------------------------

def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_graph(n):
    return Graph(n, list(combinations(range(n), 2)))


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def diamond():
    """K4 minus the edge {2, 3}: the only simple connected graph with 4 vertices and 5 edges."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def random_connected_graph(n, p=0.5, rng=None):
    """Random spanning tree plus independent extra edges with probability ``p``.

    Edge order is shuffled so the edge order is random as well.
    """
    rng = rng if rng is not None else random.Random()
    pairs = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        pairs.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if (u, v) not in pairs and rng.random() < p:
            pairs.add((u, v))
    pairs = sorted(pairs)
    rng.shuffle(pairs)
    return Graph(n, pairs)


NAMED_GRAPHS = {
    "k3": lambda: complete_graph(3),
    "k4": lambda: complete_graph(4),
    "c4": lambda: cycle_graph(4),
    "diamond": diamond,
    "q1": lambda: hypercube(1),
    "q2": lambda: hypercube(2),
    "q3": lambda: hypercube(3),
    "p3": lambda: path_graph(3),
}


def named_graph(name):
    try:
        return NAMED_GRAPHS[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown graph name {name!r}; known: {sorted(NAMED_GRAPHS)}") from None


# orientations -------------------------------------------------------------

def _has_directed_cycle(n, arcs):
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    queue = deque(v for v in range(n) if indeg[v] == 0)
    done = 0
    while queue:
        v = queue.popleft()
        done += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return done < n


class _Directions:
    __slots__ = ("graph", "direction")
    _allowed = (FORWARD, BACKWARD)

    def __init__(self, graph, direction):
        direction = tuple(int(d) for d in direction)
        if len(direction) != graph.m:
            raise OrientationError(f"expected {graph.m} directions, got {len(direction)}")
        for k, d in enumerate(direction):
            if d not in self._allowed:
                raise OrientationError(f"edge {k}: invalid direction {d}")
        self.graph = graph
        self.direction = direction

    @classmethod
    def from_arcs(cls, graph, arcs):
        """Build from ``(tail, head)`` pairs; edges without an arc stay undirected."""
        direction = [UNDIRECTED] * graph.m
        for a, b in arcs:
            k = graph.edge_index(a, b)
            direction[k] = FORWARD if graph.edges[k][0] == a else BACKWARD
        return cls(graph, direction)

    def arc(self, k):
        """``(tail, head)`` of edge ``k``, or None if undirected."""
        u, v = self.graph.edges[k]
        d = self.direction[k]
        if d == FORWARD:
            return u, v
        if d == BACKWARD:
            return v, u
        return None

    def arcs(self):
        return [a for a in map(self.arc, range(self.graph.m)) if a is not None]

    def outdegrees(self):
        out = [0] * self.graph.n
        for a, _ in self.arcs():
            out[a] += 1
        return out

    def indegrees(self):
        ind = [0] * self.graph.n
        for _, b in self.arcs():
            ind[b] += 1
        return ind

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.graph == other.graph and self.direction == other.direction

    def __hash__(self):
        return hash((self.graph, self.direction))

    def __repr__(self):
        arcs = ", ".join(f"{a}->{b}" for a, b in self.arcs())
        return f"{type(self).__name__}({arcs})"


class Orientation(_Directions):
    """A direction for every edge: FORWARD means ``edges[k][0] -> edges[k][1]``."""

    __slots__ = ()

    def sources(self):
        return [v for v, d in enumerate(self.indegrees()) if d == 0]

    def sinks(self):
        return [v for v, d in enumerate(self.outdegrees()) if d == 0]

    def reversed(self):
        return Orientation(self.graph, [-d for d in self.direction])


class MixedOrientation(_Directions):
    """Orientation in which some edges may stay UNDIRECTED; the directed part is acyclic."""

    __slots__ = ()
    _allowed = (FORWARD, BACKWARD, UNDIRECTED)

    def __init__(self, graph, direction):
        super().__init__(graph, direction)
        if _has_directed_cycle(graph.n, self.arcs()):
            raise NotAcyclic("directed edges of a mixed orientation contain a cycle")

    def undirected(self):
        return [k for k, d in enumerate(self.direction) if d == UNDIRECTED]


def reverse_orientation(o):
    return o.reversed()


# arborescences ------------------------------------------------------------

class Arborescence:
    """Tree rooted at ``root`` given by parent links ``v -> (parent, edge index)``.

    The tree may span only part of the graph (the arborescence grown so far by
    the bijection algorithms); ``vertices`` is the covered set.
    """

    __slots__ = ("graph", "root", "_par", "_pedge", "_depth", "vertices")

    def __init__(self, graph, root, parent=None):
        n = graph.n
        if not 0 <= root < n:
            raise IndexOutOfRange(f"root {root} outside 0..{n - 1}")
        par = [None] * n
        pedge = [None] * n
        for v, (p, k) in (parent or {}).items():
            if v == root:
                raise NotSpanningTree("the root cannot have a parent")
            if not 0 <= k < graph.m or set(graph.edges[k]) != {v, p}:
                raise NotSpanningTree(f"parent edge {k} does not join {v} and {p}")
            par[v], pedge[v] = p, k
        depth = [None] * n
        depth[root] = 0
        for v in range(n):
            if par[v] is None:
                continue
            trail = []
            x = v
            while depth[x] is None:
                trail.append(x)
                x = par[x]
                if x is None:
                    raise NotSpanningTree(f"vertex {v} does not reach the root")
                if len(trail) > n:
                    raise NotSpanningTree("parent links contain a cycle")
            d = depth[x]
            for y in reversed(trail):
                d += 1
                depth[y] = d
        self.graph = graph
        self.root = root
        self._par = par
        self._pedge = pedge
        self._depth = depth
        self.vertices = frozenset(v for v in range(n) if depth[v] is not None)

    @classmethod
    def from_edges(cls, graph, root, edge_indices):
        """Root the tree formed by ``edge_indices`` at ``root``."""
        edge_indices = list(edge_indices)
        touching = {}
        for k in edge_indices:
            u, v = graph.edges[k]
            touching.setdefault(u, []).append((v, k))
            touching.setdefault(v, []).append((u, k))
        parent = {}
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, k in touching.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    parent[y] = (x, k)
                    queue.append(y)
        if len(parent) != len(edge_indices):
            raise NotSpanningTree("edge set is not a tree containing the root")
        return cls(graph, root, parent)

    @property
    def is_spanning(self):
        return len(self.vertices) == self.graph.n

    @property
    def edges(self):
        return frozenset(k for k in self._pedge if k is not None)

    def parent(self, v):
        if self._par[v] is None:
            return None
        return self._par[v], self._pedge[v]

    def parent_map(self):
        return {v: (self._par[v], self._pedge[v]) for v in range(self.graph.n) if self._par[v] is not None}

    def depth(self, v):
        return self._depth[v]

    def path(self, i):
        """Vertices of the path from ``i`` up to the root."""
        out = [i]
        while self._par[i] is not None:
            i = self._par[i]
            out.append(i)
        return out

    def extend(self, u, v, k=None):
        """New arborescence with ``u`` attached as a child of covered vertex ``v``."""
        if k is None:
            k = self.graph.edge_index(u, v)
        parent = self.parent_map()
        parent[u] = (v, k)
        return Arborescence(self.graph, self.root, parent)

    def _climb(self, i, j):
        # returns (meet, max edge on i side, max edge on j side), -1 for none
        par, pedge, depth = self._par, self._pedge, self._depth
        a, b = i, j
        ea = eb = -1
        while depth[a] > depth[b]:
            ea = max(ea, pedge[a])
            a = par[a]
        while depth[b] > depth[a]:
            eb = max(eb, pedge[b])
            b = par[b]
        while a != b:
            ea = max(ea, pedge[a])
            eb = max(eb, pedge[b])
            a, b = par[a], par[b]
        return a, ea, eb

    def meet(self, i, j):
        return self._climb(i, j)[0]

    def path_max_edge(self, i, j):
        """Largest edge on the path from ``i`` to ``meet(i, j)``; None for the null edge."""
        e = self._climb(i, j)[1]
        return None if e < 0 else e

    def dominates(self, i, j):
        if i == j:
            raise EqualVertices(f"domination compares distinct vertices, got {i} twice")
        _, eij, eji = self._climb(i, j)
        return eij > eji

    def dominator(self, vs):
        """The element of ``vs`` dominating all the others."""
        it = iter(vs)
        best = next(it)
        for v in it:
            if self.dominates(v, best):
                best = v
        return best

    def dominated(self, vs):
        """The element of ``vs`` dominated by all the others."""
        it = iter(vs)
        worst = next(it)
        for v in it:
            if self.dominates(worst, v):
                worst = v
        return worst

    def __eq__(self, other):
        if not isinstance(other, Arborescence):
            return NotImplemented
        return (self.graph, self.root, self._par, self._pedge) == (other.graph, other.root, other._par, other._pedge)

    def __hash__(self):
        return hash((self.graph, self.root, tuple(self._par)))

    def __repr__(self):
        links = ", ".join(f"{v}->{p}" for v, (p, _) in sorted(self.parent_map().items()))
        return f"Arborescence(root={self.root}, {links})"


# spanning trees -----------------------------------------------------------

def enumerate_spanning_trees(g):
    """Yield every spanning tree once, as a sorted tuple of edge indices.

    Include/exclude recursion over edges in order, with union-find rollback;
    an edge is excluded only if the remaining edges can still connect the graph,
    so every branch ends in a tree.  Trees come out in lexicographic order.
    """
    n, m, edges = g.n, g.m, g.edges
    parent = list(range(n))
    size = [1] * n
    chosen = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def still_connectable(start):
        # chosen edges plus every edge from position `start` on
        p = list(range(n))

        def f(x):
            while p[x] != x:
                p[x] = p[p[x]]
                x = p[x]
            return x

        comps = n
        for k in list(chosen) + list(range(start, m)):
            a, b = f(edges[k][0]), f(edges[k][1])
            if a != b:
                p[a] = b
                comps -= 1
        return comps == 1

    def rec(k):
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        if m - k < n - 1 - len(chosen):
            return
        a, b = find(edges[k][0]), find(edges[k][1])
        if a != b:
            if size[a] > size[b]:
                a, b = b, a
            parent[a] = b
            size[b] += size[a]
            chosen.append(k)
            yield from rec(k + 1)
            chosen.pop()
            size[b] -= size[a]
            parent[a] = a
        if still_connectable(k + 1):
            yield from rec(k + 1)

    yield from rec(0)
