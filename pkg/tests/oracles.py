"""Brute-force reference implementations, kept independent of the library code."""

from functools import lru_cache
from itertools import combinations, product

import networkx as nx

from gparking import Graph


# graph families

def from_networkx(h):
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(pos[a], pos[b]) for a, b in h.edges()])


@lru_cache(maxsize=None)
def atlas(max_n, min_n=1):
    """Every connected simple graph on ``min_n..max_n`` vertices, one per isomorphism class."""
    out = []
    for h in nx.graph_atlas_g():
        if min_n <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(from_networkx(h))
    return tuple(out)


def relabel_edges(g, rng):
    """Same graph with a shuffled edge order and flipped endpoints."""
    edges = [(b, a) if rng.random() < 0.5 else (a, b) for a, b in g.edges]
    rng.shuffle(edges)
    return Graph(g.n, edges)


# definitions checked literally

def subsets(items):
    items = list(items)
    for r in range(1, len(items) + 1):
        yield from combinations(items, r)


def parking_by_definition(g, q, values):
    if values[q] != -1:
        return False
    others = [v for v in range(g.n) if v != q]
    for a in subsets(others):
        inside = set(a)
        if not any(0 <= values[v] < sum(w not in inside for w in g.neighbors(v)) for v in a):
            return False
    return True


def diffuse_by_definition(g, chips):
    for a in subsets(range(g.n)):
        inside = set(a)
        if not any(chips[v] >= sum(w in inside for w in g.neighbors(v)) for v in a):
            return False
    return True


# enumeration by brute force

def all_directions(g):
    return product((1, -1), repeat=g.m)


def arcs_of(g, direction):
    return [(a, b) if d == 1 else (b, a) for (a, b), d in zip(g.edges, direction)]


def acyclic_directions(g):
    for d in all_directions(g):
        dg = nx.DiGraph()
        dg.add_nodes_from(range(g.n))
        dg.add_edges_from(arcs_of(g, d))
        if nx.is_directed_acyclic_graph(dg):
            yield d


def unique_source_directions(g, q):
    for d in acyclic_directions(g):
        indeg = [0] * g.n
        for _, b in arcs_of(g, d):
            indeg[b] += 1
        if [v for v in range(g.n) if indeg[v] == 0] == [q]:
            yield d


def spanning_tree_sets(g):
    for ks in combinations(range(g.m), g.n - 1):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges[k] for k in ks)
        if nx.is_connected(h):
            yield frozenset(ks)


def colorings(g, k):
    return sum(all(c[a] != c[b] for a, b in g.edges) for c in product(range(k), repeat=g.n))


# Tutte polynomial on multigraphs, as {(i, j): coeff}

def _components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    c = n
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            c -= 1
    return c


def _expand(acc, c, a, b):
    # acc += c * (x - 1)**a * (y - 1)**b
    from math import comb

    for i in range(a + 1):
        for j in range(b + 1):
            v = c * comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
            acc[i, j] = acc.get((i, j), 0) + v


def tutte_by_subsets(n, edges):
    k_all = _components(n, edges)
    acc = {}
    for mask in range(1 << len(edges)):
        chosen = [e for i, e in enumerate(edges) if mask >> i & 1]
        k = _components(n, chosen)
        _expand(acc, 1, k - k_all, len(chosen) - n + k)
    return {key: v for key, v in acc.items() if v}


def _is_bridge(n, edges, i):
    rest = edges[:i] + edges[i + 1:]
    return _components(n, rest) > _components(n, edges)


def _contract(n, edges, i):
    a, b = edges[i]
    keep = b if a == b else a
    # merge b into a, then renumber so vertices stay 0..n-2
    label = {}
    for v in range(n):
        w = keep if v == b else v
        if w not in label:
            label[w] = len(label)
    out = []
    for j, (x, y) in enumerate(edges):
        if j == i:
            continue
        x, y = keep if x == b else x, keep if y == b else y
        out.append((label[x], label[y]))
    return n - 1, out


def tutte_by_deletion_contraction(n, edges):
    """Classic recursion on a multigraph with loops."""
    if not edges:
        return {(0, 0): 1}
    a, b = edges[-1]
    rest = edges[:-1]
    if a == b:
        inner = tutte_by_deletion_contraction(n, rest)
        return {(i, j + 1): c for (i, j), c in inner.items()}
    i = len(edges) - 1
    contracted = tutte_by_deletion_contraction(*_contract(n, edges, i))
    if _is_bridge(n, edges, i):
        return {(i_ + 1, j): c for (i_, j), c in contracted.items()}
    out = dict(tutte_by_deletion_contraction(n, rest))
    for key, c in contracted.items():
        out[key] = out.get(key, 0) + c
    return {key: v for key, v in out.items() if v}
