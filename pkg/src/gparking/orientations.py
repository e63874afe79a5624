"""Acyclic orientations and their correspondence with maximum parking functions.

An acyclic orientation with ``q`` as its only source maps to the maximum
parking function ``indegree - 1``; the Extended Dhar algorithm inverts it.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .errors import (
    IndegreeOvershoot,
    NotAcyclic,
    NotMaximum,
    SourceNotUnique,
    WrongSource,
)
from .graph import BACKWARD, FORWARD, Orientation, _has_directed_cycle
from .parking import ParkingFunction, is_maximum


def is_acyclic(o):
    return not _has_directed_cycle(o.graph.n, o.arcs())


def _backtrack(g, q=None):
    # Orient edges in order; prune on cycles, and (with q) on any in-edge at q
    # or a finished vertex other than q without in-edges.
    n, m, edges = g.n, g.m, g.edges
    out = [[] for _ in range(n)]
    indeg = [0] * n
    undecided = g.degrees()
    direction = [0] * m

    def reaches(a, b):
        stack, seen = [a], {a}
        while stack:
            x = stack.pop()
            if x == b:
                return True
            for y in out[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def rec(k):
        if k == m:
            yield tuple(direction)
            return
        u, v = edges[k]
        for d, (a, b) in ((FORWARD, (u, v)), (BACKWARD, (v, u))):
            if q is not None and b == q:
                continue
            if reaches(b, a):
                continue
            undecided[u] -= 1
            undecided[v] -= 1
            indeg[b] += 1
            ok = q is None or (undecided[a] or indeg[a] or a == q)
            if ok:
                out[a].append(b)
                direction[k] = d
                yield from rec(k + 1)
                out[a].pop()
            indeg[b] -= 1
            undecided[u] += 1
            undecided[v] += 1

    for dirs in rec(0):
        yield Orientation(g, dirs)


def enumerate_acyclic(g):
    """Every acyclic orientation of ``g``."""
    return _backtrack(g)


def enumerate_unique_source(g, q):
    """Every acyclic orientation whose only source is ``q``, in a fixed order."""
    if g.n == 1:
        yield Orientation(g, ())
        return
    yield from _backtrack(g, q)


def count_unique_source(g, q):
    """Count acyclic orientations with unique source ``q`` without listing them.

    Such an orientation is the same thing as a layering ``{q} = L0, L1, ...``
    of the vertices into independent sets where every vertex of ``L(i+1)``
    has a neighbor in ``L(i)`` (peel off all sources repeatedly); the layerings
    are counted by memoized recursion on (candidates, remaining vertices).
    """
    n = g.n
    nbr = [sum(1 << w for w in g.neighbors(v)) for v in range(n)]
    low_bits = {1 << v: v for v in range(n)}

    def independent_subsets(cand):
        if not cand:
            yield 0, 0
            return
        bit = cand & -cand
        v = low_bits[bit]
        rest = cand & ~bit
        yield from independent_subsets(rest)
        for s, adj in independent_subsets(rest & ~nbr[v]):
            yield s | bit, adj | nbr[v]

    @lru_cache(maxsize=None)
    def count(cand, rest):
        if not rest:
            return 1
        total = 0
        for s, adj in independent_subsets(cand):
            if s:
                r2 = rest & ~s
                total += count(adj & r2, r2)
        return total

    rest = ((1 << n) - 1) & ~(1 << q)
    result = count(nbr[q] & rest, rest)
    count.cache_clear()
    return result


def _check_unique_source(o, q):
    if not is_acyclic(o):
        raise NotAcyclic("orientation contains a directed cycle")
    sources = o.sources()
    if len(sources) != 1:
        raise SourceNotUnique(f"orientation has sources {sources}")
    if sources[0] != q:
        raise WrongSource(f"unique source is {sources[0]}, expected {q}")


def orientation_to_parking(o, q):
    """Maximum parking function ``indegree(v) - 1`` of a unique-source orientation."""
    _check_unique_source(o, q)
    return ParkingFunction(o.graph, q, [d - 1 for d in o.indegrees()])


def extended_dhar(f):
    """Unique-source acyclic orientation whose indegrees are ``f + 1``.

    Vertices whose accrued indegree reaches ``f(v) + 1`` wait in a FIFO queue;
    a marked vertex orients its still-free edges outward in edge order.
    """
    if not is_maximum(f):
        raise NotMaximum(f"norm {f.norm} is below |E| - |V| = {f.graph.m - f.graph.n}")
    g, q = f.graph, f.root
    direction = [0] * g.m
    indeg = [0] * g.n
    queue = deque([q])
    while queue:
        v = queue.popleft()
        for w, k in g.incident(v):
            if direction[k]:
                continue
            direction[k] = FORWARD if g.edges[k][0] == v else BACKWARD
            indeg[w] += 1
            if indeg[w] > f[w] + 1:
                raise IndegreeOvershoot(f"vertex {w} reached indegree {indeg[w]} > {f[w] + 1}")
            if indeg[w] == f[w] + 1:
                queue.append(w)
    return Orientation(g, direction)
