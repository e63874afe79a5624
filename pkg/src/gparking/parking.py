"""G-parking functions: burn recognition, the dominance poset and counting.

A parking function on ``(G, q)`` is stored on every vertex, with the value
``-1`` at the root ``q``.  Its norm ``||f||`` is the sum over all vertices,
root included, so a maximum parking function has norm ``|E| - |V|``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product
from math import prod

from .errors import (
    BadRootValue,
    IndexOutOfRange,
    MeetMismatch,
    MismatchedGraph,
    MismatchedRoot,
    NegativeValue,
    NotParkingFunction,
    TooManyMaxFunctions,
)

DEFAULT_IE_LIMIT = 20


@dataclass(frozen=True)
class BurnResult:
    """Outcome of the burn test.

    ``order`` lists the vertices in the order they were marked; ``residual``
    is the set left unmarked, empty exactly when the function is parking.
    """

    parking: bool
    order: tuple
    residual: frozenset

    def __bool__(self):
        return self.parking


def _normalize(g, q, values):
    if isinstance(values, dict):
        values = [values[v] for v in range(g.n)]
    values = tuple(int(x) for x in values)
    if len(values) != g.n:
        raise IndexOutOfRange(f"expected {g.n} values, got {len(values)}")
    if not 0 <= q < g.n:
        raise IndexOutOfRange(f"root {q} outside 0..{g.n - 1}")
    if values[q] != -1:
        raise BadRootValue(f"root {q} must carry -1, got {values[q]}")
    for v, x in enumerate(values):
        if v != q and x < 0:
            raise NegativeValue(f"vertex {v} has negative value {x}")
    return values


def _burn(g, values, q, rng=None):
    n = g.n
    marked_nbrs = [0] * n
    marked = [False] * n
    queued = [False] * n
    order = []
    ready = [q]
    queued[q] = True
    while ready:
        if rng is None:
            v = heapq.heappop(ready)
        else:
            v = ready.pop(rng.randrange(len(ready)))
        marked[v] = True
        order.append(v)
        for w, _ in g.incident(v):
            if marked[w]:
                continue
            marked_nbrs[w] += 1
            if not queued[w] and marked_nbrs[w] > values[w]:
                queued[w] = True
                if rng is None:
                    heapq.heappush(ready, w)
                else:
                    ready.append(w)
    residual = frozenset(v for v in range(n) if not marked[v])
    return BurnResult(not residual, tuple(order), residual)


def is_parking(g, q, values, rng=None):
    """Run Dhar's burn test on ``values``.

    Among markable vertices the smallest index is marked first, unless a
    ``random.Random`` is passed as ``rng`` to randomize tie-breaks.
    """
    return _burn(g, _normalize(g, q, values), q, rng)


class ParkingFunction:
    """A validated G-parking function with respect to ``root``."""

    __slots__ = ("graph", "root", "values")

    def __init__(self, graph, root, values):
        values = _normalize(graph, root, values)
        result = _burn(graph, values, root)
        if not result:
            raise NotParkingFunction(
                f"burn stops with unmarked vertices {sorted(result.residual)}", result.residual
            )
        self.graph = graph
        self.root = root
        self.values = values

    @classmethod
    def _trusted(cls, graph, root, values):
        f = object.__new__(cls)
        f.graph, f.root, f.values = graph, root, tuple(values)
        return f

    @property
    def norm(self):
        return sum(self.values)

    def __getitem__(self, v):
        return self.values[v]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, ParkingFunction):
            return NotImplemented
        return self.root == other.root and self.values == other.values and self.graph == other.graph

    def __hash__(self):
        return hash((self.root, self.values))

    def __repr__(self):
        return f"ParkingFunction(root={self.root}, values={self.values})"


def _check_same(f, h):
    if f.graph != h.graph:
        raise MismatchedGraph("parking functions live on different graphs")
    if f.root != h.root:
        raise MismatchedRoot(f"roots differ: {f.root} vs {h.root}")


def meet(f, h):
    """Pointwise minimum; again a parking function."""
    _check_same(f, h)
    return ParkingFunction._trusted(f.graph, f.root, map(min, f.values, h.values))


def meet_all(fs):
    fs = list(fs)
    out = fs[0]
    for h in fs[1:]:
        out = meet(out, h)
    return out


def dominates_pf(f, h):
    """True iff ``h <= f`` at every vertex."""
    _check_same(f, h)
    return all(b <= a for a, b in zip(f.values, h.values))


def dom_size(f):
    """Number of parking functions below ``f`` (``f`` included)."""
    return prod(x + 1 for v, x in enumerate(f.values) if v != f.root)


def enumerate_dominated(f):
    """Every parking function ``h`` with ``h <= f``, in lexicographic order."""
    ranges = [range(-1, 0) if v == f.root else range(x + 1) for v, x in enumerate(f.values)]
    for vals in product(*ranges):
        yield ParkingFunction._trusted(f.graph, f.root, vals)


def enumerate_parking(g, q):
    """Every parking function of ``(g, q)`` once, in lexicographic order of values.

    Scans the grid ``0 <= f(v) <= deg(v) - 1`` and keeps what burns completely.
    """
    ranges = [range(-1, 0) if v == q else range(g.degree(v)) for v in range(g.n)]
    for vals in product(*ranges):
        if _burn(g, vals, q):
            yield ParkingFunction._trusted(g, q, vals)


def _grid_with_sum(g, q, lower, total):
    # values lower[v] <= x <= deg(v) - 1 on v != q summing to `total`, lexicographic
    n = g.n
    hi = [-1 if v == q else g.degree(v) - 1 for v in range(n)]
    lo = [-1 if v == q else lower[v] for v in range(n)]
    suffix_lo = [0] * (n + 1)
    suffix_hi = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix_lo[v] = suffix_lo[v + 1] + max(lo[v], 0)
        suffix_hi[v] = suffix_hi[v + 1] + max(hi[v], 0)
    vals = [0] * n

    def rec(v, need):
        if v == n:
            if need == 0:
                yield tuple(vals)
            return
        if v == q:
            vals[v] = -1
            yield from rec(v + 1, need)
            return
        for x in range(lo[v], hi[v] + 1):
            rest = need - x
            if suffix_lo[v + 1] <= rest <= suffix_hi[v + 1]:
                vals[v] = x
                yield from rec(v + 1, rest)

    yield from rec(0, total)


def enumerate_maximum(g, q):
    """Every maximum parking function, by grid scan restricted to norm ``|E| - |V|``."""
    for vals in _grid_with_sum(g, q, [0] * g.n, g.m - g.n + 1):
        if _burn(g, vals, q):
            yield ParkingFunction._trusted(g, q, vals)


def is_maximum(f):
    return f.norm == f.graph.m - f.graph.n


def greedy_maximum(g, q):
    """Burn from ``q``, giving each vertex the largest value allowed when it is marked.

    The next vertex is the smallest index with a marked neighbor; its value is
    (number of marked neighbors) - 1.
    """
    n = g.n
    count = [0] * n
    marked = [False] * n
    values = [0] * n
    ready = [q]
    queued = [False] * n
    queued[q] = True
    while ready:
        v = heapq.heappop(ready)
        marked[v] = True
        values[v] = count[v] - 1
        for w, _ in g.incident(v):
            if not marked[w]:
                count[w] += 1
                if not queued[w]:
                    queued[w] = True
                    heapq.heappush(ready, w)
    values[q] = -1
    return ParkingFunction._trusted(g, q, values)


def maximal_dominators(f):
    """All maximum parking functions ``h`` with ``f <= h``.

    Their meet equals ``f``; a mismatch raises MeetMismatch.
    """
    g = f.graph
    found = [
        ParkingFunction._trusted(g, f.root, vals)
        for vals in _grid_with_sum(g, f.root, f.values, g.m - g.n + 1)
        if _burn(g, vals, f.root)
    ]
    if not found or meet_all(found).values != f.values:
        raise MeetMismatch(f"meet of the maximum dominators of {f.values} is not the function itself")
    return found


def count_by_inclusion_exclusion(g, q, method="grouped", limit=DEFAULT_IE_LIMIT):
    """``|P(G, q)|`` as the inclusion-exclusion sum over the domination sets of the maxima.

    ``method="subsets"`` evaluates the sum term by term over all ``2**k - 1``
    nonempty subsets of the ``k`` maxima and refuses ``k > limit``.
    ``method="grouped"`` evaluates the same sum with terms collected by their
    meet, which keeps the work bounded by the number of distinct meets.
    """
    maxima = [h.values for h in enumerate_maximum(g, q)]
    k = len(maxima)

    def size(vals):
        return prod(x + 1 for v, x in enumerate(vals) if v != q)

    if method == "subsets":
        if limit is not None and k > limit:
            raise TooManyMaxFunctions(f"{k} maximum parking functions exceed the limit {limit}")
        total = 0
        for mask in range(1, 1 << k):
            chosen = [maxima[i] for i in range(k) if mask >> i & 1]
            sign = 1 if len(chosen) % 2 else -1
            total += sign * size(tuple(map(min, *chosen)) if len(chosen) > 1 else chosen[0])
        return total
    if method != "grouped":
        raise ValueError(f"unknown method {method!r}")

    # terms[meet] = signed number of subsets seen so far with that meet
    terms = {}
    for h in maxima:
        new = {h: 1}
        for mvals, c in terms.items():
            key = tuple(map(min, mvals, h))
            new[key] = new.get(key, 0) - c
        for key, c in new.items():
            c += terms.get(key, 0)
            if c:
                terms[key] = c
            else:
                terms.pop(key, None)
    return sum(c * size(vals) for vals, c in terms.items())
