"""Diffuse chip states and their bijection with acyclic orientations."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product

from .errors import IndexOutOfRange, NegativeChips, NotAcyclic, NotDiffuse, WrongChipTotal
from .graph import BACKWARD, FORWARD, Graph, Orientation
from .orientations import is_acyclic


@dataclass(frozen=True)
class PeelResult:
    diffuse: bool
    order: tuple
    residual: frozenset

    def __bool__(self):
        return self.diffuse


def _normalize(g, chips):
    if isinstance(chips, dict):
        chips = [chips[v] for v in range(g.n)]
    chips = tuple(int(c) for c in chips)
    if len(chips) != g.n:
        raise IndexOutOfRange(f"expected {g.n} chip counts, got {len(chips)}")
    for v, c in enumerate(chips):
        if c < 0:
            raise NegativeChips(f"vertex {v} carries {c} chips")
    return chips


def _peel(g, chips, rng=None):
    deg = g.degrees()
    gone = [False] * g.n
    queued = [False] * g.n
    ready = []
    for v in range(g.n):
        if deg[v] <= chips[v]:
            queued[v] = True
            ready.append(v)
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready) if rng is None else ready.pop(rng.randrange(len(ready)))
        gone[v] = True
        order.append(v)
        for w, _ in g.incident(v):
            if not gone[w]:
                deg[w] -= 1
                if not queued[w] and deg[w] <= chips[w]:
                    queued[w] = True
                    if rng is None:
                        heapq.heappush(ready, w)
                    else:
                        ready.append(w)
    residual = frozenset(v for v in range(g.n) if not gone[v])
    return PeelResult(not residual, tuple(order), residual)


def is_diffuse(g, chips, rng=None):
    """Peel vertices whose degree in what is left is at most their chips.

    The state is diffuse iff peeling removes everything; otherwise the stuck
    residual is an induced subgraph where no vertex is peelable.
    """
    return _peel(g, _normalize(g, chips), rng)


class DiffuseState:
    __slots__ = ("graph", "chips")

    def __init__(self, graph, chips):
        chips = _normalize(graph, chips)
        result = _peel(graph, chips)
        if not result:
            raise NotDiffuse(f"peeling is stuck on {sorted(result.residual)}", result.residual)
        self.graph = graph
        self.chips = chips

    @classmethod
    def _trusted(cls, graph, chips):
        s = object.__new__(cls)
        s.graph, s.chips = graph, tuple(chips)
        return s

    @property
    def norm(self):
        return sum(self.chips)

    def __getitem__(self, v):
        return self.chips[v]

    def __eq__(self, other):
        if not isinstance(other, DiffuseState):
            return NotImplemented
        return self.chips == other.chips and self.graph == other.graph

    def __hash__(self):
        return hash(self.chips)

    def __repr__(self):
        return f"DiffuseState({self.chips})"


def orientation_to_diffuse(o):
    """Chips = out-degrees of an acyclic orientation."""
    if not is_acyclic(o):
        raise NotAcyclic("orientation contains a directed cycle")
    return DiffuseState._trusted(o.graph, o.outdegrees())


def diffuse_to_orientation(s):
    """Rebuild the orientation by removing chip-free sinks round by round.

    Each round takes every remaining vertex with zero chips as a sink, points
    its remaining edges into it, and takes one chip from each such in-neighbor.
    """
    g = s.graph
    if s.norm != g.m:
        raise WrongChipTotal(f"state carries {s.norm} chips, graph has {g.m} edges")
    chips = list(s.chips)
    direction = [0] * g.m
    alive = set(range(g.n))
    while alive:
        sinks = sorted(v for v in alive if chips[v] == 0)
        if not sinks:
            raise NotDiffuse(f"no chip-free vertex among {sorted(alive)}", alive)
        for v in sinks:
            alive.discard(v)
        for v in sinks:
            for w, k in g.incident(v):
                if w not in alive:
                    continue
                direction[k] = FORWARD if g.edges[k][0] == w else BACKWARD
                chips[w] -= 1
                if chips[w] < 0:
                    raise NotDiffuse(f"vertex {w} runs out of chips", alive)
    for k in range(g.m):
        if not direction[k]:
            # both ends were sinks of the same round
            raise NotDiffuse(f"edge {k} joins two chip-free vertices", set(g.edges[k]))
    return Orientation(g, direction)


def enumerate_diffuse(g, total=None):
    """Diffuse states with ``0 <= chips(v) <= deg(v)``, optionally with a fixed chip total."""
    ranges = [range(g.degree(v) + 1) for v in range(g.n)]
    for chips in product(*ranges):
        if total is not None and sum(chips) != total:
            continue
        if _peel(g, chips):
            yield DiffuseState._trusted(g, chips)


def hat_graph(g):
    """``g`` plus an apex joined to every vertex; returns ``(graph, apex)``.

    The apex is vertex ``g.n`` and its edges follow ``g``'s edges in order.
    """
    apex = g.n
    return Graph(g.n + 1, list(g.edges) + [(v, apex) for v in range(g.n)]), apex
