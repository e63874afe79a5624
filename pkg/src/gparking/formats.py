"""Plain-text file formats.

All indices are 0-based decimal; lines starting with ``#`` are comments.

graph::

    p <n> <m>
    e <u> <v>        (m lines, in edge order)

parking function::

    q <root>
    <n integers, -1 at the root>

orientation::

    o <m>
    <m entries + or -, relative to the graph's edge lines>

spanning tree::

    t <n-1>
    <edge indices>

diffuse state::

    s <n>
    <n nonnegative integers>

Several objects in one file are separated by blank lines.
"""

from __future__ import annotations

from .diffuse import DiffuseState
from .errors import FormatError
from .graph import BACKWARD, FORWARD, Graph, Orientation
from .parking import ParkingFunction
from .trees import SpanningTree


def _lines(text):
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def split_records(text):
    """Split a multi-object file on blank lines, dropping comments."""
    records, cur = [], []
    for ln in text.splitlines():
        s = ln.strip()
        if s.startswith("#"):
            continue
        if not s:
            if cur:
                records.append("\n".join(cur))
                cur = []
            continue
        cur.append(s)
    if cur:
        records.append("\n".join(cur))
    return records


def _ints(tokens, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"{what}: expected integers, got {' '.join(tokens)!r}") from None


def _header(lines, tag, what):
    if not lines:
        raise FormatError(f"{what}: empty input")
    parts = lines[0].split()
    if parts[0] != tag:
        raise FormatError(f"{what}: first line must start with {tag!r}, got {lines[0]!r}")
    return _ints(parts[1:], what), lines[1:]


# graph

def write_graph(g):
    out = [f"p {g.n} {g.m}"] + [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def read_graph(text):
    lines = _lines(text)
    head, rest = _header(lines, "p", "graph")
    if len(head) != 2:
        raise FormatError("graph: header must be 'p <n> <m>'")
    n, m = head
    edges = []
    for ln in rest:
        parts = ln.split()
        if parts[0] != "e" or len(parts) != 3:
            raise FormatError(f"graph: bad edge line {ln!r}")
        edges.append(tuple(_ints(parts[1:], "graph")))
    if len(edges) != m:
        raise FormatError(f"graph: header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


# parking functions

def write_parking(f):
    return f"q {f.root}\n" + " ".join(map(str, f.values)) + "\n"


def parse_parking(text):
    """``(root, values)`` without validating against a graph."""
    lines = _lines(text)
    head, rest = _header(lines, "q", "parking function")
    if len(head) != 1:
        raise FormatError("parking function: header must be 'q <root>'")
    values = _ints(" ".join(rest).split(), "parking function")
    return head[0], values


def read_parking(text, graph):
    root, values = parse_parking(text)
    return ParkingFunction(graph, root, values)


# orientations

def write_orientation(o):
    body = " ".join("+" if d == FORWARD else "-" for d in o.direction)
    return f"o {len(o.direction)}\n{body}\n"


def read_orientation(text, graph):
    lines = _lines(text)
    head, rest = _header(lines, "o", "orientation")
    tokens = " ".join(rest).split()
    if head != [len(tokens)]:
        raise FormatError(f"orientation: header announces {head} entries, found {len(tokens)}")
    table = {"+": FORWARD, "-": BACKWARD}
    try:
        return Orientation(graph, [table[t] for t in tokens])
    except KeyError as exc:
        raise FormatError(f"orientation: entries must be + or -, got {exc.args[0]!r}") from None


# spanning trees

def write_tree(t):
    return f"t {len(t.edges)}\n" + " ".join(map(str, sorted(t.edges))) + "\n"


def read_tree(text, graph):
    lines = _lines(text)
    head, rest = _header(lines, "t", "spanning tree")
    edges = _ints(" ".join(rest).split(), "spanning tree")
    if head != [len(edges)]:
        raise FormatError(f"spanning tree: header announces {head} edges, found {len(edges)}")
    return SpanningTree(graph, edges)


# diffuse states

def write_diffuse(s):
    return f"s {len(s.chips)}\n" + " ".join(map(str, s.chips)) + "\n"


def parse_diffuse(text):
    lines = _lines(text)
    head, rest = _header(lines, "s", "diffuse state")
    chips = _ints(" ".join(rest).split(), "diffuse state")
    if head != [len(chips)]:
        raise FormatError(f"diffuse state: header announces {head} entries, found {len(chips)}")
    return chips


def read_diffuse(text, graph):
    return DiffuseState(graph, parse_diffuse(text))


# polynomials

def bivariate_terms(p):
    return [f"{c} x^{i} y^{j}" for c, i, j in p.terms()]


def univariate_terms(p, var="x"):
    """Univariate polynomial printed as bivariate terms in ``var``."""
    out = []
    for i in range(p.degree, -1, -1):
        c = p.coefficient(i)
        if c:
            out.append(f"{c} x^{i} y^0" if var == "x" else f"{c} x^0 y^{i}")
    return out


# tab-separated single-line forms

def tsv(obj):
    if isinstance(obj, ParkingFunction):
        return "\t".join(map(str, (obj.root, *obj.values)))
    if isinstance(obj, Orientation):
        return "\t".join("+" if d == FORWARD else "-" for d in obj.direction)
    if isinstance(obj, SpanningTree):
        return "\t".join(map(str, sorted(obj.edges)))
    if isinstance(obj, DiffuseState):
        return "\t".join(map(str, obj.chips))
    raise TypeError(f"no tsv form for {type(obj).__name__}")


def text(obj):
    if isinstance(obj, ParkingFunction):
        return write_parking(obj)
    if isinstance(obj, Orientation):
        return write_orientation(obj)
    if isinstance(obj, SpanningTree):
        return write_tree(obj)
    if isinstance(obj, DiffuseState):
        return write_diffuse(obj)
    if isinstance(obj, Graph):
        return write_graph(obj)
    raise TypeError(f"no text form for {type(obj).__name__}")
