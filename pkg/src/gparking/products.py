"""Parking functions on Cartesian products, and the n-cube.

On ``Q_n`` the root is always the all-zeros vertex ``0``.
"""

from __future__ import annotations

from collections import Counter
from math import comb, prod

from .errors import DimensionTooLarge, WrongGraph
from .graph import MAX_HYPERCUBE_DIMENSION, cartesian_product, hypercube
from .parking import ParkingFunction


def box_parking(f1, f2):
    """``(f1 □ f2)(u, v) = f1(u) + f2(v) + 1`` on ``G1 □ G2``, rooted at ``(q1, q2)``."""
    g = cartesian_product(f1.graph, f2.graph)
    n2 = f2.graph.n
    values = [f1[u] + f2[v] + 1 for u in range(f1.graph.n) for v in range(n2)]
    return ParkingFunction(g, f1.root * n2 + f2.root, values)


def _check_dimension(n):
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if n > MAX_HYPERCUBE_DIMENSION:
        raise DimensionTooLarge(f"dimension {n} exceeds {MAX_HYPERCUBE_DIMENSION}")


def canonical_qn(n):
    """The parking function ``weight(v) - 1`` on ``Q_n``."""
    _check_dimension(n)
    return ParkingFunction(hypercube(n), 0, [bin(v).count("1") - 1 for v in range(1 << n)])


def qn_dom_count(n):
    """``prod_{k=2..n} k**C(n, k)``: size of the domination set of a semi-canonical function."""
    return prod(k ** comb(n, k) for k in range(2, n + 1))


def qn_total_count(n):
    """``prod_{k=2..n} (2k)**C(n, k)``: number of parking functions (and spanning trees) of ``Q_n``."""
    return prod((2 * k) ** comb(n, k) for k in range(2, n + 1))


def _dimension_of(g):
    n = g.n.bit_length() - 1
    if g.n != 1 << n or n < 1 or n > MAX_HYPERCUBE_DIMENSION or g != hypercube(n):
        raise WrongGraph("function does not live on a hypercube in canonical labeling")
    return n


def canonical_value_counts(n):
    return Counter({k - 1: comb(n, k) for k in range(n + 1)})


def is_semi_canonical(f):
    """True iff ``f`` takes each value ``k - 1`` exactly ``C(n, k)`` times."""
    n = _dimension_of(f.graph)
    return Counter(f.values) == canonical_value_counts(n)


def is_canonical(f):
    n = _dimension_of(f.graph)
    return f.root == 0 and f.values == canonical_qn(n).values


def qn_function(n, assignment):
    """Parking function on ``Q_n`` from a mapping of bit strings such as ``"011"`` to values."""
    values = [None] * (1 << n)
    for bits, x in assignment.items():
        values[int(bits, 2)] = x
    if None in values:
        raise ValueError("assignment must cover every vertex of the cube")
    return ParkingFunction(hypercube(n), 0, values)
