"""Exact Tutte and chromatic polynomials and the matrix-tree count.

All arithmetic is on Python integers.  The Tutte polynomial is the edge
subset sum

    T(x, y) = sum over A of (x - 1)**(k(A) - 1) * (y - 1)**(|A| - n + k(A))

(connected graphs only), evaluated by first counting edge subsets by
``(|A|, k(A))``.
"""

from __future__ import annotations

from math import comb

from .errors import TooManyEdges
from .parking import enumerate_parking

DEFAULT_EDGE_LIMIT = 24


class UnivariatePolynomial:
    """Dense integer polynomial; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_uni(other))

    def __rsub__(self, other):
        return _as_uni(other) - self

    def __mul__(self, other):
        other = _as_uni(other)
        if not self.coeffs or not other.coeffs:
            return UnivariatePolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = UnivariatePolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def compose(self, inner):
        """``self(inner(t))``."""
        acc = UnivariatePolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = UnivariatePolynomial([other])
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePolynomial({list(self.coeffs)})"


def _as_uni(p):
    return p if isinstance(p, UnivariatePolynomial) else UnivariatePolynomial([p])


class BivariatePolynomial:
    """Sparse integer polynomial: ``coeffs[(i, j)]`` multiplies ``x**i * y**j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {key: int(c) for key, c in (coeffs or {}).items() if c}

    def coefficient(self, i, j):
        return self.coeffs.get((i, j), 0)

    def terms(self):
        """``(coeff, i, j)`` in descending lexicographic ``(i, j)`` order."""
        return [(self.coeffs[key], *key) for key in sorted(self.coeffs, reverse=True)]

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def at_x(self, x):
        """Univariate polynomial in ``y`` obtained by fixing ``x``."""
        out = {}
        for (i, j), c in self.coeffs.items():
            out[j] = out.get(j, 0) + c * x**i
        return UnivariatePolynomial(out.get(j, 0) for j in range(max(out, default=-1) + 1))

    def at_y(self, y):
        """Univariate polynomial in ``x`` obtained by fixing ``y``."""
        out = {}
        for (i, j), c in self.coeffs.items():
            out[i] = out.get(i, 0) + c * y**j
        return UnivariatePolynomial(out.get(i, 0) for i in range(max(out, default=-1) + 1))

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return BivariatePolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariatePolynomial({k: c * other for k, c in self.coeffs.items()})
        out = {}
        for (i, j), a in self.coeffs.items():
            for (k, l), b in other.coeffs.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        body = " + ".join(f"{c}*x^{i}*y^{j}" for c, i, j in self.terms()) or "0"
        return f"BivariatePolynomial({body})"


# edge-subset statistics ---------------------------------------------------

def _counts_by_backtracking(g):
    n, m, edges = g.n, g.m, g.edges
    parent = list(range(n))
    counts = {}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(k, size, comps):
        if k == m:
            counts[size, comps] = counts.get((size, comps), 0) + 1
            return
        rec(k + 1, size, comps)
        a, b = find(edges[k][0]), find(edges[k][1])
        if a == b:
            rec(k + 1, size + 1, comps)
        else:
            parent[a] = b
            rec(k + 1, size + 1, comps - 1)
            parent[a] = a

    rec(0, 0, n)
    return counts


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _counts_by_vertex_subsets(g):
    # conn[S][k]: edge sets of size k inside S that connect S
    n = g.n
    full = (1 << n) - 1
    inner = [0] * (1 << n)
    nbr = [sum(1 << w for w in g.neighbors(v)) for v in range(n)]
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        inner[s] = inner[s & ~(1 << low)] + bin(nbr[low] & s).count("1")
    free = [[comb(inner[s], k) for k in range(inner[s] + 1)] for s in range(1 << n)]
    conn = [None] * (1 << n)
    for s in range(1, full + 1):
        low = s & -s
        acc = list(free[s])
        rest = s & ~low
        # the block holding the lowest vertex is a proper subset t of s
        sub = (rest - 1) & rest
        while True:
            t = sub | low
            if t != s:
                for i, c in enumerate(_poly_mul(conn[t], free[s & ~t])):
                    acc[i] -= c
            if not sub:
                break
            sub = (sub - 1) & rest
        conn[s] = acc

    # F[S][c][k]: edge sets inside S with k edges and c components, covering S
    memo = {0: {0: [1]}}

    def spread(s):
        if s in memo:
            return memo[s]
        low = s & -s
        rest = s & ~low
        out = {}
        sub = rest
        while True:
            t = sub | low
            for c, poly in spread(s & ~t).items():
                prod_ = _poly_mul(conn[t], poly)
                cur = out.setdefault(c + 1, [])
                if len(cur) < len(prod_):
                    cur.extend([0] * (len(prod_) - len(cur)))
                for i, x in enumerate(prod_):
                    cur[i] += x
            if not sub:
                break
            sub = (sub - 1) & rest
        memo[s] = out
        return out

    counts = {}
    for c, poly in spread(full).items():
        for k, x in enumerate(poly):
            if x:
                counts[k, c] = x
    return counts


def subset_statistics(g, limit=DEFAULT_EDGE_LIMIT):
    """Number of edge subsets ``A`` for each ``(|A|, components of (V, A))``."""
    if limit is not None and g.m > limit:
        raise TooManyEdges(f"{g.m} edges exceed the limit {limit}")
    if 3 ** g.n * (g.m + 1) ** 2 < 2 ** g.m * 4:
        return _counts_by_vertex_subsets(g)
    return _counts_by_backtracking(g)


def _shifted_power(a):
    # coefficients of (t - 1)**a
    return [comb(a, i) * (-1) ** (a - i) for i in range(a + 1)]


def tutte_polynomial(g, limit=DEFAULT_EDGE_LIMIT):
    n = g.n
    out = {}
    for (size, comps), count in subset_statistics(g, limit).items():
        px = _shifted_power(comps - 1)
        py = _shifted_power(size - n + comps)
        for i, a in enumerate(px):
            for j, b in enumerate(py):
                out[i, j] = out.get((i, j), 0) + count * a * b
    return BivariatePolynomial(out)


def chromatic_polynomial(g, limit=DEFAULT_EDGE_LIMIT):
    """``chi(t) = (-1)**(n - 1) * t * T(1 - t, 0)``."""
    t_x0 = tutte_polynomial(g, limit).at_y(0)
    inner = UnivariatePolynomial([1, -1])
    sign = -1 if (g.n - 1) % 2 else 1
    return UnivariatePolynomial.monomial(1, sign) * t_x0.compose(inner)


def lambda_coefficient_abs(g, limit=DEFAULT_EDGE_LIMIT):
    return abs(chromatic_polynomial(g, limit).coefficient(1))


def parking_generating_polynomial(g, q):
    """Sum of ``y**((|E| - |V|) - ||f||)`` over all parking functions of ``(g, q)``."""
    top = g.m - g.n
    coeffs = {}
    for f in enumerate_parking(g, q):
        w = top - f.norm
        coeffs[w] = coeffs.get(w, 0) + 1
    return UnivariatePolynomial(coeffs.get(i, 0) for i in range(max(coeffs) + 1))


def reduced_laplacian(g, drop=0):
    keep = [v for v in range(g.n) if v != drop]
    pos = {v: i for i, v in enumerate(keep)}
    mat = [[0] * len(keep) for _ in keep]
    for v in keep:
        mat[pos[v]][pos[v]] = g.degree(v)
    for u, v in g.edges:
        if u in pos and v in pos:
            mat[pos[u]][pos[v]] -= 1
            mat[pos[v]][pos[u]] -= 1
    return mat


def integer_determinant(mat):
    """Bareiss fraction-free elimination; exact for integer matrices."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g):
    return integer_determinant(reduced_laplacian(g))
