"""Cross-checks of every count and bijection on a single graph."""

from __future__ import annotations

from .orientations import count_unique_source, enumerate_unique_source, extended_dhar, orientation_to_parking
from .parking import count_by_inclusion_exclusion, enumerate_maximum, enumerate_parking
from .polynomials import (
    lambda_coefficient_abs,
    parking_generating_polynomial,
    spanning_tree_count,
    tutte_polynomial,
)
from .trees import (
    all_spanning_trees,
    orientation_to_safe_tree,
    parking_to_tree,
    safe_tree_to_orientation,
    safe_trees,
    tree_to_parking,
)


def _same(name, values):
    ok = len(set(values)) == 1
    return name, ok, " = ".join(map(str, values))


def run_selftest(g, roots=None):
    """Yield ``(name, passed, detail)`` for each check; ``roots`` defaults to all vertices."""
    tutte = tutte_polynomial(g, limit=None)
    trees = list(all_spanning_trees(g))
    safe = safe_trees(g)
    yield _same("trees", [len(trees), spanning_tree_count(g), tutte(1, 1)])
    yield _same("safe-trees", [len(safe), tutte(1, 0), lambda_coefficient_abs(g, limit=None)])
    for q in range(g.n) if roots is None else roots:
        pfs = list(enumerate_parking(g, q))
        maxima = list(enumerate_maximum(g, q))
        orients = list(enumerate_unique_source(g, q))
        yield _same(f"parking[q={q}]", [len(pfs), len(trees), count_by_inclusion_exclusion(g, q)])
        yield _same(
            f"maximum[q={q}]",
            [len(maxima), len(orients), count_unique_source(g, q), len(safe), tutte(1, 0)],
        )
        yield "parkgen[q={}]".format(q), parking_generating_polynomial(g, q) == tutte.at_x(1), "P(y) vs T(1, y)"

        bad = sum(parking_to_tree(tree_to_parking(t, q)) != t for t in trees)
        bad += sum(tree_to_parking(parking_to_tree(f), q) != f for f in pfs)
        yield f"tree-bijection[q={q}]", not bad, f"{bad} failures"

        bad = sum(orientation_to_parking(extended_dhar(f), q) != f for f in maxima)
        bad += sum(extended_dhar(orientation_to_parking(o, q)) != o for o in orients)
        yield f"dhar[q={q}]", not bad, f"{bad} failures"

        bad = sum(orientation_to_safe_tree(safe_tree_to_orientation(t, q), q) != t for t in safe)
        yield f"safe-tree-bijection[q={q}]", not bad, f"{bad} failures"
