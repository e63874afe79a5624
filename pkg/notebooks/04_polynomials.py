# %% [markdown]
# Tutte and chromatic polynomials as cross-checks for the counts.

# %%
from gparking import (
    chromatic_polynomial, count_unique_source, cycle_graph, enumerate_acyclic,
    lambda_coefficient_abs, parking_generating_polynomial, spanning_tree_count,
    tutte_polynomial,
)

g = cycle_graph(5)
t = tutte_polynomial(g)
print(t)

# %%
print("trees", t(1, 1), spanning_tree_count(g))
print("acyclic orientations", t(2, 0), sum(1 for _ in enumerate_acyclic(g)))
print("unique source", t(1, 0), count_unique_source(g, 0), lambda_coefficient_abs(g))

# %%
chi = chromatic_polynomial(g)
print(chi.coeffs, "colorings with 3 colors:", chi(3))

# %%
# parking functions graded by how far they sit below the maximum norm
print(parking_generating_polynomial(g, 0).coeffs, t.at_x(1).coeffs)
