# %% [markdown]
# Parking functions on the n-cube.

# %%
from gparking import (
    box_parking, canonical_qn, count_unique_source, dom_size, hypercube,
    qn_dom_count, qn_total_count, spanning_tree_count,
)
from gparking.products import qn_function, is_semi_canonical

# %%
for n in range(1, 5):
    print(n, qn_total_count(n), spanning_tree_count(hypercube(n)), qn_dom_count(n), dom_size(canonical_qn(n)))

# %%
# the canonical function is weight - 1, and it is a product of single-edge functions
f = canonical_qn(1)
for _ in range(2):
    f = box_parking(f, canonical_qn(1))
print(f.values == canonical_qn(3).values)

# %%
h = qn_function(3, {"000": -1, "010": 0, "100": 0, "101": 0, "001": 1, "011": 1, "111": 1, "110": 2})
print(is_semi_canonical(h), h == canonical_qn(3))

# %%
# maximum functions on the cube, counted through unique-source orientations
print([count_unique_source(hypercube(n), 0) for n in (2, 3, 4)])
