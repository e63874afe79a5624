# %% [markdown]
# Spanning trees, broken circuits and the two tree bijections.

# %%
from gparking import (
    all_spanning_trees, broken_circuit_edges, diamond, is_maximum,
    orientation_to_safe_tree, parking_to_tree, safe_tree_to_orientation,
    tree_to_parking,
)
from gparking.trees import safe_trees

g = diamond()
q = 0

# %%
for t in all_spanning_trees(g):
    report = broken_circuit_edges(t)
    f = tree_to_parking(t, q)
    print(sorted(t.edges), "broken", sorted(report.violating_edges), "->", f.values,
          "max" if is_maximum(f) else "")

# %%
# safe trees (no broken circuit) give exactly the maximum functions
print(len(safe_trees(g)), "safe trees of", sum(1 for _ in all_spanning_trees(g)))

# %%
# the inverse rebuilds each tree from its function
print(all(parking_to_tree(tree_to_parking(t, q)) == t for t in all_spanning_trees(g)))

# %%
# safe trees also match orientations with a unique sink, via domination
for t in safe_trees(g):
    o = safe_tree_to_orientation(t, q)
    print(sorted(t.edges), o.arcs(), orientation_to_safe_tree(o, q) == t)
