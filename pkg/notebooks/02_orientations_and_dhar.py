# %% [markdown]
# Maximum parking functions and acyclic orientations with a unique source.

# %%
from gparking import (
    diamond, enumerate_maximum, enumerate_unique_source, extended_dhar,
    orientation_to_parking,
)

g = diamond()
q = 0

# %%
# indegree minus one turns a unique-source orientation into a maximum function
for o in enumerate_unique_source(g, q):
    f = orientation_to_parking(o, q)
    print(o.arcs(), "->", f.values)

# %%
# the extended burning algorithm goes back
for f in enumerate_maximum(g, q):
    o = extended_dhar(f)
    print(f.values, "->", o.arcs(), orientation_to_parking(o, q) == f)
