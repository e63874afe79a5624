# %% [markdown]
# Diffuse chip states and acyclic orientations.

# %%
from gparking import (
    complete_graph, count_unique_source, diffuse_to_orientation, enumerate_acyclic,
    enumerate_diffuse, hat_graph, is_diffuse, tutte_polynomial,
)

g = complete_graph(4)
print(is_diffuse(g, (3, 2, 1, 0)), is_diffuse(g, (2, 2, 1, 1)))

# %%
states = list(enumerate_diffuse(g, total=g.m))
print(len(states), sum(1 for _ in enumerate_acyclic(g)), tutte_polynomial(g)(2, 0))

# %%
s = states[0]
print(s.chips, "->", diffuse_to_orientation(s).arcs())

# %%
# with an apex joined to everything, acyclic orientations become unique-source ones
h, apex = hat_graph(g)
print(count_unique_source(h, apex))
