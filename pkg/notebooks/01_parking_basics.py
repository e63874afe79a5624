# %% [markdown]
# Parking functions on a small graph: burning, the poset, and counting.

# %%
from gparking import (
    ParkingFunction, complete_graph, count_by_inclusion_exclusion, dom_size,
    enumerate_maximum, enumerate_parking, greedy_maximum, is_parking, meet,
)

g = complete_graph(3)  # edges (0,1), (0,2), (1,2); list order is the edge order

# %%
# the burn test marks vertices once enough neighbors have burnt
print(is_parking(g, 0, (-1, 0, 1)))
print(is_parking(g, 0, (-1, 1, 1)))  # vertices 1 and 2 never catch fire

# %%
for f in enumerate_parking(g, 0):
    print(f.values, "norm", f.norm)

# %%
a = ParkingFunction(g, 0, (-1, 0, 1))
b = ParkingFunction(g, 0, (-1, 1, 0))
print("meet", meet(a, b).values)
print("dominated by a:", dom_size(a))

# %%
# maxima have norm |E| - |V|; greedy burning finds one of them
print([h.values for h in enumerate_maximum(g, 0)])
print(greedy_maximum(g, 0).values)

# %%
# every parking function lies below some maximum, so inclusion-exclusion counts them all
print(count_by_inclusion_exclusion(g, 0), sum(1 for _ in enumerate_parking(g, 0)))
