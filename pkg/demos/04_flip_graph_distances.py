"""
Distances in the flip graph
===========================

Build the flip graph, compare generator distances with the closed form, and
look at the neighbors of the generators of TL_5.
"""

# %%
import numpy as np

from flipcat import flipgraph, tl

g = flipgraph.build_flip_graph(7)
print(len(g), "nodes,", g.edge_count(), "edges")

# %%
# Generator-to-generator distances by BFS and by formula.
n = 7
bfs = np.zeros((n - 1, n - 1), dtype=int)
formula = np.zeros_like(bfs)
for i in range(1, n):
    dist = g.distances_from(flipgraph.generator_node(n, i))
    for j in range(1, n):
        bfs[i - 1, j - 1] = dist[g.node_index(flipgraph.generator_node(n, j))]
        formula[i - 1, j - 1] = flipgraph.generator_distance_formula(n, i, j)
print(bfs)
print("agree:", np.array_equal(bfs, formula))

# %%
# The crossing count never exceeds the distance.
table = g.distance_table()
rng = np.random.default_rng(0)
idx = rng.integers(0, len(g), size=(2000, 2))
gaps = [table[a, b] - flipgraph.crossing_lower_bound(g.nodes[a], g.nodes[b]) for a, b in idx]
print("min gap", min(gaps), "mean gap", np.mean(gaps))

# %%
# Neighbors of the identity and the generators of TL_5, as words.
for i in range(5):
    words = flipgraph.all_generator_neighbors(5, i)
    print("I " if i == 0 else f"u{i}", [tl.format_word(w) for w in words])

# %%
# A single query without building the graph, with a witness path.
a, b = tl.generator_triangulation(9, 1), tl.generator_triangulation(9, 6)
r = flipgraph.flip_distance(a, b, witness=True)
print("distance", r.distance, "lower bound", r.lower_bound, "path length", len(r.witness_path))
