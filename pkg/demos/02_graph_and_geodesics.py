"""
Levenshtein graphs and their geodesics
======================================

"""

import numpy as np

from levgraph import GraphSpec, build_graph, edit_distance_dp, geodesic_bfs, hamming_distance
from levgraph.graph import degree_formula, diameter

# all binary strings of length 0..3, joined when one edit apart
g = build_graph(GraphSpec(0, 3, 2))
print(g.vertex_count, "vertices,", g.edge_count, "edges, diameter", diameter(g))

# neighbours of 01 split by length: deletions, substitutions, insertions
u = (0, 1)
nb = [g.literal(x) for x in g.neighbors(g.rank(u)).tolist()]
print("N(01) =", nb)
print("by length:", degree_formula(u, 2))

# with mixed lengths the graph distance is edit distance
d = geodesic_bfs(g, (0, 1, 0))
print("d(010, 101) =", d[g.rank((1, 0, 1))], " edit:", edit_distance_dp((0, 1, 0), (1, 0, 1)))

# with a single length above 2 it is Hamming distance instead
cube = build_graph(GraphSpec(3, 3, 2))
d = geodesic_bfs(cube, (0, 1, 0))
print("in the cube:", d[cube.rank((1, 0, 1))], " hamming:", hamming_distance((0, 1, 0), (1, 0, 1)))

# distance layers from the empty string
layers = np.bincount(geodesic_bfs(g, ()))
print("layer sizes from the empty string:", layers.tolist())
