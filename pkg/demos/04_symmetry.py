"""
Automorphisms and determining sets
==================================

"""

from levgraph import GraphSpec, build_graph
from levgraph.strings import format_string
from levgraph.symmetry import (
    build_determining_set,
    construct_theorem_group,
    enumerate_automorphisms,
    exact_determining_number,
    expected_automorphism_count,
    is_determining,
    match_groups,
)

# search the graph directly, then compare with relabelling plus reversal
for spec in (GraphSpec(0, 3, 2), GraphSpec(1, 3, 3), GraphSpec(0, 1, 2), GraphSpec(2, 2, 2)):
    autos = enumerate_automorphisms(build_graph(spec))
    print(spec.as_dict(), len(autos), "automorphisms, expected", expected_automorphism_count(spec))

g = build_graph(GraphSpec(1, 3, 3))
print("search equals the structural group:", match_groups(g))
for phi in construct_theorem_group(3)[:4]:
    print("  ", phi.as_dict(), "maps 001 to", format_string(phi((0, 0, 1)), 3))

# fixing a few strings pins down every symmetry
spec = GraphSpec(0, 2, 3)
g = build_graph(spec)
D = build_determining_set(spec)
print("determining set", [format_string(w, 3) for w in D], is_determining(g, D))
print("exact determining number:", exact_determining_number(g).det)

# the exception: binary strings of length at most 2
print("L(0,2;2):", exact_determining_number(build_graph(GraphSpec(0, 2, 2))).det)
