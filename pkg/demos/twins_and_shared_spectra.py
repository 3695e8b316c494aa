# Twin classes, reduction, and what equivalent cographs must share.
#
# Two cographs are called equivalent when collapsing each twin class to a
# single vertex leaves isomorphic graphs with matching class sizes.  The
# punchline: equivalent cographs share a large common part of their
# Laplacian spectra, with a computable lower bound.

from cographlap.cotree import from_graph, parse, render
from cographlap.graph import parse_edge_text
from cographlap.twins import are_equivalent, reduction, twin_partition
from cographlap.analysis import verify_shared_bound
from cographlap.diagonalize import spectrum

EDGES = """\
8 22
1 2
0 2
3 2
4 2
4 3
0 3
0 4
1 4
6 5
7 5
6 0
7 0
7 3
6 3
6 2
7 2
6 4
7 4
6 7
7 1
1 6
1 3
"""

g = parse_edge_text(EDGES)
t = from_graph(g)
print("cotree:", render(t))

for c in twin_partition(g).classes:
    print(f"  class {c.members} is a {c.kind}")

prof = reduction(t)
print("reduced to", prof.graph.n, "vertices:", render(from_graph(prof.graph)))

# an equivalent pair from the worked 5-vertex example: the coclique pair
# in b replaces a clique pair in a, sizes and the quotient are unchanged
a = parse("J(1,U(J(2),J(2)))")
b = parse("J(1,U(2,J(2)))")
m = are_equivalent(a, b)
print("class map:", m.class_map, "same-type classes:", m.shared_type)

rep = verify_shared_bound(a, b)
print("spectra:", spectrum(a), "and", spectrum(b))
print(f"shared eigenvalues: {rep.common} of 5, guaranteed at least {rep.bound}")
