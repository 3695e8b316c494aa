"""
Locating Laplacian eigenvalues without solving anything
=======================================================

A cotree expression is enough to count Laplacian eigenvalues in any
interval, in one linear pass per endpoint.  No matrices appear.
"""

from fractions import Fraction

from cographlap.cotree import parse
from cographlap.diagonalize import count_relative, spectrum

# the 7-vertex cograph used throughout: a union of three isolated
# vertices joined to the complement of a triangle plus a vertex
t = parse("J(U(3),U(J(3),1))")

# one query gives the whole sign pattern of L - xI
for x in (0, 3, 6):
    c = count_relative(t, x)
    print(f"x={x}: {c.greater} above, {c.equal} equal, {c.less} below")

# endpoints need not be integers, and exact rationals stay exact
c = count_relative(t, Fraction(7, 2))
print(f"x=7/2: {c.greater} above, {c.equal} equal, {c.less} below")

# eigenvalues in (a, b] by differencing two queries
a, b = 3, 6
inside = count_relative(t, a).greater - count_relative(t, b).greater
print(f"eigenvalues in ({a}, {b}]: {inside}")

# the integral spectrum, for comparison; multiplicities confirm the counts
print("spectrum:", spectrum(t))
