# Nonisomorphic cographs with identical Laplacian spectra, at every odd
# order 2n + 1 from 7 up, and how one pair becomes an infinite family.

from cographlap.cotree import canonical_form, parse, render
from cographlap.diagonalize import spectrum
from cographlap.families import cospectral_family, cospectral_pair

pair = cospectral_pair(3)
print("a =", render(pair.a))
print("b =", render(pair.b))
print("shared spectrum:", pair.spectrum)
print("isomorphic?", canonical_form(pair.a) == canonical_form(pair.b))

# the construction already re-verifies itself, so a failure would raise;
# orders grow two at a time
for n in range(3, 9):
    p = cospectral_pair(n)
    assert spectrum(p.a) == spectrum(p.b)
    print(f"n={n}: order {2 * n + 1}, largest eigenvalue {max(p.spectrum)}")

# joining any companion of matching order onto both members keeps them
# cospectral and nonisomorphic, one new pair per companion
for expr in ("U(3)", "J(3)", "J(1,U(2))"):
    fam = cospectral_family(parse(expr), 3)
    print(f"companion {expr}: order {sum(fam.spectrum.values())},",
          "spectrum", fam.spectrum)
