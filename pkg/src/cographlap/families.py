"""Construction of L-cospectral, nonisomorphic cograph pairs at every odd order.

For n >= 3 the two cographs on 2n + 1 vertices

    g(n) = join of (n isolated vertices) with (K_n plus one extra vertex)
    h(n) = join of (K_{n-1} with a pendant-style twin layout) as below

built by build_g and build_h share the Laplacian spectrum

    {2n+1: 1, 2n: n-1, n+1: n-1, n: 1, 0: 1}

while having different cotrees, hence being nonisomorphic.  Joining both
with one further cograph of order n keeps the pair cospectral and
nonisomorphic, which turns the single pair into a family: one member per
cograph of order n.

The join rule for Laplacian spectra drives everything here: if G1 has
spectrum s1 on n1 vertices and G2 has s2 on n2, the join G1 v G2 has
spectrum {0} + {mu + n2 : mu in s1 - one 0} + {mu + n1 : mu in s2 - one
0} + {n1 + n2}, multiset union throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cotree import (
    Cotree,
    Inner,
    JOIN,
    Leaf,
    canonical_form,
    leaf_count,
    normalize,
    parse,
)
from .diagonalize import spectrum


class MissingZeroError(ValueError):
    """A Laplacian spectrum without the eigenvalue 0 is no spectrum at all."""


class NTooSmallError(ValueError):
    """The cospectral constructions need n >= 3."""


class OrderMismatchError(ValueError):
    """Family extension got a companion cograph of the wrong order."""


class VerificationFailedError(RuntimeError):
    """A constructed pair failed its own cospectrality or isomorphism check."""


@dataclass
class CospectralPair:
    a: Cotree
    b: Cotree
    spectrum: dict[int, int]


def join_spectrum(
    s1: dict[int, int], n1: int, s2: dict[int, int], n2: int
) -> dict[int, int]:
    """Laplacian spectrum of a join, from the factors' spectra and orders."""
    if sum(s1.values()) != n1 or sum(s2.values()) != n2:
        raise ValueError("spectrum multiplicities must sum to the order")
    if s1.get(0, 0) < 1 or s2.get(0, 0) < 1:
        raise MissingZeroError("each factor spectrum must contain 0")
    out: dict[int, int] = {}

    def add(value: int, mult: int) -> None:
        out[value] = out.get(value, 0) + mult

    add(0, 1)
    for mu, m in s1.items():
        add(mu + n2, m)
    add(n2, -1)
    for mu, m in s2.items():
        add(mu + n1, m)
    add(n1, -1)
    add(n1 + n2, 1)
    result = {mu: m for mu, m in sorted(out.items()) if m != 0}
    assert all(m > 0 for m in result.values())
    assert sum(result.values()) == n1 + n2
    return result


def family_spectrum(n: int) -> dict[int, int]:
    """The common spectrum of build_g(n) and build_h(n), in closed form."""
    if n < 3:
        raise NTooSmallError("need n >= 3")
    return {0: 1, n: 1, n + 1: n - 1, 2 * n: n - 1, 2 * n + 1: 1}


def build_g(n: int) -> Cotree:
    """First member: n isolated vertices joined with (K_n plus one vertex)."""
    if n < 3:
        raise NTooSmallError("need n >= 3")
    return parse(f"J(U({n}),U(J({n}),1))")


def build_h(n: int) -> Cotree:
    """Second member: same order and spectrum as build_g(n), different graph."""
    if n < 3:
        raise NTooSmallError("need n >= 3")
    return parse(f"J(U(J(U({n - 1}),1),1),U(J({n - 1}),1))")


def cospectral_pair(n: int) -> CospectralPair:
    """The verified cospectral nonisomorphic pair of order 2n + 1.

    Both members' spectra are computed from scratch and compared with the
    closed form, and the cotrees are checked to be nonisomorphic;
    VerificationFailedError on any disagreement.
    """
    g = build_g(n)
    h = build_h(n)
    expected = family_spectrum(n)
    sg = spectrum(g)
    sh = spectrum(h)
    if sg != expected or sh != expected:
        raise VerificationFailedError(
            f"order {2 * n + 1} pair: computed spectra {sg} and {sh}, expected {expected}"
        )
    if canonical_form(g) == canonical_form(h):
        raise VerificationFailedError(f"order {2 * n + 1} pair is isomorphic")
    return CospectralPair(g, h, expected)


def _shifted(t: Cotree, offset: int) -> Cotree:
    done: dict[int, Cotree] = {}
    stack: list[tuple[Cotree, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Leaf):
            done[id(node)] = Leaf(node.vertex + offset)
        elif not ready:
            stack.append((node, True))
            stack.extend((ch, False) for ch in node.children)
        else:
            done[id(node)] = Inner(node.kind, [done[id(ch)] for ch in node.children])
    return done[id(t)]


def cospectral_family(companion: Cotree, n: int) -> CospectralPair:
    """Join a companion cograph of order n onto both members of the pair.

    The companion keeps its leaf ids 0..n-1; the pair members' ids are
    shifted up by n.  The joined pair is verified cospectral (against the
    join rule applied to the companion's computed spectrum) and
    nonisomorphic.  Distinct companions give nonisomorphic results, which
    is what makes this a family rather than a single pair.
    """
    if leaf_count(companion) != n:
        raise OrderMismatchError(
            f"companion has {leaf_count(companion)} vertices, expected {n}"
        )
    base = cospectral_pair(n)
    order = 2 * n + 1
    a = normalize(Inner(JOIN, [_shifted(companion, 0), _shifted(base.a, n)]))
    b = normalize(Inner(JOIN, [_shifted(companion, 0), _shifted(base.b, n)]))
    expected = join_spectrum(spectrum(companion), n, base.spectrum, order)
    sa = spectrum(a)
    sb = spectrum(b)
    if sa != expected or sb != expected:
        raise VerificationFailedError(
            f"joined pair: computed spectra {sa} and {sb}, expected {expected}"
        )
    if canonical_form(a) == canonical_form(b):
        raise VerificationFailedError("joined pair is isomorphic")
    return CospectralPair(a, b, expected)
