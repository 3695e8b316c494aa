"""Shared Laplacian eigenvalues of equivalent cographs.

Equivalent cographs on n vertices are guaranteed a sizable common part of
their Laplacian spectra: with k twin classes, of which the set I are
matched type-for-type, at least

    k + sum over i in I of (t_i - 1)

eigenvalues coincide (with multiplicity), where t_i is the size of class
i.  The heavy lifting is done by twin classes directly: a class of t
pairwise nonadjacent twins of degree d contributes the eigenvalue d at
least t - 1 times, a class of t pairwise adjacent twins the eigenvalue
d + 1 at least t - 1 times.  This module verifies the bound
computationally, exposes the per-class eigenvalues, checks the degree
relation between matched classes, and hunts for cospectral
nonisomorphic pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cotree import Cotree, canonical_form, leaf_count, leaf_degrees
from .diagonalize import spectrum
from .twins import CLIQUE, EquivalenceMatch, are_equivalent, reduction


class NotEquivalentError(ValueError):
    """The shared-spectrum machinery needs an equivalent pair."""


class RelationViolatedError(ValueError):
    """Matched twin classes with degrees that contradict the class types."""


@dataclass
class ClassEigenvalue:
    """Eigenvalue forced by one twin class: value with multiplicity >= count."""

    class_index: int
    value: int
    count: int


@dataclass
class SharedSpectrumReport:
    match: EquivalenceMatch
    k: int
    bound: int
    common: int
    common_spectrum: dict[int, int]
    holds: bool


def common_spectrum(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Multiset intersection of two spectra, keys ascending."""
    return {
        x: min(a[x], b[x]) for x in sorted(a.keys() & b.keys()) if min(a[x], b[x]) > 0
    }


def twin_class_eigenvalues(t: Cotree) -> list[ClassEigenvalue]:
    """Laplacian eigenvalues contributed by each nontrivial twin class.

    A class of size t whose members have degree d contributes d (coclique)
    or d + 1 (clique) with multiplicity at least t - 1: differences of
    characteristic vectors of twin vertices are eigenvectors, and t twins
    give t - 1 independent ones.
    """
    prof = reduction(t)
    deg = leaf_degrees(t)
    out = []
    for i, size in enumerate(prof.twin_numbers):
        if size < 2:
            continue
        value = deg[prof.reps[i]] + (1 if prof.kinds[i] == CLIQUE else 0)
        out.append(ClassEigenvalue(i, value, size - 1))
    return out


def verify_shared_bound(g_tree: Cotree, h_tree: Cotree) -> SharedSpectrumReport:
    """Count common eigenvalues of an equivalent pair against the bound.

    Raises NotEquivalentError when the trees are not equivalent; otherwise
    reports k, the bound k + sum(t_i - 1) over type-matched classes, the
    size of the actual spectral intersection, and whether the bound holds.
    """
    match = are_equivalent(g_tree, h_tree)
    if match is None:
        raise NotEquivalentError("cographs are not equivalent, no bound applies")
    k = len(match.twin_numbers)
    bound = k + sum(match.twin_numbers[i] - 1 for i in match.shared_type)
    cs = common_spectrum(spectrum(g_tree), spectrum(h_tree))
    common = sum(cs.values())
    return SharedSpectrumReport(
        match=match,
        k=k,
        bound=bound,
        common=common,
        common_spectrum=cs,
        holds=common >= bound,
    )


def degree_relation_checks(
    g_tree: Cotree, h_tree: Cotree, match: EquivalenceMatch | None = None
) -> list[tuple[int, int, int, int]]:
    """Verify member degrees of matched classes; returns (i, j, deg_g, deg_h) rows.

    A member's degree splits into the within-class part (t - 1 for a
    clique class, 0 for a coclique class) and the cross-class part, which
    matched classes share.  So matched classes of equal type have equal
    member degrees, and where the types differ the clique side is larger
    by exactly t - 1.  Raises RelationViolatedError on any mismatch.
    """
    if match is None:
        match = are_equivalent(g_tree, h_tree)
        if match is None:
            raise NotEquivalentError("cographs are not equivalent")
    rg = reduction(g_tree)
    rh = reduction(h_tree)
    dg = leaf_degrees(g_tree)
    dh = leaf_degrees(h_tree)
    rows = []
    for i, j in enumerate(match.class_map):
        a = dg[rg.reps[i]]
        b = dh[rh.reps[j]]
        t = rg.twin_numbers[i]
        ka, kb = rg.kinds[i], rh.kinds[j]
        if ka == kb:
            ok = a == b
        elif ka == CLIQUE:
            ok = a == b + (t - 1)
        else:
            ok = b == a + (t - 1)
        if not ok:
            raise RelationViolatedError(
                f"classes {i} ({ka}, degree {a}) and {j} ({kb}, degree {b}) "
                f"of size {t} violate the degree relation"
            )
        rows.append((i, j, a, b))
    return rows


def find_cospectral_nonisomorphic(pairs) -> list[tuple[Cotree, Cotree]]:
    """Filter (a, b) cotree pairs down to cospectral nonisomorphic ones.

    Isomorphism here is plain graph isomorphism, decided on canonical
    cotree encodings.  Over equivalent pairs this is expected to come back
    empty: an equivalent cospectral pair is necessarily isomorphic.
    """
    hits = []
    for a, b in pairs:
        if leaf_count(a) != leaf_count(b):
            continue
        if spectrum(a) == spectrum(b) and canonical_form(a) != canonical_form(b):
            hits.append((a, b))
    return hits
