import pytest

from cographlap import analysis, cotree, twins
from cographlap.analysis import ClassEigenvalue
from cographlap.diagonalize import spectrum

WORKED_G = "J(1,U(J(2),J(2)))"
WORKED_H = "J(1,U(2,J(2)))"


def test_common_spectrum():
    assert analysis.common_spectrum({0: 1, 3: 2}, {0: 2, 3: 1, 5: 1}) == {0: 1, 3: 1}
    assert analysis.common_spectrum({1: 1}, {2: 1}) == {}


def test_twin_class_eigenvalues_frozen():
    t = cotree.parse("J(U(3),U(J(3),1))")
    assert analysis.twin_class_eigenvalues(t) == [
        ClassEigenvalue(0, 4, 2),
        ClassEigenvalue(1, 6, 2),
    ]


def test_twin_class_eigenvalues_live_in_spectrum():
    t = cotree.parse("J(U(3),U(J(3),1))")
    s = spectrum(t)
    for ce in analysis.twin_class_eigenvalues(t):
        assert s.get(ce.value, 0) >= ce.count


def test_verify_shared_bound_worked_pair():
    rep = analysis.verify_shared_bound(cotree.parse(WORKED_G), cotree.parse(WORKED_H))
    assert rep.k == 3
    assert rep.bound == 4
    assert rep.common == 4
    assert rep.holds
    assert rep.common_spectrum == {0: 1, 1: 1, 3: 1, 5: 1}
    assert rep.match.class_map == [0, 2, 1]


def test_verify_shared_bound_same_tree():
    t = cotree.parse("J(U(J(U(2),3),1),2)")
    rep = analysis.verify_shared_bound(t, t)
    assert rep.k == 4
    assert rep.bound == 8 == rep.common
    assert rep.holds


def test_verify_shared_bound_rejects_inequivalent():
    with pytest.raises(analysis.NotEquivalentError):
        analysis.verify_shared_bound(cotree.parse("J(3)"), cotree.parse("J(4)"))


def test_degree_relation_rows_worked_pair():
    rows = analysis.degree_relation_checks(cotree.parse(WORKED_G), cotree.parse(WORKED_H))
    assert rows == [(0, 0, 4, 4), (1, 2, 2, 2), (2, 1, 2, 1)]


def test_degree_relation_rejects_bad_match():
    g = cotree.parse(WORKED_G)
    h = cotree.parse(WORKED_H)
    # a deliberately wrong class map pairs the singleton with a twin class
    fake = twins.EquivalenceMatch([1, 2, 0], [], [1, 2, 2], [], [])
    with pytest.raises(analysis.RelationViolatedError):
        analysis.degree_relation_checks(g, h, match=fake)
    with pytest.raises(analysis.NotEquivalentError):
        analysis.degree_relation_checks(cotree.parse("J(3)"), cotree.parse("J(4)"))


def test_find_cospectral_nonisomorphic():
    g = cotree.parse(WORKED_G)
    h = cotree.parse(WORKED_H)
    # equivalent but not cospectral: common count 4 of 5
    assert analysis.find_cospectral_nonisomorphic([(g, h)]) == []
    from cographlap.families import cospectral_pair

    pair = cospectral_pair(3)
    hits = analysis.find_cospectral_nonisomorphic([(g, h), (pair.a, pair.b)])
    assert hits == [(pair.a, pair.b)]
