"""Dense and brute-force reference implementations.

These are deliberately slow and independent of the tree algorithms, so
they check themselves against textbook cases only.
"""

import random

import pytest

from cographlap import cotree, graph, oracle


def test_laplacian_matrix():
    g = graph.from_edge_list(3, [(0, 1), (0, 2)])
    L = oracle.laplacian_matrix(g)
    assert L.tolist() == [[2, -1, -1], [-1, 1, 0], [-1, 0, 1]]
    assert L.sum() == 0


def near(values, expected, tol):
    return len(values) == len(expected) and all(
        abs(a - b) <= tol for a, b in zip(values, expected)
    )


def test_dense_spectrum_textbook_cases():
    tri = oracle.dense_laplacian_spectrum(graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))
    assert near(tri.values, [0, 3, 3], tri.tolerance)
    star = oracle.dense_laplacian_spectrum(graph.from_edge_list(3, [(0, 1), (0, 2)]))
    assert near(star.values, [0, 1, 3], star.tolerance)
    c4 = oracle.dense_laplacian_spectrum(
        graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    )
    assert near(c4.values, [0, 2, 2, 4], c4.tolerance)


def test_dense_spectrum_sorted_and_capped():
    g = graph.from_edge_list(6, [(0, 1), (2, 3), (1, 4)])
    sp = oracle.dense_laplacian_spectrum(g)
    assert sp.values == sorted(sp.values)
    with pytest.raises(oracle.OrderLimitError):
        oracle.dense_laplacian_spectrum(graph.from_edge_list(201, []))


def test_find_p4():
    p4 = graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    w = oracle.find_p4(p4)
    assert w is not None
    a, b, c, d = w
    assert p4.has_edge(a, b) and p4.has_edge(b, c) and p4.has_edge(c, d)
    assert not (p4.has_edge(a, c) or p4.has_edge(a, d) or p4.has_edge(b, d))
    assert oracle.find_p4(graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])) is None


def test_find_p4_none_on_random_cographs():
    rng = random.Random(31)
    for _ in range(30):
        t = cotree.random_cotree(rng.randrange(1, 11), rng)
        assert oracle.find_p4(cotree.to_graph(t)) is None


def test_brute_twin_partition_matches_fast_route():
    from cographlap import twins

    rng = random.Random(41)
    for _ in range(40):
        n = rng.randrange(1, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = graph.from_edge_list(n, edges)
        assert oracle.brute_twin_partition(g) == twins.twin_partition(g)


def test_rounded_dense_eigenvalues_reproduce_exact_spectrum():
    from cographlap.diagonalize import spectrum

    rng = random.Random(43)
    for _ in range(40):
        t = cotree.random_cotree(rng.randrange(1, 13), rng)
        sp = oracle.dense_laplacian_spectrum(cotree.to_graph(t))
        rounded = {}
        for mu in sp.values:
            k = round(mu)
            assert abs(mu - k) < 1e-6
            rounded[k] = rounded.get(k, 0) + 1
        assert rounded == spectrum(t)


def test_find_p4_agrees_with_recognition_on_random_graphs():
    rng = random.Random(47)
    for _ in range(60):
        n = rng.randrange(1, 11)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = graph.from_edge_list(n, edges)
        witness = oracle.find_p4(g)
        try:
            cotree.from_graph(g)
            recognized = True
        except cotree.NotACographError:
            recognized = False
        assert recognized == (witness is None)


def test_canonical_form_decides_isomorphism():
    rng = random.Random(53)
    for _ in range(40):
        a = cotree.random_cotree(rng.randrange(1, 7), rng)
        b = cotree.random_cotree(rng.randrange(1, 7), rng)
        same_form = cotree.canonical_form(a) == cotree.canonical_form(b)
        assert same_form == oracle.brute_isomorphic(cotree.to_graph(a), cotree.to_graph(b))
        # a relabeled copy must always land on the same form
        ga = cotree.to_graph(a)
        perm = list(range(ga.n))
        rng.shuffle(perm)
        relabeled = graph.from_edge_list(
            ga.n, [(perm[u], perm[v]) for u, v in ga.edges()]
        )
        assert cotree.canonical_form(cotree.from_graph(relabeled)) == cotree.canonical_form(a)


def test_brute_isomorphic():
    c4 = graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    c4b = graph.from_edge_list(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert oracle.brute_isomorphic(c4, c4b)
    p4 = graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert not oracle.brute_isomorphic(c4, p4)
    assert not oracle.brute_isomorphic(
        graph.from_edge_list(3, [(0, 1)]), graph.from_edge_list(4, [(0, 1)])
    )


def test_brute_isomorphic_separates_cospectral_pair():
    from cographlap.families import cospectral_pair

    pair = cospectral_pair(3)
    ga = cotree.to_graph(pair.a)
    gb = cotree.to_graph(pair.b)
    assert not oracle.brute_isomorphic(ga, gb)
    assert oracle.brute_isomorphic(ga, ga)
