"""Expression parsing, normalization, and the graph round trip."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cographlap import cotree, graph
from cographlap.cotree import (
    CotreeParseError,
    EmptyNodeError,
    Inner,
    Leaf,
    NotACographError,
)

FIG_EDGES = """\
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


def test_parse_leaf_and_counts():
    t = cotree.parse("1")
    assert t == Leaf(0)
    t = cotree.parse("J(3)")
    assert t == Inner("J", [Leaf(0), Leaf(1), Leaf(2)])


def test_parse_assigns_leaf_ids_left_to_right():
    t = cotree.parse("J(U(2),1,U(J(2),1))")
    assert [lf.vertex for lf in cotree.leaves(t)] == list(range(6))


def test_parse_normalizes():
    # same-kind nesting and single-child wrappers collapse on the way in
    assert cotree.parse("U(U(2),1)") == cotree.parse("U(3)")
    assert cotree.parse("J(U(J(2)))") == cotree.parse("J(2)")
    assert cotree.is_normalized(cotree.parse("J(U(2),U(2))"))


def test_parse_whitespace_is_free():
    assert cotree.parse(" J( U( 2 ) , 2 ) ") == cotree.parse("J(U(2),2)")


@pytest.mark.parametrize(
    "text,pos",
    [
        ("U()", 2),
        ("J(U(),1)", 4),
    ],
)
def test_parse_empty_node(text, pos):
    with pytest.raises(EmptyNodeError) as info:
        cotree.parse(text)
    assert info.value.pos == pos


@pytest.mark.parametrize(
    "text",
    ["", "J(2", "J(2))", "2", "J(,2)", "J(2,)", "J(2)x", "U", "J(0)", "x"],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(CotreeParseError):
        cotree.parse(text)


def test_render_round_trip_compresses_leaf_runs():
    text = "J(U(J(U(2),1),1),U(J(3),1),1)"
    t = cotree.parse(text)
    assert cotree.render(t) == text
    assert cotree.render(cotree.parse("U(1,1,1)")) == "U(3)"


def test_depth_and_leaf_count():
    assert cotree.depth(Leaf(0)) == 0
    t = cotree.parse("J(U(J(U(2),1),1),U(J(3),1),1)")
    assert cotree.depth(t) == 4
    assert cotree.leaf_count(t) == 9


def test_normalize_rebuilds_unnormalized_tree():
    raw = Inner("U", [Inner("U", [Leaf(0), Leaf(1)]), Inner("J", [Leaf(2)])])
    t = cotree.normalize(raw)
    assert t == Inner("U", [Leaf(0), Leaf(1), Leaf(2)])
    assert not cotree.is_normalized(raw)


def test_to_graph_star():
    g = cotree.to_graph(cotree.parse("J(1,U(2))"))
    assert g.edges() == [(0, 1), (0, 2)]


def test_to_graph_matches_fixture_edge_list():
    t = cotree.parse("J(U(J(U(2),3),1),2)")
    # the 8-vertex fixture used across the suite
    assert cotree.to_graph(t) == graph.parse_edge_text(FIG_EDGES)


def test_from_graph_round_trip_on_fixture():
    g = graph.parse_edge_text(FIG_EDGES)
    t = cotree.from_graph(g)
    assert cotree.to_graph(t) == g
    assert cotree.is_normalized(t)
    assert [lf.vertex for lf in cotree.leaves(t)] == list(range(8))


def test_from_graph_rejects_path_with_witness():
    g = graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotACographError) as info:
        cotree.from_graph(g)
    a, b, c, d = info.value.witness
    assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
    assert not (g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, d))


def test_canonical_form_separates_nonisomorphic():
    a = cotree.parse("J(U(3),U(J(3),1))")
    b = cotree.parse("J(U(J(U(2),1),1),U(J(2),1))")
    assert cotree.canonical_form(a) != cotree.canonical_form(b)
    # child order does not matter
    assert cotree.canonical_form(cotree.parse("J(U(2),3)")) == cotree.canonical_form(
        cotree.parse("J(3,U(2))")
    )


def test_canonical_leaf_order_is_a_permutation():
    t = cotree.parse("J(1,U(2))")
    assert cotree.canonical_leaf_order(t) == [0, 1, 2]


def test_leaf_degrees():
    t = cotree.parse("J(U(3),U(J(3),1))")
    g = cotree.to_graph(t)
    assert cotree.leaf_degrees(t) == [g.degree(v) for v in range(g.n)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**32 - 1))
def test_random_cotree_round_trips(n, seed):
    t = cotree.random_cotree(n, random.Random(seed))
    assert cotree.is_normalized(t)
    assert cotree.leaf_count(t) == n
    assert [lf.vertex for lf in cotree.leaves(t)] == list(range(n))
    assert cotree.parse(cotree.render(t)) == t


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 24), st.integers(0, 2**32 - 1))
def test_from_graph_inverts_to_graph_up_to_isomorphism(n, seed):
    t = cotree.random_cotree(n, random.Random(seed))
    g = cotree.to_graph(t)
    back = cotree.from_graph(g)
    assert cotree.to_graph(back) == g
    assert cotree.canonical_form(back) == cotree.canonical_form(t)


def test_sibling_leaves_follow_parent_kind():
    rng = random.Random(37)
    for _ in range(30):
        t = cotree.random_cotree(rng.randrange(2, 13), rng)
        g = cotree.to_graph(t)
        stack = [t]
        while stack:
            node = stack.pop()
            if isinstance(node, Leaf):
                continue
            ls = [ch.vertex for ch in node.children if isinstance(ch, Leaf)]
            for i, u in enumerate(ls):
                for v in ls[i + 1 :]:
                    assert g.has_edge(u, v) == (node.kind == "J")
            stack.extend(node.children)
