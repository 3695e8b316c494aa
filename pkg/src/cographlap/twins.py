"""Twin classes, reductions, and equivalence of cographs.

Two vertices are twins when their neighborhoods agree outside the pair
itself; a twin class is either a clique (pairwise adjacent, shared closed
neighborhood) or a coclique (pairwise nonadjacent, shared open
neighborhood), and the two flavors never mix inside one class.  Collapsing
every class to a single representative gives the reduction of a graph.
Two cographs are equivalent when their reductions are isomorphic under a
map that preserves class sizes; the class types are allowed to differ,
and the positions where they happen to agree is exactly what the spectral
bound in the analysis module feeds on.

In a normalized cotree the twin classes are visible directly: they are
the maximal groups of leaves sharing a parent, cliques under a join node
and cocliques under a union node.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, induced_subgraph
from .cotree import (
    Cotree,
    Inner,
    Leaf,
    JOIN,
    UNION,
    canonical_form,
    from_graph,
    leaves,
    normalize,
    other_kind,
    to_graph,
    _encodings,
)

CLIQUE = "clique"
COCLIQUE = "coclique"
SINGLETON = "singleton"

_KIND_RANK = {CLIQUE: 0, COCLIQUE: 1, SINGLETON: 2}


class SameLeafError(ValueError):
    """lca_distance was asked for the distance from a leaf to itself."""


@dataclass
class TwinClass:
    members: list[int]
    kind: str


@dataclass
class TwinPartition:
    """Twin classes ordered by smallest member, members ascending."""

    classes: list[TwinClass]

    def twin_numbers(self) -> list[int]:
        return [len(c.members) for c in self.classes]

    def kinds(self) -> list[str]:
        return [c.kind for c in self.classes]


@dataclass
class ReductionProfile:
    """One representative per twin class, with the class data retained.

    Vertex i of `graph` is the smallest member of `classes[i]`; classes are
    ordered by smallest member in the original graph.
    """

    graph: Graph
    twin_numbers: list[int]
    kinds: list[str]
    classes: list[list[int]]
    reps: list[int]


@dataclass
class EquivalenceMatch:
    """A size-preserving isomorphism between two reductions.

    class_map sends class index i of the first cograph to a class of the
    second with the same twin number; shared_type lists the first-side
    indices whose class kinds also coincide under the map.
    """

    class_map: list[int]
    shared_type: list[int]
    twin_numbers: list[int]
    kinds_a: list[str]
    kinds_b: list[str]


def twin_partition(g: Graph) -> TwinPartition:
    """Twin classes of a graph via neighborhood bucketing.

    Vertices sharing an open neighborhood form coclique classes, vertices
    sharing a closed neighborhood clique classes; the rest are singletons.
    """
    open_groups: dict[frozenset, list[int]] = {}
    closed_groups: dict[frozenset, list[int]] = {}
    for v in range(g.n):
        open_groups.setdefault(frozenset(g.adj[v]), []).append(v)
        closed_groups.setdefault(frozenset(g.adj[v] | {v}), []).append(v)
    taken = [False] * g.n
    classes = []
    for grp in open_groups.values():
        if len(grp) >= 2:
            classes.append(TwinClass(sorted(grp), COCLIQUE))
            for v in grp:
                taken[v] = True
    for grp in closed_groups.values():
        if len(grp) >= 2:
            # a vertex cannot sit in both flavors; a shared closed and a
            # shared open neighborhood on overlapping pairs is contradictory
            assert not any(taken[v] for v in grp)
            classes.append(TwinClass(sorted(grp), CLIQUE))
            for v in grp:
                taken[v] = True
    classes.extend(TwinClass([v], SINGLETON) for v in range(g.n) if not taken[v])
    classes.sort(key=lambda c: c.members[0])
    return TwinPartition(classes)


def twin_partition_from_cotree(t: Cotree) -> TwinPartition:
    """Twin classes read off a normalized cotree in linear time."""
    if isinstance(t, Leaf):
        return TwinPartition([TwinClass([t.vertex], SINGLETON)])
    classes = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            continue
        leaf_kids = sorted(
            ch.vertex for ch in node.children if isinstance(ch, Leaf)
        )
        if len(leaf_kids) >= 2:
            kind = CLIQUE if node.kind == JOIN else COCLIQUE
            classes.append(TwinClass(leaf_kids, kind))
        elif len(leaf_kids) == 1:
            classes.append(TwinClass(leaf_kids, SINGLETON))
        stack.extend(ch for ch in node.children if isinstance(ch, Inner))
    classes.sort(key=lambda c: c.members[0])
    return TwinPartition(classes)


def reduction(t: Cotree) -> ReductionProfile:
    """Collapse every twin class of a normalized cotree to its smallest member."""
    part = twin_partition_from_cotree(t)
    g = to_graph(t)
    reps = [c.members[0] for c in part.classes]
    return ReductionProfile(
        graph=induced_subgraph(g, reps),
        twin_numbers=part.twin_numbers(),
        kinds=part.kinds(),
        classes=[list(c.members) for c in part.classes],
        reps=reps,
    )


def _canonical_leaves_grouped(t: Cotree, labels) -> tuple[list[int], list[int]]:
    """Leaf ids in canonical order plus, per position, the parent's visit index."""
    enc = _encodings(t, labels)
    order: list[int] = []
    groups: list[int] = []
    stack: list[tuple[Cotree, int]] = [(t, 0)]
    visit = 0
    while stack:
        node, gid = stack.pop()
        if isinstance(node, Leaf):
            order.append(node.vertex)
            groups.append(gid)
            continue
        visit += 1
        kids = sorted(node.children, key=lambda ch: enc[id(ch)])
        stack.extend((ch, visit) for ch in reversed(kids))
    return order, groups


def are_equivalent(a: Cotree, b: Cotree) -> EquivalenceMatch | None:
    """Match the reductions of two cographs, or None if they do not agree.

    Equality is decided on canonical encodings of the reduction cotrees
    labeled by twin number.  Among the valid matches the returned one is a
    best effort at pairing classes of identical kind: a finer labeling by
    (number, kind) is tried first, and failing that, leaves that share a
    parent and a twin number are re-paired kind-for-kind, which is optimal
    within such sibling groups.
    """
    ra = reduction(a)
    rb = reduction(b)
    k = len(ra.twin_numbers)
    if len(rb.twin_numbers) != k:
        return None
    if sorted(ra.twin_numbers) != sorted(rb.twin_numbers):
        return None
    ta = from_graph(ra.graph)
    tb = from_graph(rb.graph)
    if canonical_form(ta, ra.twin_numbers) != canonical_form(tb, rb.twin_numbers):
        return None
    comp_a = [(ra.twin_numbers[i], _KIND_RANK[ra.kinds[i]]) for i in range(k)]
    comp_b = [(rb.twin_numbers[i], _KIND_RANK[rb.kinds[i]]) for i in range(k)]
    if canonical_form(ta, comp_a) == canonical_form(tb, comp_b):
        order_a, _ = _canonical_leaves_grouped(ta, comp_a)
        order_b, _ = _canonical_leaves_grouped(tb, comp_b)
    else:
        order_a, groups_a = _canonical_leaves_grouped(ta, ra.twin_numbers)
        order_b, _ = _canonical_leaves_grouped(tb, rb.twin_numbers)
        buckets: dict[tuple[int, int], list[int]] = {}
        for pos in range(k):
            key = (groups_a[pos], ra.twin_numbers[order_a[pos]])
            buckets.setdefault(key, []).append(pos)
        for positions in buckets.values():
            if len(positions) < 2:
                continue
            side_a = sorted(
                (order_a[p] for p in positions),
                key=lambda i: _KIND_RANK[ra.kinds[i]],
            )
            side_b = sorted(
                (order_b[p] for p in positions),
                key=lambda j: _KIND_RANK[rb.kinds[j]],
            )
            for p, i, j in zip(positions, side_a, side_b):
                order_a[p] = i
                order_b[p] = j
    class_map = [-1] * k
    for i, j in zip(order_a, order_b):
        class_map[i] = j
    shared = [i for i in range(k) if ra.kinds[i] == rb.kinds[class_map[i]]]
    return EquivalenceMatch(
        class_map=class_map,
        shared_type=shared,
        twin_numbers=list(ra.twin_numbers),
        kinds_a=list(ra.kinds),
        kinds_b=list(rb.kinds),
    )


def lca_distance(t: Cotree, u: int, v: int) -> int:
    """Number of interior vertices on the tree path between leaves u and v."""
    if u == v:
        raise SameLeafError(f"leaves must be distinct, got {u} twice")
    parent: dict[int, Cotree | None] = {id(t): None}
    node_depth: dict[int, int] = {id(t): 0}
    leaf_node: dict[int, Cotree] = {}
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            leaf_node[node.vertex] = node
            continue
        for ch in node.children:
            parent[id(ch)] = node
            node_depth[id(ch)] = node_depth[id(node)] + 1
            stack.append(ch)
    if u not in leaf_node or v not in leaf_node:
        raise IndexError(f"no such leaf pair ({u}, {v})")
    nu, nv = leaf_node[u], leaf_node[v]
    du, dv = node_depth[id(nu)], node_depth[id(nv)]
    a, b = nu, nv
    da, db = du, dv
    while da > db:
        a = parent[id(a)]
        da -= 1
    while db > da:
        b = parent[id(b)]
        db -= 1
    while a is not b:
        a = parent[id(a)]
        b = parent[id(b)]
        da -= 1
    return du + dv - 2 * da - 1


def _rebuild_replacing(t: Cotree, target: Inner, make_replacement) -> Cotree:
    """Copy t with `target` replaced by make_replacement(copied children).

    The replacement may be a node or a list of nodes; a list is spliced into
    the parent's child sequence at the target's position.  The result is
    normalized.
    """
    done: dict[int, object] = {}
    stack: list[tuple[Cotree, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Leaf):
            done[id(node)] = Leaf(node.vertex)
            continue
        if not ready:
            stack.append((node, True))
            stack.extend((ch, False) for ch in node.children)
            continue
        kids: list[Cotree] = []
        for ch in node.children:
            r = done[id(ch)]
            if isinstance(r, list):
                kids.extend(r)
            else:
                kids.append(r)
        done[id(node)] = (
            make_replacement(kids) if node is target else Inner(node.kind, kids)
        )
    result = done[id(t)]
    assert not isinstance(result, list)
    return normalize(result)


def equivalent_edits(t: Cotree) -> list[Cotree]:
    """Single-step cotree edits that produce an equivalent cograph.

    Two moves are attempted at every interior node w and the results kept
    only when an explicit equivalence check against t succeeds:

    * push down: move the >= 2 leaf children of w below a new child of the
      opposite kind (flips that class between clique and coclique);
    * lift: when every child of w is a leaf and w's parent has no leaf
      children of its own, splice w's leaves into the parent.

    The filter is not cosmetic: pushing the leaf pair of a 2-leaf star
    below a join, say, merges twin classes after normalization and the
    candidate must be discarded.
    """
    t = normalize(t)
    if isinstance(t, Leaf):
        return []
    out: list[Cotree] = []
    nodes: list[tuple[Inner, Inner | None]] = []
    stack: list[tuple[Cotree, Inner | None]] = [(t, None)]
    while stack:
        node, par = stack.pop()
        if isinstance(node, Leaf):
            continue
        nodes.append((node, par))
        stack.extend((ch, node) for ch in reversed(node.children))
    for node, par in nodes:
        n_leaf_kids = sum(1 for ch in node.children if isinstance(ch, Leaf))
        if n_leaf_kids >= 2:

            def push_down(kids, _kind=node.kind):
                moved = [ch for ch in kids if isinstance(ch, Leaf)]
                rest = [ch for ch in kids if not isinstance(ch, Leaf)]
                return Inner(_kind, rest + [Inner(other_kind(_kind), moved)])

            out.append(_rebuild_replacing(t, node, push_down))
        if (
            par is not None
            and n_leaf_kids == len(node.children)
            and not any(isinstance(ch, Leaf) for ch in par.children)
        ):
            out.append(_rebuild_replacing(t, node, lambda kids: kids))
    return [cand for cand in out if are_equivalent(t, cand) is not None]
