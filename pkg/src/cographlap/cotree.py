"""Cotrees: the rooted decomposition trees of complement-reducible graphs.

A cotree is a rooted tree whose interior nodes are labeled union or join,
whose leaves are graph vertices, and which is kept in normalized form:
every interior node has at least two children and no child of the same
kind.  Leaves under a common union node are pairwise nonadjacent twins of
the represented graph; leaves under a common join node are pairwise
adjacent twins.  All traversals below are iterative, so trees with 10^5
leaves are handled without recursion-depth issues.

Trees are treated as immutable after construction; every function here
returns fresh nodes rather than mutating its input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import graph

UNION = "U"
JOIN = "J"


class CotreeParseError(ValueError):
    """Cotree expression rejected; `pos` is the 0-based offset in the input."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class EmptyNodeError(CotreeParseError):
    """An interior node with no children, e.g. "U()"."""


class NotACographError(ValueError):
    """Recognition failed; `witness` is an induced 4-vertex path, in path order."""

    def __init__(self, witness: tuple[int, int, int, int]):
        super().__init__(f"not a cograph: induced path witness {witness}")
        self.witness = witness


@dataclass
class Leaf:
    vertex: int


@dataclass
class Inner:
    kind: str
    children: list = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in (UNION, JOIN):
            raise ValueError(f"kind must be {UNION!r} or {JOIN!r}, got {self.kind!r}")


Cotree = Leaf | Inner


def other_kind(kind: str) -> str:
    return JOIN if kind == UNION else UNION


def leaves(t: Cotree) -> list[Leaf]:
    """Leaves in left-to-right order."""
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node)
        else:
            stack.extend(reversed(node.children))
    return out


def leaf_count(t: Cotree) -> int:
    return len(leaves(t))


def depth(t: Cotree) -> int:
    """Depth of the deepest vertex; a bare leaf has depth 0."""
    best = 0
    stack = [(t, 0)]
    while stack:
        node, d = stack.pop()
        if isinstance(node, Leaf):
            if d > best:
                best = d
        else:
            stack.extend((ch, d + 1) for ch in node.children)
    return best


def normalize(t: Cotree) -> Cotree:
    """Collapse same-kind parent/child chains and single-child interiors.

    Idempotent; leaf order and vertex ids are preserved.
    """
    done: dict[int, Cotree] = {}
    stack: list[tuple[Cotree, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Leaf):
            done[id(node)] = node
        elif not ready:
            stack.append((node, True))
            stack.extend((ch, False) for ch in node.children)
        else:
            kids: list[Cotree] = []
            for ch in node.children:
                nch = done[id(ch)]
                if isinstance(nch, Inner) and nch.kind == node.kind:
                    kids.extend(nch.children)
                else:
                    kids.append(nch)
            done[id(node)] = kids[0] if len(kids) == 1 else Inner(node.kind, kids)
    return done[id(t)]


def is_normalized(t: Cotree) -> bool:
    """True when t satisfies the structural invariants of normalized form."""
    seen_ids = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            seen_ids.append(node.vertex)
            continue
        if len(node.children) < 2:
            return False
        for ch in node.children:
            if isinstance(ch, Inner) and ch.kind == node.kind:
                return False
            stack.append(ch)
    n = len(seen_ids)
    return sorted(seen_ids) == list(range(n))


# -- expression grammar ------------------------------------------------------
#
#   node := INT | "U(" node ("," node)* ")" | "J(" node ("," node)* ")"
#
# INT k >= 1 stands for k leaves at that position.  Whitespace is ignored.
# Leaf ids are assigned 0-based in left-to-right order, and the parsed tree
# is normalized, so e.g. "J(J(2),1)" parses to the same tree as "J(3)".


def parse(text: str) -> Cotree:
    frames: list[tuple[str, list, int]] = []
    result: Cotree | None = None
    next_leaf = 0
    expect_node = True
    i, end = 0, len(text)

    def fail(message: str, pos: int):
        raise CotreeParseError(message, pos)

    while i < end:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if result is not None:
            fail("trailing input after complete tree", i)
        if c in "UJ":
            if not expect_node:
                fail("expected ',' or ')'", i)
            j = i + 1
            while j < end and text[j].isspace():
                j += 1
            if j >= end or text[j] != "(":
                fail(f"expected '(' after {c!r}", j)
            frames.append((UNION if c == "U" else JOIN, [], i))
            expect_node = True
            i = j + 1
        elif c.isdigit():
            if not expect_node:
                fail("expected ',' or ')'", i)
            j = i
            while j < end and text[j].isdigit():
                j += 1
            k = int(text[i:j])
            if k < 1:
                fail("leaf count must be at least 1", i)
            if frames:
                frames[-1][1].extend(Leaf(next_leaf + s) for s in range(k))
                next_leaf += k
            elif k == 1:
                result = Leaf(0)
                next_leaf = 1
            else:
                fail("top-level leaf count must be 1; wrap in U(...) or J(...)", i)
            expect_node = False
            i = j
        elif c == ",":
            if expect_node or not frames:
                fail("unexpected ','", i)
            expect_node = True
            i += 1
        elif c == ")":
            if not frames:
                fail("unexpected ')'", i)
            kind, children, _ = frames.pop()
            if not children:
                raise EmptyNodeError("empty node", i)
            if expect_node:
                fail("expected node before ')'", i)
            node = Inner(kind, children)
            if frames:
                frames[-1][1].append(node)
            else:
                result = node
            expect_node = False
            i += 1
        else:
            fail(f"unexpected character {c!r}", i)
    if frames:
        fail("unclosed node", end)
    if result is None:
        fail("empty input", 0)
    return normalize(result)


def render(t: Cotree) -> str:
    """Expression text for t; runs of sibling leaves compress to their count.

    parse(render(t)) == t for normalized t whose leaf ids are in dfs order.
    """
    if isinstance(t, Leaf):
        return "1"
    done: dict[int, str] = {}
    stack: list[tuple[Inner, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if not ready:
            stack.append((node, True))
            stack.extend(
                (ch, False) for ch in node.children if isinstance(ch, Inner)
            )
            continue
        parts: list[str] = []
        run = 0
        for ch in node.children:
            if isinstance(ch, Leaf):
                run += 1
            else:
                if run:
                    parts.append(str(run))
                    run = 0
                parts.append(done[id(ch)])
        if run:
            parts.append(str(run))
        done[id(node)] = node.kind + "(" + ",".join(parts) + ")"
    return done[id(t)]


# -- graph conversion --------------------------------------------------------


def to_graph(t: Cotree) -> graph.Graph:
    """Graph represented by t: leaves are adjacent iff their lca is a join."""
    ids = sorted(l.vertex for l in leaves(t))
    n = len(ids)
    if ids != list(range(n)):
        raise ValueError("leaf vertex ids must be exactly 0..n-1, each once")
    adj: list[set[int]] = [set() for _ in range(n)]
    done: dict[int, list[int]] = {}
    stack: list[tuple[Cotree, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Leaf):
            done[id(node)] = [node.vertex]
            continue
        if not ready:
            stack.append((node, True))
            stack.extend((ch, False) for ch in node.children)
            continue
        acc: list[int] = []
        for ch in node.children:
            part = done[id(ch)]
            if node.kind == JOIN and acc:
                for u in acc:
                    au = adj[u]
                    for v in part:
                        au.add(v)
                        adj[v].add(u)
            acc.extend(part)
        done[id(node)] = acc
    return graph.Graph(n, adj)


def _components_within(g: graph.Graph, verts: list[int]) -> list[list[int]]:
    inset = set(verts)
    seen: set[int] = set()
    comps = []
    for s in verts:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = [s]
        while queue:
            v = queue.pop()
            for w in g.adj[v]:
                if w in inset and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def _co_components_within(g: graph.Graph, verts: list[int]) -> list[list[int]]:
    # components of the complement, found by expanding non-neighborhoods
    remaining = set(verts)
    comps = []
    for s in verts:
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = [s]
        frontier = [s]
        while frontier:
            v = frontier.pop()
            grab = remaining - g.adj[v]
            if grab:
                remaining -= grab
                comp.extend(grab)
                frontier.extend(grab)
        comp.sort()
        comps.append(comp)
    return comps


def from_graph(g: graph.Graph) -> Cotree:
    """Cotree of g under identity leaf labeling.

    Recognition splits on connectivity: a disconnected part becomes a union
    node over its components, a co-disconnected part a join node over the
    components of its complement.  If some part with two or more vertices is
    both connected and co-connected, g is not a cograph and a
    NotACographError carrying an induced-P4 witness is raised.
    """
    if g.n == 0:
        raise ValueError("cotree needs at least one vertex")
    tasks: list[tuple] = [("split", sorted(range(g.n)))]
    built: list[Cotree] = []
    while tasks:
        task = tasks.pop()
        if task[0] == "split":
            verts = task[1]
            if len(verts) == 1:
                built.append(Leaf(verts[0]))
                continue
            parts = _components_within(g, verts)
            kind = UNION
            if len(parts) == 1:
                parts = _co_components_within(g, verts)
                kind = JOIN
            if len(parts) == 1:
                from .oracle import find_p4

                witness = find_p4(g)
                assert witness is not None
                raise NotACographError(witness)
            tasks.append(("build", kind, len(parts)))
            tasks.extend(("split", p) for p in reversed(parts))
        else:
            _, kind, k = task
            kids = built[-k:]
            del built[-k:]
            built.append(Inner(kind, kids))
    return built[0]


# -- canonical encodings -----------------------------------------------------


def _encodings(t: Cotree, labels) -> dict[int, str]:
    enc: dict[int, str] = {}
    stack: list[tuple[Cotree, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Leaf):
            lab = 1 if labels is None else labels[node.vertex]
            enc[id(node)] = f"L{lab}"
        elif not ready:
            stack.append((node, True))
            stack.extend((ch, False) for ch in node.children)
        else:
            parts = sorted(enc[id(ch)] for ch in node.children)
            enc[id(node)] = node.kind + "(" + ",".join(parts) + ")"
    return enc


def canonical_form(t: Cotree, labels=None) -> str:
    """Order-independent encoding of t.

    Two normalized cotrees have equal canonical forms iff they are
    isomorphic as labeled trees; `labels` maps leaf vertex id to an integer
    label (default: every leaf labeled 1, plain graph isomorphism).
    """
    return _encodings(t, labels)[id(t)]


def canonical_leaf_order(t: Cotree, labels=None) -> list[int]:
    """Leaf ids in the traversal order of the canonically sorted tree.

    When two trees have equal canonical forms, aligning these orders
    position by position yields a label-preserving tree isomorphism.
    """
    enc = _encodings(t, labels)
    order = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            order.append(node.vertex)
        else:
            kids = sorted(node.children, key=lambda ch: enc[id(ch)])
            stack.extend(reversed(kids))
    return order


def leaf_degrees(t: Cotree) -> list[int]:
    """Degree of every leaf in the represented graph, indexed by vertex id.

    A leaf is adjacent to exactly the leaves it first meets under a join,
    so its degree is the sum over its join ancestors a of
    leafcount(a) - leafcount(child of a towards the leaf).  Linear time.
    """
    count: dict[int, int] = {}
    stack: list[tuple[Cotree, bool]] = [(t, False)]
    n = 0
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Leaf):
            count[id(node)] = 1
            n += 1
        elif not ready:
            stack.append((node, True))
            stack.extend((ch, False) for ch in node.children)
        else:
            count[id(node)] = sum(count[id(ch)] for ch in node.children)
    deg = [0] * n
    walk: list[tuple[Cotree, int]] = [(t, 0)]
    while walk:
        node, acc = walk.pop()
        if isinstance(node, Leaf):
            deg[node.vertex] = acc
            continue
        extra = count[id(node)] if node.kind == JOIN else 0
        for ch in node.children:
            if extra:
                walk.append((ch, acc + extra - count[id(ch)]))
            else:
                walk.append((ch, acc))
    return deg


def random_cotree(n: int, rng: random.Random) -> Cotree:
    """Random normalized cotree with n leaves, ids 0..n-1 in dfs order.

    Interior arity is biased small with an occasional wide node, which gives
    depth O(log n) in the typical case.  Deterministic for a given rng state.
    """
    if n < 1:
        raise ValueError("need at least one leaf")
    if n == 1:
        return Leaf(0)
    root = Inner(rng.choice((UNION, JOIN)))
    work: list[tuple[Inner, int]] = [(root, n)]
    while work:
        node, m = work.pop()
        if rng.random() < 0.2:
            k = rng.randint(2, m)
        else:
            k = rng.randint(2, min(m, 4))
        cuts = sorted(rng.sample(range(1, m), k - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [m])]
        for p in parts:
            if p == 1:
                node.children.append(Leaf(-1))
            else:
                child = Inner(other_kind(node.kind))
                node.children.append(child)
                work.append((child, p))
    nxt = 0
    stack = [root]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            node.vertex = nxt
            nxt += 1
        else:
            stack.extend(reversed(node.children))
    return root
