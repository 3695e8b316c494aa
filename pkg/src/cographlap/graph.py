"""Small undirected simple graphs with adjacency-set storage.

Vertices are 0..n-1.  These graphs are the ground truth that cotrees are
checked against: every structural operation here is deliberately plain so
it can serve as an independent reference for the tree-based code paths.
Graphs are treated as immutable once built.
"""

from __future__ import annotations


class LoopEdgeError(ValueError):
    """An edge (v, v) was supplied."""


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[set[int]]):
        self.n = n
        self.adj = adj

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph from an iterable of (u, v) pairs.

    Duplicate edges collapse.  Raises LoopEdgeError on (v, v) and
    IndexError when an endpoint is outside 0..n-1.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise LoopEdgeError(f"loop edge ({u}, {v})")
        if not 0 <= u < n:
            raise IndexError(f"vertex {u} out of range 0..{n - 1}")
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} out of range 0..{n - 1}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertices are shifted by a.n."""
    adj = [set(s) for s in a.adj]
    adj.extend({w + a.n for w in s} for s in b.adj)
    return Graph(a.n + b.n, adj)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    g = disjoint_union(a, b)
    for u in range(a.n):
        g.adj[u].update(range(a.n, g.n))
    for v in range(a.n, g.n):
        g.adj[v].update(range(a.n))
    return g


def complement(g: Graph) -> Graph:
    full = set(range(g.n))
    adj = [full - g.adj[v] - {v} for v in range(g.n)]
    return Graph(g.n, adj)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    """Induced subgraph, relabeled densely in the order given."""
    index = {v: i for i, v in enumerate(vertices)}
    adj: list[set[int]] = [set() for _ in vertices]
    for v in vertices:
        i = index[v]
        for w in g.adj[v]:
            j = index.get(w)
            if j is not None:
                adj[i].add(j)
    return Graph(len(vertices), adj)


def parse_edge_text(text: str) -> Graph:
    """Read the edge-list format: a header line "n m", then m lines "u v"."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def format_edge_text(g: Graph) -> str:
    """Inverse of parse_edge_text."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
