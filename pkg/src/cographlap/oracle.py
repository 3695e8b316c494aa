"""Independent reference implementations used to cross-check the exact code.

Everything here is deliberately brute force or classical-numeric and shares
no code with the tree-based algorithms: eigenvalues come from a dense cyclic
Jacobi iteration on the Laplacian, induced paths from 4-subset enumeration,
twin classes from pairwise neighborhood comparison, and isomorphism from
pruned permutation search.  Inputs are size-capped; these are oracles for
tests, not production paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph
from .twins import TwinClass, TwinPartition, CLIQUE, COCLIQUE, SINGLETON


class OrderLimitError(ValueError):
    """Input exceeds the size cap of a brute-force oracle."""


class ConvergenceError(RuntimeError):
    """The Jacobi sweep budget ran out before the off-diagonal vanished."""


@dataclass
class DenseSpectrum:
    """Ascending float eigenvalues plus the comparison tolerance they honor."""

    values: list[float]
    tolerance: float


_OFF_TOL = 1e-10
_EIG_TOL = 1e-8


def laplacian_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=float)
    for v in range(g.n):
        a[v, v] = float(len(g.adj[v]))
        for w in g.adj[v]:
            a[v, w] = -1.0
    return a


def dense_laplacian_spectrum(g: Graph, max_sweeps: int = 60) -> DenseSpectrum:
    """Laplacian eigenvalues by cyclic Jacobi rotations.

    Sweeps rotate every off-diagonal pair until the largest off-diagonal
    entry drops below 1e-10; raises ConvergenceError if max_sweeps is not
    enough (it always is for these symmetric matrices).  Capped at n <= 200.
    """
    if g.n > 200:
        raise OrderLimitError(f"dense oracle capped at 200 vertices, got {g.n}")
    n = g.n
    if n == 0:
        return DenseSpectrum([], _EIG_TOL)
    a = laplacian_matrix(g)
    for _ in range(max_sweeps):
        off = np.max(np.abs(a - np.diag(np.diag(a)))) if n > 1 else 0.0
        if off < _OFF_TOL:
            return DenseSpectrum(sorted(np.diag(a).tolist()), _EIG_TOL)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-15:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise ConvergenceError(f"no convergence after {max_sweeps} sweeps")


def find_p4(g: Graph) -> tuple[int, int, int, int] | None:
    """First induced 4-vertex path, returned in path order, or None.

    Subsets are scanned in lexicographic order; a subset induces a path
    exactly when it has three edges and degree multiset {1, 1, 2, 2}.
    """
    for quad in combinations(range(g.n), 4):
        sq = set(quad)
        degs = {v: len(g.adj[v] & sq) for v in quad}
        edge_total = sum(degs.values())
        if edge_total != 6:
            continue
        ends = sorted(v for v in quad if degs[v] == 1)
        if len(ends) != 2:
            continue
        a, b = ends
        (x,) = (g.adj[a] & sq)
        (y,) = (g.adj[b] & sq)
        return (a, x, y, b)
    return None


def brute_twin_partition(g: Graph) -> TwinPartition:
    """Twin classes by pairwise neighborhood comparison.  Capped at n <= 500.

    u and v are twins when N(u) - v == N(v) - u, i.e. their symmetric
    difference of neighborhoods is contained in {u, v}.
    """
    if g.n > 500:
        raise OrderLimitError(f"brute twin partition capped at 500, got {g.n}")
    n = g.n
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u in range(n):
        for v in range(u + 1, n):
            if (g.adj[u] ^ g.adj[v]) <= {u, v}:
                parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    classes = []
    for members in sorted(groups.values(), key=lambda ms: ms[0]):
        if len(members) == 1:
            kind = SINGLETON
        elif members[1] in g.adj[members[0]]:
            kind = CLIQUE
        else:
            kind = COCLIQUE
        classes.append(TwinClass(members, kind))
    return TwinPartition(classes)


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    """Graph isomorphism by backtracking permutation search.  Capped at n <= 8."""
    if a.n > 8 or b.n > 8:
        raise OrderLimitError(f"brute isomorphism capped at 8 vertices")
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(len(s) for s in a.adj) != sorted(len(s) for s in b.adj):
        return False
    n = a.n
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        ai = a.adj[i]
        for w in range(n):
            if used[w] or len(b.adj[w]) != len(ai):
                continue
            if all((j in ai) == (image[j] in b.adj[w]) for j in range(i)):
                image[i] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                image[i] = -1
        return False

    return extend(0)
