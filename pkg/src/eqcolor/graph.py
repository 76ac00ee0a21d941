"""Simple undirected graphs plus degeneracy and subgraph machinery."""

from __future__ import annotations

import heapq
from collections.abc import Iterable
from random import Random

from .errors import InputError


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is kept as per-vertex sorted tuples so that iteration order
    is deterministic everywhere downstream; a parallel tuple of frozensets
    serves membership tests and set arithmetic.
    """

    __slots__ = ("n", "_adj", "_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        self.n = n
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        self._sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in sets)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of v."""
        self._check(v)
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._sets[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by the given vertices.

    Returns the relabelled graph together with a list mapping each new
    vertex id back to its original id (new ids follow ascending original
    ids).
    """
    keep = sorted(set(vertices))
    for v in keep:
        g._check(v)
    index = {old: new for new, old in enumerate(keep)}
    edges = []
    for old in keep:
        for w in g.neighbors(old):
            if w > old and w in index:
                edges.append((index[old], index[w]))
    return Graph(len(keep), edges), keep


def is_d_degenerate(g: Graph, d: int, *, rng: Random | None = None) -> bool:
    """True iff repeatedly peeling vertices of degree at most d empties g.

    The answer does not depend on which eligible vertex is peeled first;
    passing an rng only shuffles that choice (used by the test suite to
    exercise order independence).
    """
    if d < 0:
        raise InputError(f"degeneracy bound must be non-negative, got {d}")
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    stack = [v for v in range(g.n) if deg[v] <= d]
    count = 0
    while stack:
        if rng is None:
            v = stack.pop()
        else:
            i = rng.randrange(len(stack))
            stack[i], stack[-1] = stack[-1], stack[i]
            v = stack.pop()
        if removed[v]:
            continue
        removed[v] = True
        count += 1
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == d:
                    stack.append(w)
    return count == g.n


def degeneracy(g: Graph) -> int:
    """Smallest d such that g is d-degenerate (0 for the empty graph)."""
    if g.n == 0:
        return 0
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    best = 0
    for _ in range(g.n):
        while True:
            dv, v = heapq.heappop(heap)
            if not removed[v] and dv == deg[v]:
                break
        best = max(best, dv)
        removed[v] = True
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return best


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g._adj), default=0)
