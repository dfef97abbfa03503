"""Simple undirected graphs on vertices 0..n-1 and the measurements used
throughout the package: BFS layers, diameter, degeneracy and cut sizes."""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

INFINITE = math.inf
DEFAULT_CUT_CAP = 20


class SizeLimitError(ValueError):
    """An exhaustive procedure was asked to run beyond its size cap."""


class GraphFormatError(ValueError):
    pass


class Graph:
    """Immutable simple undirected graph with adjacency sets.

    Vertices are the dense integers ``0..n-1``.
    """

    __slots__ = ("n", "adj", "_nbrs", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self.n = n
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._m = m

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # small named graphs, mostly for tests and examples

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def star(cls, n: int) -> "Graph":
        """The star on ``n`` vertices with center 0."""
        return cls(n, [(0, i) for i in range(1, n)])


@dataclass
class LayerDecomposition:
    """BFS layers around ``source``; ``prefix[i]`` is the number of vertices
    at distance at most ``i``."""

    source: int
    layers: list[list[int]]
    sizes: list[int] = field(init=False)
    prefix: list[int] = field(init=False)

    def __post_init__(self):
        self.sizes = [len(layer) for layer in self.layers]
        self.prefix = []
        total = 0
        for s in self.sizes:
            total += s
            self.prefix.append(total)

    @property
    def depth(self) -> int:
        return len(self.layers) - 1


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def bfs_layers(g: Graph, x: int) -> LayerDecomposition:
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} not in graph")
    dist = _bfs_distances(g, x)
    depth = max(dist)
    layers: list[list[int]] = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d >= 0:
            layers[d].append(v)
    return LayerDecomposition(x, layers)


def eccentricity(g: Graph, x: int) -> float:
    dist = _bfs_distances(g, x)
    if min(dist) < 0:
        return INFINITE
    return max(dist)


def diameter(g: Graph) -> float:
    """Exact diameter, ``math.inf`` when disconnected.

    Vertices with identical open neighbourhoods have identical eccentricity,
    so one BFS per neighbourhood class suffices. Blown-up graphs collapse to
    a handful of classes per blob.
    """
    if g.n == 0:
        raise ValueError("diameter of the null graph is undefined")
    seen: set[frozenset[int]] = set()
    best = 0
    for v in range(g.n):
        key = g.neighbors(v)
        if key in seen:
            continue
        seen.add(key)
        ecc = eccentricity(g, v)
        if ecc == INFINITE:
            return INFINITE
        best = max(best, ecc)
    return best


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Smallest ``c`` such that g is c-degenerate, with a witness ordering.

    Repeatedly removes a vertex of minimum remaining degree, ties to the
    lowest index. In the returned ordering every vertex has at most ``c``
    neighbours appearing after it.
    """
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    c = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        c = max(c, d)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return c, order


def later_neighbor_counts(g: Graph, order: list[int]) -> list[int]:
    """For each position in ``order``, how many neighbours come later."""
    pos = {v: i for i, v in enumerate(order)}
    return [sum(1 for w in g.adj[v] if pos[w] > pos[v]) for v in order]


def cut_edges(g: Graph, X: Iterable[int]) -> int:
    xs = set(X)
    for v in xs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    return sum(1 for v in xs for w in g.adj[v] if w not in xs)


def check_cut_condition_exhaustive(g: Graph, cap: int = DEFAULT_CUT_CAP) -> frozenset[int] | None:
    """Scan every X with |X| <= n/2; return None if all have at least |X|
    leaving edges, otherwise a smallest violating X (first in
    lexicographic order among the smallest)."""
    if g.n > cap:
        raise SizeLimitError(f"cut-condition scan capped at n={cap}, got n={g.n}")
    for size in range(1, g.n // 2 + 1):
        for X in combinations(range(g.n), size):
            if cut_edges(g, X) < size:
                return frozenset(X)
    return None


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "graph":
        raise GraphFormatError(f"bad header: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise GraphFormatError(f"bad header: {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= v:
            raise GraphFormatError(f"edge line must have u < v: {ln!r}")
        edges.append((u, v))
    return Graph(n, edges)
