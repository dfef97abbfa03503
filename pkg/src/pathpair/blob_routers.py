"""Edge-disjoint routing inside a single blob.

All routers take demands as a list of vertex pairs in the blob's local
indices and return one path (vertex list) per demand in the same order, or
``None`` when no edge-disjoint routing exists.
"""

from __future__ import annotations

from typing import Sequence

from .blowup import EMPTY, EXPLICIT, STAR, BlobSpec
from .graph import Graph, SizeLimitError

DEFAULT_ROUTE_CAP = 40  # edges

Path = list[int]
Demands = Sequence[tuple[int, int]]


class DemandError(ValueError):
    pass


def check_demands(n: int, demands: Demands) -> None:
    seen: set[int] = set()
    for u, v in demands:
        if u == v:
            raise DemandError(f"demand ({u}, {v}) joins a vertex to itself")
        for x in (u, v):
            if not 0 <= x < n:
                raise DemandError(f"terminal {x} out of range 0..{n - 1}")
            if x in seen:
                raise DemandError(f"terminal {x} appears in more than one demand")
            seen.add(x)


def star_route(size: int, demands: Demands) -> list[Path]:
    """Route through the center (vertex 0) of the star on ``size`` vertices.

    Each leaf owns its single edge, so the routes never collide.
    """
    check_demands(size, demands)
    paths = []
    for u, v in demands:
        if u == 0 or v == 0:
            paths.append([u, v])
        else:
            paths.append([u, 0, v])
    return paths


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def brute_force_route(g: Graph, demands: Demands, cap: int = DEFAULT_ROUTE_CAP) -> list[Path] | None:
    """Exact edge-disjoint routing by backtracking, or None if impossible.

    Demands are handled in input order and neighbours in ascending order.
    Only vertex-simple paths are explored: any trail contains a simple path
    between the same endpoints using a subset of its edges, so this loses no
    solutions. Before each demand is started the remaining demands must all
    still be connected in the graph of unused edges.
    """
    check_demands(g.n, demands)
    if g.m > cap:
        raise SizeLimitError(f"backtracking router capped at {cap} edges, got {g.m}")
    pairs = list(demands)
    if not pairs:
        return []

    edge_id: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(g.edges()):
        edge_id[(u, v)] = e
    nbrs = [[(w, edge_id[(min(v, w), max(v, w))]) for w in g.adj[v]] for v in range(g.n)]
    edge_list = g.edges()
    used = [False] * g.m
    found: list[Path | None] = [None] * len(pairs)

    def remaining_connected(idx: int) -> bool:
        uf = _UnionFind(g.n)
        for e, (u, v) in enumerate(edge_list):
            if not used[e]:
                uf.union(u, v)
        return all(uf.find(s) == uf.find(t) for s, t in pairs[idx:])

    def solve(idx: int) -> bool:
        if idx == len(pairs):
            return True
        if not remaining_connected(idx):
            return False
        s, t = pairs[idx]
        path = [s]
        on_path = {s}

        def extend(v: int) -> bool:
            for w, e in nbrs[v]:
                if used[e] or w in on_path:
                    continue
                used[e] = True
                path.append(w)
                if w == t:
                    if solve(idx + 1):
                        found[idx] = list(path)
                        return True
                else:
                    on_path.add(w)
                    if extend(w):
                        return True
                    on_path.discard(w)
                path.pop()
                used[e] = False
            return False

        return extend(s)

    if not solve(0):
        return None
    return [p for p in found if p is not None]


def inner_route(blob: BlobSpec, demands: Demands, cap: int = DEFAULT_ROUTE_CAP) -> list[Path] | None:
    if blob.kind == STAR:
        return star_route(blob.size, demands)
    if blob.kind == EMPTY:
        check_demands(blob.size, demands)
        return [] if not demands else None
    assert blob.kind == EXPLICIT
    return brute_force_route(blob.inner_graph(), demands, cap)
