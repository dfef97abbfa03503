"""Exhaustive path-pairability checks and per-instance checks of the
layer-growth and diameter bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple

from .blob_routers import brute_force_route
from .blowup import EMPTY, STAR, BlobSpec, BlownUpPath
from .graph import Graph, SizeLimitError, bfs_layers, degeneracy, diameter

DEFAULT_PP_CAP = 10
REL_TOL = 1e-9

Pair = tuple[int, int]


def perfect_pairings(vertices: list[int]) -> Iterator[list[Pair]]:
    """All perfect matchings of an even-length vertex list.

    The first remaining vertex is matched to each later vertex in turn, so
    every matching appears exactly once.
    """
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for j, partner in enumerate(rest):
        remaining = rest[:j] + rest[j + 1:]
        for tail in perfect_pairings(remaining):
            yield [(first, partner)] + tail


def all_pairings(n: int) -> Iterator[list[Pair]]:
    """Pairings of 0..n-1; for odd n each vertex in turn is left unpaired."""
    vertices = list(range(n))
    if n % 2 == 0:
        yield from perfect_pairings(vertices)
        return
    for skip in range(n):
        yield from perfect_pairings(vertices[:skip] + vertices[skip + 1:])


def pairing_count(n: int) -> int:
    """Number of pairings ``all_pairings(n)`` yields."""
    even = n - (n % 2)
    count = 1
    for j in range(even - 1, 0, -2):
        count *= j
    return count * n if n % 2 else count


class PPVerdict(NamedTuple):
    ok: bool
    witness: list[Pair] | None
    checked: int


def is_path_pairable(g: Graph, cap: int = DEFAULT_PP_CAP) -> PPVerdict:
    """Decide path-pairability by routing every pairing exhaustively.

    Stops at the first pairing the backtracking router cannot realise and
    returns it as the witness.
    """
    if g.n > cap:
        raise SizeLimitError(f"path-pairability oracle capped at n={cap}, got n={g.n}")
    checked = 0
    for pairing in all_pairings(g.n):
        checked += 1
        if brute_force_route(g, pairing, cap=g.m) is None:
            return PPVerdict(False, pairing, checked)
    return PPVerdict(True, None, checked)


@lru_cache(maxsize=None)
def certify_blob(blob: BlobSpec, cap: int = DEFAULT_PP_CAP) -> bool:
    if blob.kind == STAR:
        return True
    if blob.kind == EMPTY:
        return blob.size == 1
    return is_path_pairable(blob.inner_graph(), cap).ok


def cross_cut_pairing(bp: BlownUpPath, i: int) -> list[Pair]:
    """A pairing putting min(u_i, n - u_i) pairs across the i-th prefix cut.

    Leftover vertices on the larger side are paired among themselves. When
    the cut has fewer than min(u_i, n - u_i) edges this pairing cannot be
    routed.
    """
    if not 1 <= i < bp.k:
        raise ValueError(f"cut index must be in 1..{bp.k - 1}")
    u = bp.prefix(i)
    left = list(range(u))
    right = list(range(u, bp.n))
    across = min(len(left), len(right))
    pairs = [(left[j], right[j]) for j in range(across)]
    rest = left[across:] + right[across:]
    pairs.extend((rest[j], rest[j + 1]) for j in range(0, len(rest) - 1, 2))
    return pairs


def _require_connected(g: Graph, x: int):
    layers = bfs_layers(g, x)
    if layers.prefix[-1] != g.n:
        raise ValueError("layer-growth checks need a connected graph")
    return layers


def layer_growth_binom(g: Graph, x: int) -> int | None:
    """Check u_{2k+1} >= C(k+2, 2) while u_{2k+1} <= n/2.

    ``u_i`` counts vertices within distance i of x. Returns the first
    failing k, or None.
    """
    layers = _require_connected(g, x)
    k = 0
    while 2 * k + 1 <= layers.depth:
        u = layers.prefix[2 * k + 1]
        if 2 * u > g.n:
            break
        if u < math.comb(k + 2, 2):
            return k
        k += 1
    return None


def layer_growth_geometric(g: Graph, x: int, c: int) -> int | None:
    """Check u_{2k+1} >= ((c+1)/c)^k while u_{2k+1} <= n/2, in exact
    integer arithmetic. Returns the first failing k, or None."""
    if c < 1:
        raise ValueError("c must be positive")
    layers = _require_connected(g, x)
    k = 0
    while 2 * k + 1 <= layers.depth:
        u = layers.prefix[2 * k + 1]
        if 2 * u > g.n:
            break
        if u * c**k < (c + 1) ** k:
            return k
        k += 1
    return None


@dataclass
class BoundCheck:
    name: str
    lhs: float
    rhs: float

    @property
    def ok(self) -> bool:
        return self.lhs <= self.rhs * (1 + REL_TOL)


@dataclass
class BoundReport:
    n: int
    m: int
    diameter: float
    degeneracy: int
    c: int
    checks: list[BoundCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ch.ok for ch in self.checks)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "diameter": self.diameter if self.diameter != math.inf else "inf",
            "degeneracy": self.degeneracy,
            "c": self.c,
            "ok": self.ok,
            "checks": [
                {"name": ch.name, "lhs": ch.lhs if ch.lhs != math.inf else "inf", "rhs": ch.rhs, "ok": ch.ok}
                for ch in self.checks
            ],
        }


def diameter_bound_report(g: Graph, m: int | None = None, c: int | None = None) -> BoundReport:
    """Compare the measured diameter with the three upper bounds.

    ``c`` defaults to the measured degeneracy; values below 5 are raised to
    5, which is valid because a graph that is c-degenerate is also
    5-degenerate for any c <= 5.
    """
    d = diameter(g)
    m = g.m if m is None else m
    measured, _ = degeneracy(g)
    c_used = max(5, measured if c is None else c)
    log_bound = 12 * math.log(g.n) / math.log(c_used / (c_used - 2)) + 3
    report = BoundReport(g.n, m, d, measured, c_used)
    report.checks = [
        BoundCheck("edges: d <= 16*cbrt(m)", d, 16 * m ** (1 / 3)),
        BoundCheck("degenerate: d <= 12*log(n)/log(c/(c-2)) + 3", d, log_bound),
        BoundCheck("general: d <= 6*sqrt(2)*sqrt(n)", d, 6 * math.sqrt(2) * math.sqrt(g.n)),
    ]
    return report
