"""Generators for the extremal families.

* ``thm1_graph``: stars on a path, large diameter with few edges.
* ``thm2_graph``: symmetric stars with alternating small and growing sizes,
  large diameter while staying c-degenerate.
* ``counterexample_p5``: a five-blob path satisfying the prefix-cut
  condition that is still not path-pairable because its middle blob is not.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blowup import BlobSpec, BlownUpPath, check_eq1
from .graph import Graph
from .sweep import Pairing


class ConstructionError(ValueError):
    pass


def icbrt(x: int) -> int:
    """Largest integer k with k**3 <= x (x >= 0)."""
    if x < 0:
        raise ValueError("negative argument")
    k = round(x ** (1 / 3))
    while k**3 > x:
        k -= 1
    while (k + 1) ** 3 <= x:
        k += 1
    return k


@dataclass(frozen=True)
class Thm1Params:
    n: int
    m: int
    k: int = field(init=False)

    def __post_init__(self):
        if self.m < 2 * self.n + 2:
            raise ConstructionError(f"need m >= 2n + 2, got n={self.n}, m={self.m}")
        # k = floor(cbrt(m/2 - n)) computed exactly: 2k^3 <= m - 2n
        k = icbrt((self.m - 2 * self.n) // 2)
        object.__setattr__(self, "k", k)
        if self.n - 2 * k * k - 2 < 1:
            raise ConstructionError(f"n={self.n} too small for k={k}: need n >= 2k^2 + 3")

    @property
    def in_density_range(self) -> bool:
        """Whether 2n <= m <= n^{3/2}/4, the range where the lower bound is sharp."""
        return 2 * self.n <= self.m and 16 * self.m * self.m <= self.n**3


def thm1_graph(params: Thm1Params) -> BlownUpPath:
    """k copies of S_k, then S_{k^2}, S_2 and an edgeless tail."""
    k, n = params.k, params.n
    blobs = [BlobSpec.star(k)] * k + [
        BlobSpec.star(k * k),
        BlobSpec.star(2),
        BlobSpec.empty(n - 2 * k * k - 2),
    ]
    bp = BlownUpPath(tuple(blobs))
    _assert_eq1(bp)
    return bp


def normalize_c(c: int) -> int:
    if c < 5:
        raise ConstructionError(f"c must be at least 5, got {c}")
    return c if c % 2 else c - 1


def thm2_sequence(c: int, n: int, *, tight: bool = False) -> tuple[list[int], int, int]:
    """Star sizes n_1, n_2, ... and the cutoffs (m, m').

    Even positions have size (c-1)/2. Odd position 2i+1 gets
    ceil(2 * S / (c-1)) where S = n_1 + ... + n_{2i}, and n_1 = 1. With
    ``tight`` the divisor is c-3 instead: the smallest odd sizes for which
    both prefix cuts around the blob carry enough edges.

    m is the largest index with n_1 + ... + n_m <= n/2, and m' is m rounded
    down to an odd number. Returns ``(sizes[:m'], m, m')``.
    """
    c = normalize_c(c)
    half = (c - 1) // 2
    divisor = c - 3 if tight else c - 1
    seq = [1]
    total = 1
    if 2 * total > n:
        raise ConstructionError(f"n={n} too small")
    while True:
        j = len(seq) + 1
        nxt = half if j % 2 == 0 else -(-2 * total // divisor)
        if 2 * (total + nxt) > n:
            break
        seq.append(nxt)
        total += nxt
    m = len(seq)
    m_odd = m if m % 2 else m - 1
    if m_odd < 3:
        raise ConstructionError(f"n={n} too small for c={c}: only {m} terms fit in n/2")
    return seq[:m_odd], m, m_odd


@dataclass(frozen=True)
class Thm2Params:
    n: int
    c: int
    tight: bool = True
    sizes: tuple[int, ...] = field(init=False)
    m: int = field(init=False)
    m_odd: int = field(init=False)

    def __post_init__(self):
        seq, m, m_odd = thm2_sequence(self.c, self.n, tight=self.tight)
        object.__setattr__(self, "sizes", tuple(seq))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "m_odd", m_odd)

    @property
    def c_used(self) -> int:
        return normalize_c(self.c)


def thm2_blob_sizes(params: Thm2Params) -> list[int]:
    head = list(params.sizes[:-1])
    middle = params.n - 2 * sum(head)
    return head + [middle] + head[::-1]


def thm2_graph(params: Thm2Params) -> BlownUpPath:
    """2m'-1 stars, symmetric about a middle star that absorbs the residue."""
    bp = BlownUpPath(tuple(BlobSpec.star(s) for s in thm2_blob_sizes(params)))
    _assert_eq1(bp)
    return bp


def counterexample_p5(t: int) -> tuple[BlownUpPath, Pairing]:
    """Stars of sizes t^2-t, t, -, t, t^2-t around an edgeless middle blob
    on t vertices, and a pairing that forces every edge at the middle blob
    to be used by paths crossing it."""
    if t < 2 or t % 2:
        raise ConstructionError(f"t must be an even integer >= 2, got {t}")
    outer, mid = t * t - t, t
    blobs = (
        BlobSpec.star(outer),
        BlobSpec.star(mid),
        BlobSpec.explicit(Graph.empty(mid)),
        BlobSpec.star(mid),
        BlobSpec.star(outer),
    )
    bp = BlownUpPath(blobs)
    _assert_eq1(bp)
    lo = list(range(bp.prefix(2)))
    hi = list(range(bp.prefix(3), bp.n))
    centre = list(bp.blob_range(2))
    pairs = list(zip(lo, hi)) + [(centre[j], centre[j + 1]) for j in range(0, mid, 2)]
    return bp, Pairing.of(pairs)


def _assert_eq1(bp: BlownUpPath) -> None:
    bad = check_eq1(bp)
    if bad:
        raise ConstructionError(
            f"{bp.label()} violates the prefix-cut condition at "
            + ", ".join(f"i={b.index} ({b.product} < {b.demand})" for b in bad)
        )
