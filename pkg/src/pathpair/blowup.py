"""Blown-up paths: a path whose i-th vertex is replaced by a graph (a blob),
with complete bipartite graphs between consecutive blobs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import Graph

STAR = "star"
EMPTY = "empty"
EXPLICIT = "explicit"
KINDS = (STAR, EMPTY, EXPLICIT)


class BlowupFormatError(ValueError):
    pass


@dataclass(frozen=True)
class BlobSpec:
    """One blob. A star's center is its lowest-indexed vertex."""

    kind: str
    size: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown blob kind {self.kind!r}")
        if self.size < 1:
            raise ValueError("blob size must be at least 1")
        if self.kind != EXPLICIT and self.edges:
            raise ValueError(f"{self.kind} blobs carry no explicit edges")
        if self.kind == EXPLICIT:
            norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
            object.__setattr__(self, "edges", norm)
            Graph(self.size, norm)  # validates range, loops, duplicates

    @classmethod
    def star(cls, size: int) -> "BlobSpec":
        return cls(STAR, size)

    @classmethod
    def empty(cls, size: int) -> "BlobSpec":
        return cls(EMPTY, size)

    @classmethod
    def explicit(cls, g: Graph) -> "BlobSpec":
        return cls(EXPLICIT, g.n, tuple(g.edges()))

    def inner_graph(self) -> Graph:
        """The blob on its own, with local vertex indices."""
        if self.kind == STAR:
            return Graph.star(self.size)
        if self.kind == EMPTY:
            return Graph.empty(self.size)
        return Graph(self.size, self.edges)

    def inner_edge_count(self) -> int:
        if self.kind == STAR:
            return self.size - 1
        if self.kind == EMPTY:
            return 0
        return len(self.edges)

    def label(self) -> str:
        prefix = {STAR: "S", EMPTY: "E", EXPLICIT: "G"}[self.kind]
        return f"{prefix}{self.size}"


@dataclass(frozen=True)
class BlownUpPath:
    blobs: tuple[BlobSpec, ...]
    offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blobs = tuple(self.blobs)
        if not blobs:
            raise ValueError("a blown-up path needs at least one blob")
        object.__setattr__(self, "blobs", blobs)
        offs = [0]
        for b in blobs:
            offs.append(offs[-1] + b.size)
        object.__setattr__(self, "offsets", tuple(offs))

    @property
    def k(self) -> int:
        return len(self.blobs)

    @property
    def n(self) -> int:
        return self.offsets[-1]

    @property
    def sizes(self) -> list[int]:
        return [b.size for b in self.blobs]

    def prefix(self, i: int) -> int:
        """Number of vertices in blobs 1..i (1-based)."""
        return self.offsets[i]

    def blob_range(self, i: int) -> range:
        """Vertex range of blob i (0-based index)."""
        return range(self.offsets[i], self.offsets[i + 1])

    def blob_of(self, v: int) -> int:
        """0-based index of the blob containing vertex v."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        lo, hi = 0, self.k
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.offsets[mid] <= v:
                lo = mid
            else:
                hi = mid
        return lo

    def blob_index_map(self) -> list[int]:
        out = []
        for i, b in enumerate(self.blobs):
            out.extend([i] * b.size)
        return out

    def label(self) -> str:
        return "P" + str(self.k) + "(" + ", ".join(b.label() for b in self.blobs) + ")"


def expand(bp: BlownUpPath) -> Graph:
    edges: list[tuple[int, int]] = []
    for i, blob in enumerate(bp.blobs):
        base = bp.offsets[i]
        edges.extend((base + u, base + v) for u, v in blob.inner_graph().edges())
        if i + 1 < bp.k:
            nxt = bp.blob_range(i + 1)
            edges.extend((u, v) for u in bp.blob_range(i) for v in nxt)
    return Graph(bp.n, edges)


def expected_edge_count(bp: BlownUpPath) -> int:
    s = bp.sizes
    return sum(b.inner_edge_count() for b in bp.blobs) + sum(a * b for a, b in zip(s, s[1:]))


class Eq1Violation(NamedTuple):
    index: int  # 1-based cut index i, separating blobs 1..i from the rest
    product: int  # n_i * n_{i+1}
    demand: int  # min(u_i, n - u_i)


def check_eq1(bp: BlownUpPath) -> list[Eq1Violation]:
    """Check n_i * n_{i+1} >= min(u_i, n - u_i) for every i = 1..k-1.

    Returns the violations; an empty list means the condition holds.
    """
    bad = []
    s, n = bp.sizes, bp.n
    for i in range(1, bp.k):
        product = s[i - 1] * s[i]
        u = bp.prefix(i)
        demand = min(u, n - u)
        if product < demand:
            bad.append(Eq1Violation(i, product, demand))
    return bad


def prefix_cut_terms(bp: BlownUpPath) -> list[Eq1Violation]:
    """Both sides of the prefix-cut inequality for every i, violated or not."""
    s, n = bp.sizes, bp.n
    return [
        Eq1Violation(i, s[i - 1] * s[i], min(bp.prefix(i), n - bp.prefix(i)))
        for i in range(1, bp.k)
    ]


def lemma_preconditions(bp: BlownUpPath, cap: int | None = None) -> list[str]:
    """Diagnostics for blobs that are not known to be path-pairable.

    Every blob except the last must be path-pairable: stars always are, an
    explicit blob must be certified by the exhaustive oracle, an empty blob
    only when it is a single vertex. With a single blob there is no last
    position exemption, since the whole graph is that blob.
    """
    from .oracle import DEFAULT_PP_CAP, certify_blob

    cap = DEFAULT_PP_CAP if cap is None else cap
    problems = []
    last = bp.k - 1 if bp.k > 1 else None
    for i, blob in enumerate(bp.blobs):
        if i == last:
            continue
        if blob.kind == EMPTY and blob.size >= 2:
            problems.append(f"blob {i + 1}: empty graph on {blob.size} vertices is not path-pairable")
        elif blob.kind == EXPLICIT and not certify_blob(blob, cap):
            problems.append(f"blob {i + 1}: explicit graph is not path-pairable")
    return problems


# JSON spec files


def blowup_to_dict(bp: BlownUpPath) -> dict:
    out = []
    for b in bp.blobs:
        d = {"kind": b.kind, "size": b.size}
        if b.kind == EXPLICIT:
            d["edges"] = [list(e) for e in b.edges]
        out.append(d)
    return {"blobs": out}


def blowup_from_dict(doc: dict) -> BlownUpPath:
    if not isinstance(doc, dict) or not isinstance(doc.get("blobs"), list):
        raise BlowupFormatError("spec must be an object with a 'blobs' list")
    blobs = []
    for j, d in enumerate(doc["blobs"]):
        kind, size = d.get("kind"), d.get("size")
        if kind not in KINDS or not isinstance(size, int):
            raise BlowupFormatError(f"blob {j + 1}: need a valid 'kind' and integer 'size'")
        has_edges = "edges" in d
        if (kind == EXPLICIT) != has_edges:
            raise BlowupFormatError(f"blob {j + 1}: 'edges' is required iff kind is explicit")
        try:
            blobs.append(BlobSpec(kind, size, tuple(tuple(e) for e in d.get("edges", ()))))
        except ValueError as exc:
            raise BlowupFormatError(f"blob {j + 1}: {exc}") from None
    try:
        return BlownUpPath(tuple(blobs))
    except ValueError as exc:
        raise BlowupFormatError(str(exc)) from None


def dumps_blowup(bp: BlownUpPath) -> str:
    return json.dumps(blowup_to_dict(bp)) + "\n"


def loads_blowup(text: str) -> BlownUpPath:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BlowupFormatError(f"invalid JSON: {exc}") from None
    return blowup_from_dict(doc)
