"""Sweep routing on blown-up paths.

Given a blown-up path that satisfies the prefix-cut condition and whose
blobs (except possibly the last) are path-pairable, every pairing of its
vertices is joined by edge-disjoint paths. The router sweeps left to right.
Round r uses the complete bipartite layer between blob r-1 and blob r:

A. paths whose target sits in blob r take the direct edge and finish;
B. in the last round, pairs inside the last blob are joined through a
   common neighbour in the previous blob;
C. every other path moves on to blob r, with the number of paths parked at
   each vertex (its weight) balanced by single-move descent on the sum of
   squared weights;
D. pairs inside blob r are routed by the blob's own router, together with
   one extra demand per overloaded vertex that shifts a path to an
   underloaded vertex.

The invariants the correctness argument rests on are checked as the sweep
runs; a failure raises :class:`InternalInvariantBreach`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .blob_routers import DEFAULT_ROUTE_CAP, inner_route
from .blowup import BlownUpPath, check_eq1, lemma_preconditions
from .graph import Graph

Pair = tuple[int, int]


class RoutingError(Exception):
    pass


class PreconditionViolated(RoutingError):
    pass


class InternalInvariantBreach(RoutingError):
    pass


class CapacityExceeded(InternalInvariantBreach):
    pass


class InnerRoutingFailed(RoutingError):
    pass


class PairingFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Pairing:
    """Disjoint unordered vertex pairs, stored as sorted ``(min, max)`` tuples.

    Vertices not in any pair carry no demand.
    """

    pairs: tuple[Pair, ...]

    def __post_init__(self):
        norm = []
        seen: set[int] = set()
        for u, v in self.pairs:
            if u == v:
                raise ValueError(f"pair ({u}, {v}) has equal endpoints")
            for x in (u, v):
                if x < 0:
                    raise ValueError(f"negative vertex {x}")
                if x in seen:
                    raise ValueError(f"vertex {x} is in more than one pair")
                seen.add(x)
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "pairs", tuple(sorted(norm)))

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> "Pairing":
        return cls(tuple((int(u), int(v)) for u, v in pairs))

    def vertices(self) -> set[int]:
        return {x for p in self.pairs for x in p}

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def random_pairing(n: int, rng: random.Random) -> Pairing:
    """Shuffle 0..n-1 and pair consecutive entries; the last one is left
    out when n is odd."""
    order = list(range(n))
    rng.shuffle(order)
    return Pairing.of((order[j], order[j + 1]) for j in range(0, n - 1, 2))


@dataclass(frozen=True)
class RepairPartition:
    """Overloaded (X), underloaded (Y) and balanced (Z) vertices of a blob,
    with the partner chosen in Y for each vertex of X."""

    target: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    partner: dict[int, int]


@dataclass
class RoundState:
    """Bookkeeping for one round of the sweep (``index`` is 1-based)."""

    index: int
    entry_max_load: int
    entry_capacity: int
    path_ending: int = 0
    weights: dict[int, int] = field(default_factory=dict)
    weight_sum: int = 0
    weight_bound: int = 0
    next_size: int | None = None
    moves: int = 0
    repair: RepairPartition | None = None

    @property
    def max_weight(self) -> int:
        return max(self.weights.values(), default=0)

    @property
    def min_weight(self) -> int:
        return min(self.weights.values(), default=0)


@dataclass
class Routing:
    paths: dict[Pair, list[int]] = field(default_factory=dict)
    rounds: list[RoundState] = field(default_factory=list)

    def total_length(self) -> int:
        return sum(len(p) - 1 for p in self.paths.values())


def balanced_assign(
    targets: Sequence[int],
    base: dict[int, int],
    demands: Sequence[tuple[int, int]],
    used: set[tuple[int, int]],
) -> tuple[dict[int, int], dict[int, int], int]:
    """Send each demand ``(path_id, endpoint)`` to a distinct target.

    ``base`` holds weight already fixed on targets, ``used`` the layer edges
    ``(endpoint, target)`` already taken; it is updated in place. A greedy
    pass sends each path to the lightest target still reachable by a free
    edge (ties to the lowest index). Single moves of an assigned path from
    x to y are then applied while w(x) >= w(y) + 2; each one lowers the
    sum of squared weights, so the loop ends at a local minimum.

    Returns the assignment ``path_id -> target``, the final weights and the
    number of moves made.
    """
    w = {y: base.get(y, 0) for y in targets}
    by_endpoint: dict[int, list[int]] = {}
    for pid, v in demands:
        by_endpoint.setdefault(v, []).append(pid)

    assign: dict[int, tuple[int, int]] = {}
    for v in sorted(by_endpoint):
        pids = sorted(by_endpoint[v])
        free = [y for y in targets if (v, y) not in used]
        if len(pids) > len(free):
            raise CapacityExceeded(
                f"endpoint {v} carries {len(pids)} paths but has {len(free)} free edges"
            )
        # within one endpoint, sequential lightest-first picks are exactly
        # the first len(pids) targets in (weight, index) order
        free.sort(key=lambda y: (w[y], y))
        for pid, y in zip(pids, free):
            assign[pid] = (v, y)
            w[y] += 1
            used.add((v, y))

    moves = 0
    order = sorted(assign)
    while True:
        asc = sorted(targets, key=lambda y: (w[y], y))
        floor = w[asc[0]] if asc else 0
        moved = False
        for pid in order:
            v, x = assign[pid]
            if w[x] < floor + 2:
                continue
            for y in asc:
                if w[y] + 2 > w[x]:
                    break
                if (v, y) in used:
                    continue
                used.discard((v, x))
                used.add((v, y))
                assign[pid] = (v, y)
                w[x] -= 1
                w[y] += 1
                moves += 1
                moved = True
                break
            if moved:
                break
        if not moved:
            break
    return {pid: y for pid, (_, y) in assign.items()}, w, moves


def _check_pairing(bp: BlownUpPath, pairing: Pairing) -> None:
    for u, v in pairing:
        if v >= bp.n:
            raise PreconditionViolated(f"pair ({u}, {v}) has a vertex outside 0..{bp.n - 1}")


def route(bp: BlownUpPath, pairing: Pairing, *, cap: int = DEFAULT_ROUTE_CAP, check: bool = True) -> Routing:
    """Join every pair of ``pairing`` by edge-disjoint paths in ``expand(bp)``.

    With ``check`` the prefix-cut condition and the blob requirements are
    verified first and :class:`PreconditionViolated` is raised if they fail.
    ``cap`` bounds the backtracking router used for explicit blobs.
    """
    _check_pairing(bp, pairing)
    if check:
        bad = check_eq1(bp)
        if bad:
            detail = ", ".join(f"i={b.index}: {b.product} < {b.demand}" for b in bad)
            raise PreconditionViolated(f"prefix-cut condition fails at {detail}")
        problems = lemma_preconditions(bp)
        if problems:
            raise PreconditionViolated("; ".join(problems))
    return _Sweep(bp, pairing, cap).run()


class _Sweep:
    def __init__(self, bp: BlownUpPath, pairing: Pairing, cap: int):
        self.bp = bp
        self.cap = cap
        self.pairs = list(pairing.pairs)
        self.blob = bp.blob_index_map()
        self.result = Routing()
        self.inner: list[list[int]] = [[] for _ in range(bp.k)]  # pair ids inside each blob
        self.target: dict[int, int] = {}  # pair id -> far sibling
        self.source_pid: dict[int, int] = {}  # near sibling -> pair id
        self.path: dict[int, list[int]] = {}
        for pid, (a, b) in enumerate(self.pairs):
            ba, bb = self.blob[a], self.blob[b]
            if ba == bb:
                self.inner[ba].append(pid)
                continue
            if bb < ba:
                a, b = b, a
            self.target[pid] = b
            self.source_pid[a] = pid
            self.path[pid] = [a]

    def _finish(self, pid: int, path: list[int]) -> None:
        self.result.paths[self.pairs[pid]] = path

    def _inner(self, j: int, demands: list[tuple[int, int]]) -> list[list[int]]:
        """Route global-index demands inside blob j (0-based)."""
        blob = self.bp.blobs[j]
        off = self.bp.offsets[j]
        local = [(a - off, b - off) for a, b in demands]
        paths = inner_route(blob, local, self.cap)
        if paths is None:
            raise InnerRoutingFailed(f"blob {j + 1} ({blob.label()}) cannot route {len(demands)} demands")
        return [[x + off for x in p] for p in paths]

    def _route_inner_pairs(self, j: int, extra: list[tuple[int, int]] = ()) -> list[list[int]]:
        pids = self.inner[j]
        demands = [self.pairs[pid] for pid in pids] + list(extra)
        paths = self._inner(j, demands) if demands else []
        for pid, p in zip(pids, paths):
            self._finish(pid, p)
        return paths[len(pids):]

    def run(self) -> Routing:
        bp = self.bp
        self._route_inner_pairs(0)
        # at[v]: ids of unfinished paths currently ending at v
        at: dict[int, list[int]] = {}
        for v in bp.blob_range(0):
            if v in self.source_pid:
                at[v] = [self.source_pid[v]]
        for r in range(1, bp.k):
            at = self._round(r, at)
        for pid, p in self.path.items():
            if p[-1] != self.target[pid]:
                raise InternalInvariantBreach(f"path for pair {self.pairs[pid]} left unfinished")
        return self.result

    def _round(self, r: int, at: dict[int, list[int]]) -> dict[int, list[int]]:
        bp = self.bp
        left, right = bp.blob_range(r - 1), bp.blob_range(r)
        cap_right = bp.blobs[r].size
        state = RoundState(
            index=r,
            entry_max_load=max((len(p) for p in at.values()), default=0),
            entry_capacity=cap_right,
        )
        self.result.rounds.append(state)
        if state.entry_max_load > cap_right:
            raise InternalInvariantBreach(
                f"round {r}: a vertex carries {state.entry_max_load} paths into a blob of size {cap_right}"
            )

        used: set[tuple[int, int]] = set()
        pending: list[tuple[int, int]] = []
        for v in sorted(at):
            for pid in sorted(at[v]):
                t = self.target[pid]
                if self.blob[t] == r:
                    self.path[pid].append(t)
                    used.add((v, t))
                    self._finish(pid, self.path[pid])
                    state.path_ending += 1
                else:
                    pending.append((pid, v))

        if r == bp.k - 1:
            if pending:
                raise InternalInvariantBreach(f"last round has {len(pending)} paths with no target")
            self._join_last_blob(r, used)
            return {}

        next_size = bp.blobs[r + 1].size
        base = {y: 1 for y in right if y in self.source_pid}
        choice, w, moves = balanced_assign(list(right), base, pending, used)
        for pid, y in choice.items():
            self.path[pid].append(y)
        nxt: dict[int, list[int]] = {}
        for pid in sorted(choice):
            nxt.setdefault(choice[pid], []).append(pid)
        for y in base:
            nxt.setdefault(y, []).append(self.source_pid[y])

        u = bp.prefix(r + 1)
        state.weights = w
        state.weight_sum = sum(w.values())
        state.weight_bound = min(u, bp.n - u)
        state.next_size = next_size
        state.moves = moves
        if state.weight_sum > state.weight_bound:
            raise InternalInvariantBreach(
                f"round {r}: total weight {state.weight_sum} exceeds {state.weight_bound}"
            )

        if state.max_weight <= next_size:
            self._route_inner_pairs(r)
        else:
            repair = self._partition(r, w, next_size)
            state.repair = repair
            extra = [(x, repair.partner[x]) for x in repair.X]
            detours = self._route_inner_pairs(r, extra)
            for x, detour in zip(repair.X, detours):
                pid = min(nxt[x])
                nxt[x].remove(pid)
                self.path[pid].extend(detour[1:])
                nxt.setdefault(repair.partner[x], []).append(pid)
        return nxt

    def _partition(self, r: int, w: dict[int, int], size: int) -> RepairPartition:
        top, low = max(w.values()), min(w.values())
        if top != size + 1:
            raise InternalInvariantBreach(f"round {r}: max weight {top} but next blob has size {size}")
        if low < size - 1:
            raise InternalInvariantBreach(f"round {r}: weight {low} coexists with overload {top}")
        X = tuple(sorted(y for y, wy in w.items() if wy == size + 1))
        Y = tuple(sorted(y for y, wy in w.items() if wy == size - 1))
        Z = tuple(sorted(y for y, wy in w.items() if wy == size))
        if len(X) > len(Y):
            raise InternalInvariantBreach(f"round {r}: {len(X)} overloaded vertices but only {len(Y)} underloaded")
        zset = set(Z)
        for pid in self.inner[r]:
            a, b = self.pairs[pid]
            if a not in zset or b not in zset:
                raise InternalInvariantBreach(f"round {r}: inner pair ({a}, {b}) is not balanced")
        return RepairPartition(size, X, Y, Z, dict(zip(X, Y)))

    def _join_last_blob(self, r: int, used: set[tuple[int, int]]) -> None:
        left = self.bp.blob_range(r - 1)
        for pid in self.inner[r]:
            a, b = self.pairs[pid]
            for mid in left:
                if (mid, a) not in used and (mid, b) not in used:
                    used.add((mid, a))
                    used.add((mid, b))
                    self._finish(pid, [a, mid, b])
                    break
            else:
                raise InternalInvariantBreach(f"no free middle vertex for pair ({a}, {b})")


def validate_routing(g: Graph, pairing: Pairing, routing: Routing) -> list[str]:
    """List every way ``routing`` fails to be an edge-disjoint routing of
    ``pairing`` in ``g``; an empty list means it is valid."""
    problems = []
    seen: dict[tuple[int, int], Pair] = {}
    wanted = set(pairing.pairs)
    for pair in routing.paths:
        if pair not in wanted:
            problems.append(f"path given for unrequested pair {pair}")
    for pair in pairing.pairs:
        path = routing.paths.get(pair)
        if not path:
            problems.append(f"(i) no path for pair {pair}")
            continue
        if {path[0], path[-1]} != set(pair) or len(path) < 2:
            problems.append(f"(i) path for {pair} runs {path[0]}..{path[-1]}")
        own: set[tuple[int, int]] = set()
        for a, b in zip(path, path[1:]):
            if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                problems.append(f"(ii) path for {pair} steps along non-edge ({a}, {b})")
                continue
            e = (min(a, b), max(a, b))
            if e in own:
                problems.append(f"(iv) path for {pair} repeats edge {e}")
                continue
            own.add(e)
            if e in seen:
                problems.append(f"(iii) edge {e} used by {seen[e]} and {pair}")
            else:
                seen[e] = pair
    return problems


def format_pairing(p: Pairing) -> str:
    return "".join(f"{u} {v}\n" for u, v in p)


def parse_pairing(text: str) -> Pairing:
    pairs = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise PairingFormatError(f"bad pairing line: {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    try:
        return Pairing.of(pairs)
    except ValueError as exc:
        raise PairingFormatError(str(exc)) from None


def format_routing(r: Routing) -> str:
    lines = []
    for (u, v), path in sorted(r.paths.items()):
        lines.append(f"{u} {v} : " + " ".join(map(str, path)))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_routing(text: str) -> Routing:
    out = Routing()
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        head, sep, tail = ln.partition(":")
        ends = head.split()
        if not sep or len(ends) != 2:
            raise PairingFormatError(f"bad routing line: {ln!r}")
        u, v = int(ends[0]), int(ends[1])
        out.paths[(min(u, v), max(u, v))] = [int(x) for x in tail.split()]
    return out
