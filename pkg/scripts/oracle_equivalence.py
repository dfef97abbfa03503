"""Compare the sweep router with the brute-force oracle on every small star path.

For each blown-up path with blobs S_1..S_s (optionally an empty last blob)
and at most --max-n vertices, prints whether the cut inequality holds,
whether the oracle certifies path-pairability, and how many pairings the
sweep router handled.
"""

import argparse
import itertools
from dataclasses import dataclass

from pathpair.blob_routers import brute_force_route
from pathpair.blowup import BlobSpec, BlownUpPath, check_eq1, expand, lemma_preconditions
from pathpair.oracle import all_pairings, cross_cut_pairing, is_path_pairable
from pathpair.sweep import Pairing, RoutingError, route, validate_routing


@dataclass
class EquivConfig:
    max_k: int = 4
    max_size: int = 3
    max_n: int = 10
    empty_last: bool = True


def family(cfg: EquivConfig):
    stars = [BlobSpec.star(s) for s in range(1, cfg.max_size + 1)]
    empties = [BlobSpec.empty(s) for s in range(1, cfg.max_size + 1)] if cfg.empty_last else []
    for k in range(1, cfg.max_k + 1):
        for head in itertools.product(stars, repeat=k - 1):
            for last in stars + empties:
                bp = BlownUpPath(tuple(head) + (last,))
                if bp.n <= cfg.max_n:
                    yield bp


def check(bp: BlownUpPath) -> str:
    g = expand(bp)
    bad = check_eq1(bp)
    if bad:
        verdicts = [brute_force_route(g, cross_cut_pairing(bp, v.index), cap=200) is None for v in bad]
        return f"eq1 fails at {[v.index for v in bad]}; cross-cut witness confirmed: {all(verdicts)}"
    pre = lemma_preconditions(bp)
    pp = is_path_pairable(g)
    if pre:
        return f"eq1 ok; outside router preconditions; oracle pp={'yes' if pp.ok else 'no'}"
    ok = total = 0
    for pairing in all_pairings(bp.n):
        p = Pairing.of(pairing)
        total += 1
        try:
            ok += validate_routing(g, p, route(bp, p)) == []
        except RoutingError:
            pass
    return f"eq1 ok; oracle pp={'yes' if pp.ok else 'no'}; sweep {ok}/{total}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=4)
    ap.add_argument("--max-size", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--no-empty-last", dest="empty_last", action="store_false")
    cfg = EquivConfig(**vars(ap.parse_args()))
    for bp in family(cfg):
        print(f"{bp.label():<20} n={bp.n:<3} {check(bp)}")


if __name__ == "__main__":
    main()
