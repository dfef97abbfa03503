"""Route many seeded random pairings on random star paths and tally outcomes.

Usage: python scripts/stress_routing.py --instances 500 --pairings 20 --seed 1
"""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from pathpair.blowup import BlobSpec, BlownUpPath, check_eq1, expand, lemma_preconditions
from pathpair.sweep import InternalInvariantBreach, random_pairing, route, validate_routing


@dataclass
class StressConfig:
    instances: int = 500
    pairings: int = 20
    min_k: int = 2
    max_k: int = 8
    max_size: int = 4
    empty_tail: float = 0.5
    seed: int = 1


def random_star_path(rng: random.Random, cfg: StressConfig) -> BlownUpPath:
    while True:
        sizes = [rng.randint(1, cfg.max_size) for _ in range(rng.randint(cfg.min_k, cfg.max_k))]
        blobs = [BlobSpec.star(s) for s in sizes]
        if len(blobs) > 1 and rng.random() < cfg.empty_tail:
            blobs[-1] = BlobSpec.empty(sizes[-1])
        bp = BlownUpPath(tuple(blobs))
        if not check_eq1(bp) and not lemma_preconditions(bp):
            return bp


def run(cfg: StressConfig) -> Counter:
    rng = random.Random(cfg.seed)
    tally = Counter()
    t0 = time.perf_counter()
    for _ in range(cfg.instances):
        bp = random_star_path(rng, cfg)
        g = expand(bp)
        for _ in range(cfg.pairings):
            p = random_pairing(bp.n, rng)
            try:
                r = route(bp, p)
            except InternalInvariantBreach as exc:
                tally["breach"] += 1
                print(f"breach on {bp.label()} {p.pairs}: {exc}")
                continue
            tally["valid" if not validate_routing(g, p, r) else "invalid"] += 1
            tally["rounds"] += len(r.rounds)
            tally["repairs"] += sum(1 for s in r.rounds if s.repair)
            tally["descent_moves"] += sum(s.moves for s in r.rounds)
    tally["seconds"] = round(time.perf_counter() - t0, 2)
    return tally


def main():
    defaults = StressConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in vars(defaults).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = StressConfig(**vars(ap.parse_args()))
    for key, value in sorted(run(cfg).items()):
        print(f"{key}: {value}")


if __name__ == "__main__":
    main()
