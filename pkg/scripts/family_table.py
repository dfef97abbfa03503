"""Tabulate diameter, edge count and degeneracy for the two generated families.

Usage: python scripts/family_table.py --sparse 200:1000 400:1800 --degenerate 5:100 5:1000 5:10000
"""

import argparse

from pathpair.blowup import expand
from pathpair.constructions import Thm1Params, Thm2Params, thm1_graph, thm2_graph
from pathpair.graph import degeneracy, diameter
from pathpair.oracle import diameter_bound_report


def pair(text):
    a, b = text.split(":")
    return int(a), int(b)


def row(name, g, extra):
    rep = diameter_bound_report(g)
    bounds = " ".join(f"{ch.rhs:8.2f}" for ch in rep.checks)
    print(f"{name:<22} n={g.n:<6} m={g.m:<7} d={diameter(g):<4} c={degeneracy(g)[0]:<3} {extra:<18} bounds {bounds}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sparse", nargs="*", type=pair, default=[(200, 1000), (400, 1800), (1000, 10000)])
    ap.add_argument("--degenerate", nargs="*", type=pair, default=[(5, 100), (5, 1000), (5, 10000), (7, 10000)])
    args = ap.parse_args()
    for n, m in args.sparse:
        params = Thm1Params(n, m)
        row(f"sparse n={n} m={m}", expand(thm1_graph(params)), f"k={params.k}")
    for c, n in args.degenerate:
        params = Thm2Params(n, c)
        row(f"degenerate c={c} n={n}", expand(thm2_graph(params)), f"m={params.m} 2m-4={2 * params.m - 4}")


if __name__ == "__main__":
    main()
