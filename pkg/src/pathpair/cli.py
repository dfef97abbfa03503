"""Command-line front end: ``pathpair construct|route|verify``."""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from collections import Counter
from pathlib import Path

from .blob_routers import DEFAULT_ROUTE_CAP
from .blowup import check_eq1, dumps_blowup, expand, lemma_preconditions, loads_blowup
from .constructions import (
    ConstructionError,
    Thm1Params,
    Thm2Params,
    counterexample_p5,
    thm1_graph,
    thm2_graph,
)
from .graph import (
    SizeLimitError,
    check_cut_condition_exhaustive,
    degeneracy,
    diameter,
    eccentricity,
    format_graph,
    parse_graph,
)
from .oracle import (
    DEFAULT_PP_CAP,
    diameter_bound_report,
    is_path_pairable,
    layer_growth_binom,
    layer_growth_geometric,
)
from .sweep import (
    RoutingError,
    format_pairing,
    format_routing,
    parse_pairing,
    random_pairing,
    route,
    validate_routing,
)

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True))
        return
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        print(f"{key}: {value}")


def _fmt_d(d: float):
    return "inf" if d == math.inf else int(d)


def _write(path: Path, text: str) -> None:
    # write-then-rename so readers never see partial files
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(text)
    tmp.replace(path)


def cmd_construct(args) -> int:
    family = args.family
    try:
        if family == "thm1":
            if args.n is None or args.m is None:
                raise ConstructionError("thm1 needs --n and --m")
            params = Thm1Params(args.n, args.m)
            bp, pairing = thm1_graph(params), None
            extra = {"k": params.k}
        elif family == "thm2":
            if args.n is None or args.c is None:
                raise ConstructionError("thm2 needs --n and --c")
            params = Thm2Params(args.n, args.c)
            bp, pairing = thm2_graph(params), None
            extra = {"c_used": params.c_used, "m": params.m, "m_prime": params.m_odd}
        else:
            if args.t is None:
                raise ConstructionError("counterexample needs --t")
            bp, pairing = counterexample_p5(args.t)
            extra = {"t": args.t}
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    g = expand(bp)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {"spec": out / f"{family}.json", "graph": out / f"{family}.graph"}
    _write(files["spec"], dumps_blowup(bp))
    _write(files["graph"], format_graph(g))
    if pairing is not None:
        files["pairing"] = out / f"{family}.pairing"
        _write(files["pairing"], format_pairing(pairing))

    report = {"family": family, "blobs": bp.label(), "n": g.n, "m": g.m, **extra}
    report["diameter"] = _fmt_d(diameter(g))
    report["degeneracy"] = degeneracy(g)[0]
    report["files"] = {k: str(v) for k, v in files.items()}
    _emit(report, args.json)
    return EXIT_OK


def cmd_route(args) -> int:
    try:
        bp = loads_blowup(Path(args.spec).read_text())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    bad = check_eq1(bp)
    if bad:
        print("error: prefix-cut condition violated", file=sys.stderr)
        for b in bad:
            print(f"  i={b.index}: n_i*n_(i+1)={b.product} < min(u_i, n-u_i)={b.demand}", file=sys.stderr)
        return EXIT_ERROR
    try:
        problems = lemma_preconditions(bp, cap=args.cap or DEFAULT_PP_CAP)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if problems:
        print("error: blob requirements not met", file=sys.stderr)
        for p in problems:
            print(f"  {p}", file=sys.stderr)
        return EXIT_ERROR

    if args.pairing:
        try:
            pairings = [parse_pairing(Path(args.pairing).read_text())]
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
    elif args.random:
        rng = random.Random(args.seed)
        pairings = [random_pairing(bp.n, rng) for _ in range(args.count)]
    else:
        print("error: give a pairing file or --random", file=sys.stderr)
        return EXIT_ERROR

    g = expand(bp)
    out = Path(args.out_dir) if args.out_dir else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    ok = 0
    summaries = []
    for j, pairing in enumerate(pairings):
        try:
            routing = route(bp, pairing, cap=args.cap or DEFAULT_ROUTE_CAP, check=False)
            problems = validate_routing(g, pairing, routing)
        except (RoutingError, ValueError) as exc:
            routing, problems = None, [f"{type(exc).__name__}: {exc}"]
        if not problems:
            ok += 1
        hist = Counter(len(p) - 1 for p in routing.paths.values()) if routing else Counter()
        summary = {
            "index": j,
            "pairs": len(pairing),
            "total_length": routing.total_length() if routing else None,
            "lengths": {str(k): hist[k] for k in sorted(hist)},
            "repairs": sum(1 for s in routing.rounds if s.repair) if routing else None,
            "valid": not problems,
        }
        if problems:
            summary["problems"] = problems[:5]
        if out and routing:
            path = out / f"routing_{j:04d}.txt"
            _write(path, format_routing(routing))
        summaries.append(summary)
        if args.json:
            continue
        line = (
            f"pairing {j}: pairs={summary['pairs']} total_length={summary['total_length']} "
            f"lengths={summary['lengths']} repairs={summary['repairs']} "
            f"{'valid' if summary['valid'] else 'INVALID'}"
        )
        print(line)
        for p in problems[:5]:
            print(f"  {p}")
    if args.json:
        print(json.dumps({"validated": ok, "total": len(pairings), "runs": summaries}, sort_keys=True))
    else:
        print(f"validated: {ok}/{len(pairings)}")
    return EXIT_OK if ok == len(pairings) else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        g = parse_graph(Path(args.graph).read_text())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    checks = [name for name in ("cut", "pp", "layers", "bounds") if getattr(args, name)]
    if not checks:
        checks = ["bounds"]
    report: dict = {"n": g.n, "m": g.m}
    passed = True
    try:
        if "cut" in checks:
            bad = check_cut_condition_exhaustive(g, cap=args.cap or 20)
            report["cut"] = "pass" if bad is None else {"fail": sorted(bad)}
            passed &= bad is None
        if "pp" in checks:
            verdict = is_path_pairable(g, cap=args.cap or DEFAULT_PP_CAP)
            report["pp"] = "yes" if verdict.ok else {"no": [list(p) for p in verdict.witness]}
            passed &= verdict.ok
        if "layers" in checks:
            ecc = [eccentricity(g, v) for v in range(g.n)]
            x = max(range(g.n), key=lambda v: (ecc[v], -v))
            c = max(5, args.c if args.c is not None else degeneracy(g)[0])
            binom = layer_growth_binom(g, x)
            geo = layer_growth_geometric(g, x, c)
            report["layers"] = {
                "source": x,
                "c": c,
                "binom": "pass" if binom is None else {"fail_k": binom},
                "geometric": "pass" if geo is None else {"fail_k": geo},
            }
            passed &= binom is None and geo is None
        if "bounds" in checks:
            br = diameter_bound_report(g, c=args.c)
            report["bounds"] = br.as_dict()
            passed &= br.ok
    except (SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report["ok"] = passed
    _emit(report, args.json)
    return EXIT_OK if passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathpair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a family instance")
    p.add_argument("family", choices=["thm1", "thm2", "counterexample"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("route", help="route pairings on a blown-up path")
    p.add_argument("spec")
    p.add_argument("pairing", nargs="?")
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out-dir")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("verify", help="run oracle checks on a graph file")
    p.add_argument("graph")
    p.add_argument("--cut", action="store_true")
    p.add_argument("--pp", action="store_true")
    p.add_argument("--layers", action="store_true")
    p.add_argument("--bounds", action="store_true")
    p.add_argument("--c", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
