"""Command-line front end: generate instances, compute and verify orders,
build covers, and run benchmark suites.

Exit codes: 0 success, 2 the algorithm returned false on every trial,
3 input error, 4 bound certification failed, 5 linearity cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import engine as eng
from .bench import run_suite
from .cover import audit_cover, build_cover, overlap_target
from .generators import GenSpec, generate
from .ordering import OrderError, parse_order, serialize_order
from .setsystem import (
    LinearityParams,
    SetSystemError,
    from_json,
    from_ssys,
    to_json,
    to_ssys,
)
from .verifier import certify

EXIT_OK = 0
EXIT_FALSE = 2
EXIT_INPUT = 3
EXIT_BOUND = 4
EXIT_CAP = 5

PREFIX_CLI_CAP = 2 ** 13        # prefix systems are quadratic in total size


def _load_system(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SetSystemError(f"cannot read {path}: {exc}") from exc
    if path.endswith(".json"):
        return from_json(text)
    return from_ssys(text)


def cmd_gen(args) -> int:
    params = tuple(int(p) for p in args.params)
    if args.family == "prefix" and params and params[0] > PREFIX_CLI_CAP:
        print(f"gen prefix: n capped at {PREFIX_CLI_CAP} (quadratic size); "
              "use grid or bounded_degree for large benchmarks", file=sys.stderr)
        return EXIT_INPUT
    spec = GenSpec(family=args.family, params=params, seed=args.seed)
    system = generate(spec)
    if args.format == "json":
        text = to_json(system)
    else:
        text = to_ssys(system, comment=spec.describe())
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_order(args) -> int:
    system = _load_system(args.input)
    if args.c == "auto":
        try:
            order, c_used, traces = eng.with_unknown_c(
                system, args.seed, trials_per_level=args.trials, d=args.d)
        except eng.LinearityCapExceeded as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_CAP
        print(f"c_used={c_used}")
    else:
        c_used = float(args.c)
        order, traces = eng.boosted(system, c_used, args.trials, args.seed, d=args.d)
        if order is None:
            print(f"all {args.trials} trials returned false", file=sys.stderr)
            _write_traces(args, traces)
            return EXIT_FALSE

    out = args.out or args.input + ".order"
    Path(out).write_text(serialize_order(order))
    _write_traces(args, traces)
    print(f"order written to {out} ({traces[-1].iterations} iterations)")
    return EXIT_OK


def _write_traces(args, traces):
    trace_path = args.trace or args.input + ".trace"
    lines = [t.to_json() for t in traces]
    Path(trace_path).write_text("\n".join(lines) + "\n")


def cmd_verify(args) -> int:
    system = _load_system(args.input)
    order = parse_order(Path(args.order).read_text())
    params = LinearityParams(c=float(args.c), d=args.d)
    ok, report = certify(system, order, params)
    sys.stdout.write(report.format())
    return EXIT_OK if ok else EXIT_BOUND


def cmd_cover(args) -> int:
    system = _load_system(args.input)
    order = parse_order(Path(args.order).read_text())
    cover = build_cover(system, order)
    target = overlap_target(float(args.c), system.n_elements)
    audit = audit_cover(system, cover, target)
    out = args.out or args.input + ".cover"
    Path(out).write_text(cover.serialize())
    print(f"clusters={len(cover.clusters)} coverage={int(audit.coverage_ok)} "
          f"weak_diameter={audit.max_weak_diameter} overlap={audit.overlap} "
          f"overlap_target={audit.overlap_target:.2f}")
    if not audit.coverage_ok or audit.max_weak_diameter > 4:
        return EXIT_BOUND
    return EXIT_OK


def cmd_bench(args) -> int:
    suite = json.loads(Path(args.suite).read_text())
    report = run_suite(suite)
    out = args.out or args.suite + ".report"
    Path(out + ".tsv").write_text(report.to_tsv())
    Path(out + ".json").write_text(report.to_json())
    sys.stdout.write(report.summary())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="welzlorder",
        description="Compute and verify low-crossing orders on set systems")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("family", choices=["prefix", "grid", "bounded_degree", "halfplane"])
    p.add_argument("params", nargs="+", help="family size parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--format", choices=["ssys", "json"], default="ssys")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("order", help="compute a low-crossing order")
    p.add_argument("input")
    p.add_argument("--c", required=True, help="shatter constant, or 'auto'")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--out")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("verify", help="check an order against the crossing bound")
    p.add_argument("input")
    p.add_argument("order")
    p.add_argument("--c", required=True)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cover", help="build and audit a neighborhood cover")
    p.add_argument("input")
    p.add_argument("order")
    p.add_argument("--c", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("bench", help="run a benchmark suite file")
    p.add_argument("suite")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SetSystemError, OrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
