"""Command line: ``cadeque fuzz`` and ``cadeque bench``."""

import argparse
import json
import sys

from . import backend
from .bench import BenchConfig, csv_text, run_bench, write_csv
from .fuzz import FuzzConfig, cadeque_adapter, deque_adapter, gen_scenario, run_differential, write_report


def _fuzz_cmd(args):
    cfg = FuzzConfig(
        steps=args.steps,
        concat_fraction=args.concat_frac,
        max_len=args.max_len,
        with_concat=args.structure == "cadeque",
        validate_every=args.validate_every,
    )
    adapter = cadeque_adapter() if args.structure == "cadeque" else deque_adapter()
    reports = []
    for seed in range(args.first_seed, args.first_seed + args.seeds):
        reports.append(run_differential(gen_scenario(seed, cfg), adapter=adapter))
    if args.report:
        summary = write_report(args.report, reports)
    else:
        from .fuzz import batch_summary

        summary = batch_summary(reports)
    json.dump(summary, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0 if summary["ok"] else 1


def _bench_cmd(args):
    cfg = BenchConfig(
        max_log2=args.max_log2,
        per_bin=args.per_bin,
        ops_per_point=args.replays,
        seed=args.seed,
        structures=tuple(args.structures.split(",")),
        naive_max_log2=args.naive_max_log2,
        naive_per_bin=args.naive_per_bin,
        probe_window=args.probe_window,
    )
    if args.plan_only:
        from .bench import build_plan

        plan = build_plan(cfg)
        json.dump(
            {
                "operations": plan.operation_count,
                "bins": cfg.max_log2 + 1,
                "per_bin": cfg.per_bin,
                "unreachable": plan.unreachable,
            },
            sys.stdout,
            indent=2,
        )
        sys.stdout.write("\n")
        return 0
    records, plan, flags = run_bench(cfg, out_path=args.out)
    if args.out:
        sys.stderr.write("wrote %d records to %s\n" % (len(records), args.out))
    else:
        sys.stdout.write(csv_text(records))
    for name, op, b, delta, bound in flags:
        sys.stderr.write(
            "WORK BOUND EXCEEDED: %s %s bin %d: %d > %d\n" % (name, op, b, delta, bound)
        )
    return 1 if flags else 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="cadeque",
        description="Persistent catenable deques: differential fuzzing and benchmarks "
        "(kernel backend: %s)" % backend.backend_name,
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    f = sub.add_parser("fuzz", help="differential fuzz against the reference oracle")
    f.add_argument("--seeds", type=int, default=100, help="number of scenario seeds")
    f.add_argument("--first-seed", type=int, default=0)
    f.add_argument("--steps", type=int, default=100, help="operations per scenario")
    f.add_argument("--concat-frac", type=float, default=0.1)
    f.add_argument("--max-len", type=int, default=1 << 14)
    f.add_argument("--structure", choices=("cadeque", "deque"), default="cadeque")
    f.add_argument("--validate-every", type=int, default=1)
    f.add_argument("--report", help="write a JSON report here")
    f.set_defaults(fn=_fuzz_cmd)

    b = sub.add_parser("bench", help="binned constant-time benchmark, CSV output")
    b.add_argument("--max-log2", type=int, default=20)
    b.add_argument("--per-bin", type=int, default=50)
    b.add_argument("--replays", type=int, default=1000, help="replays per measured point")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--structures", default="cadeque,deque,list")
    b.add_argument("--naive-max-log2", type=int, default=16,
                   help="bin cap for linear-cost structures (deque/list/oracle)")
    b.add_argument("--naive-per-bin", type=int, default=8)
    b.add_argument("--probe-window", type=int, default=16)
    b.add_argument("--plan-only", action="store_true",
                   help="print the construction plan arithmetic and exit")
    b.add_argument("--out", help="write CSV here (default: stdout)")
    b.set_defaults(fn=_bench_cmd)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
