"""Batch front-end: solve one instance file or run benchmark suites.

Exit codes: 0 success, 1 usage error, 2 infeasible or invalid input.
"""

from __future__ import annotations

import argparse
import csv
import os
import statistics
import sys
import time

from . import cover_general, cover_restricted, oracles, piercing
from .instance_io import CSV_HEADER, RunReport, generate, load_instance
from .solution import TwoCenterSolution
from .svg import write_svg

PROBLEMS = ("pierce", "cover-general", "cover-restricted")
MODES = ("exact", "bipartition", "approx", "gonzalez", "sixapprox")

# which modes make sense for which problem
_VALID = {
    "pierce": ("exact", "bipartition"),
    "cover-general": ("exact", "approx", "gonzalez"),
    "cover-restricted": ("exact", "bipartition", "approx", "sixapprox"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="twocenter", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance file")
    solve.add_argument("--problem", required=True, choices=PROBLEMS)
    solve.add_argument("--mode", required=True, choices=MODES)
    solve.add_argument("--eps", type=float, default=None)
    solve.add_argument("--input", required=True)
    solve.add_argument("--svg", default=None)
    solve.add_argument("--tol", type=float, default=1e-6)
    solve.add_argument("--seed", type=int, default=0)

    bench = sub.add_parser("bench", help="run a benchmark suite")
    bench.add_argument("--suite", required=True, choices=("ratios", "agreement", "scaling"))
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--out", required=True)
    return parser


def _solve(args, parser: _Parser) -> int:
    if args.mode not in _VALID[args.problem]:
        parser.error(f"mode {args.mode} is not available for problem {args.problem}")
    if args.mode == "approx" and args.eps is None:
        parser.error("--eps is required when mode is approx")
    if args.mode != "approx" and args.eps is not None:
        parser.error("--eps only applies when mode is approx")

    try:
        instance = load_instance(args.input)
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return 2

    t0 = time.perf_counter()
    try:
        if args.problem == "pierce":
            fn = piercing.solve_exact if args.mode == "exact" else None
            if fn is not None:
                delta, p1, p2 = fn(instance)
            else:
                delta, p1, p2 = piercing.solve_bipartition(instance, seed=args.seed)
            sol = TwoCenterSolution(p1, p2, delta, ())
        elif args.problem == "cover-general":
            if args.mode == "exact":
                sol = cover_general.solve_exact_general(instance, tol=args.tol, seed=args.seed)
            elif args.mode == "gonzalez":
                sol = cover_general.gonzalez_2approx(instance)
            else:
                sol = cover_general.fptas_general(instance, args.eps, seed=args.seed)
        else:
            if args.mode == "exact":
                sol = cover_restricted.solve_exact_restricted(instance)
            elif args.mode == "bipartition":
                sol = cover_restricted.solve_bipartition_restricted(instance, seed=args.seed)
            elif args.mode == "sixapprox":
                sol = cover_restricted.sixapprox_restricted(instance)
            else:
                sol = cover_restricted.fptas_restricted_fast(instance, args.eps, seed=args.seed)
    except (ValueError, RuntimeError) as exc:
        sys.stderr.write(f"infeasible: {exc}\n")
        return 2
    wall = time.perf_counter() - t0

    report = RunReport(
        problem=args.problem,
        algorithm=args.mode,
        n=instance.n,
        eps=args.eps,
        radius=sol.r,
        c1=sol.c1,
        c2=sol.c2,
        seed=args.seed,
        wall_time=wall,
    )
    sys.stdout.write(CSV_HEADER + "\n")
    sys.stdout.write(report.csv_row() + "\n")
    sys.stderr.write(f"wall time: {wall:.3f} s\n")

    if args.svg is not None:
        write_svg(args.svg, instance, sol)
    return 0


def _ratio(value: float, reference: float) -> float:
    if reference <= 0.0:
        return 1.0 if value <= 0.0 else float("inf")
    return value / reference


def _bench_ratios(out_dir: str, seed: int) -> None:
    path = os.path.join(out_dir, "ratios.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["instance", "n", "comparison", "value", "reference", "ratio"])
        for i in range(100):
            inst = generate(3 + i % 8, seed * 100003 + i, box=12.0, r_max=1.2)
            n = inst.n
            ex_d, _, _ = piercing.solve_exact(inst)
            br_d, _, _ = oracles.brute_pierce_delta(inst.disks)
            w.writerow([i, n, "pierce_exact_vs_oracle",
                        f"{ex_d:.12g}", f"{br_d:.12g}", f"{_ratio(ex_d, br_d):.12g}"])
            ex_r = cover_restricted.solve_exact_restricted(inst).r
            for name, sol_r in (
                ("restricted_six_vs_exact", cover_restricted.sixapprox_restricted(inst).r),
                ("restricted_fptas025_vs_exact", cover_restricted.fptas_restricted(inst, 0.25).r),
                ("restricted_fast025_vs_exact", cover_restricted.fptas_restricted_fast(inst, 0.25).r),
            ):
                w.writerow([i, n, name, f"{sol_r:.12g}", f"{ex_r:.12g}",
                            f"{_ratio(sol_r, ex_r):.12g}"])
            if n <= 6:
                g_ex = cover_general.solve_exact_general(inst, tol=1e-4).r
                g_ap = cover_general.fptas_general(inst, 0.5).r
                w.writerow([i, n, "general_fptas05_vs_exact",
                            f"{g_ap:.12g}", f"{g_ex:.12g}", f"{_ratio(g_ap, g_ex):.12g}"])


def _bench_agreement(out_dir: str, seed: int) -> None:
    path = os.path.join(out_dir, "agreement.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["instance", "n", "delta", "naive", "fast", "agree"])
        disagreements = 0
        for i in range(100):
            inst = generate(3 + i % 7, seed * 100003 + i, box=10.0, r_max=1.0)
            d_star, _, _ = piercing.solve_exact(inst)
            for frac in (0.25, 0.6, 0.9, 1.1, 1.8):
                delta = d_star * frac
                if abs(delta - d_star) <= 1e-6:
                    delta = d_star + (1e-4 if frac >= 1.0 else -1e-4)
                    if delta < 0:
                        continue
                a = piercing.decide_naive(inst, delta) is not None
                b = piercing.decide_fast(inst, delta) is not None
                if a != b:
                    disagreements += 1
                w.writerow([i, inst.n, f"{delta:.12g}", int(a), int(b), int(a == b)])
        w.writerow(["total", "", "", "", "", disagreements])


def _bench_scaling(out_dir: str, seed: int) -> None:
    path = os.path.join(out_dir, "scaling.csv")
    algos = {
        "pierce_bipartition": lambda inst: piercing.solve_bipartition(inst),
        "restricted_bipartition": lambda inst: cover_restricted.solve_bipartition_restricted(inst),
        "restricted_fast025": lambda inst: cover_restricted.fptas_restricted_fast(inst, 0.25),
        "general_fptas05": lambda inst: cover_general.fptas_general(inst, 0.5),
    }
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "algorithm", "median_s"])
        for n in (8, 16, 32, 64, 128):
            for name, fn in algos.items():
                times = []
                for t in range(3):
                    inst = generate(n, seed * 100003 + 17 * n + t, box=30.0, r_max=1.5)
                    t0 = time.perf_counter()
                    fn(inst)
                    times.append(time.perf_counter() - t0)
                w.writerow([n, name, f"{statistics.median(times):.6f}"])


def _bench(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    if args.suite == "ratios":
        _bench_ratios(args.out, args.seed)
    elif args.suite == "agreement":
        _bench_agreement(args.out, args.seed)
    else:
        _bench_scaling(args.out, args.seed)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "solve":
        return _solve(args, parser)
    return _bench(args)


if __name__ == "__main__":
    sys.exit(main())
