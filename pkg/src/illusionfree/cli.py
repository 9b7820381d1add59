"""Command line interface: solve, verify, generate, reduce, bench."""
from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction

from .formats import (
    FormatError,
    emit_instance,
    parse_fraction,
    parse_formula,
    parse_hitting_set,
    parse_id_list,
    parse_solution,
    read_instance,
)
from .generate import KINDS, generate_random
from .graph import InstanceError, StructureMismatch, verify
from .oracle import OracleLimitError
from .reductions import reduce_hitting_set, reduce_rectilinear_3sat
from .solvers import ALGORITHMS, solve
from .treedecomp import DecompositionError, read_td

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2

BENCH_SUITES = {
    "structured": [
        ("directed_cycle", 12), ("underlying_cycle", 12), ("outward_grid", 4),
        ("directed_tree", 14),
    ],
    "generic": [("generic", 12), ("dag_bipartite", 14)],
    "planar": [("planar_grid", 4), ("grid", 4)],
}


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    instance = read_instance(args.instance)
    if getattr(args, "p", None) is not None:
        instance = instance.with_p(parse_fraction(args.p))
    return instance


def cmd_solve(args) -> int:
    instance = _load(args)
    demand = parse_id_list(_read(args.demand)) if args.demand else None
    decomposition = read_td(_read(args.decomposition)) if args.decomposition else None
    if decomposition is not None and args.algo not in ("treewidth", "auto"):
        raise InstanceError("--decomposition only applies to the treewidth algorithm")
    algo = "treewidth" if decomposition is not None else args.algo
    start = time.perf_counter()
    result = solve(
        instance, algo, demand=demand, epsilon=Fraction(args.epsilon),
        decomposition=decomposition, max_red=args.max_red,
    )
    elapsed = time.perf_counter() - start
    check = verify(instance, result.recoloring, demand)
    print(f"solver: {result.solver}")
    print(f"size: {result.recoloring.size}")
    print("flipped: " + " ".join(map(str, result.recoloring.sorted())))
    for key, value in result.details.items():
        print(f"{key}: {value}")
    print(f"verified: {'yes' if check.valid else 'no'}")
    print(f"time_ms: {elapsed * 1000:.3f}")
    return EXIT_OK if check.valid else EXIT_ERROR


def cmd_verify(args) -> int:
    instance = _load(args)
    check = verify(instance, parse_solution(_read(args.solution)))
    if check.valid:
        print("valid")
        return EXIT_OK
    print(f"invalid: {check.reason}")
    print("violators: " + " ".join(map(str, check.violators)))
    return EXIT_MISMATCH


def _shape(text):
    if "x" in text:
        rows, cols = text.split("x")
        return int(rows), int(cols)
    return int(text)


def cmd_generate(args) -> int:
    instance = generate_random(
        args.kind, _shape(args.n), args.red, parse_fraction(args.p), args.seed, args.edge_prob
    )
    _write(emit_instance(instance), args.out)
    return EXIT_OK


def _write(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_reduce(args) -> int:
    text = _read(args.instance)
    if args.source == "hitting-set":
        record = reduce_hitting_set(parse_hitting_set(text), parse_fraction(args.p))
        notes = [f"dummies: {record.x}"]
        if record.budget is not None:
            notes.insert(0, f"budget: {record.budget}")
    else:
        record = reduce_rectilinear_3sat(parse_formula(text))
        ell = " ".join(f"{v}={k}" for v, k in record.ell.items())
        notes = [f"budget: {record.budget}", f"ell: {ell}"]
    notes.append(f"max_deficiency: {record.max_deficiency}")
    _write(emit_instance(record.instance), args.out)
    for line in notes:
        print(line, file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = []
    for kind, n in BENCH_SUITES[args.suite]:
        for seed in range(args.seeds):
            instance = generate_random(kind, n, 0.5, Fraction(1, 2), seed)
            for algo in ("auto", "oracle"):
                start = time.perf_counter()
                result = solve(instance, algo, max_red=None)
                micros = int((time.perf_counter() - start) * 1e6)
                ok = verify(instance, result.recoloring).valid
                rows.append([f"{kind}-{seed}", result.solver, str(instance.p),
                             result.recoloring.size, ok, micros])
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["instance", "solver", "p", "size", "verified", "micros"])
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="illusionfree", description="Minimum recolorings that remove majority illusion."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--p", help="threshold override as NUM/DEN")
    p.add_argument("--epsilon", default="1", help="PTAS accuracy (default 1)")
    p.add_argument("--demand", help="file with one demanded vertex id per line")
    p.add_argument("--decomposition", help="tree decomposition in PACE .td format")
    p.add_argument("--max-red", type=int, default=24, help="oracle size guard")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution file")
    p.add_argument("instance")
    p.add_argument("--solution", required=True)
    p.add_argument("--p")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", required=True, help="vertex count, or ROWSxCOLS for grids")
    p.add_argument("--red", type=float, default=0.5)
    p.add_argument("--p", default="1/2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", type=float, default=0.25)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", help="build an instance from a hardness construction")
    p.add_argument("source", choices=("hitting-set", "3sat"))
    p.add_argument("instance")
    p.add_argument("--p", default="1/2", help="threshold for the Hitting Set construction")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="time solvers on a generated suite")
    p.add_argument("--suite", choices=sorted(BENCH_SUITES), default="structured")
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StructureMismatch as exc:
        print(f"error: structure mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (FormatError, DecompositionError, OracleLimitError, InstanceError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
