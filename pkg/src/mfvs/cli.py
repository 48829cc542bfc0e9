"""Command line front end: solve, verify, generate, bench.

Exit codes: 0 for a completed solve or verify (infeasible is an answer, not
an error), 1 for usage, parse or input errors, 2 for an internal invariant
breach (a solver witness that fails re-verification -- the CLI never trusts
the solver).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .driver import solve_fvs
from .graph import MixedGraph
from .instance_io import FAMILIES, ParseError, generate_instance, parse_instance
from .oracles import brute_min_fvs

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2


@dataclass
class ResultRecord:
    feasible: bool
    k: int
    fvs: list[int]
    elapsed: float
    solver_mode: str
    verification: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "feasible": self.feasible,
                "k": self.k,
                "fvs": self.fvs,
                "elapsed": round(self.elapsed, 6),
                "solver_mode": self.solver_mode,
                "verification": self.verification,
            }
        )

    def to_text(self) -> str:
        witness = ",".join(str(v) for v in self.fvs)
        return (
            f"feasible={str(self.feasible).lower()} k={self.k} "
            f"fvs=[{witness}] elapsed={self.elapsed:.4f}s "
            f"mode={self.solver_mode} verified={str(self.verification).lower()}"
        )


def run_solve(g: MixedGraph, k: int, oracle: bool = False) -> ResultRecord:
    """Solve and re-verify; verification is True for every feasible answer
    unless the solver misbehaved."""
    mode = "oracle" if oracle else "pipeline"
    start = time.perf_counter()
    result = brute_min_fvs(g, k) if oracle else solve_fvs(g, k)
    elapsed = time.perf_counter() - start
    verified = True
    if result.feasible:
        verified = len(result.vertices) <= k and g.is_fvs(result.vertices)
    return ResultRecord(
        feasible=result.feasible,
        k=k,
        fvs=sorted(result.vertices) if result.feasible else [],
        elapsed=elapsed,
        solver_mode=mode,
        verification=verified,
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mfvs", description="Exact feedback vertex set solver for mixed graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance file")
    p_solve.add_argument("--input", required=True)
    p_solve.add_argument("--k", type=int, required=True)
    p_solve.add_argument("--oracle", action="store_true")
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="check a claimed feedback vertex set")
    p_verify.add_argument("--input", required=True)
    p_verify.add_argument("--fvs", required=True, help='comma separated, e.g. "1,4,7"')
    p_verify.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("generate", help="write a generated instance file")
    p_gen.add_argument("--family", choices=FAMILIES, required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--edges", type=int, required=True)
    p_gen.add_argument("--arcs", type=int, required=True)
    p_gen.add_argument("--planted-k", type=int, default=None)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_generate)

    p_bench = sub.add_parser("bench", help="solve a corpus for every budget up to kmax")
    p_bench.add_argument("--corpus", required=True)
    p_bench.add_argument("--kmax", type=int, required=True)
    p_bench.add_argument("--json", action="store_true")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def _cmd_solve(args: argparse.Namespace) -> int:
    g, _ = parse_instance(Path(args.input).read_text(encoding="utf-8"))
    record = run_solve(g, args.k, oracle=args.oracle)
    print(record.to_json() if args.json else record.to_text())
    if record.feasible and not record.verification:
        print("error: witness failed re-verification", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g, _ = parse_instance(Path(args.input).read_text(encoding="utf-8"))
    claimed = frozenset(int(tok) for tok in args.fvs.split(",") if tok.strip())
    ok = g.is_fvs(claimed)
    print("valid" if ok else "not a feedback vertex set")
    return EXIT_OK if ok else EXIT_USAGE


def _cmd_generate(args: argparse.Namespace) -> int:
    text = generate_instance(
        args.family, args.n, args.edges, args.arcs, args.planted_k, args.seed
    )
    Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    corpus = Path(args.corpus)
    files = sorted(p for p in corpus.iterdir() if p.is_file())
    if not files:
        raise ValueError(f"no instance files in {corpus}")
    by_k: dict[int, list[float]] = {k: [] for k in range(args.kmax + 1)}
    for path in files:
        g, _ = parse_instance(path.read_text(encoding="utf-8"))
        for k in range(args.kmax + 1):
            record = run_solve(g, k)
            if record.feasible and not record.verification:
                print("error: witness failed re-verification", file=sys.stderr)
                return EXIT_INVARIANT
            by_k[k].append(record.elapsed)
            if args.json:
                payload = json.loads(record.to_json())
                payload["instance"] = path.name
                print(json.dumps(payload))
            else:
                print(f"{path.name} {record.to_text()}")
    print("runtime-vs-k summary (mean seconds per solve):")
    for k in range(args.kmax + 1):
        times = by_k[k]
        mean = sum(times) / len(times)
        print(f"  k={k} instances={len(times)} mean={mean:.4f}s")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
