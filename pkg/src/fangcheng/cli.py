"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 singular or rank deficient,
4 inexact division in the backward phase, 5 oracle size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bench import format_report, run_bench
from .detkit import det_oracle, det_via_chio
from .diagonalize import solve
from .eliminate import PivotPolicy, PivotStrategy, forward_eliminate
from .errors import FangchengError, InexactDivision, InputError, SingularError, SizeLimit
from .tableau import parse_tableau
from .trace import Trace, trace_document
from .wellprob import build_well_system, posited_b, solve_well

EXIT_OK, EXIT_INPUT, EXIT_SINGULAR, EXIT_INEXACT, EXIT_SIZE = 0, 2, 3, 4, 5


def exit_code_for(err: Exception) -> int:
    if isinstance(err, InexactDivision):
        return EXIT_INEXACT
    if isinstance(err, SizeLimit):
        return EXIT_SIZE
    if isinstance(err, SingularError):
        return EXIT_SINGULAR
    if isinstance(err, (InputError, OSError, ValueError)):
        return EXIT_INPUT
    raise err


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    coeffs: str | None = None
    strategy: str = "chio"
    policy: str = "strict"
    finish: str = "backsub"
    trace: str = "none"
    out: str | None = None
    moderate: bool = False
    method: str = "chio"
    seed: int = 0
    trials: int = 10
    size: int = 4
    entry_range: int = 9
    fmt: str = "text"
    b: int | None = None
    do_solve: bool = False
    parametric: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        return cls(**{k: v for k, v in vars(args).items() if k in cls.__dataclass_fields__})


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit_json(doc: dict, cfg: RunConfig, out):
    text = json.dumps(doc, indent=1)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)


def cmd_solve(cfg: RunConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        t = parse_tableau(_read_input(cfg.input))
        solution, trace = solve(t, PivotStrategy(cfg.strategy), PivotPolicy(cfg.policy),
                                cfg.finish, cfg.moderate)
    except (FangchengError, OSError, ValueError) as e:
        code = exit_code_for(e)
        print(f"error: {e}", file=err)
        if cfg.trace == "json":
            _emit_json(trace_document(Trace(), code), cfg, out)
        return code

    code = EXIT_OK
    denominator = solution.denominator if cfg.finish == "hart" else None
    if cfg.trace == "json":
        _emit_json(trace_document(trace, code, solution.values, denominator), cfg, out)
        if not cfg.out:
            return code
    elif cfg.trace == "board":
        for event in trace:
            print(event.render_board(), file=out)
            print(file=out)
    for i, x in enumerate(solution.values, start=1):
        print(f"x{i} = {x}", file=out)
    if denominator is not None:
        print(f"denominator = {denominator}", file=out)
    return code


def cmd_det(cfg: RunConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        t = parse_tableau(_read_input(cfg.input))
        if t.m != t.n:
            raise InputError(f"determinant needs a square matrix, got {t.n}x{t.m}")
        if cfg.method == "chio":
            value = det_via_chio(t.rows, PivotPolicy(cfg.policy))
        else:
            value = det_oracle(t.rows, "cofactor" if cfg.method == "cofactor" else "permutation")
    except (FangchengError, OSError, ValueError) as e:
        print(f"error: {e}", file=err)
        return exit_code_for(e)
    print(value, file=out)
    return EXIT_OK


def cmd_well(cfg: RunConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        try:
            coeffs = [int(tok) for tok in cfg.coeffs.split(",")]
        except (AttributeError, ValueError):
            raise InputError(f"--coeffs must be comma-separated integers, got {cfg.coeffs!r}") from None
        ws = build_well_system(coeffs, cfg.b)
        ws = ws.resolve()
        lines = [f"b = {ws.b}" + ("" if ws.posited else " (given)")]
        if cfg.do_solve or cfg.parametric:
            solution, diag = solve_well(ws, PivotPolicy(cfg.policy), cfg.parametric)
            lines.append(f"det = {diag.det}")
            lines.append(f"pivot = {diag.final_pivot}")
            lines.extend(f"x{i} = {x}" for i, x in enumerate(solution.values, start=1))
        else:
            echelon, _ = forward_eliminate(ws.tableau(), PivotStrategy.NINE_CHAPTERS,
                                           PivotPolicy(cfg.policy))
            lines.append(f"det = {posited_b(ws)}")
            lines.append(f"pivot = {echelon.rows[-1][-2]}")
    except (FangchengError, ValueError) as e:
        print(f"error: {e}", file=err)
        return exit_code_for(e)
    print("\n".join(lines), file=out)
    return EXIT_OK


def cmd_bench(cfg: RunConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        report = run_bench(cfg.size, cfg.trials, cfg.seed, cfg.entry_range)
    except ValueError as e:
        print(f"error: {e}", file=err)
        return EXIT_INPUT
    text = json.dumps(report, indent=1, sort_keys=True) if cfg.fmt == "json" else format_report(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fangcheng", description="Exact fraction-free elimination.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def elimination_flags(p):
        p.add_argument("--pivot", dest="policy", choices=["strict", "swap"], default="strict")

    p = sub.add_parser("solve", help="solve an n x (n+1) tableau exactly")
    p.add_argument("input", help="tableau file, or - for stdin")
    p.add_argument("--strategy", choices=["nine", "chio", "field"], default="chio")
    elimination_flags(p)
    p.add_argument("--finish", choices=["backsub", "hart", "jordan"], default="backsub")
    p.add_argument("--trace", choices=["none", "board", "json"], default="none")
    p.add_argument("--out", help="write the JSON trace here instead of stdout")
    p.add_argument("--moderate-rows", dest="moderate", action="store_true",
                   help="divide rows by their content between backward steps")

    p = sub.add_parser("det", help="determinant of a square tableau")
    p.add_argument("input")
    p.add_argument("--method", choices=["chio", "cofactor", "perm"], default="chio")
    elimination_flags(p)

    p = sub.add_parser("well", help="cyclic band system with a posited right-hand side")
    p.add_argument("--coeffs", required=True, help="diagonal entries, e.g. 2,3,4")
    p.add_argument("--b", type=int, default=None, help="give b instead of positing det(A)")
    p.add_argument("--solve", dest="do_solve", action="store_true")
    p.add_argument("--parametric", action="store_true", help="leave b free (unsupported)")
    elimination_flags(p)

    p = sub.add_parser("bench", help="operation counts and entry growth")
    p.add_argument("--n", dest="size", type=int, default=4)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", dest="entry_range", type=int, default=9)
    p.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")
    p.add_argument("--out")
    return parser


COMMANDS = {"solve": cmd_solve, "det": cmd_det, "well": cmd_well, "bench": cmd_bench}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig.from_args(args)
    return COMMANDS[cfg.subcommand](cfg)


if __name__ == "__main__":
    sys.exit(main())
