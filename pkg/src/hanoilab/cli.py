"""Command-line front end.

Data goes to stdout, diagnostics to stderr, so output can be piped into
golden-file comparisons.  Exit codes: 0 success, 1 bad arguments,
2 verification mismatch, 3 resource budget exceeded.  The two budgets
can also be set via HANOILAB_MAX_DISCS and HANOILAB_STATE_BUDGET.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import moves as mv
from . import oracle as orc
from . import tables as tbl
from .errors import (
    DiscLimitError,
    DomainError,
    HanoiError,
    IllegalMove,
    ResourceBudgetError,
)
from .recurrences import DEFAULT_MAX_DISCS, HanoiSolver, t3_closed

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if not raw:
        return fallback
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"{name} must be an integer, got {raw!r}") from exc


def _err(message: str) -> None:
    print(f"hanoilab: {message}", file=sys.stderr)


def _parse_strategy(text: str):
    if text in ("optimal", "balanced"):
        return text
    if text.startswith("fixed:"):
        try:
            return int(text.split(":", 1)[1])
        except ValueError:
            pass
    raise DomainError(f"strategy must be optimal, balanced or fixed:K, got {text!r}")


def _parse_pegs_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise DomainError(f"peg list must be comma-separated integers, got {text!r}")
    if not values:
        raise DomainError("peg list is empty")
    return values


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-discs",
        type=int,
        default=None,
        help=f"solver disc ceiling (default {DEFAULT_MAX_DISCS})",
    )
    common.add_argument(
        "--state-budget",
        type=int,
        default=None,
        help=f"state-space ceiling for the oracle (default {orc.DEFAULT_STATE_BUDGET})",
    )

    parser = argparse.ArgumentParser(
        prog="hanoilab",
        description="Multi-peg Tower of Hanoi: solve, tabulate, generate, certify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="optimal cost and splits")
    p.add_argument("--pegs", type=int, required=True)
    p.add_argument("--discs", type=int, required=True)
    p.add_argument("--all-splits", action="store_true", help="print every optimal split")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("table", parents=[common], help="emit a CSV table")
    p.add_argument(
        "--kind",
        choices=("table1", "growth", "ratios", "deltas"),
        required=True,
    )
    p.add_argument("--from", dest="start", type=int, default=None)
    p.add_argument("--to", dest="stop", type=int, default=None)
    p.add_argument("--pegs", type=str, default="3,4,5", help="comma list for growth")
    p.add_argument("--output", type=str, default=None, help="write CSV to this file")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("moves", parents=[common], help="emit an explicit move trace")
    p.add_argument("--pegs", type=int, required=True)
    p.add_argument("--discs", type=int, required=True)
    p.add_argument("--strategy", type=str, default="optimal")
    p.add_argument(
        "--verify",
        action="store_true",
        help="replay the trace and run the length/invariant checks",
    )
    p.set_defaults(handler=_cmd_moves)

    p = sub.add_parser("oracle", parents=[common], help="BFS certification sweep")
    p.add_argument("--pegs", type=int, required=True)
    p.add_argument("--max", dest="max_discs_swept", type=int, required=True)
    p.add_argument(
        "--metrics",
        action="store_true",
        help="include geodesic and explored-state columns",
    )
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser(
        "verify-all", parents=[common], help="reference regression plus oracle sweeps"
    )
    p.set_defaults(handler=_cmd_verify_all)

    return parser


def _solver_for(args: argparse.Namespace) -> HanoiSolver:
    limit = args.max_discs
    if limit is None:
        limit = _env_int("HANOILAB_MAX_DISCS", DEFAULT_MAX_DISCS)
    return HanoiSolver(max_discs=limit)


def _budget_for(args: argparse.Namespace) -> int:
    budget = args.state_budget
    if budget is None:
        budget = _env_int("HANOILAB_STATE_BUDGET", orc.DEFAULT_STATE_BUDGET)
    return budget


def _cmd_solve(args: argparse.Namespace) -> int:
    result = _solver_for(args).solve(args.pegs, args.discs)
    print(f"pegs: {result.pegs}")
    print(f"discs: {result.discs}")
    print(f"cost: {result.cost}")
    if result.canonical_split is not None:
        print(f"canonical_split: {result.canonical_split}")
        if args.all_splits:
            print("splits: " + ",".join(str(k) for k in result.argmin_splits))
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    n_range = None
    if (args.start is None) != (args.stop is None):
        raise DomainError("--from and --to must be given together")
    if args.start is not None:
        n_range = (args.start, args.stop)
    text = tbl.emit_table(
        args.kind,
        n_range=n_range,
        pegs=_parse_pegs_list(args.pegs),
        solver=_solver_for(args),
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _predicted_length(
    pegs: int, discs: int, strategy, solver: HanoiSolver
) -> int:
    if pegs == 3:
        return t3_closed(discs)
    if strategy == "optimal" or discs <= 1:
        return solver.cost(pegs, discs)
    k = discs // 2 if strategy == "balanced" else strategy
    return 2 * solver.cost(pegs, k) + solver.cost(pegs - 1, discs - k)


def _cmd_moves(args: argparse.Namespace) -> int:
    strategy = _parse_strategy(args.strategy)
    solver = _solver_for(args)
    if args.discs > solver.max_discs:
        # the disc ceiling bounds trace sizes too
        raise DiscLimitError(args.discs, solver.max_discs)
    if args.pegs == 3:
        if strategy != "optimal":
            raise DomainError("three-peg traces only support the optimal strategy")
        trace = mv.generate_three_peg(args.discs)
    else:
        trace = mv.generate_frame_stewart(args.pegs, args.discs, strategy, solver)
    sys.stdout.write(mv.trace_to_csv(trace))
    if not args.verify:
        return EXIT_OK
    return _verify_trace(trace, args.pegs, args.discs, strategy, solver)


def _verify_trace(
    trace: mv.MoveTrace, pegs: int, discs: int, strategy, solver: HanoiSolver
) -> int:
    failures: list[str] = []
    target = 2 if pegs == 3 else pegs - 1
    try:
        final = mv.validate_sequence(trace.initial, trace.moves)
        if discs and final.pegs != (target,) * discs:
            failures.append("replay does not end all-on-target")
    except IllegalMove as exc:
        failures.append(f"replay failed: {exc}")
        final = None

    predicted = _predicted_length(pegs, discs, strategy, solver)
    if len(trace) != predicted:
        failures.append(f"length {len(trace)} differs from predicted {predicted}")

    if final is not None and pegs == 3:
        report = mv.gray_trace(trace)
        if not report.single_flip:
            failures.append("gray encoding flipped more than one bit in a step")
        if not report.ruler_pattern:
            failures.append("flip sequence does not follow the ruler pattern")
    if final is not None and pegs == 4 and discs >= 1:
        report = mv.verify_subtower_independence(trace)
        if not report.single_largest_move:
            failures.append(
                f"largest disc moved {report.largest_move_count} times, expected once"
            )
        elif not report.independent:
            failures.append("subtowers interfere after the largest-disc move")

    if failures:
        for failure in failures:
            _err(f"verify: {failure}")
        return EXIT_MISMATCH
    _err(f"verify: ok ({len(trace)} moves)")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    solver = _solver_for(args)
    sweep = orc.certify_range(
        args.pegs,
        args.max_discs_swept,
        state_budget=_budget_for(args),
        solver=solver,
    )
    header = "n,distance,dp_cost,agree"
    if args.metrics:
        header += ",geodesics,states_explored"
    print(header)
    for report in sweep.reports:
        row = (
            f"{report.discs},{report.distance},{report.dp_cost},"
            f"{'true' if report.agrees else 'false'}"
        )
        if args.metrics:
            row += f",{report.geodesic_count},{report.states_explored}"
        print(row)
    for skip in sweep.skipped:
        _err(
            f"skipped n={skip.discs}: needs {skip.required} states, "
            f"budget is {skip.budget}"
        )
    if not sweep.all_agree:
        return EXIT_MISMATCH
    if sweep.skipped:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_verify_all(args: argparse.Namespace) -> int:
    solver = _solver_for(args)
    budget = _budget_for(args)
    mismatches = 0

    report = tbl.verify_against_references(solver=solver)
    print(f"references: {len(report.entries)} checked, {len(report.mismatches)} mismatches")
    for entry in report.mismatches:
        print(f"  {entry.name}: expected {entry.expected}, got {entry.computed}")
    mismatches += len(report.mismatches)

    for pegs in (3, 4):
        sweep = orc.certify_range(pegs, 10, state_budget=budget, solver=solver)
        bad = [r for r in sweep.reports if not r.agrees]
        print(
            f"oracle p={pegs}: {len(sweep.reports)} certified, "
            f"{len(bad)} disagreements, {len(sweep.skipped)} skipped"
        )
        for r in bad:
            print(f"  n={r.discs}: bfs {r.distance} != dp {r.dp_cost}")
        for skip in sweep.skipped:
            _err(
                f"oracle p={pegs}: skipped n={skip.discs} "
                f"(needs {skip.required} states, budget {skip.budget})"
            )
        mismatches += len(bad)

    print("FAIL" if mismatches else "PASS")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv if argv is None else list(argv))
    except SystemExit as exc:
        # argparse exits 2 on usage errors; fold that into the domain code
        return EXIT_OK if exc.code == 0 else EXIT_DOMAIN
    try:
        return args.handler(args)
    except DomainError as exc:
        _err(str(exc))
        return EXIT_DOMAIN
    except ResourceBudgetError as exc:
        _err(str(exc))
        return EXIT_BUDGET
    except IllegalMove as exc:
        _err(str(exc))
        return EXIT_MISMATCH
    except HanoiError as exc:
        _err(str(exc))
        return EXIT_DOMAIN
    except OSError as exc:
        _err(f"output error: {exc}")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
