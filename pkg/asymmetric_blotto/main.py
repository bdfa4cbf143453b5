"""Command-line entry point for the asymmetric Colonel Blotto toolkit."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from asymmetric_blotto.config import get_settings
from asymmetric_blotto.equilibria.analytic import (
    TriangleFamilySpec,
    empirical_sup_distance,
    sample_mean_check,
    sample_triangle_strategy,
)
from asymmetric_blotto.equilibria.closed_form import (
    TriangleEquilibrium,
    check_w3_family,
    w2_equilibrium,
    w2_value,
    w3_equilibrium,
    w3_value,
)
from asymmetric_blotto.game.core import (
    Allocation,
    BlottoInputError,
    FiniteMixedStrategy,
    GameSpec,
    payoff_mixed,
    payoff_mixed_for_b,
)
from asymmetric_blotto.game.rational import format_rational, parse_rational
from asymmetric_blotto.oracle.best_response import best_response
from asymmetric_blotto.schemas import load_strategy
from asymmetric_blotto.solver.fictitious_play import ConvergenceError
from asymmetric_blotto.solver.grid import build_matrix, write_matrix_csv
from asymmetric_blotto.solver.simplex import SimplexError
from asymmetric_blotto.solver.zero_sum import SolveMethod, solve_zero_sum
from asymmetric_blotto.utils.files import write_text_atomic
from asymmetric_blotto.utils.logging import get_logger, setup_logging
from asymmetric_blotto.verification.harness import (
    VerificationOptions,
    theorem_ids,
    verify_theorem,
)
from asymmetric_blotto.verification.plot_data import Curve, emit_plot_data, samples_csv

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_ERROR = 2


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _levels(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational(part) for part in text.split(","))


def _to_json(payload: Any) -> str:
    """Render a report as indented JSON."""
    return json.dumps(payload, indent=2) + "\n"


def _emit(text: str, out: Optional[Path]) -> None:
    """Write text to stdout, or atomically to out when given."""
    if out is None:
        sys.stdout.write(text)
    else:
        write_text_atomic(out, text)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


def _rows_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV with one header line; list cells are space-separated."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def _render(payload: dict[str, Any], fmt: str) -> str:
    """Render a flat payload as JSON or as a single CSV row."""
    if fmt == "json":
        return _to_json(payload)
    return _rows_csv(list(payload), [list(payload.values())])


def _strategy_arg(
    levels: Optional[tuple[Fraction, ...]], path: Optional[Path], side: str
) -> FiniteMixedStrategy:
    if path is not None:
        return load_strategy(path)
    if levels is None:
        flag = side.lower()
        raise BlottoInputError(f"Give player {side} as --{flag} LEVELS or --p{flag} FILE")
    return FiniteMixedStrategy.pure(Allocation.of(*levels))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_payoff(args: argparse.Namespace) -> int:
    """Exact payoff of two pure allocations or strategy files."""
    pa = _strategy_arg(args.a, args.pa, "A")
    pb = _strategy_arg(args.b, args.pb, "B")
    spec = GameSpec(pa.budget, pb.budget, pa.battlefields)
    payload = {
        "payoff_a": format_rational(payoff_mixed(pa, pb, spec)),
        "payoff_b": format_rational(payoff_mixed_for_b(pa, pb, spec)),
    }
    _emit(_render(payload, args.format), args.out)
    return EXIT_OK


def cmd_best_response(args: argparse.Namespace) -> int:
    """Best response of a player with --budget against a strategy file."""
    opponent = load_strategy(args.against)
    spec = GameSpec(args.budget, opponent.budget, opponent.battlefields)
    result = best_response(opponent, args.budget, spec)
    if args.format == "json":
        _emit(_to_json(result.to_dict()), args.out)
        return EXIT_OK

    document = result.to_dict()
    profile = [f"{e['relation']}:{e['level']}" for e in document["profile"]]
    header = ("sup_payoff", "attained", "budget", "witness", "profile")
    row = [document[key] for key in header[:-1]] + [profile]
    _emit(_rows_csv(header, [row]), args.out)
    return EXIT_OK


def cmd_value_w2(args: argparse.Namespace) -> int:
    """W_2(t)."""
    payload = {"t": format_rational(args.t), "value": format_rational(w2_value(args.t))}
    _emit(_render(payload, args.format), args.out)
    return EXIT_OK


def cmd_value_w3(args: argparse.Namespace) -> int:
    """W_3(t) where known, else Unknown."""
    payload = {"t": format_rational(args.t), **w3_value(args.t).to_dict()}
    _emit(_render(payload, args.format), args.out)
    return EXIT_OK


def cmd_equilibrium(args: argparse.Namespace) -> int:
    """Equilibrium construction of ACB(1, t, n); CSV lists one atom per row."""
    if args.n == 2:
        construction = w2_equilibrium(args.t, args.epsilon)
    elif args.n == 3:
        construction = w3_equilibrium(args.t, args.epsilon)
    else:
        raise BlottoInputError(f"Equilibria are known for n = 2 and n = 3 only, got n = {args.n}")
    if construction is None:
        payload: dict[str, Any] = {"t": format_rational(args.t), "n": args.n, "known": False}
        _emit(_render(payload, args.format), args.out)
        return EXIT_OK

    payload = {"known": True, **construction.to_dict()}
    if args.format == "json":
        _emit(_to_json(payload), args.out)
        return EXIT_OK

    header = ("t", "n", "value", "player", "prob", "alloc")
    if isinstance(construction, TriangleEquilibrium):
        rows = [
            [payload["t"], 3, payload["value"], player, "1", payload["strategy"]]
            for player in ("A", "B")
        ]
    else:
        rows = [
            [payload["t"], payload["n"], payload["value"], player, atom["prob"], atom["alloc"]]
            for player, key in (("A", "pa"), ("B", "pb"))
            for atom in payload[key]["atoms"]
        ]
    _emit(_rows_csv(header, rows), args.out)
    return EXIT_OK


def cmd_check_family(args: argparse.Namespace) -> int:
    """Whether a two-atom strategy belongs to the 5/6 equilibrium family at t."""
    strategy = load_strategy(args.strategy)
    member = check_w3_family(strategy, args.t)
    _emit(_render({"t": format_rational(args.t), "member": member}, args.format), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run theorem suites; exit 1 when any check fails."""
    settings = get_settings()
    options = VerificationOptions(
        samples=args.samples if args.samples is not None else settings.samples,
        seed=args.seed if args.seed is not None else settings.seed,
        ks_threshold=settings.ks_threshold,
        fp_tolerance=settings.fp_tolerance,
        fp_max_iterations=settings.fp_max_iterations,
    )
    ids = args.theorems or theorem_ids()
    reports = [verify_theorem(theorem_id, options) for theorem_id in ids]
    if args.format == "json":
        _emit(_to_json([r.to_dict(include_timings=args.timings) for r in reports]), args.out)
    else:
        header = ["theorem", "description", "expected", "observed", "pass"]
        if args.timings:
            header.append("runtime_seconds")
        rows = []
        for report in reports:
            for check in report.checks:
                row = [
                    report.theorem_id,
                    check.description,
                    check.expected,
                    check.observed,
                    check.passed,
                ]
                if args.timings:
                    row.append(round(report.runtime_seconds or 0.0, 3))
                rows.append(row)
        _emit(_rows_csv(header, rows), args.out)

    failed = False
    for report in reports:
        for check in report.failures:
            failed = True
            print(
                f"FAIL {report.theorem_id}: {check.description} "
                f"(expected {check.expected}, observed {check.observed})",
                file=sys.stderr,
            )
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def cmd_solve_discrete(args: argparse.Namespace) -> int:
    """Solve the grid-discretized game with simplex or fictitious play."""
    spec = GameSpec(args.ta, args.tb, args.n)
    game = build_matrix(spec, args.grid)
    if args.matrix_csv is not None:
        write_matrix_csv(game, args.matrix_csv)
    report = solve_zero_sum(game, SolveMethod(args.method))
    _emit(_to_json(report.to_dict()), args.out)
    return EXIT_OK


def cmd_sample_marginals(args: argparse.Namespace) -> int:
    """Sample the triangle-boundary family as CSV or a KS and mean summary."""
    settings = get_settings()
    count = args.samples if args.samples is not None else settings.samples
    seed = args.seed if args.seed is not None else settings.seed
    samples = sample_triangle_strategy(TriangleFamilySpec(depth=args.depth), count, seed)
    if args.format == "csv":
        _emit(samples_csv(samples), args.out)
        return EXIT_OK

    summary = []
    for j in (1, 2, 3):
        mean = sample_mean_check(samples, j)
        summary.append(
            {
                "battlefield": j,
                "sup_distance": round(empirical_sup_distance(samples, j), 9),
                "mean": round(mean.mean, 9),
                "standard_error": round(mean.standard_error, 9),
                "expected_mean": format_rational(mean.expected),
            }
        )
    payload = {"depth": args.depth, "samples": count, "seed": seed, "marginals": summary}
    _emit(_to_json(payload), args.out)
    return EXIT_OK


def cmd_plot_data(args: argparse.Namespace) -> int:
    """Write a curve CSV to --out."""
    points = args.points if args.points is not None else get_settings().plot_points
    if args.out is None:
        raise BlottoInputError("plot-data needs --out PATH")
    emit_plot_data(args.curve, points, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_output(parser: argparse.ArgumentParser, formats: Sequence[str] = ()) -> None:
    parser.add_argument("--out", type=Path, default=None, help="Write to PATH instead of stdout")
    if formats:
        parser.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="asymmetric-blotto",
        description="Exact analysis of the asymmetric Colonel Blotto game ACB(X_A, X_B, n).",
    )
    parser.add_argument("--log-level", default=None, help="Override BLOTTO_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(
        name: str, handler: Callable[[argparse.Namespace], int], help_text: str
    ) -> argparse.ArgumentParser:
        """Register a subcommand bound to handler."""
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("payoff", cmd_payoff, "Exact payoff of two strategies")
    p.add_argument("--a", type=_levels, help="A's pure allocation, e.g. 1/6,1/3,1/2")
    p.add_argument("--b", type=_levels, help="B's pure allocation")
    p.add_argument("--pa", type=Path, help="A's strategy JSON file")
    p.add_argument("--pb", type=Path, help="B's strategy JSON file")
    _add_output(p, ("json", "csv"))

    p = command("best-response", cmd_best_response, "Exact best response to a strategy")
    p.add_argument("--against", type=Path, required=True, help="Opponent strategy JSON file")
    p.add_argument("--budget", type=_rational, required=True, help="Responder's budget, p/q")
    _add_output(p, ("json", "csv"))

    for name, handler, what in (
        ("value-w2", cmd_value_w2, "W_2(t)"),
        ("value-w3", cmd_value_w3, "what is known about W_3(t)"),
    ):
        p = command(name, handler, f"Query {what}")
        p.add_argument("--t", type=_rational, required=True, help="B's budget, p/q in [0, 1]")
        _add_output(p, ("json", "csv"))

    p = command("equilibrium", cmd_equilibrium, "Equilibrium construction of ACB(1, t, n)")
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--n", type=int, default=2, help="Battlefields: 2 or 3")
    p.add_argument("--epsilon", type=_rational, default=None, help="Perturbation override")
    _add_output(p, ("json", "csv"))

    p = command("check-family", cmd_check_family, "Test a strategy against the 5/6 family")
    p.add_argument("--strategy", type=Path, required=True, help="Two-atom strategy JSON file")
    p.add_argument("--t", type=_rational, required=True)
    _add_output(p, ("json", "csv"))

    p = command("verify", cmd_verify, "Run theorem check suites")
    p.add_argument(
        "theorems", nargs="*", help=f"Theorem ids, default all: {' '.join(theorem_ids())}"
    )
    p.add_argument("--samples", type=int, default=None, help="Monte Carlo samples per depth")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--timings", action="store_true", help="Include runtimes in the report")
    _add_output(p, ("json", "csv"))

    p = command("solve-discrete", cmd_solve_discrete, "Solve the grid-discretized game")
    p.add_argument("--ta", type=_rational, default=Fraction(1), help="X_A, p/q")
    p.add_argument("--tb", type=_rational, required=True, help="X_B, p/q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, required=True, help="Grid m: levels are k/m")
    p.add_argument("--method", choices=[m.value for m in SolveMethod], default="simplex")
    p.add_argument("--matrix-csv", type=Path, default=None, help="Also dump the payoff matrix")
    _add_output(p)

    p = command("sample-marginals", cmd_sample_marginals, "Sample the triangle-boundary family")
    p.add_argument("--depth", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    _add_output(p, ("csv", "json"))

    p = command("plot-data", cmd_plot_data, "Emit curve data as CSV")
    p.add_argument("--curve", choices=[c.value for c in Curve], required=True)
    p.add_argument("--points", type=int, default=None, help="Number of intervals on [0, 1]")
    _add_output(p)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level or get_settings().log_level)

    try:
        return args.handler(args)
    except (BlottoInputError, ConvergenceError, SimplexError, OSError) as e:
        logger.error(
            "Command failed",
            extra={
                "ctx_command": args.command,
                "ctx_error": str(e),
                "ctx_error_type": type(e).__name__,
            },
        )
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def cli_main() -> None:
    """CLI entry point."""
    sys.exit(main())


if __name__ == "__main__":
    cli_main()
