"""Mechanical checks of the game's theorems, one suite per theorem id.

Exact claims are compared as rationals. Monte Carlo claims are compared
against a stated tolerance.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from asymmetric_blotto.config import get_settings
from asymmetric_blotto.equilibria.analytic import (
    TriangleFamilySpec,
    empirical_sup_distance,
    payoff_vs_triangle,
    sample_mean_check,
    sample_triangle_strategy,
    triangle_support_box_contains,
    triangle_value,
)
from asymmetric_blotto.equilibria.closed_form import (
    EquilibriumConstruction,
    ValueAnswer,
    ValueKind,
    check_w3_family,
    fixed_strategies,
    w2_equilibrium,
    w2_value,
    w3_equilibrium,
    w3_value,
)
from asymmetric_blotto.game.core import Allocation, BlottoInputError, GameSpec, payoff_mixed
from asymmetric_blotto.game.rational import format_rational
from asymmetric_blotto.oracle.best_response import best_response, exploitability
from asymmetric_blotto.solver.fictitious_play import ConvergenceError
from asymmetric_blotto.solver.grid import build_matrix, enumerate_grid_strategies
from asymmetric_blotto.solver.zero_sum import SolveMethod, solve_zero_sum
from asymmetric_blotto.utils.logging import get_logger

logger = get_logger(__name__)

F = Fraction


@dataclass(frozen=True, slots=True)
class CheckResult:
    description: str
    expected: str
    observed: str
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        """Serializable form of the check."""
        return {
            "description": self.description,
            "expected": self.expected,
            "observed": self.observed,
            "pass": self.passed,
        }


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Outcome of one theorem's check suite. Passes iff every check passes."""

    theorem_id: str
    checks: tuple[CheckResult, ...]
    runtime_seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        """Checks that did not pass."""
        return [check for check in self.checks if not check.passed]

    def to_dict(self, include_timings: bool = False) -> dict[str, Any]:
        """Serializable report; runtime only when include_timings is set."""
        result: dict[str, Any] = {
            "theorem": self.theorem_id,
            "pass": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }
        if include_timings and self.runtime_seconds is not None:
            result["runtime_seconds"] = round(self.runtime_seconds, 3)
        return result


@dataclass(frozen=True, slots=True)
class VerificationOptions:
    """Sample and tolerance knobs for the suites."""

    samples: int = 100_000
    seed: int = 42
    ks_threshold: float = 0.02
    fp_tolerance: float = 1e-4
    fp_max_iterations: int = 1_000_000
    depths: tuple[int, ...] = field(default=(0, 1, 2))

    @classmethod
    def from_settings(cls) -> VerificationOptions:
        """Options taken from BLOTTO_ settings."""
        settings = get_settings()
        return cls(
            samples=settings.samples,
            seed=settings.seed,
            ks_threshold=settings.ks_threshold,
            fp_tolerance=settings.fp_tolerance,
            fp_max_iterations=settings.fp_max_iterations,
        )


Suite = Callable[[VerificationOptions], list[CheckResult]]
_SUITES: dict[str, Suite] = {}


def _suite(theorem_id: str) -> Callable[[Suite], Suite]:
    def register(func: Suite) -> Suite:
        """Record func as the suite for theorem_id."""
        _SUITES[theorem_id] = func
        return func

    return register


def theorem_ids() -> list[str]:
    """Registered theorem ids in registration order."""
    return list(_SUITES)


def _exact(description: str, expected: object, observed: object) -> CheckResult:
    return CheckResult(description, _render(expected), _render(observed), expected == observed)


def _at_most(description: str, bound: Fraction, observed: Fraction) -> CheckResult:
    return CheckResult(
        description, f"<= {format_rational(bound)}", format_rational(observed), observed <= bound
    )


def _render(value: object) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return "(" + ", ".join(_render(v) for v in value) + ")"
    return str(value)


def _equilibrium_checks(
    label: str, construction: EquilibriumConstruction, expected: Fraction
) -> list[CheckResult]:
    spec = construction.spec
    return [
        _exact(
            f"{label}: payoff of the constructed pair",
            expected,
            payoff_mixed(construction.pa, construction.pb, spec),
        ),
        _exact(
            f"{label}: exploitability (A, B)",
            (F(0), F(0)),
            exploitability(construction.pa, construction.pb, spec),
        ),
    ]


def _w3_checks(
    t: Fraction, expected: Fraction, extra: Callable[[EquilibriumConstruction], list[CheckResult]]
) -> list[CheckResult]:
    label = f"t = {format_rational(t)}"
    construction = w3_equilibrium(t)
    checks = [_exact(f"{label}: W_3 value", ValueAnswer.known(expected), w3_value(t))]
    if not isinstance(construction, EquilibriumConstruction):
        checks.append(CheckResult(f"{label}: construction", "pair", str(construction), False))
        return checks
    return checks + _equilibrium_checks(label, construction, expected) + extra(construction)


@_suite("2.1")
def _value_uniqueness(options: VerificationOptions) -> list[CheckResult]:
    instances = [
        (GameSpec(1, 1, 2), 8),
        (GameSpec(1, 1, 3), 9),
        (GameSpec(1, F(2, 3), 2), 6),
        (GameSpec(1, F(2, 3), 3), 6),
        (GameSpec(1, F(1, 2), 3), 6),
    ]
    checks: list[CheckResult] = []
    for spec, m in instances:
        label = f"ACB({spec.budget_a}, {spec.budget_b}, {spec.battlefields}), m = {m}"
        game = build_matrix(spec, m)
        exact = solve_zero_sum(game, SolveMethod.SIMPLEX).value
        assert isinstance(exact, Fraction)

        reversed_rows = game.reordered(list(range(len(game.rows) - 1, -1, -1)))
        checks.append(
            _exact(
                f"{label}: simplex value under reversed row order",
                exact,
                solve_zero_sum(reversed_rows, SolveMethod.SIMPLEX).value,
            )
        )
        if spec.budget_a == spec.budget_b:
            checks.append(_exact(f"{label}: symmetric value", F(1, 2), exact))

        try:
            approx = solve_zero_sum(
                game,
                SolveMethod.FICTITIOUS_PLAY,
                tolerance=options.fp_tolerance,
                max_iterations=options.fp_max_iterations,
            )
        except ConvergenceError as e:
            checks.append(
                CheckResult(
                    f"{label}: fictitious play agrees with simplex",
                    f"{float(exact):.6f} +/- {options.fp_tolerance:g}",
                    f"no convergence, bracket [{e.lower:.6f}, {e.upper:.6f}]",
                    False,
                )
            )
            continue
        gap = abs(float(approx.value) - float(exact))
        checks.append(
            CheckResult(
                f"{label}: fictitious play agrees with simplex",
                f"{float(exact):.6f} +/- {options.fp_tolerance:g}",
                f"{float(approx.value):.6f} after {approx.iterations} iterations",
                gap <= options.fp_tolerance,
            )
        )
    return checks


@_suite("3.4")
def _triangle_equilibrium(options: VerificationOptions) -> list[CheckResult]:
    checks = [_exact("ACB(1, 1, 3) value", F(1, 2), triangle_value())]
    for depth in options.depths:
        samples = sample_triangle_strategy(
            TriangleFamilySpec(depth=depth), options.samples, options.seed
        )
        inside = all(triangle_support_box_contains(s) for s in samples)
        checks.append(_exact(f"depth {depth}: samples inside the support box", True, inside))
        for j in (1, 2, 3):
            distance = empirical_sup_distance(samples, j)
            checks.append(
                CheckResult(
                    f"depth {depth}: sup-distance of battlefield {j} marginal",
                    f"<= {options.ks_threshold:g}",
                    f"{distance:.6f}",
                    distance <= options.ks_threshold,
                )
            )
            mean = sample_mean_check(samples, j)
            checks.append(
                CheckResult(
                    f"depth {depth}: mean of battlefield {j} within 3 standard errors",
                    format_rational(mean.expected),
                    f"{mean.mean:.6f} (z = {mean.z_score:.2f})",
                    mean.z_score <= 3,
                )
            )

    grid = 60
    best = F(0)
    box_only = True
    for levels in enumerate_grid_strategies(grid, 3):
        point = Allocation(tuple(F(k, grid) for k in levels), F(1))
        payoff = payoff_vs_triangle(point)
        best = max(best, payoff)
        if (payoff == F(1, 2)) != triangle_support_box_contains(point):
            box_only = False
    checks.append(_exact("max payoff against the triangle strategy, 1/60 grid", F(1, 2), best))
    checks.append(_exact("payoff 1/2 exactly on the support box", True, box_only))
    return checks


@_suite("4.1")
def _two_battlefields(options: VerificationOptions) -> list[CheckResult]:
    table = {
        F(1, 2): F(1),
        F(2, 3): F(3, 4),
        F(7, 10): F(3, 4),
        F(3, 4): F(3, 4),
        F(4, 5): F(2, 3),
        F(9, 10): F(3, 5),
        F(1): F(1, 2),
    }
    checks: list[CheckResult] = []
    for t, expected in table.items():
        label = f"t = {format_rational(t)}"
        checks.append(_exact(f"{label}: W_2 value", expected, w2_value(t)))
        checks.extend(_equilibrium_checks(label, w2_equilibrium(t), expected))
    return checks


@_suite("5.1")
def _overwhelm(options: VerificationOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for t in (F(1, 3), F(1, 2), F(13, 25)):
        checks.extend(_w3_checks(t, F(1), lambda _: []))
    return checks


@_suite("5.2")
def _three_atoms(options: VerificationOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for t in (F(6, 11), F(5, 9), F(4, 7)):
        checks.extend(_w3_checks(t, F(8, 9), lambda _: []))
    return checks


@_suite("5.3")
def _two_atoms(options: VerificationOptions) -> list[CheckResult]:
    def family(construction: EquilibriumConstruction) -> list[CheckResult]:
        """Two-atom family membership of A's strategy."""
        t = construction.t
        return [
            _exact(
                f"t = {format_rational(t)}: A's strategy lies in the two-atom family",
                True,
                check_w3_family(construction.pa, t),
            )
        ]

    checks: list[CheckResult] = []
    for t in (F(5, 8), F(8, 13), F(7, 11)):
        checks.extend(_w3_checks(t, F(5, 6), family))
    return checks


@_suite("5.4")
def _upper_bound(options: VerificationOptions) -> list[CheckResult]:
    t = F(2, 3)
    pb = fixed_strategies("5.4-B")
    result = best_response(pb, F(1), GameSpec(1, t, 3))
    return [
        _exact("W_3(2/3) answer", ValueAnswer(ValueKind.UPPER_BOUND, F(4, 5)), w3_value(t)),
        _at_most(
            "A's best response against the fixed five-atom strategy", F(4, 5), result.sup_payoff
        ),
        _exact("best response supremum is attained", True, result.attained),
    ]


@_suite("5.5")
def _lower_bound(options: VerificationOptions) -> list[CheckResult]:
    t = F(5, 6)
    pa = fixed_strategies("5.5-A")
    result = best_response(pa, t, GameSpec(1, t, 3))
    return [
        _at_most("B's best response against the fixed pure strategy", F(1, 3), result.sup_payoff),
        _exact("best response supremum is attained", True, result.attained),
    ]


def verify_theorem(
    theorem_id: str, options: Optional[VerificationOptions] = None
) -> VerificationReport:
    """Run the check suite bound to a theorem id.

    Raises:
        BlottoInputError: If the id is unknown.
    """
    if theorem_id not in _SUITES:
        raise BlottoInputError(
            f"Unknown theorem id {theorem_id!r}; expected one of {', '.join(_SUITES)}"
        )
    options = options or VerificationOptions.from_settings()
    logger.info("Verification started", extra={"ctx_theorem": theorem_id})
    started = time.perf_counter()
    checks = tuple(_SUITES[theorem_id](options))
    runtime = time.perf_counter() - started
    report = VerificationReport(theorem_id, checks, runtime)
    logger.info(
        "Verification finished",
        extra={
            "ctx_theorem": theorem_id,
            "ctx_pass": report.passed,
            "ctx_checks": len(checks),
            "ctx_runtime_seconds": round(runtime, 3),
        },
    )
    for failure in report.failures:
        logger.error(
            "Verification check failed",
            extra={
                "ctx_theorem": theorem_id,
                "ctx_check": failure.description,
                "ctx_expected": failure.expected,
                "ctx_observed": failure.observed,
            },
        )
    return report
