"""Values of grid-discretized games: exact simplex or fictitious play."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from asymmetric_blotto.config import get_settings
from asymmetric_blotto.game.core import GameSpec
from asymmetric_blotto.game.rational import format_decimal, format_rational
from asymmetric_blotto.solver.fictitious_play import fictitious_play
from asymmetric_blotto.solver.grid import DiscreteMatrixGame, build_matrix
from asymmetric_blotto.solver.simplex import solve_matrix_game
from asymmetric_blotto.utils.logging import get_logger

logger = get_logger(__name__)


class SolveMethod(str, Enum):
    SIMPLEX = "simplex"
    FICTITIOUS_PLAY = "fp"


@dataclass(frozen=True, slots=True)
class SolveReport:
    """Value of a discretized game and optimal (or averaged) mixtures.

    Simplex reports are exact; fictitious-play reports carry floats, the value
    bracket and the iteration count.
    """

    method: SolveMethod
    value: Fraction | float
    row_mixture: tuple[Fraction | float, ...]
    col_mixture: tuple[Fraction | float, ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    iterations: Optional[int] = None
    lower: Optional[float] = None
    upper: Optional[float] = None

    @property
    def exact(self) -> bool:
        """Whether value and mixtures are exact rationals."""
        return self.method is SolveMethod.SIMPLEX

    def to_dict(self) -> dict[str, Any]:
        def render(v: Fraction | float) -> str | float:
            return format_rational(v) if isinstance(v, Fraction) else float(v)

        result: dict[str, Any] = {
            "method": self.method.value,
            "value": render(self.value),
            "value_decimal": format_decimal(self.value),
            "rows": list(self.row_labels),
            "cols": list(self.col_labels),
            "row_mixture": [render(p) for p in self.row_mixture],
            "col_mixture": [render(q) for q in self.col_mixture],
        }
        if not self.exact:
            result.update(iterations=self.iterations, lower=self.lower, upper=self.upper)
        return result


def solve_zero_sum(
    game: DiscreteMatrixGame,
    method: SolveMethod = SolveMethod.SIMPLEX,
    *,
    tolerance: Optional[float] = None,
    max_iterations: Optional[int] = None,
) -> SolveReport:
    """Solve a discretized game.

    tolerance and max_iterations apply to fictitious play and default to the
    settings.

    Raises:
        SimplexError: If the exact certificate fails.
        ConvergenceError: If fictitious play reaches its cap.
    """
    rows, cols = tuple(game.row_labels), tuple(game.col_labels)
    logger.info(
        "Solving grid game",
        extra={"ctx_method": method.value, "ctx_rows": len(rows), "ctx_cols": len(cols)},
    )
    if method is SolveMethod.SIMPLEX:
        solution = solve_matrix_game(game.matrix)
        return SolveReport(
            method, solution.value, solution.row_mixture, solution.col_mixture, rows, cols
        )

    settings = get_settings()
    result = fictitious_play(
        game.half_points,
        tolerance=settings.fp_tolerance if tolerance is None else tolerance,
        max_iterations=settings.fp_max_iterations if max_iterations is None else max_iterations,
        scale=game.scale,
    )
    return SolveReport(
        method,
        result.value,
        tuple(float(p) for p in result.row_mixture),
        tuple(float(q) for q in result.col_mixture),
        rows,
        cols,
        iterations=result.iterations,
        lower=result.lower,
        upper=result.upper,
    )


def discrete_value(spec: GameSpec, m: int) -> Fraction:
    """Exact value of spec discretized on the grid 1/m."""
    report = solve_zero_sum(build_matrix(spec, m), SolveMethod.SIMPLEX)
    assert isinstance(report.value, Fraction)
    return report.value
