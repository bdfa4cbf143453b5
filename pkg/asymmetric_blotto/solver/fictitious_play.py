"""Fictitious play for zero-sum matrix games.

Players alternate: the row player best-responds to the column player's
empirical history, then the column player best-responds to the row history
including that play. Ties go to the lowest index, so runs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from asymmetric_blotto.utils.logging import get_logger

logger = get_logger(__name__)


class ConvergenceError(RuntimeError):
    """Fictitious play hit its iteration cap before the value bracket closed."""

    def __init__(self, lower: float, upper: float, iterations: int) -> None:
        self.lower = lower
        self.upper = upper
        self.iterations = iterations
        super().__init__(
            f"Fictitious play did not converge in {iterations} iterations: "
            f"value bracket [{lower:.6f}, {upper:.6f}]"
        )


@dataclass(frozen=True)
class FictitiousPlayResult:
    """Midpoint value of the best bracket found and the mixtures that produced it."""

    value: float
    lower: float
    upper: float
    row_mixture: np.ndarray
    col_mixture: np.ndarray
    iterations: int


def fictitious_play(
    matrix: np.ndarray,
    tolerance: float = 1e-4,
    max_iterations: int = 1_000_000,
    scale: int = 1,
) -> FictitiousPlayResult:
    """Approximate the value of the game with payoff matrix / scale to the (maximising) row player.

    The column player's empirical mixture guarantees the row player at most
    max(row_cum) / t and the row mixture guarantees at least min(col_cum) / t.
    The best bounds seen so far are kept; play stops once they are within
    2 * tolerance, so the midpoint lies within tolerance of the value.

    Args:
        matrix: Payoffs to the row player. Integer matrices keep the cumulative
            sums exact.
        tolerance: Target distance between the reported value and the game value.
        max_iterations: Iteration cap.
        scale: Divisor applied to the matrix to obtain payoffs.

    Raises:
        ConvergenceError: If the cap is reached first; carries the best bounds.
    """
    payoffs = np.asarray(matrix)
    if payoffs.ndim != 2 or payoffs.size == 0:
        raise ValueError("Payoff matrix must be a nonempty 2-D array")
    by_column = np.ascontiguousarray(payoffs.T)
    rows, cols = payoffs.shape

    row_cum = np.zeros(rows, dtype=payoffs.dtype)
    col_cum = np.zeros(cols, dtype=payoffs.dtype)
    row_counts = np.zeros(rows, dtype=np.int64)
    col_counts = np.zeros(cols, dtype=np.int64)

    best_lower, best_upper = -np.inf, np.inf
    lower_counts = row_counts.copy()
    upper_counts = col_counts.copy()

    for t in range(1, max_iterations + 1):
        active_row = int(np.argmax(row_cum))
        row_counts[active_row] += 1
        col_cum += payoffs[active_row]

        active_col = int(np.argmin(col_cum))
        col_counts[active_col] += 1
        row_cum += by_column[active_col]

        lower = float(col_cum[active_col]) / (scale * t)
        upper = float(row_cum.max()) / (scale * t)
        if lower > best_lower:
            best_lower = lower
            lower_counts = row_counts.copy()
        if upper < best_upper:
            best_upper = upper
            upper_counts = col_counts.copy()

        if best_upper - best_lower <= 2 * tolerance:
            logger.debug(
                "Fictitious play converged",
                extra={"ctx_iterations": t, "ctx_lower": best_lower, "ctx_upper": best_upper},
            )
            return FictitiousPlayResult(
                value=(best_lower + best_upper) / 2,
                lower=best_lower,
                upper=best_upper,
                row_mixture=lower_counts / lower_counts.sum(),
                col_mixture=upper_counts / upper_counts.sum(),
                iterations=t,
            )

    logger.warning(
        "Fictitious play hit its iteration cap",
        extra={"ctx_iterations": max_iterations, "ctx_lower": best_lower, "ctx_upper": best_upper},
    )
    raise ConvergenceError(best_lower, best_upper, max_iterations)
