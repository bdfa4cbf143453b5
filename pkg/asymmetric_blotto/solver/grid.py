"""Grid discretization of ACB(X_A, X_B, n) as a finite matrix game.

Player i's grid strategies are the nondecreasing n-part compositions of
X_i * m, read as levels k / m.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from asymmetric_blotto.game.core import Allocation, BlottoInputError, GameSpec, half_points
from asymmetric_blotto.game.rational import format_rational
from asymmetric_blotto.utils.files import write_text_atomic
from asymmetric_blotto.utils.logging import get_logger

logger = get_logger(__name__)


def _compositions(total: int, parts: int, minimum: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total // parts + 1):
        for rest in _compositions(total - first, parts - 1, first):
            yield (first,) + rest


def enumerate_grid_strategies(total: int, n: int) -> list[tuple[int, ...]]:
    """Nondecreasing n-tuples of nonnegative integers summing to total, lexicographically."""
    if total < 0 or n < 1:
        raise BlottoInputError(f"Need total >= 0 and n >= 1, got total={total}, n={n}")
    return list(_compositions(total, n, 0))


def _scaled_total(budget: Fraction, m: int, side: str) -> int:
    scaled = budget * m
    if scaled.denominator != 1:
        raise BlottoInputError(
            f"X_{side} * m = {scaled} is not an integer: with X_{side} = {budget} the grid "
            f"m must be a multiple of {budget.denominator}"
        )
    return scaled.numerator


def label(levels: Sequence[Fraction]) -> str:
    """Render levels as "(p/q, ...)"."""
    return "(" + ", ".join(format_rational(v) for v in levels) + ")"


@dataclass(frozen=True)
class DiscreteMatrixGame:
    """Grid strategies of both players and the exact payoff matrix to A.

    half_points[r][c] is twice the number of battlefields row r wins against
    column c, so matrix[r][c] = half_points[r][c] / (2n).
    """

    spec: GameSpec
    grid: int
    rows: tuple[Allocation, ...]
    cols: tuple[Allocation, ...]
    half_points: np.ndarray = field(repr=False)

    @property
    def scale(self) -> int:
        """Half-points per unit payoff, 2n."""
        return 2 * self.spec.battlefields

    @property
    def shape(self) -> tuple[int, int]:
        """(rows, cols)."""
        return len(self.rows), len(self.cols)

    @property
    def matrix(self) -> list[list[Fraction]]:
        """Exact payoff matrix to A."""
        scale = self.scale
        return [[Fraction(int(v), scale) for v in row] for row in self.half_points]

    @property
    def row_labels(self) -> list[str]:
        """A's grid strategies as labels."""
        return [label(a.levels) for a in self.rows]

    @property
    def col_labels(self) -> list[str]:
        """B's grid strategies as labels."""
        return [label(b.levels) for b in self.cols]

    def reordered(self, row_order: Sequence[int]) -> DiscreteMatrixGame:
        """The same game with rows permuted: row i of the result is row row_order[i] here."""
        if sorted(row_order) != list(range(len(self.rows))):
            raise BlottoInputError("row_order must be a permutation of the row indices")
        order = list(row_order)
        return DiscreteMatrixGame(
            self.spec,
            self.grid,
            tuple(self.rows[i] for i in order),
            self.cols,
            self.half_points[order, :],
        )


def build_matrix(spec: GameSpec, m: int) -> DiscreteMatrixGame:
    """Discretize spec on the grid 1/m.

    Raises:
        BlottoInputError: If m < 1 or X_A * m or X_B * m is not an integer.
    """
    if m < 1:
        raise BlottoInputError(f"Grid m must be >= 1, got {m}")
    n = spec.battlefields
    row_ints = enumerate_grid_strategies(_scaled_total(spec.budget_a, m, "A"), n)
    col_ints = enumerate_grid_strategies(_scaled_total(spec.budget_b, m, "B"), n)

    points = np.array([[half_points(r, c) for c in col_ints] for r in row_ints], dtype=np.int64)
    rows = tuple(Allocation(tuple(Fraction(k, m) for k in r), spec.budget_a) for r in row_ints)
    cols = tuple(Allocation(tuple(Fraction(k, m) for k in c), spec.budget_b) for c in col_ints)

    logger.info(
        "Built grid matrix game",
        extra={"ctx_grid": m, "ctx_rows": len(rows), "ctx_cols": len(cols), "ctx_battlefields": n},
    )
    return DiscreteMatrixGame(spec, m, rows, cols, points)


def matrix_csv(game: DiscreteMatrixGame) -> str:
    """The payoff matrix as CSV: a header of column strategies, then one row per A strategy."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["row", *game.col_labels])
    for row_label, values in zip(game.row_labels, game.matrix):
        writer.writerow([row_label, *(format_rational(v) for v in values)])
    return buffer.getvalue()


def write_matrix_csv(game: DiscreteMatrixGame, path: str | Path) -> Path:
    """Write matrix_csv(game) atomically to path."""
    return write_text_atomic(path, matrix_csv(game))
