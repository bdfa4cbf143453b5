"""Exact rational simplex for the value of a finite zero-sum matrix game.

The tableau is kept in dictionary form x_B = b - A x_N, z = z0 + c x_N and
pivoted with Bland's rule (smallest-index entering variable with positive
reduced cost, ratio ties broken by the smallest basic index), which rules out
cycling on degenerate tableaus.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from asymmetric_blotto.utils.logging import get_logger

logger = get_logger(__name__)


class SimplexError(ArithmeticError):
    """An unbounded tableau or a minimax certificate that does not hold."""


class StepOutcome(str, Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    PIVOTED = "pivoted"


class SimplexTableau:
    """Maximise c.y subject to A y <= b, y >= 0, with b >= 0, from the slack basis.

    Variables 0..n-1 are the original columns and n..n+m-1 the row slacks.
    """

    def __init__(
        self,
        a: Sequence[Sequence[Fraction]],
        b: Sequence[Fraction],
        c: Sequence[Fraction],
    ) -> None:
        self.m = len(a)
        self.n = len(c)
        if any(len(row) != self.n for row in a) or len(b) != self.m:
            raise SimplexError("Tableau dimensions do not match")
        if any(v < 0 for v in b):
            raise SimplexError("The slack basis needs b >= 0")
        self.a = [[Fraction(v) for v in row] for row in a]
        self.b = [Fraction(v) for v in b]
        self.c = [Fraction(v) for v in c]
        self.objective = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        """Exchange basic variable b_vars[i] with nonbasic variable nb_vars[j]."""
        row = self.a[i]
        piv = row[j]
        delta = self.c[j] / piv
        self.objective += delta * self.b[i]
        for col in range(self.n):
            self.c[col] -= delta * row[col]
        self.c[j] = -delta

        for col in range(self.n):
            row[col] = 1 / piv if col == j else row[col] / piv
        self.b[i] /= piv

        for k in range(self.m):
            if k == i:
                continue
            other = self.a[k]
            f = other[j]
            if f == 0:
                continue
            for col in range(self.n):
                other[col] = -f / piv if col == j else other[col] - f * row[col]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_step(self) -> StepOutcome:
        """One pivot under Bland's rule: lowest-index entering and leaving variables."""
        entering = [(self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0]
        if not entering:
            return StepOutcome.OPTIMAL
        _, j = min(entering)
        leaving = [
            (self.b[i] / self.a[i][j], self.b_vars[i], i) for i in range(self.m) if self.a[i][j] > 0
        ]
        if not leaving:
            return StepOutcome.UNBOUNDED
        _, _, i = min(leaving)
        self.pivot(i, j)
        return StepOutcome.PIVOTED

    def solve(self) -> None:
        """Pivot to optimality.

        Raises:
            SimplexError: If the objective is unbounded.
        """
        while True:
            outcome = self.bland_step()
            if outcome is StepOutcome.OPTIMAL:
                return
            if outcome is StepOutcome.UNBOUNDED:
                raise SimplexError("Objective is unbounded")

    def primal_solution(self) -> list[Fraction]:
        """Values of the original variables at the current basis."""
        y = [Fraction(0)] * self.n
        for i, var in enumerate(self.b_vars):
            if var < self.n:
                y[var] = self.b[i]
        return y

    def dual_solution(self) -> list[Fraction]:
        """Row multipliers: minus the reduced cost of each nonbasic slack, 0 for basic ones."""
        u = [Fraction(0)] * self.m
        for j, var in enumerate(self.nb_vars):
            if var >= self.n:
                u[var - self.n] = -self.c[j]
        return u


@dataclass(frozen=True, slots=True)
class MatrixGameSolution:
    value: Fraction
    row_mixture: tuple[Fraction, ...]
    col_mixture: tuple[Fraction, ...]
    pivots: int


def check_certificate(
    matrix: Sequence[Sequence[Fraction]],
    row_mixture: Sequence[Fraction],
    col_mixture: Sequence[Fraction],
    value: Fraction,
) -> bool:
    """Exact minimax certificate for value.

    Every column pays at least value against row_mixture and every row pays at
    most value against col_mixture.
    """
    cols = len(matrix[0])
    guaranteed = min(
        sum((p * row[c] for p, row in zip(row_mixture, matrix)), Fraction(0)) for c in range(cols)
    )
    conceded = max(sum((q * v for q, v in zip(col_mixture, row)), Fraction(0)) for row in matrix)
    return guaranteed >= value >= conceded


def solve_matrix_game(matrix: Sequence[Sequence[Fraction]]) -> MatrixGameSolution:
    """Value and optimal mixtures of a matrix game whose row player maximises.

    Entries are shifted by s so the smallest is 1, then the column player's
    program max sum(y) s.t. M' y <= 1, y >= 0 is solved. With z its optimum,
    the value is 1/z - s, q = y/z, and the row mixture is the dual solution over z.

    Raises:
        SimplexError: On an empty matrix or a certificate that fails exactly.
    """
    if not matrix or not matrix[0]:
        raise SimplexError("Matrix game must be nonempty")
    low = min(min(row) for row in matrix)
    shift = 1 - low
    shifted = [[Fraction(v) + shift for v in row] for row in matrix]
    rows, cols = len(shifted), len(shifted[0])

    tableau = SimplexTableau(shifted, [Fraction(1)] * rows, [Fraction(1)] * cols)
    tableau.solve()
    z = tableau.objective
    if z <= 0:
        raise SimplexError(f"Non-positive optimum {z} for a positive matrix")

    col_mixture = tuple(y / z for y in tableau.primal_solution())
    row_mixture = tuple(u / z for u in tableau.dual_solution())
    value = 1 / z - shift
    if sum(col_mixture) != 1 or sum(row_mixture) != 1:
        raise SimplexError("Recovered mixtures do not sum to 1")
    if not check_certificate(matrix, row_mixture, col_mixture, value):
        raise SimplexError(f"Minimax certificate fails for value {value}")

    logger.debug(
        "Matrix game solved",
        extra={
            "ctx_rows": rows,
            "ctx_cols": cols,
            "ctx_pivots": tableau.pivots,
            "ctx_value": str(value),
        },
    )
    return MatrixGameSolution(value, row_mixture, col_mixture, tableau.pivots)
