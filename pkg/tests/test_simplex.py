"""Tests for the exact simplex and matrix-game solver."""

from fractions import Fraction as F

import pytest

from asymmetric_blotto.solver.simplex import (
    SimplexError,
    SimplexTableau,
    check_certificate,
    solve_matrix_game,
)

HALF = F(1, 2)


class TestTableau:
    def test_small_program(self):
        tableau = SimplexTableau(
            [[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]],
            [F(1), F(2), F(5, 2)],
            [F(1), F(1)],
        )
        tableau.solve()
        assert tableau.objective == F(5, 2)
        assert sum(tableau.primal_solution()) == F(5, 2)

    def test_unbounded(self):
        tableau = SimplexTableau([[F(1), F(-1)]], [F(1)], [F(0), F(1)])
        with pytest.raises(SimplexError, match="unbounded"):
            tableau.solve()

    def test_needs_nonnegative_rhs(self):
        with pytest.raises(SimplexError):
            SimplexTableau([[F(1)]], [F(-1)], [F(1)])


class TestMatrixGame:
    def test_matching_pennies(self):
        solution = solve_matrix_game([[F(0), F(1)], [F(1), F(0)]])
        assert solution.value == HALF
        assert solution.row_mixture == (HALF, HALF)
        assert solution.col_mixture == (HALF, HALF)

    def test_rock_paper_scissors(self):
        matrix = [[HALF, F(0), F(1)], [F(1), HALF, F(0)], [F(0), F(1), HALF]]
        solution = solve_matrix_game(matrix)
        assert solution.value == HALF
        assert solution.row_mixture == (F(1, 3),) * 3
        assert solution.col_mixture == (F(1, 3),) * 3

    def test_saddle_point(self):
        solution = solve_matrix_game([[F(1), F(2)], [F(0), F(3)]])
        assert solution.value == 1
        assert solution.row_mixture == (F(1), F(0))
        assert solution.col_mixture == (F(1), F(0))

    def test_constant_matrix(self):
        solution = solve_matrix_game([[HALF, HALF], [HALF, HALF]])
        assert solution.value == HALF
        assert sum(solution.row_mixture) == 1

    def test_negative_entries(self):
        solution = solve_matrix_game([[F(-1), F(1)], [F(1), F(-1)]])
        assert solution.value == 0

    def test_empty(self):
        with pytest.raises(SimplexError):
            solve_matrix_game([])


def test_certificate_rejects_a_wrong_value():
    matrix = [[F(0), F(1)], [F(1), F(0)]]
    assert check_certificate(matrix, (HALF, HALF), (HALF, HALF), HALF)
    assert not check_certificate(matrix, (HALF, HALF), (HALF, HALF), F(3, 5))
    assert not check_certificate(matrix, (F(1), F(0)), (HALF, HALF), HALF)
