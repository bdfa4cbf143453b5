"""Tests for fictitious play."""

import numpy as np
import pytest

from asymmetric_blotto.game import GameSpec
from asymmetric_blotto.solver.fictitious_play import ConvergenceError, fictitious_play
from asymmetric_blotto.solver.grid import build_matrix

PENNIES = np.array([[0, 1], [1, 0]], dtype=np.int64)


def test_matching_pennies_converges():
    result = fictitious_play(PENNIES, tolerance=1e-2)
    assert result.value == pytest.approx(0.5, abs=1e-2)
    assert result.lower <= 0.5 <= result.upper
    assert result.row_mixture.sum() == pytest.approx(1.0)
    assert result.col_mixture.sum() == pytest.approx(1.0)


def test_constant_game_converges_immediately():
    result = fictitious_play(np.ones((2, 3), dtype=np.int64))
    assert result.iterations == 1
    assert result.value == 1.0


def test_scale_divides_payoffs():
    result = fictitious_play(np.full((2, 2), 3, dtype=np.int64), scale=6)
    assert result.value == 0.5


def test_iteration_cap_raises_with_the_bracket():
    with pytest.raises(ConvergenceError) as excinfo:
        fictitious_play(PENNIES, tolerance=1e-4, max_iterations=1)
    error = excinfo.value
    assert error.iterations == 1
    assert error.lower == 0.0
    assert error.upper == 1.0


def test_deterministic():
    first = fictitious_play(PENNIES, tolerance=1e-2)
    second = fictitious_play(PENNIES, tolerance=1e-2)
    assert first.iterations == second.iterations
    assert first.value == second.value


def test_rejects_empty_matrix():
    with pytest.raises(ValueError):
        fictitious_play(np.zeros((0, 2), dtype=np.int64))


def test_blotto_grid_game():
    game = build_matrix(GameSpec(1, 1, 2), 4)
    result = fictitious_play(game.half_points, tolerance=1e-3, scale=game.scale)
    assert result.value == pytest.approx(0.5, abs=1e-3)
