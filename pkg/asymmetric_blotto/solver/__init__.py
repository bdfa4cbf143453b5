"""Grid discretization and matrix-game solvers."""

from asymmetric_blotto.solver.fictitious_play import ConvergenceError
from asymmetric_blotto.solver.grid import (
    DiscreteMatrixGame,
    build_matrix,
    enumerate_grid_strategies,
)
from asymmetric_blotto.solver.simplex import SimplexError
from asymmetric_blotto.solver.zero_sum import (
    SolveMethod,
    SolveReport,
    discrete_value,
    solve_zero_sum,
)

__all__ = [
    "ConvergenceError",
    "DiscreteMatrixGame",
    "SimplexError",
    "SolveMethod",
    "SolveReport",
    "build_matrix",
    "discrete_value",
    "enumerate_grid_strategies",
    "solve_zero_sum",
]
