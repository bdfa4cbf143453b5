"""Game model and exact rational helpers."""

from asymmetric_blotto.game.core import (
    Allocation,
    BlottoInputError,
    FiniteMixedStrategy,
    GameSpec,
    feasible,
    payoff_mixed,
    payoff_mixed_for_b,
    payoff_pure,
    payoff_vs_mixed,
)
from asymmetric_blotto.game.rational import format_rational, parse_rational

__all__ = [
    "Allocation",
    "BlottoInputError",
    "FiniteMixedStrategy",
    "GameSpec",
    "feasible",
    "format_rational",
    "parse_rational",
    "payoff_mixed",
    "payoff_mixed_for_b",
    "payoff_pure",
    "payoff_vs_mixed",
]
