"""Closed-form values W_2(t), the known pieces of W_3(t), and the equilibrium families behind them.

Conventions: player A has budget 1, player B has budget t with 0 <= t <= 1,
and values are payoffs to A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from asymmetric_blotto.equilibria.analytic import TriangleFamilySpec, triangle_value
from asymmetric_blotto.game.core import (
    Allocation,
    BlottoInputError,
    FiniteMixedStrategy,
    GameSpec,
)
from asymmetric_blotto.game.rational import RationalLike, format_rational, to_fraction

ONE = Fraction(1)
HALF = Fraction(1, 2)

# W_3 ranges with a proven value
W3_OVERWHELM_END = Fraction(6, 11)
W3_THREE_ATOM_END = Fraction(18, 31)
W3_TWO_ATOM_START = Fraction(3, 5)
W3_TWO_ATOM_END = Fraction(30, 47)


def _parse_t(t: RationalLike) -> Fraction:
    try:
        value = to_fraction(t)
    except (TypeError, ValueError) as e:
        raise BlottoInputError(f"t: {e}") from e
    if not 0 <= value <= 1:
        raise BlottoInputError(f"t must lie in [0, 1], got {value}")
    return value


class ValueKind(str, Enum):
    KNOWN = "Known"
    UPPER_BOUND = "UpperBound"
    LOWER_BOUND = "LowerBound"
    UNKNOWN = "Unknown"


@dataclass(frozen=True, slots=True)
class ValueAnswer:
    """What is proven about W_n(t): an exact value, a one-sided bound, or nothing."""

    kind: ValueKind
    value: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if (self.kind is ValueKind.UNKNOWN) != (self.value is None):
            raise BlottoInputError("Unknown answers carry no value; all others need one")

    @classmethod
    def known(cls, value: Fraction) -> ValueAnswer:
        """An exact value."""
        return cls(ValueKind.KNOWN, value)

    @classmethod
    def unknown(cls) -> ValueAnswer:
        """No proven value."""
        return cls(ValueKind.UNKNOWN)

    def to_dict(self) -> dict[str, Any]:
        """Kind and "p/q" value, or null."""
        return {
            "kind": self.kind.value,
            "value": None if self.value is None else format_rational(self.value),
        }

    def __str__(self) -> str:
        if self.value is None:
            return self.kind.value
        return f"{self.kind.value}({self.value})"


def _strategy_to_dict(strategy: FiniteMixedStrategy) -> dict[str, Any]:
    return {
        "budget": format_rational(strategy.budget),
        "n": strategy.battlefields,
        "atoms": [
            {"alloc": [format_rational(v) for v in a.levels], "prob": format_rational(p)}
            for a, p in strategy.atoms
        ],
    }


@dataclass(frozen=True, slots=True)
class EquilibriumConstruction:
    """An explicit equilibrium pair of ACB(1, t, n) and the value it certifies.

    k is the n = 2 family index and epsilon the perturbation, when the family
    has them.
    """

    t: Fraction
    pa: FiniteMixedStrategy
    pb: FiniteMixedStrategy
    value: Fraction
    k: Optional[int] = None
    epsilon: Optional[Fraction] = None

    @property
    def spec(self) -> GameSpec:
        """The game ACB(1, t, n)."""
        return GameSpec(ONE, self.t, self.pa.battlefields)

    def to_dict(self) -> dict[str, Any]:
        """Both strategies as strategy JSON plus the family parameters."""
        return {
            "t": format_rational(self.t),
            "n": self.pa.battlefields,
            "k": self.k,
            "epsilon": None if self.epsilon is None else format_rational(self.epsilon),
            "value": format_rational(self.value),
            "pa": _strategy_to_dict(self.pa),
            "pb": _strategy_to_dict(self.pb),
        }


@dataclass(frozen=True, slots=True)
class TriangleEquilibrium:
    """ACB(1, 1, 3): both players use the continuous triangle-boundary strategy."""

    family: TriangleFamilySpec
    value: Fraction

    def to_dict(self) -> dict[str, Any]:
        """Summary of the continuous equilibrium."""
        return {
            "t": "1",
            "n": 3,
            "value": format_rational(self.value),
            "strategy": "triangle-boundary",
            "depth": self.family.depth,
        }


def _atoms(budget: Fraction, *levels: tuple[Fraction, ...]) -> FiniteMixedStrategy:
    return FiniteMixedStrategy.uniform(Allocation(tuple(lv), budget) for lv in levels)


# ---------------------------------------------------------------------------
# Two battlefields
# ---------------------------------------------------------------------------


def w2_index(t: RationalLike) -> int:
    """k = floor(t / (2 - 2t)), the family index for 2/3 <= t < 1."""
    value = _parse_t(t)
    if value == 1:
        raise BlottoInputError("k is undefined at t = 1")
    return math.floor(value / (2 - 2 * value))


def w2_value(t: RationalLike) -> Fraction:
    """W_2(t): 1 for t < 2/3, (k + 2) / (2k + 2) up to t = 1, and 1/2 at t = 1."""
    value = _parse_t(t)
    if value == 1:
        return HALF
    k = w2_index(value)
    return Fraction(k + 2, 2 * k + 2)


def w2_breakpoints(k_max: int) -> list[tuple[Fraction, Fraction]]:
    """Left endpoints 2k/(2k+1) of the W_2 steps with the value on each step, k = 0..k_max."""
    if k_max < 0:
        raise BlottoInputError(f"k_max must be >= 0, got {k_max}")
    return [(Fraction(2 * k, 2 * k + 1), Fraction(k + 2, 2 * k + 2)) for k in range(k_max + 1)]


def w2_epsilon_interval(t: RationalLike) -> tuple[Fraction, Fraction]:
    """Open interval of admissible epsilon for the k-indexed family, 2/3 <= t < 1."""
    value = _parse_t(t)
    if not Fraction(2, 3) <= value < 1:
        raise BlottoInputError(f"The epsilon family needs 2/3 <= t < 1, got {value}")
    k = w2_index(value)
    lower = (2 * k + 1) * value / 2 - k
    upper = min(1 - value, value * k - k + HALF)
    return lower, upper


def w2_equilibrium(
    t: RationalLike, epsilon: Optional[RationalLike] = None
) -> EquilibriumConstruction:
    """Equilibrium pair of ACB(1, t, 2).

    For 2/3 <= t < 1, A mixes uniformly over (eps + j(1-t), 1 - eps - j(1-t)) and
    B over (j(1-t), t - j(1-t)) for j = 0..k. epsilon defaults to the midpoint of
    w2_epsilon_interval(t) and must lie strictly inside it when given.
    """
    value = _parse_t(t)
    if value == 1:
        even = _atoms(ONE, (HALF, HALF))
        return EquilibriumConstruction(value, even, even, HALF)
    if value < Fraction(2, 3):
        return EquilibriumConstruction(
            value,
            _atoms(ONE, (Fraction(1, 3), Fraction(2, 3))),
            _atoms(value, (value / 2, value / 2)),
            ONE,
            k=0,
        )

    k = w2_index(value)
    lower, upper = w2_epsilon_interval(value)
    if epsilon is None:
        eps = (lower + upper) / 2
    else:
        eps = to_fraction(epsilon)
        if not lower < eps < upper:
            raise BlottoInputError(f"epsilon must lie in ({lower}, {upper}), got {eps}")

    step = 1 - value
    pa = _atoms(ONE, *((eps + j * step, 1 - eps - j * step) for j in range(k + 1)))
    pb = _atoms(value, *((j * step, value - j * step) for j in range(k + 1)))
    return EquilibriumConstruction(value, pa, pb, w2_value(value), k=k, epsilon=eps)


def two_battlefield_payoff(
    a: RationalLike, b: RationalLike, budget_a: RationalLike, budget_b: RationalLike
) -> Fraction:
    """Payoff to A when A plays (a, X_A - a) and B plays (b, X_B - b), with X_A > X_B.

    Depends only on d = a - b: 1 for 0 < d < X_A - X_B, 3/4 at either end,
    1/2 outside.
    """
    a, b = to_fraction(a), to_fraction(b)
    x_a, x_b = to_fraction(budget_a), to_fraction(budget_b)
    if x_a <= x_b:
        raise BlottoInputError("The two-battlefield table needs X_A > X_B")
    if not (0 <= a <= x_a - a and 0 <= b <= x_b - b):
        raise BlottoInputError("a and b must be first coordinates of feasible allocations")
    d = a - b
    gap = x_a - x_b
    if d == 0 or d == gap:
        return Fraction(3, 4)
    if 0 < d < gap:
        return ONE
    return HALF


# ---------------------------------------------------------------------------
# Three battlefields
# ---------------------------------------------------------------------------


def w3_value(t: RationalLike) -> ValueAnswer:
    """What is proven about W_3(t).

    Range endpoints follow the theorem statements: 6/11 belongs to the 8/9 range,
    3/5 does not belong to the 5/6 range, and 18/31 and 30/47 are Unknown.
    """
    value = _parse_t(t)
    if value < W3_OVERWHELM_END:
        return ValueAnswer.known(ONE)
    if value < W3_THREE_ATOM_END:
        return ValueAnswer.known(Fraction(8, 9))
    if W3_TWO_ATOM_START < value < W3_TWO_ATOM_END:
        return ValueAnswer.known(Fraction(5, 6))
    if value == Fraction(2, 3):
        return ValueAnswer(ValueKind.UPPER_BOUND, Fraction(4, 5))
    if value == Fraction(5, 6):
        return ValueAnswer(ValueKind.LOWER_BOUND, Fraction(2, 3))
    if value == 1:
        return ValueAnswer.known(triangle_value())
    return ValueAnswer.unknown()


def w3_epsilon_bound(t: RationalLike) -> Fraction:
    """Exclusive upper bound (1 - 31t/18) / 2 on epsilon for the three-atom family."""
    value = _parse_t(t)
    return (1 - Fraction(31, 18) * value) / 2


def w3_equilibrium(
    t: RationalLike, epsilon: Optional[RationalLike] = None
) -> Optional[EquilibriumConstruction | TriangleEquilibrium]:
    """Equilibrium of ACB(1, t, 3) where one is known, else None.

    epsilon only applies to 6/11 <= t < 18/31 and defaults to (1 - 31t/18) / 4.
    """
    value = _parse_t(t)
    third, half = value / 3, value / 2

    if value < W3_OVERWHELM_END:
        return EquilibriumConstruction(
            value,
            _atoms(ONE, (Fraction(2, 11), Fraction(3, 11), Fraction(6, 11))),
            _atoms(value, (third, third, third)),
            ONE,
        )

    if value < W3_THREE_ATOM_END:
        bound = w3_epsilon_bound(value)
        if epsilon is None:
            eps = bound / 2
        else:
            eps = to_fraction(epsilon)
            if not 0 < eps < bound:
                raise BlottoInputError(f"epsilon must lie in (0, {bound}), got {eps}")
        pa = _atoms(
            ONE,
            (third + eps, half + eps, 1 - Fraction(5, 6) * value - 2 * eps),
            (third + eps, 1 - Fraction(4, 3) * value - 2 * eps, value + eps),
            (1 - Fraction(3, 2) * value - 2 * eps, half + eps, value + eps),
        )
        pb = _atoms(
            value,
            (Fraction(0), Fraction(0), value),
            (Fraction(0), half, half),
            (third, third, third),
        )
        return EquilibriumConstruction(value, pa, pb, Fraction(8, 9), epsilon=eps)

    if W3_TWO_ATOM_START < value < W3_TWO_ATOM_END:
        pa = _atoms(
            ONE,
            ((30 - 22 * value) / 75, (15 - 11 * value) / 25, Fraction(11, 15) * value),
            (Fraction(2, 15) * value, Fraction(13, 30) * value, 1 - Fraction(17, 30) * value),
        )
        pb = _atoms(value, (third, third, third), (Fraction(0), Fraction(0), value))
        return EquilibriumConstruction(value, pa, pb, Fraction(5, 6))

    if value == 1:
        return TriangleEquilibrium(TriangleFamilySpec(depth=0), triangle_value())
    return None


def check_w3_family(pa: FiniteMixedStrategy, t: RationalLike) -> bool:
    """Whether a two-atom strategy for A belongs to the 5/6 equilibrium family at t.

    With atoms (a, b, c) and (d, e, f): a > t/3, b > t/2, f > t, 2d + c >= t and
    d + 2e >= t. Both atom orders are tried. Budget and ordering are already
    enforced by the strategy's construction.

    Raises:
        BlottoInputError: Unless pa has two atoms of probability 1/2, budget 1, n = 3.
    """
    value = _parse_t(t)
    if len(pa) != 2 or any(p != HALF for _, p in pa.atoms):
        raise BlottoInputError("The family check needs exactly two atoms of probability 1/2")
    if pa.budget != 1 or pa.battlefields != 3:
        raise BlottoInputError("The family check needs a budget-1 strategy on 3 battlefields")

    first, second = (alloc.levels for alloc in pa.support)

    def holds(x: tuple[Fraction, ...], y: tuple[Fraction, ...]) -> bool:
        """Family inequalities with x as the first atom."""
        a, b, c = x
        d, e, f = y
        return (
            a > value / 3
            and b > value / 2
            and f > value
            and 2 * d + c >= value
            and d + 2 * e >= value
        )

    return holds(first, second) or holds(second, first)


# ---------------------------------------------------------------------------
# Computer-verified bounds
# ---------------------------------------------------------------------------

FIXED_STRATEGY_IDS = ("5.4-B", "5.5-A")


def fixed_strategies(strategy_id: str) -> FiniteMixedStrategy:
    """The fixed strategies behind the two bounds on W_3.

    "5.4-B": B's five-atom strategy at t = 2/3, which holds A to at most 4/5.
    "5.5-A": A's pure strategy at t = 5/6, which guarantees A at least 2/3.
    """
    if strategy_id == "5.4-B":
        budget = Fraction(2, 3)
        return _atoms(
            budget,
            (Fraction(0), Fraction(1, 16), Fraction(29, 48)),
            (Fraction(0), Fraction(0), Fraction(2, 3)),
            (Fraction(1, 16), Fraction(1, 16), Fraction(13, 24)),
            (Fraction(1, 8), Fraction(13, 48), Fraction(13, 48)),
            (Fraction(5, 24), Fraction(11, 48), Fraction(11, 48)),
        )
    if strategy_id == "5.5-A":
        return _atoms(ONE, (Fraction(1, 6), Fraction(1, 3), Fraction(1, 2)))
    raise BlottoInputError(
        f"Unknown fixed strategy {strategy_id!r}; expected one of {', '.join(FIXED_STRATEGY_IDS)}"
    )
