"""Exact best response against a finite-support opponent.

Against a finite mixed strategy the payoff of x depends only on how each x_j
compares with the opponent's levels on battlefield j. Sorting {0} and those
levels into c_0 = 0 < c_1 < ... < c_k splits [0, budget] into cells
{c_0}, (c_0, c_1), {c_1}, ..., {c_k}, (c_k, budget]. Payoff is constant on every
product of cells, so the supremum is a maximum over the products that contain a
nondecreasing vector spending the budget exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from asymmetric_blotto.game.core import (
    Allocation,
    BlottoInputError,
    FiniteMixedStrategy,
    GameSpec,
    payoff_mixed,
    payoff_vs_mixed,
)
from asymmetric_blotto.game.rational import RationalLike, format_rational, to_fraction
from asymmetric_blotto.utils.logging import get_logger

logger = get_logger(__name__)


class Relation(str, Enum):
    """Where a coordinate sits relative to a critical level c."""

    TIE = "tie"  # x_j == c
    BEAT = "beat"  # c < x_j < next level


@dataclass(frozen=True, slots=True)
class ProfileEntry:
    """One battlefield's cell.

    ceiling is the next level above a BEAT cell, None when the budget caps it.
    """

    level: Fraction
    relation: Relation
    ceiling: Optional[Fraction] = None

    def to_dict(self) -> dict[str, Any]:
        """Level, relation and ceiling as "p/q" strings."""
        return {
            "level": format_rational(self.level),
            "relation": self.relation.value,
            "ceiling": None if self.ceiling is None else format_rational(self.ceiling),
        }


@dataclass(frozen=True, slots=True)
class BestResponseResult:
    """Supremum payoff against an opponent, a witness allocation and the cell profile it lies in."""

    sup_payoff: Fraction
    witness: Allocation
    attained: bool
    profile: tuple[ProfileEntry, ...]

    def to_dict(self) -> dict[str, Any]:
        """Serializable result with "p/q" rationals."""
        return {
            "sup_payoff": format_rational(self.sup_payoff),
            "witness": [format_rational(v) for v in self.witness.levels],
            "budget": format_rational(self.witness.owner_budget),
            "attained": self.attained,
            "profile": [entry.to_dict() for entry in self.profile],
        }


@dataclass(frozen=True, slots=True)
class _Cell:
    entry: ProfileEntry
    lo: Fraction
    lo_open: bool
    hi: Fraction
    hi_open: bool
    weight: Fraction  # probability-weighted half points won on this battlefield


@dataclass(frozen=True, slots=True)
class _Bounds:
    """Tightest nondecreasing bounds per coordinate, with openness flags."""

    lower: list[tuple[Fraction, bool]]
    upper: list[tuple[Fraction, bool]]

    @property
    def min_sum(self) -> Fraction:
        """Smallest total the bounds allow."""
        return sum((v for v, _ in self.lower), Fraction(0))

    @property
    def max_sum(self) -> Fraction:
        """Largest total the bounds allow."""
        return sum((v for v, _ in self.upper), Fraction(0))

    @property
    def min_open(self) -> bool:
        """Whether min_sum itself is excluded."""
        return any(is_open for _, is_open in self.lower)

    @property
    def max_open(self) -> bool:
        """Whether max_sum itself is excluded."""
        return any(is_open for _, is_open in self.upper)


def critical_levels(q: FiniteMixedStrategy) -> list[list[Fraction]]:
    """Per battlefield, the sorted distinct values of {0} and the atoms' levels there."""
    return [
        sorted({Fraction(0)} | {alloc.levels[j] for alloc in q.support})
        for j in range(q.battlefields)
    ]


def _cells(
    levels: list[Fraction], column: list[tuple[Fraction, Fraction]], budget: Fraction
) -> list[_Cell]:
    cells: list[_Cell] = []
    for i, c in enumerate(levels):
        if c > budget:
            break
        tie = sum((p * (2 if c > a else 1 if c == a else 0) for a, p in column), Fraction(0))
        cells.append(_Cell(ProfileEntry(c, Relation.TIE), c, False, c, False, tie))

        ceiling = levels[i + 1] if i + 1 < len(levels) else None
        if ceiling is not None and ceiling <= budget:
            hi, hi_open = ceiling, True
        else:
            ceiling, hi, hi_open = None, budget, False
        if c < hi:
            beat = sum((2 * p for a, p in column if a <= c), Fraction(0))
            cells.append(
                _Cell(ProfileEntry(c, Relation.BEAT, ceiling), c, True, hi, hi_open, beat)
            )
    return cells


def _propagate(cells: list[_Cell]) -> Optional[_Bounds]:
    """Bounds of the nondecreasing vectors in the product of cells; None if it has none."""
    lower: list[tuple[Fraction, bool]] = []
    value, is_open = cells[0].lo, cells[0].lo_open
    for cell in cells:
        if cell.lo > value:
            value, is_open = cell.lo, cell.lo_open
        elif cell.lo == value:
            is_open = is_open or cell.lo_open
        lower.append((value, is_open))

    upper: list[tuple[Fraction, bool]] = []
    value, is_open = cells[-1].hi, cells[-1].hi_open
    for cell in reversed(cells):
        if cell.hi < value:
            value, is_open = cell.hi, cell.hi_open
        elif cell.hi == value:
            is_open = is_open or cell.hi_open
        upper.append((value, is_open))
    upper.reverse()

    for (lo, lo_open), (hi, hi_open) in zip(lower, upper):
        if lo > hi or (lo == hi and (lo_open or hi_open)):
            return None
    return _Bounds(lower, upper)


def _prefix_viable(prefix: list[_Cell], n: int, budget: Fraction) -> bool:
    bounds = _propagate(prefix)
    if bounds is None:
        return False
    floor = bounds.lower[-1][0]
    least = bounds.min_sum + (n - len(prefix)) * floor
    if least > budget or (least == budget and bounds.min_open):
        return False
    if len(prefix) == n:
        most = bounds.max_sum
        if most < budget or (most == budget and bounds.max_open):
            return False
    return True


def _witness(cells: list[_Cell], budget: Fraction) -> tuple[Fraction, ...]:
    """A rational point of the cell product that is nondecreasing and sums to budget.

    Starts from the midpoint of each tightened interval, then moves towards the
    lower (or upper) bound vector until the sum matches.
    """
    bounds = _propagate(cells)
    assert bounds is not None
    low = [v for v, _ in bounds.lower]
    high = [v for v, _ in bounds.upper]
    if bounds.min_sum == budget:
        return tuple(low)
    if bounds.max_sum == budget:
        return tuple(high)

    mid = [(a + b) / 2 for a, b in zip(low, high)]
    total = sum(mid, Fraction(0))
    if total == budget:
        return tuple(mid)
    target, target_sum = (low, bounds.min_sum) if total > budget else (high, bounds.max_sum)
    theta = (total - budget) / (total - target_sum)
    return tuple(m + theta * (e - m) for m, e in zip(mid, target))


def best_response(
    q: FiniteMixedStrategy, budget: RationalLike, spec: GameSpec
) -> BestResponseResult:
    """Exact supremum over feasible x of the expected payoff of x against q.

    Cells are searched battlefield by battlefield in increasing order, pruning
    prefixes that cannot be completed into a nondecreasing vector of the right
    sum. The first maximising profile is kept, so the result is the
    lexicographically smallest one.

    Raises:
        BlottoInputError: If q or budget does not match the players of spec.
    """
    budget = to_fraction(budget)
    n = spec.battlefields
    if q.battlefields != n:
        raise BlottoInputError(f"Opponent has {q.battlefields} battlefields, expected {n}")
    if budget < 0:
        raise BlottoInputError(f"Budget must be non-negative, got {budget}")
    if {budget, q.budget} != {spec.budget_a, spec.budget_b}:
        raise BlottoInputError(
            f"Budgets {budget} (responder) and {q.budget} (opponent) are not the players of "
            f"ACB({spec.budget_a}, {spec.budget_b}, {n})"
        )

    levels = critical_levels(q)
    columns = [[(alloc.levels[j], p) for alloc, p in q.atoms] for j in range(n)]
    per_field = [_cells(levels[j], columns[j], budget) for j in range(n)]

    best_weight: Optional[Fraction] = None
    best_cells: list[_Cell] = []
    explored = 0
    prefix: list[_Cell] = []

    def search(weight: Fraction) -> None:
        """Depth-first over cell prefixes, pruning those whose bounds cannot reach the budget."""
        nonlocal best_weight, best_cells, explored
        depth = len(prefix)
        if depth == n:
            explored += 1
            if best_weight is None or weight > best_weight:
                best_weight, best_cells = weight, list(prefix)
            return
        for cell in per_field[depth]:
            prefix.append(cell)
            if _prefix_viable(prefix, n, budget):
                search(weight + cell.weight)
            prefix.pop()

    search(Fraction(0))
    if best_weight is None:
        raise BlottoInputError(f"No feasible allocation of budget {budget} on {n} battlefields")

    sup = best_weight / (2 * n)
    witness = Allocation(_witness(best_cells, budget), budget)
    attained = payoff_vs_mixed(witness, q) == sup
    logger.debug(
        "Best response computed",
        extra={
            "ctx_battlefields": n,
            "ctx_atoms": len(q),
            "ctx_profiles": explored,
            "ctx_sup": str(sup),
        },
    )
    return BestResponseResult(sup, witness, attained, tuple(c.entry for c in best_cells))


def exploitability(
    pa: FiniteMixedStrategy, pb: FiniteMixedStrategy, spec: GameSpec
) -> tuple[Fraction, Fraction]:
    """Gains of A's and B's best responses over their payoffs in (pa, pb).

    (0, 0) certifies a Nash equilibrium: no mixed deviation beats the best pure one.
    """
    value = payoff_mixed(pa, pb, spec)
    gain_a = best_response(pb, spec.budget_a, spec).sup_payoff - value
    gain_b = best_response(pa, spec.budget_b, spec).sup_payoff - (1 - value)
    return gain_a, gain_b
