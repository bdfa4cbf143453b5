"""Game model: feasible allocations and exact payoffs under the tie-splitting rule.

Each of the n battlefields is worth 1/n. The larger allocation takes the
battlefield and equal allocations split it, so a battlefield scores
s(x - y) in {0, 1/2, 1} for the player allocating x. Allocations are
nondecreasing force vectors that spend the owner's budget exactly.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from asymmetric_blotto.game.rational import RationalLike, to_fraction


class BlottoInputError(ValueError):
    """Invalid game, allocation, strategy or query input."""


def _as_fraction(value: RationalLike, what: str) -> Fraction:
    try:
        return to_fraction(value)
    except (TypeError, ValueError) as e:
        raise BlottoInputError(f"{what}: {e}") from e


@dataclass(frozen=True, slots=True)
class GameSpec:
    """ACB(X_A, X_B, n): budgets of players A and B and the battlefield count."""

    budget_a: Fraction
    budget_b: Fraction
    battlefields: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "budget_a", _as_fraction(self.budget_a, "budget_a"))
        object.__setattr__(self, "budget_b", _as_fraction(self.budget_b, "budget_b"))
        if self.budget_a < 0 or self.budget_b < 0:
            raise BlottoInputError("Budgets must be non-negative")
        if not isinstance(self.battlefields, int) or self.battlefields < 1:
            raise BlottoInputError(f"Need at least one battlefield, got {self.battlefields!r}")

    def swapped(self) -> GameSpec:
        """The same game seen from player B's side."""
        return GameSpec(self.budget_b, self.budget_a, self.battlefields)


def feasible(levels: Sequence[RationalLike], budget: RationalLike, n: int) -> bool:
    """Check that levels is a nonnegative, nondecreasing vector summing exactly to budget.

    Raises:
        BlottoInputError: If len(levels) != n.
    """
    if len(levels) != n:
        raise BlottoInputError(f"Allocation has {len(levels)} levels, expected {n}")
    values = [_as_fraction(v, "level") for v in levels]
    if values and values[0] < 0:
        return False
    if any(low > high for low, high in zip(values, values[1:])):
        return False
    return sum(values, Fraction(0)) == _as_fraction(budget, "budget")


@dataclass(frozen=True, slots=True)
class Allocation:
    """A feasible force vector x^1 <= ... <= x^n spending owner_budget exactly."""

    levels: tuple[Fraction, ...]
    owner_budget: Fraction

    def __post_init__(self) -> None:
        levels = tuple(_as_fraction(v, "level") for v in self.levels)
        budget = _as_fraction(self.owner_budget, "owner_budget")
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "owner_budget", budget)
        if not levels:
            raise BlottoInputError("Allocation needs at least one battlefield")
        if not feasible(levels, budget, len(levels)):
            raise BlottoInputError(
                "Infeasible allocation "
                f"({', '.join(str(v) for v in levels)}) for budget {budget}: "
                "levels must be nonnegative, nondecreasing and sum to the budget"
            )

    @classmethod
    def of(cls, *levels: RationalLike, budget: Optional[RationalLike] = None) -> Allocation:
        """Build an allocation; the budget defaults to the sum of the levels."""
        values = tuple(_as_fraction(v, "level") for v in levels)
        owner_budget = sum(values, Fraction(0)) if budget is None else budget
        return cls(values, owner_budget)

    @property
    def battlefields(self) -> int:
        """Number of battlefields."""
        return len(self.levels)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.levels) + ")"


def half_points(x: Sequence[Fraction], y: Sequence[Fraction]) -> int:
    """Twice the number of battlefields won by x against y (ties count once)."""
    return sum(1 + (a > b) - (a < b) for a, b in zip(x, y))


def _check_side(allocation: Allocation, budget: Fraction, n: int, side: str) -> None:
    if allocation.battlefields != n:
        raise BlottoInputError(
            f"Player {side} allocation has {allocation.battlefields} battlefields, expected {n}"
        )
    if allocation.owner_budget != budget:
        raise BlottoInputError(
            f"Player {side} allocation spends {allocation.owner_budget}, budget is {budget}"
        )


def payoff_pure(a: Allocation, b: Allocation, spec: GameSpec) -> Fraction:
    """Payoff to A: (1/n) * sum_j s(a_j - b_j), exact.

    Raises:
        BlottoInputError: If either allocation does not belong to its player in spec.
    """
    _check_side(a, spec.budget_a, spec.battlefields, "A")
    _check_side(b, spec.budget_b, spec.battlefields, "B")
    return Fraction(half_points(a.levels, b.levels), 2 * spec.battlefields)


@dataclass(frozen=True, slots=True)
class FiniteMixedStrategy:
    """Finitely many allocation atoms with rational probabilities.

    Use from_atoms() to build one from arbitrary (allocation, probability) pairs;
    it merges duplicate level vectors, which the constructor rejects.
    """

    atoms: tuple[tuple[Allocation, Fraction], ...]

    def __post_init__(self) -> None:
        atoms = tuple((alloc, _as_fraction(p, "probability")) for alloc, p in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise BlottoInputError("A mixed strategy needs at least one atom")

        first = atoms[0][0]
        seen: set[tuple[Fraction, ...]] = set()
        for alloc, prob in atoms:
            if not isinstance(alloc, Allocation):
                raise BlottoInputError(f"Atom {alloc!r} is not an Allocation")
            if prob <= 0:
                raise BlottoInputError(f"Atom probability must be positive, got {prob}")
            if alloc.owner_budget != first.owner_budget or alloc.battlefields != first.battlefields:
                raise BlottoInputError("All atoms must share one budget and battlefield count")
            if alloc.levels in seen:
                raise BlottoInputError(f"Duplicate atom {alloc}; use from_atoms() to merge")
            seen.add(alloc.levels)

        total = sum((p for _, p in atoms), Fraction(0))
        if total != 1:
            raise BlottoInputError(f"Atom probabilities sum to {total}, expected 1")

    @classmethod
    def from_atoms(
        cls, atoms: Iterable[tuple[Allocation, RationalLike]]
    ) -> FiniteMixedStrategy:
        """Build a strategy, summing the probabilities of identical level vectors.

        Atoms keep the order in which each level vector first appears.
        """
        merged: dict[tuple[Fraction, ...], tuple[Allocation, Fraction]] = {}
        for alloc, prob in atoms:
            p = _as_fraction(prob, "probability")
            if alloc.levels in merged:
                kept, q = merged[alloc.levels]
                merged[alloc.levels] = (kept, q + p)
            else:
                merged[alloc.levels] = (alloc, p)
        return cls(tuple(merged.values()))

    @classmethod
    def pure(cls, allocation: Allocation) -> FiniteMixedStrategy:
        """The strategy playing allocation with probability 1."""
        return cls(((allocation, Fraction(1)),))

    @classmethod
    def uniform(cls, allocations: Iterable[Allocation]) -> FiniteMixedStrategy:
        """Equal weight on each allocation (duplicates accumulate weight)."""
        support = list(allocations)
        if not support:
            raise BlottoInputError("A mixed strategy needs at least one atom")
        weight = Fraction(1, len(support))
        return cls.from_atoms((alloc, weight) for alloc in support)

    @property
    def budget(self) -> Fraction:
        """Budget shared by every atom."""
        return self.atoms[0][0].owner_budget

    @property
    def battlefields(self) -> int:
        """Number of battlefields of every atom."""
        return self.atoms[0][0].battlefields

    @property
    def support(self) -> list[Allocation]:
        """Atoms' allocations in stored order."""
        return [alloc for alloc, _ in self.atoms]

    def __len__(self) -> int:
        return len(self.atoms)


def _check_strategy(strategy: FiniteMixedStrategy, budget: Fraction, n: int, side: str) -> None:
    if strategy.battlefields != n:
        raise BlottoInputError(
            f"Player {side} strategy has {strategy.battlefields} battlefields, expected {n}"
        )
    if strategy.budget != budget:
        raise BlottoInputError(
            f"Player {side} strategy spends {strategy.budget}, budget is {budget}"
        )


def payoff_vs_mixed(allocation: Allocation, opponent: FiniteMixedStrategy) -> Fraction:
    """Expected payoff of a pure allocation against a finite mixed strategy.

    The payoff belongs to whoever holds allocation; budgets are not role-checked.
    """
    if allocation.battlefields != opponent.battlefields:
        raise BlottoInputError("Allocation and opponent differ in battlefield count")
    total = sum(
        (prob * half_points(allocation.levels, atom.levels) for atom, prob in opponent.atoms),
        Fraction(0),
    )
    return total / (2 * allocation.battlefields)


def payoff_mixed(
    pa: FiniteMixedStrategy, pb: FiniteMixedStrategy, spec: GameSpec
) -> Fraction:
    """Expected payoff to A: sum over atom pairs of p_a * p_b * payoff_pure.

    Raises:
        BlottoInputError: On a battlefield count or budget mismatch with spec.
    """
    _check_strategy(pa, spec.budget_a, spec.battlefields, "A")
    _check_strategy(pb, spec.budget_b, spec.battlefields, "B")
    total = Fraction(0)
    for a, p in pa.atoms:
        for b, q in pb.atoms:
            total += p * q * half_points(a.levels, b.levels)
    return total / (2 * spec.battlefields)


def payoff_mixed_for_b(
    pa: FiniteMixedStrategy, pb: FiniteMixedStrategy, spec: GameSpec
) -> Fraction:
    """Expected payoff to B, computed from B's side of the board."""
    return payoff_mixed(pb, pa, spec.swapped())
