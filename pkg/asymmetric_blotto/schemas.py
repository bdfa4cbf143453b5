"""Pydantic models for the strategy JSON wire format."""

from fractions import Fraction
from pathlib import Path
from typing import Any

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_serializer,
    field_validator,
    model_validator,
)

from asymmetric_blotto.game.core import Allocation, BlottoInputError, FiniteMixedStrategy
from asymmetric_blotto.game.rational import format_rational, parse_rational


def _parse_exact(v: Any) -> Fraction:
    """Accept "p/q" strings and integers; refuse floats."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool) or isinstance(v, float):
        raise ValueError(f"Rationals must be written as 'p/q' strings, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise ValueError(f"Cannot parse rational from {v!r}")


class AtomDocument(BaseModel):
    """One allocation atom and its probability."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alloc: list[Fraction]
    prob: Fraction

    @field_validator("alloc", mode="before")
    @classmethod
    def parse_levels(cls, v: Any) -> list[Fraction]:
        """Parse each level from "p/q"; floats are rejected."""
        if not isinstance(v, (list, tuple)):
            raise ValueError("alloc must be a list of 'p/q' strings")
        return [_parse_exact(x) for x in v]

    @field_validator("prob", mode="before")
    @classmethod
    def parse_prob(cls, v: Any) -> Fraction:
        """Parse the probability from "p/q"."""
        return _parse_exact(v)

    @field_serializer("alloc")
    def dump_levels(self, v: list[Fraction]) -> list[str]:
        """Write levels as canonical "p/q" strings."""
        return [format_rational(x) for x in v]

    @field_serializer("prob")
    def dump_prob(self, v: Fraction) -> str:
        """Write the probability as "p/q"."""
        return format_rational(v)


class StrategyDocument(BaseModel):
    """Strategy JSON: {"budget": "p/q", "n": N, "atoms": [{"alloc": [...], "prob": "p/q"}]}."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    budget: Fraction
    n: int = Field(..., ge=1)
    atoms: list[AtomDocument] = Field(..., min_length=1)

    @field_validator("budget", mode="before")
    @classmethod
    def parse_budget(cls, v: Any) -> Fraction:
        """Parse the budget from "p/q"."""
        return _parse_exact(v)

    @field_serializer("budget")
    def dump_budget(self, v: Fraction) -> str:
        """Write the budget as "p/q"."""
        return format_rational(v)

    @model_validator(mode="after")
    def check_dimensions(self) -> "StrategyDocument":
        """Every atom must have n levels."""
        for atom in self.atoms:
            if len(atom.alloc) != self.n:
                raise ValueError(f"Atom has {len(atom.alloc)} levels, expected n = {self.n}")
        return self

    @classmethod
    def from_strategy(cls, strategy: FiniteMixedStrategy) -> "StrategyDocument":
        """Document for an in-memory strategy."""
        return cls(
            budget=strategy.budget,
            n=strategy.battlefields,
            atoms=[AtomDocument(alloc=list(a.levels), prob=p) for a, p in strategy.atoms],
        )

    def to_strategy(self) -> FiniteMixedStrategy:
        """Validate feasibility and build the strategy (duplicates are merged)."""
        return FiniteMixedStrategy.from_atoms(
            (Allocation(tuple(atom.alloc), self.budget), atom.prob) for atom in self.atoms
        )


def parse_strategy(text: str) -> FiniteMixedStrategy:
    """Parse strategy JSON text.

    Raises:
        BlottoInputError: If the document is malformed or describes an invalid strategy.
    """
    try:
        document = StrategyDocument.model_validate_json(text)
    except ValidationError as e:
        raise BlottoInputError(f"Invalid strategy document: {e}") from e
    return document.to_strategy()


def load_strategy(path: str | Path) -> FiniteMixedStrategy:
    """Read a strategy JSON file."""
    return parse_strategy(Path(path).read_text(encoding="utf-8"))


def dump_strategy(strategy: FiniteMixedStrategy) -> str:
    """Serialize a strategy to JSON with canonical "p/q" rationals."""
    return StrategyDocument.from_strategy(strategy).model_dump_json(indent=2)
