"""The ACB(1, 1, 3) equilibrium: marginal CDFs and the triangle-boundary strategy family.

Every equilibrium of ACB(1, 1, 3) has battlefield j uniform on
[lower_j, upper_j] = [0, 1/3], [1/6, 1/2], [1/3, 2/3]. The triangle family
realises these marginals: mass 1/3 spread uniformly over each side of the
triangle with vertices (1/3, 1/3, 1/3), (0, 1/2, 1/2), (1/6, 1/6, 2/3), or over
the sides of the corner triangles obtained by repeatedly shrinking towards
each vertex by a factor 1/3.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from asymmetric_blotto.game.core import Allocation, BlottoInputError
from asymmetric_blotto.utils.logging import get_logger
from asymmetric_blotto.utils.rng import RationalStream

logger = get_logger(__name__)

Point = tuple[Fraction, Fraction, Fraction]

MARGINAL_BOUNDS: dict[int, tuple[Fraction, Fraction]] = {
    1: (Fraction(0), Fraction(1, 3)),
    2: (Fraction(1, 6), Fraction(1, 2)),
    3: (Fraction(1, 3), Fraction(2, 3)),
}

BASE_VERTICES: tuple[Point, Point, Point] = (
    (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
    (Fraction(0), Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1, 6), Fraction(1, 6), Fraction(2, 3)),
)

TRIANGLE_VALUE = Fraction(1, 2)


def _check_battlefield(j: int) -> None:
    if j not in MARGINAL_BOUNDS:
        raise BlottoInputError(f"Battlefield index must be 1, 2 or 3, got {j!r}")


@dataclass(frozen=True, slots=True)
class MarginalCDF:
    """Uniform CDF on [lower, upper]: 0 below, (u - lower)/(upper - lower) inside, 1 above."""

    battlefield: int
    lower: Fraction
    upper: Fraction

    @classmethod
    def for_battlefield(cls, j: int) -> MarginalCDF:
        """CDF of battlefield j (1, 2 or 3)."""
        _check_battlefield(j)
        lower, upper = MARGINAL_BOUNDS[j]
        return cls(j, lower, upper)

    def __call__(self, u: Fraction) -> Fraction:
        if u <= self.lower:
            return Fraction(0)
        if u >= self.upper:
            return Fraction(1)
        return (u - self.lower) / (self.upper - self.lower)

    def evaluate_many(self, u: np.ndarray) -> np.ndarray:
        """Float evaluation over an array, for empirical comparisons."""
        width = float(self.upper - self.lower)
        return np.clip((u - float(self.lower)) / width, 0.0, 1.0)


def marginal_cdf(j: int, u: Fraction | int) -> Fraction:
    """Exact F^j(u) of the ACB(1, 1, 3) equilibrium.

    Raises:
        BlottoInputError: If j is not 1, 2 or 3.
    """
    return MarginalCDF.for_battlefield(j)(Fraction(u))


def triangle_value() -> Fraction:
    """Equilibrium payoff of ACB(1, 1, 3) for either player."""
    return TRIANGLE_VALUE


def _check_unit_triple(p: Allocation) -> None:
    if p.battlefields != 3 or p.owner_budget != 1:
        raise BlottoInputError(
            f"Expected a 3-battlefield allocation of budget 1, got {p} with budget {p.owner_budget}"
        )


def triangle_support_box_contains(p: Allocation) -> bool:
    """Whether every coordinate lies inside its marginal's support interval."""
    _check_unit_triple(p)
    return all(
        MARGINAL_BOUNDS[j][0] <= level <= MARGINAL_BOUNDS[j][1]
        for j, level in enumerate(p.levels, start=1)
    )


def payoff_vs_triangle(p: Allocation) -> Fraction:
    """Payoff of a pure allocation against any equilibrium with the marginals above.

    Equals (F^1(a) + F^2(b) + F^3(c)) / 3. Marginals are atomless, so ties have
    probability zero.

    Raises:
        BlottoInputError: If p is not a budget-1 allocation over 3 battlefields.
    """
    _check_unit_triple(p)
    total = sum(
        (marginal_cdf(j, level) for j, level in enumerate(p.levels, start=1)), Fraction(0)
    )
    return total / 3


@dataclass(frozen=True, slots=True)
class TriangleFamilySpec:
    """A member of the triangle-boundary family.

    Attributes:
        depth: Number of corner subdivisions before drawing a side.
        mixture: Optional (depth, weight) pairs; each sample first picks its depth
            with these weights. Overrides depth.
        corner_depths: Optional further subdivision levels for each of the three
            top-level corner triangles (requires depth == 1). Refining only some
            corners keeps the marginals unchanged.
    """

    depth: int = 0
    mixture: Optional[tuple[tuple[int, Fraction], ...]] = None
    corner_depths: Optional[tuple[int, int, int]] = None

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise BlottoInputError(f"depth must be >= 0, got {self.depth}")
        if self.mixture is not None:
            mixture = tuple((int(d), Fraction(w)) for d, w in self.mixture)
            object.__setattr__(self, "mixture", mixture)
            if not mixture:
                raise BlottoInputError("mixture must not be empty")
            if any(d < 0 or w <= 0 for d, w in mixture):
                raise BlottoInputError("mixture needs depths >= 0 and positive weights")
            if sum(w for _, w in mixture) != 1:
                raise BlottoInputError("mixture weights must sum to 1")
        if self.corner_depths is not None:
            if self.mixture is not None:
                raise BlottoInputError("corner_depths and mixture are mutually exclusive")
            if self.depth != 1 or len(self.corner_depths) != 3:
                raise BlottoInputError("corner_depths refines a depth-1 family: give 3 depths")
            if any(d < 0 for d in self.corner_depths):
                raise BlottoInputError("corner depths must be >= 0")


def _shrink_to_corner(
    vertices: tuple[Point, Point, Point], corner: int
) -> tuple[Point, Point, Point]:
    """Corner triangle at vertices[corner], side length scaled by 1/3."""
    v = vertices[corner]
    shrunk = tuple(
        v if i == corner else tuple((2 * a + b) / 3 for a, b in zip(v, vertices[i]))
        for i in range(3)
    )
    return shrunk  # type: ignore[return-value]


def _point_on_side(vertices: tuple[Point, Point, Point], stream: RationalStream) -> Point:
    side = stream.choice(3)
    start, end = vertices[side], vertices[(side + 1) % 3]
    u = stream.unit()
    return tuple(a + u * (b - a) for a, b in zip(start, end))  # type: ignore[return-value]


def _draw(spec: TriangleFamilySpec, stream: RationalStream) -> Point:
    vertices = BASE_VERTICES
    if spec.corner_depths is not None:
        corner = stream.choice(3)
        vertices = _shrink_to_corner(vertices, corner)
        levels = spec.corner_depths[corner]
    elif spec.mixture is not None:
        index = stream.weighted_choice([w for _, w in spec.mixture])
        levels = spec.mixture[index][0]
    else:
        levels = spec.depth
    for _ in range(levels):
        vertices = _shrink_to_corner(vertices, stream.choice(3))
    return _point_on_side(vertices, stream)


def sample_triangle_strategy(
    spec: TriangleFamilySpec, count: int, seed: int
) -> list[Allocation]:
    """Draw exact rational samples from a triangle-family strategy.

    Each draw picks a corner triangle (probability 1/3 each) depth times, then one
    of its sides (probability 1/3), then a uniform point u / 2**53 along that side.
    The result depends only on spec, count and seed.

    Raises:
        BlottoInputError: If count < 1.
    """
    if count < 1:
        raise BlottoInputError(f"count must be >= 1, got {count}")
    stream = RationalStream(seed)
    samples = [Allocation(_draw(spec, stream), Fraction(1)) for _ in range(count)]
    logger.debug(
        "Sampled triangle family",
        extra={"ctx_depth": spec.depth, "ctx_count": count, "ctx_seed": seed},
    )
    return samples


def _coordinate(samples: Sequence[Allocation], j: int) -> np.ndarray:
    if not samples:
        raise BlottoInputError("Need at least one sample")
    _check_battlefield(j)
    return np.fromiter((float(s.levels[j - 1]) for s in samples), dtype=float, count=len(samples))


def empirical_sup_distance(samples: Sequence[Allocation], j: int) -> float:
    """Kolmogorov-Smirnov distance between the samples' j-th coordinate and F^j.

    Both one-sided gaps are evaluated at every order statistic.

    Raises:
        BlottoInputError: If samples is empty or j is out of range.
    """
    values = np.sort(_coordinate(samples, j))
    n = values.size
    analytic = MarginalCDF.for_battlefield(j).evaluate_many(values)
    ranks = np.arange(1, n + 1, dtype=float)
    above = np.max(ranks / n - analytic)
    below = np.max(analytic - (ranks - 1) / n)
    return float(max(above, below))


@dataclass(frozen=True, slots=True)
class MeanCheck:
    """Sample mean of one coordinate against the midpoint of its support."""

    battlefield: int
    mean: float
    standard_error: float
    expected: Fraction

    @property
    def z_score(self) -> float:
        """Distance of the mean from its expectation in standard errors."""
        if self.standard_error == 0:
            return 0.0 if self.mean == float(self.expected) else math.inf
        return abs(self.mean - float(self.expected)) / self.standard_error


def sample_mean_check(samples: Sequence[Allocation], j: int) -> MeanCheck:
    """Mean and standard error of coordinate j, with the analytic mean (lower + upper) / 2."""
    values = _coordinate(samples, j)
    lower, upper = MARGINAL_BOUNDS[j]
    std = float(values.std(ddof=1)) if values.size > 1 else 0.0
    return MeanCheck(
        battlefield=j,
        mean=float(values.mean()),
        standard_error=std / math.sqrt(values.size),
        expected=(lower + upper) / 2,
    )
