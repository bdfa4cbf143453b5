"""Tests for the ACB(1, 1, 3) marginals and the triangle-boundary sampler."""

from fractions import Fraction as F

import numpy as np
import pytest

from asymmetric_blotto.equilibria.analytic import (
    BASE_VERTICES,
    MarginalCDF,
    TriangleFamilySpec,
    empirical_sup_distance,
    marginal_cdf,
    payoff_vs_triangle,
    sample_mean_check,
    sample_triangle_strategy,
    triangle_support_box_contains,
    triangle_value,
)
from asymmetric_blotto.game import Allocation, BlottoInputError
from asymmetric_blotto.solver.grid import enumerate_grid_strategies


def _on_segment(p, start, end) -> bool:
    direction = [b - a for a, b in zip(start, end)]
    pivot = next(i for i, d in enumerate(direction) if d != 0)
    lam = (p[pivot] - start[pivot]) / direction[pivot]
    if not 0 <= lam <= 1:
        return False
    return all(a + lam * d == x for a, d, x in zip(start, direction, p))


def _on_base_triangle(p) -> bool:
    v = BASE_VERTICES
    return any(_on_segment(p, v[i], v[(i + 1) % 3]) for i in range(3))


class TestMarginals:
    @pytest.mark.parametrize(
        "j,u,expected",
        [
            (2, F(1, 3), F(1, 2)),
            (1, F(1, 2), F(1)),
            (3, F(1, 3), F(0)),
            (1, F(1, 6), F(1, 2)),
            (3, F(1, 2), F(1, 2)),
            (2, F(0), F(0)),
        ],
    )
    def test_values(self, j, u, expected):
        assert marginal_cdf(j, u) == expected

    def test_bad_battlefield(self):
        with pytest.raises(BlottoInputError):
            marginal_cdf(4, F(1, 2))

    def test_stochastic_ordering(self):
        for k in range(61):
            u = F(k, 60)
            assert marginal_cdf(1, u) >= marginal_cdf(2, u) >= marginal_cdf(3, u)

    def test_evaluate_many_matches_exact(self):
        cdf = MarginalCDF.for_battlefield(2)
        grid = [F(k, 12) for k in range(13)]
        floats = cdf.evaluate_many(np.array([float(u) for u in grid]))
        assert floats == pytest.approx([float(cdf(u)) for u in grid])


class TestPayoffVsTriangle:
    @pytest.mark.parametrize(
        "levels,expected",
        [
            ((F(1, 3), F(1, 3), F(1, 3)), F(1, 2)),
            ((F(0), F(0), F(1)), F(1, 3)),
            ((F(1, 10), F(1, 5), F(7, 10)), F(7, 15)),
        ],
    )
    def test_values(self, levels, expected):
        assert payoff_vs_triangle(Allocation(levels, 1)) == expected

    def test_value_is_half(self):
        assert triangle_value() == F(1, 2)

    def test_needs_unit_budget_on_three_battlefields(self):
        with pytest.raises(BlottoInputError):
            payoff_vs_triangle(Allocation.of(F(1, 2), F(1, 2)))
        with pytest.raises(BlottoInputError):
            payoff_vs_triangle(Allocation.of(F(1, 3), F(1, 3), F(2, 3)))

    def test_half_exactly_on_the_support_box(self):
        for levels in enumerate_grid_strategies(12, 3):
            point = Allocation(tuple(F(k, 12) for k in levels), 1)
            payoff = payoff_vs_triangle(point)
            assert payoff <= F(1, 2)
            assert (payoff == F(1, 2)) == triangle_support_box_contains(point)


class TestTriangleFamilySpec:
    def test_negative_depth(self):
        with pytest.raises(BlottoInputError):
            TriangleFamilySpec(depth=-1)

    def test_mixture_weights_must_sum_to_one(self):
        with pytest.raises(BlottoInputError):
            TriangleFamilySpec(mixture=((0, F(1, 2)), (1, F(1, 3))))

    def test_corner_depths_need_depth_one(self):
        with pytest.raises(BlottoInputError):
            TriangleFamilySpec(depth=0, corner_depths=(0, 1, 2))


class TestSampler:
    def test_depth_zero_samples_lie_on_the_base_triangle(self):
        samples = sample_triangle_strategy(TriangleFamilySpec(), 200, seed=7)
        assert all(_on_base_triangle(s.levels) for s in samples)

    @pytest.mark.parametrize(
        "spec",
        [
            TriangleFamilySpec(depth=0),
            TriangleFamilySpec(depth=2),
            TriangleFamilySpec(mixture=((0, F(1, 2)), (3, F(1, 2)))),
            TriangleFamilySpec(depth=1, corner_depths=(0, 2, 1)),
        ],
    )
    def test_samples_stay_in_the_support_box(self, spec):
        samples = sample_triangle_strategy(spec, 300, seed=11)
        for s in samples:
            assert s.owner_budget == 1
            assert triangle_support_box_contains(s)
            assert payoff_vs_triangle(s) == F(1, 2)

    def test_same_seed_same_samples(self):
        spec = TriangleFamilySpec(depth=1)
        assert sample_triangle_strategy(spec, 50, 3) == sample_triangle_strategy(spec, 50, 3)

    def test_different_seed_different_samples(self):
        spec = TriangleFamilySpec(depth=1)
        assert sample_triangle_strategy(spec, 50, 3) != sample_triangle_strategy(spec, 50, 4)

    def test_count_must_be_positive(self):
        with pytest.raises(BlottoInputError):
            sample_triangle_strategy(TriangleFamilySpec(), 0, 1)

    def test_marginals_close_on_a_small_run(self):
        samples = sample_triangle_strategy(TriangleFamilySpec(depth=1), 5000, seed=42)
        for j in (1, 2, 3):
            assert empirical_sup_distance(samples, j) <= 0.03


class TestEmpiricalDistance:
    def test_point_mass_is_far_from_uniform(self):
        samples = [Allocation((F(1, 3),) * 3, 1)] * 5
        assert empirical_sup_distance(samples, 1) == pytest.approx(1.0)

    def test_empty_samples_rejected(self):
        with pytest.raises(BlottoInputError):
            empirical_sup_distance([], 1)

    def test_mean_check_fields(self):
        samples = [Allocation((F(1, 3),) * 3, 1)] * 4
        check = sample_mean_check(samples, 2)
        assert check.expected == F(1, 3)
        assert check.standard_error == 0
        assert check.mean == pytest.approx(1 / 3)


@pytest.mark.slow
@pytest.mark.parametrize(
    "spec",
    [
        TriangleFamilySpec(depth=0),
        TriangleFamilySpec(depth=1),
        TriangleFamilySpec(depth=2),
        TriangleFamilySpec(depth=1, corner_depths=(0, 2, 1)),
        TriangleFamilySpec(mixture=((0, F(1, 3)), (2, F(2, 3)))),
    ],
    ids=["depth-0", "depth-1", "depth-2", "refined-corners", "mixture"],
)
def test_marginals_match_at_full_sample_size(spec):
    samples = sample_triangle_strategy(spec, 100_000, seed=42)
    for j in (1, 2, 3):
        assert empirical_sup_distance(samples, j) <= 0.02
        assert sample_mean_check(samples, j).z_score <= 3
