"""Tests for the seeded 53-bit draw stream."""

from fractions import Fraction as F

import pytest

from asymmetric_blotto.utils.rng import RESOLUTION, RationalStream


def test_same_seed_same_draws():
    first = RationalStream(42)
    second = RationalStream(42, block_size=3)
    assert [first.next_bits() for _ in range(20)] == [second.next_bits() for _ in range(20)]


def test_different_seeds_differ():
    assert RationalStream(1).next_bits() != RationalStream(2).next_bits()


def test_unit_is_exact_and_in_range():
    stream = RationalStream(7)
    for _ in range(100):
        u = stream.unit()
        assert isinstance(u, F)
        assert 0 <= u < 1
        assert RESOLUTION % u.denominator == 0


def test_choice_covers_range():
    stream = RationalStream(3)
    seen = {stream.choice(3) for _ in range(200)}
    assert seen == {0, 1, 2}


def test_weighted_choice_single_weight():
    assert RationalStream(0).weighted_choice([F(1)]) == 0


def test_negative_seed_rejected():
    with pytest.raises(ValueError):
        RationalStream(-1)
