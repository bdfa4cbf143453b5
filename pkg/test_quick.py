"""Quick test script for asymmetric Blotto."""

from fractions import Fraction

from asymmetric_blotto.equilibria.analytic import (
    TriangleFamilySpec,
    empirical_sup_distance,
    sample_triangle_strategy,
)
from asymmetric_blotto.equilibria.closed_form import (
    fixed_strategies,
    w2_equilibrium,
    w2_value,
    w3_equilibrium,
    w3_value,
)
from asymmetric_blotto.game import Allocation, GameSpec, payoff_mixed, payoff_pure
from asymmetric_blotto.oracle import best_response, exploitability
from asymmetric_blotto.solver import discrete_value
from asymmetric_blotto.verification import verify_theorem


def test_payoffs():
    """Test exact payoffs."""
    print("=== Testing Payoffs ===")
    spec = GameSpec(1, Fraction(3, 5), 2)
    a = Allocation.of(Fraction(1, 5), Fraction(4, 5))
    b = Allocation.of(Fraction(1, 5), Fraction(2, 5))
    payoff = payoff_pure(a, b, spec)
    print(f"  {a} vs {b}: {payoff}")
    assert payoff == Fraction(3, 4)


def test_closed_forms():
    """Test W_2 and W_3 constructions."""
    print("\n=== Testing Closed Forms ===")
    for t in ("2/3", "3/4", "9/10"):
        construction = w2_equilibrium(t)
        payoff = payoff_mixed(construction.pa, construction.pb, construction.spec)
        print(f"  W_2({t}) = {w2_value(t)}, constructed pair pays {payoff}")
        assert payoff == w2_value(t)

    for t in ("5/9", "5/8", "19/32"):
        print(f"  W_3({t}): {w3_value(t)}")
    construction = w3_equilibrium("5/8")
    assert exploitability(construction.pa, construction.pb, construction.spec) == (0, 0)


def test_oracle():
    """Test best responses against the fixed bound strategies."""
    print("\n=== Testing Best-Response Oracle ===")
    upper = best_response(fixed_strategies("5.4-B"), 1, GameSpec(1, Fraction(2, 3), 3))
    print(f"  A against the five-atom strategy: {upper.sup_payoff} at {upper.witness}")
    lower = best_response(fixed_strategies("5.5-A"), "5/6", GameSpec(1, Fraction(5, 6), 3))
    print(f"  B against the pure strategy: {lower.sup_payoff} at {lower.witness}")
    assert upper.sup_payoff <= Fraction(4, 5)
    assert lower.sup_payoff <= Fraction(1, 3)


def test_solver():
    """Test grid discretization."""
    print("\n=== Testing Grid Solver ===")
    value = discrete_value(GameSpec(1, 1, 3), 12)
    print(f"  ACB(1, 1, 3) on the 1/12 grid: {value}")
    assert value == Fraction(1, 2)


def test_sampler():
    """Test the triangle-family sampler."""
    print("\n=== Testing Triangle Sampler ===")
    samples = sample_triangle_strategy(TriangleFamilySpec(depth=1), 2000, seed=42)
    for j in (1, 2, 3):
        print(f"  battlefield {j}: sup-distance {empirical_sup_distance(samples, j):.4f}")


def test_verification():
    """Test the exact theorem suites."""
    print("\n=== Testing Verification ===")
    for theorem_id in ("4.1", "5.4", "5.5"):
        report = verify_theorem(theorem_id)
        status = "pass" if report.passed else "FAIL"
        print(f"  {theorem_id}: {status} ({len(report.checks)} checks)")
        assert report.passed


def main():
    """Run all tests."""
    print("Asymmetric Blotto - Quick Test\n")

    try:
        test_payoffs()
        test_closed_forms()
        test_oracle()
        test_solver()
        test_sampler()
        test_verification()
        print("\n✓ All tests passed!")
    except Exception as e:
        print(f"\n✗ Test failed: {e}")
        raise


if __name__ == "__main__":
    main()
