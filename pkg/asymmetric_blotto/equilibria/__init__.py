"""Closed-form values and equilibrium constructions."""

from asymmetric_blotto.equilibria.analytic import (
    MarginalCDF,
    TriangleFamilySpec,
    empirical_sup_distance,
    marginal_cdf,
    payoff_vs_triangle,
    sample_triangle_strategy,
)
from asymmetric_blotto.equilibria.closed_form import (
    EquilibriumConstruction,
    ValueAnswer,
    ValueKind,
    check_w3_family,
    fixed_strategies,
    w2_equilibrium,
    w2_value,
    w3_equilibrium,
    w3_value,
)

__all__ = [
    "EquilibriumConstruction",
    "MarginalCDF",
    "TriangleFamilySpec",
    "ValueAnswer",
    "ValueKind",
    "check_w3_family",
    "empirical_sup_distance",
    "fixed_strategies",
    "marginal_cdf",
    "payoff_vs_triangle",
    "sample_triangle_strategy",
    "w2_equilibrium",
    "w2_value",
    "w3_equilibrium",
    "w3_value",
]
