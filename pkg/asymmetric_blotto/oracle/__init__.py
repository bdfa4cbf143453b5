"""Exact best responses against finite-support strategies."""

from asymmetric_blotto.oracle.best_response import (
    BestResponseResult,
    ProfileEntry,
    Relation,
    best_response,
    critical_levels,
    exploitability,
)

__all__ = [
    "BestResponseResult",
    "ProfileEntry",
    "Relation",
    "best_response",
    "critical_levels",
    "exploitability",
]
