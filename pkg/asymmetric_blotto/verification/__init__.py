"""Theorem check suites and plot data."""

from asymmetric_blotto.verification.harness import (
    CheckResult,
    VerificationReport,
    verify_theorem,
)
from asymmetric_blotto.verification.plot_data import emit_plot_data

__all__ = ["CheckResult", "VerificationReport", "emit_plot_data", "verify_theorem"]
