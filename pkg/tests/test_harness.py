"""Tests for the theorem check suites."""

import pytest

from asymmetric_blotto.game import BlottoInputError
from asymmetric_blotto.verification.harness import (
    CheckResult,
    VerificationOptions,
    VerificationReport,
    theorem_ids,
    verify_theorem,
)

QUICK = VerificationOptions(samples=5000, seed=42, ks_threshold=0.03, depths=(0, 1))


def test_registered_ids():
    assert theorem_ids() == ["2.1", "3.4", "4.1", "5.1", "5.2", "5.3", "5.4", "5.5"]


@pytest.mark.parametrize("theorem_id", ["4.1", "5.1", "5.2", "5.3", "5.4", "5.5"])
def test_exact_suites_pass(theorem_id):
    report = verify_theorem(theorem_id, QUICK)
    assert report.checks
    assert report.passed, report.failures


def test_triangle_suite_on_a_small_sample():
    report = verify_theorem("3.4", QUICK)
    assert report.passed, report.failures


@pytest.mark.slow
def test_triangle_suite_at_default_size():
    report = verify_theorem("3.4", VerificationOptions())
    assert report.passed, report.failures


@pytest.mark.slow
def test_value_uniqueness_suite():
    report = verify_theorem("2.1", VerificationOptions())
    assert report.passed, report.failures


def test_unknown_id():
    with pytest.raises(BlottoInputError):
        verify_theorem("9.9", QUICK)


def test_report_to_dict():
    report = VerificationReport(
        "5.5",
        (CheckResult("bound", "<= 1/3", "1/3", True), CheckResult("flag", "True", "False", False)),
        runtime_seconds=1.23456,
    )
    document = report.to_dict()
    assert document["theorem"] == "5.5"
    assert document["pass"] is False
    assert "runtime_seconds" not in document
    assert document["checks"][1] == {
        "description": "flag",
        "expected": "True",
        "observed": "False",
        "pass": False,
    }
    assert report.to_dict(include_timings=True)["runtime_seconds"] == 1.235
    assert [c.description for c in report.failures] == ["flag"]


def test_reports_are_deterministic():
    first = verify_theorem("5.4", QUICK).to_dict()
    second = verify_theorem("5.4", QUICK).to_dict()
    assert first == second
