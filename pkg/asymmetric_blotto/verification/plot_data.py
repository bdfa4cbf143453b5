"""CSV data for the value curves and the ACB(1, 1, 3) marginals.

Every rational is written twice: as a decimal with 12 significant digits and
as an exact "p/q" string.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Sequence
from enum import Enum
from fractions import Fraction
from pathlib import Path

from asymmetric_blotto.equilibria.analytic import marginal_cdf
from asymmetric_blotto.equilibria.closed_form import w2_value, w3_value
from asymmetric_blotto.game.core import Allocation, BlottoInputError
from asymmetric_blotto.game.rational import format_decimal, format_rational
from asymmetric_blotto.utils.files import write_text_atomic
from asymmetric_blotto.utils.logging import get_logger

logger = get_logger(__name__)


class Curve(str, Enum):
    W2 = "w2"
    W3 = "w3"
    MARGINALS = "marginals"


def _pair(value: Fraction) -> list[str]:
    return [format_decimal(value), format_rational(value)]


def _grid(points: int) -> list[Fraction]:
    if points < 2:
        raise BlottoInputError(f"points must be >= 2, got {points}")
    return [Fraction(i, points) for i in range(points + 1)]


def _to_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def curve_csv(curve: Curve, points: int) -> str:
    """Render a curve on the points + 1 equally spaced values i / points of [0, 1]."""
    grid = _grid(points)
    if curve is Curve.W2:
        return _to_csv(
            ["t", "t_exact", "value", "value_exact"],
            (_pair(t) + _pair(w2_value(t)) for t in grid),
        )
    if curve is Curve.W3:
        rows = []
        for t in grid:
            answer = w3_value(t)
            value = ["", ""] if answer.value is None else _pair(answer.value)
            rows.append(_pair(t) + [answer.kind.value] + value)
        return _to_csv(["t", "t_exact", "kind", "value", "value_exact"], rows)
    return _to_csv(
        ["u", "u_exact", "F1", "F1_exact", "F2", "F2_exact", "F3", "F3_exact"],
        (_pair(u) + [s for j in (1, 2, 3) for s in _pair(marginal_cdf(j, u))] for u in grid),
    )


def emit_plot_data(curve: Curve | str, points: int, out: str | Path) -> Path:
    """Write a curve's CSV to out atomically.

    Raises:
        BlottoInputError: If points < 2 or the curve is unknown.
        OSError: If out cannot be written.
    """
    try:
        kind = Curve(curve)
    except ValueError as e:
        raise BlottoInputError(f"Unknown curve {curve!r}") from e
    path = write_text_atomic(out, curve_csv(kind, points))
    logger.info(
        "Plot data written",
        extra={"ctx_curve": kind.value, "ctx_points": points, "ctx_path": str(path)},
    )
    return path


def samples_csv(samples: Sequence[Allocation]) -> str:
    """Raw samples, one exact "p/q" column per battlefield."""
    if not samples:
        raise BlottoInputError("Need at least one sample")
    n = samples[0].battlefields
    return _to_csv(
        [f"x{j}" for j in range(1, n + 1)],
        ([format_rational(v) for v in s.levels] for s in samples),
    )
