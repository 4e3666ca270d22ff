"""Report rows and their CSV / Markdown renderings."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .enhancement import GrayImage
from .metrics import evaluate, mean_intensity

METHODS = ("original", "histeq", "fuzzy")
COLUMN_TITLES = {"original": "Original", "histeq": "Hist. Eqn", "fuzzy": "Fuzzy"}
CSV_HEADER = ("image", "method", "mean", "mli", "mse", "psnr_db")


@dataclass(frozen=True)
class ReportRow:
    image_name: str
    method: str
    mean: float
    mli: Optional[float] = None
    mse: Optional[float] = None
    psnr_db: Optional[float] = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")


def fmt(value: Optional[float]) -> str:
    if value is None:
        return ""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.4f}"


def rows_for(name: str, original: GrayImage, enhanced: dict) -> list[ReportRow]:
    """Original row plus one evaluated row per method in ``enhanced``."""
    rows = [ReportRow(name, "original", mean_intensity(original))]
    for method in METHODS[1:]:
        if method in enhanced:
            m = evaluate(original, enhanced[method])
            rows.append(ReportRow(name, method, m.mean_enhanced, m.mli, m.mse, m.psnr_db))
    return rows


def render_csv(rows: Sequence[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.image_name, r.method, fmt(r.mean), fmt(r.mli), fmt(r.mse), fmt(r.psnr_db)])
    return buf.getvalue()


def _group(rows: Iterable[ReportRow]) -> dict[str, dict[str, ReportRow]]:
    groups: dict[str, dict[str, ReportRow]] = {}
    for r in rows:
        groups.setdefault(r.image_name, {})[r.method] = r
    return groups


def render_markdown(rows: Sequence[ReportRow]) -> str:
    """One table per image: metrics as rows, methods as columns."""
    blocks = []
    for name, by_method in _group(rows).items():
        methods = [m for m in METHODS if m in by_method]
        lines = [
            f"### {name}",
            "",
            "| Evaluation Metric | " + " | ".join(COLUMN_TITLES[m] for m in methods) + " |",
            "|---|" + "---|" * len(methods),
        ]

        def line(title, getter, unit=""):
            cells = []
            for m in methods:
                text = fmt(getter(by_method[m]))
                cells.append(text + unit if text else "")
            return f"| {title} | " + " | ".join(cells) + " |"

        lines.append(line("Mean", lambda r: r.mean))
        lines.append(line("MLI", lambda r: r.mli))
        lines.append(line("MSE", lambda r: r.mse))
        lines.append(line("PSNR", lambda r: r.psnr_db, " dB"))
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def render(rows: Sequence[ReportRow], fmt_name: str = "csv") -> str:
    if not rows:
        raise ValueError("a report needs at least one row")
    if fmt_name == "csv":
        return render_csv(rows)
    if fmt_name == "markdown":
        return render_markdown(rows)
    raise ValueError(f"unknown report format {fmt_name!r}")


def emit_report(rows: Sequence[ReportRow], fmt_name: str = "csv", destination=None) -> str:
    """Render ``rows``; write atomically to ``destination`` if given, else return text."""
    text = render(rows, fmt_name)
    if destination is not None:
        from .imageio import atomic_write

        atomic_write(destination, text)
    return text
