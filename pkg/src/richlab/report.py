"""Deterministic result documents: checks, series, and their renderers.

A Report collects scalar facts, integer series indexed by a common axis
(usually factor length n), and named pass/fail checks.  The same report
renders as human-readable text, as JSON, or as CSV files; rendering is a
pure function of the report contents plus the package version, with no
timestamps or machine identifiers, so repeated runs produce identical
bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence, Union

from ._version import __version__

Scalar = Union[int, float, str, bool, None]


@dataclass
class Check:
    """One verifiable assertion with its observed outcome."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class Series:
    """An integer-indexed sequence of values, tagged with its horizon."""

    name: str
    index: Sequence[int]
    values: Sequence[Scalar]
    index_name: str = "n"
    horizon: int | None = None
    reliable: bool | None = None

    def __post_init__(self):
        if len(self.index) != len(self.values):
            raise ValueError(f"series {self.name}: index/value length mismatch")


@dataclass
class Report:
    """The full outcome of one experiment or analysis run."""

    title: str
    params: dict[str, Scalar] = field(default_factory=dict)
    facts: dict[str, Scalar] = field(default_factory=dict)
    series: list[Series] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add_fact(self, key: str, value: Scalar) -> None:
        self.facts[key] = value

    def add_series(self, series: Series) -> None:
        self.series.append(series)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def check_equal(self, name: str, actual, expected) -> bool:
        detail = f"got {actual!r}" + ("" if actual == expected else f", expected {expected!r}")
        return self.check(name, actual == expected, detail)


def _series_groups(report: Report) -> dict[str, list[Series]]:
    groups: dict[str, list[Series]] = {}
    for s in report.series:
        groups.setdefault(s.index_name, []).append(s)
    return groups


def render_text(report: Report) -> str:
    out = io.StringIO()
    out.write(f"# {report.title}\n")
    out.write(f"richlab {__version__}\n")
    if report.params:
        pairs = ", ".join(f"{k}={v}" for k, v in report.params.items())
        out.write(f"params: {pairs}\n")
    if report.facts:
        out.write("\n")
        width = max(len(k) for k in report.facts)
        for k, v in report.facts.items():
            out.write(f"{k:<{width}}  {v}\n")
    for index_name, group in _series_groups(report).items():
        out.write("\n")
        axis = sorted({i for s in group for i in s.index})
        widths = [max(len(index_name), *(len(str(i)) for i in axis))]
        columns = [[str(i) for i in axis]]
        for s in group:
            lookup = dict(zip(s.index, s.values))
            col = ["" if i not in lookup else str(lookup[i]) for i in axis]
            label = s.name if s.horizon is None else f"{s.name}@{s.horizon}"
            columns.append([label] + col)
            widths.append(max(len(x) for x in columns[-1]))
        columns[0] = [index_name] + columns[0]
        for row in range(len(axis) + 1):
            cells = (
                f"{columns[c][row]:>{widths[c]}}" for c in range(len(columns))
            )
            out.write("  ".join(cells).rstrip() + "\n")
    if report.checks:
        out.write("\n")
        for c in report.checks:
            mark = "PASS" if c.passed else "FAIL"
            tail = f"  ({c.detail})" if c.detail else ""
            out.write(f"[{mark}] {c.name}{tail}\n")
        n_pass = sum(c.passed for c in report.checks)
        out.write(f"\n{n_pass}/{len(report.checks)} checks passed\n")
    return out.getvalue()


def render_json(report: Report) -> str:
    payload = {
        "title": report.title,
        "version": __version__,
        "params": report.params,
        "facts": report.facts,
        "series": [
            {
                "name": s.name,
                "index_name": s.index_name,
                "index": list(s.index),
                "values": list(s.values),
                "horizon": s.horizon,
                "reliable": s.reliable,
            }
            for s in report.series
        ],
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in report.checks
        ],
        "passed": report.passed,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def render_csv(report: Report, directory: Path) -> list[Path]:
    """Write the report as CSV files under a directory; returns the paths.

    Series sharing an index axis are pivoted into one file with a column
    per series, matching the layout n, C, dC, P..., slack used by the
    analysis reports.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, header: list[str], rows: list[list]) -> None:
        path = directory / name
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
        written.append(path)

    if report.facts:
        emit("facts.csv", ["key", "value"], [[k, v] for k, v in report.facts.items()])
    for index_name, group in _series_groups(report).items():
        axis = sorted({i for s in group for i in s.index})
        header = [index_name]
        lookups = []
        for s in group:
            label = s.name if s.horizon is None else f"{s.name}@{s.horizon}"
            header.append(label)
            lookups.append(dict(zip(s.index, s.values)))
        rows = [[i] + [lk.get(i, "") for lk in lookups] for i in axis]
        emit(f"series_{index_name}.csv", header, rows)
    if report.checks:
        emit(
            "checks.csv",
            ["name", "passed", "detail"],
            [[c.name, int(c.passed), c.detail] for c in report.checks],
        )
    return written
