"""Render report series as PNG figures next to the exported data files."""

from __future__ import annotations

import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .report import Report, _series_groups


def _slug(text: str) -> str:
    slug = re.sub(r"[^A-Za-z0-9]+", "-", text).strip("-").lower()
    return slug or "series"


def render_figures(report: Report, directory: Path) -> list[Path]:
    """Write one PNG per index axis, with every series on that axis.

    Only numeric series are drawn; returns the written paths.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for index_name, group in _series_groups(report).items():
        numeric = [
            s
            for s in group
            if s.values and all(isinstance(v, (int, float)) for v in s.values)
        ]
        if not numeric:
            continue
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for s in numeric:
            label = s.name if s.horizon is None else f"{s.name}@{s.horizon}"
            ax.plot(list(s.index), list(s.values), marker=".", label=label)
        ax.set_xlabel(index_name)
        ax.set_title(report.title)
        ax.legend(fontsize="small")
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        path = directory / f"{_slug(report.title)}_{_slug(index_name)}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
