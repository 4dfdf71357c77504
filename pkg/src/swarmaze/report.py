"""Figures for benchmark output."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchRecord, summarize  # noqa: E402

STYLE = {
    "aaca": {"color": "tab:blue", "label": "ant colony"},
    "abca": {"color": "tab:orange", "label": "bee colony"},
    "prim": {"color": "tab:gray", "label": "randomised Prim"},
}


def timing_figure(records: Iterable[BenchRecord], path: str | Path,
                  title: str = "Maze generation time") -> Path:
    """Median wall-clock time against field count, raw runs as dots."""
    records = list(records)
    fig, ax = plt.subplots(figsize=(6.0, 3.8))
    for gen in sorted({r.generator for r in records}):
        style = STYLE.get(gen, {"color": None, "label": gen})
        raw = [r for r in records if r.generator == gen]
        ax.scatter([r.fields for r in raw], [r.wall_clock_ms for r in raw],
                   s=10, alpha=0.4, color=style["color"])
        med = summarize(raw)
        ax.plot([s["fields"] for s in med], [s["median_ms"] for s in med],
                marker="o", color=style["color"], label=style["label"])
    ax.set_xlabel("fields in the maze (width x height)")
    ax.set_ylabel("time [ms]")
    ax.set_yscale("log")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
