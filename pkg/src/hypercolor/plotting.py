"""Figures for ``bench`` reports."""
from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def bench_figure(rows: list[dict], path: str | Path) -> Path:
    """Colors used against the bound ``k``; marker area counts instances."""
    path = Path(path)
    counts = Counter((r["k"], r["colors_used"]) for r in rows)
    fig, ax = plt.subplots(figsize=(5, 4))
    if counts:
        xs, ys = zip(*counts)
        ax.scatter(xs, ys, s=[20 + 8 * counts[p] for p in counts], alpha=0.6,
                   color="tab:blue", label="instances")
        top = max(max(xs), max(ys)) + 1
        ax.plot([0, top], [0, top], "k--", lw=1, label="colors = k")
        ax.plot([0, top], [1, top + 1], ":", color="grey", lw=1, label="colors = k + 1")
        ax.set_xlim(0, top + 0.5)
        ax.set_ylim(0, top + 1.5)
        ax.legend(loc="upper left", fontsize=8)
    ax.set_xlabel("k = ceil(2 Delta / delta)")
    ax.set_ylabel("colors used")
    ax.set_title(f"{len(rows)} instances")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
