"""Hasse-diagram rendering for finite posets."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Callable

from .posets import FinitePoset
from .relations import bits


def _heights(poset: FinitePoset) -> list[int]:
    """Longest-chain height of each point, for vertical placement."""
    order = sorted(range(len(poset)), key=lambda i: poset.down[i].bit_count())
    height = [0] * len(poset)
    for i in order:
        below = poset.down[i] & ~(1 << i)
        height[i] = max((height[j] + 1 for j in bits(below)), default=0)
    return height


def hasse_figure(
    poset: FinitePoset,
    path: str | Path,
    label: Callable[[Any], str] = str,
    title: str | None = None,
) -> Path:
    """Render the Hasse diagram of ``poset`` to an image file.

    Layout is deterministic: points are ranked by longest-chain height and
    spread horizontally in carrier order.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    heights = _heights(poset)
    by_rank: dict[int, list[int]] = {}
    for i, h in enumerate(heights):
        by_rank.setdefault(h, []).append(i)
    positions: dict[int, tuple[float, float]] = {}
    for h, members in by_rank.items():
        for k, i in enumerate(sorted(members)):
            positions[i] = (k - (len(members) - 1) / 2.0, float(h))
    width = max((len(m) for m in by_rank.values()), default=1)
    depth = max(heights, default=0) + 1
    fig, ax = plt.subplots(figsize=(max(4.0, 1.6 * width), max(3.0, 1.1 * depth)))
    for i, j in poset.covers():
        (x1, y1), (x2, y2) = positions[i], positions[j]
        ax.plot([x1, x2], [y1, y2], color="0.6", linewidth=1.0, zorder=1)
    for i, (x, y) in positions.items():
        ax.text(
            x,
            y,
            label(poset.points[i]),
            ha="center",
            va="center",
            fontsize=9,
            zorder=2,
            bbox={"boxstyle": "round,pad=0.25", "fc": "white", "ec": "0.3"},
        )
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    ax.margins(0.15)
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
