"""Chord-diagram pictures written with matplotlib.

Endpoint ``k`` of a diagram with ``2n`` endpoints sits at angle
``90 + 360 k / 2n`` degrees on the unit circle, so the core orientation is
counterclockwise starting at the top.  Chords are arrows from tail (over)
to head (under), red for positive and blue for negative crossings.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle, FancyArrowPatch  # noqa: E402

from .diagram import GaussDiagram  # noqa: E402

POSITIVE_COLOR = "#c0392b"
NEGATIVE_COLOR = "#2471a3"


def endpoint_xy(k: int, size: int) -> tuple[float, float]:
    theta = math.pi / 2 + 2 * math.pi * k / size
    return math.cos(theta), math.sin(theta)


def chord_layout(D: GaussDiagram) -> list[dict]:
    """Drawing data per chord: label, sign, tail/head positions and coordinates."""
    size = len(D.endpoints)
    out = []
    for ch in D.chords:
        out.append({
            "label": ch.label,
            "sign": ch.sign,
            "tail": ch.over_pos,
            "head": ch.under_pos,
            "tail_xy": endpoint_xy(ch.over_pos, size),
            "head_xy": endpoint_xy(ch.under_pos, size),
            "color": POSITIVE_COLOR if ch.sign > 0 else NEGATIVE_COLOR,
        })
    return out


def draw(D: GaussDiagram, ax=None, title: str | None = None):
    if ax is None:
        fig, ax = plt.subplots(figsize=(4, 4))
    else:
        fig = ax.figure
    ax.add_patch(Circle((0, 0), 1.0, fill=False, lw=1.5, color="black", gid="core"))
    # Orientation tick on the core circle.
    ax.add_patch(FancyArrowPatch((0.26, 0.966), (-0.26, 0.966), connectionstyle="arc3,rad=0.07",
                                 arrowstyle="-|>", mutation_scale=10, color="black", lw=0))
    for c in chord_layout(D):
        ax.add_patch(FancyArrowPatch(c["tail_xy"], c["head_xy"], arrowstyle="-|>",
                                     mutation_scale=14, color=c["color"], lw=1.4,
                                     shrinkA=0, shrinkB=0, gid=f"chord-{c['label']}"))
        (x0, y0), (x1, y1) = c["tail_xy"], c["head_xy"]
        sign = "+" if c["sign"] > 0 else "-"
        ax.text(1.12 * x0, 1.12 * y0, f"{c['label']}{sign}", ha="center", va="center",
                fontsize=9, color=c["color"])
        ax.plot([x0, x1], [y0, y1], "o", ms=3, color="black")
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    return fig, ax


def render_svg(D: GaussDiagram, out_path, title: str | None = None) -> None:
    """Write a deterministic SVG (fixed hash salt, no timestamp)."""
    with matplotlib.rc_context({"svg.hashsalt": "gaussforge", "svg.fonttype": "none"}):
        fig, _ = draw(D, title=title)
        fig.savefig(out_path, format="svg", metadata={"Date": None})
        plt.close(fig)
