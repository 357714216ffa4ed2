"""Figures for census and coefficient reports.

Uses the object-oriented matplotlib API with the Agg canvas, so no display or
pyplot state is involved.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from matplotlib.figure import Figure

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
}


def _figure(width: float = 6.0) -> Figure:
    golden = (5**0.5 - 1) / 2
    fig = Figure(figsize=(width, width * golden), layout="constrained")
    return fig


def _apply_style(ax) -> None:
    ax.grid(True, which="major", alpha=0.3)
    ax.set_yscale("symlog", linthresh=1)
    for label in ax.get_xticklabels() + ax.get_yticklabels():
        label.set_fontsize(STYLE["xtick.labelsize"])


def plot_census(omega: Mapping[int, int], theta: Mapping[int, int], path: str | Path, title: str = "") -> Path:
    fig = _figure()
    ax = fig.add_subplot()
    Ns = sorted(omega)
    ax.plot(Ns, [float(omega[N]) for N in Ns], "o-", label="covering cycles (marked start)")
    ax.plot(Ns, [float(theta[N]) for N in Ns], "s--", label="nonperiodic classes")
    ax.set_xlabel("length N", fontsize=STYLE["axes.labelsize"])
    ax.set_ylabel("count", fontsize=STYLE["axes.labelsize"])
    _apply_style(ax)
    ax.legend(fontsize=STYLE["legend.fontsize"])
    if title:
        ax.set_title(title, fontsize=STYLE["font.size"])
    path = Path(path)
    fig.savefig(path)
    return path


def plot_coefficients(
    omega: Mapping[int, int],
    d_plus: Sequence[Fraction] | None,
    d_minus: Sequence[Fraction] | None,
    path: str | Path,
    n0: int | None = None,
    title: str = "",
) -> Path:
    fig = _figure()
    ax = fig.add_subplot()
    if d_plus is not None:
        ax.plot(range(1, len(d_plus) + 1), [float(x) for x in d_plus], "o-", label="d+")
    if d_minus is not None:
        ax.plot(range(1, len(d_minus) + 1), [float(x) for x in d_minus], "s-", label="d-")
    M = max(len(d_plus or ()), len(d_minus or ()))
    ns = [n for n in range(1, M + 1) if n in omega]
    ax.plot(ns, [omega[n] / n for n in ns], "k.", label="omega(n)/n")
    if n0:
        for k in (1, 2, 3):
            if k * n0 <= M:
                ax.axvline(k * n0, color="0.6", lw=0.8, ls=":")
    ax.set_xlabel("index n", fontsize=STYLE["axes.labelsize"])
    ax.set_ylabel("coefficient", fontsize=STYLE["axes.labelsize"])
    _apply_style(ax)
    ax.legend(fontsize=STYLE["legend.fontsize"])
    if title:
        ax.set_title(title, fontsize=STYLE["font.size"])
    path = Path(path)
    fig.savefig(path)
    return path
