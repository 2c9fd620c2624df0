"""Report figures, rendered next to the delimited output by the CLI's --plot
flag.  Rendering is one-way: nothing computed here feeds back into checks."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .parity import ScanReport
from .series import ParitySeries

_PNG_META = {"Software": "mexpart"}


def save_even_count_figure(report: ScanReport, parities: ParitySeries, path: str) -> None:
    """Cumulative even count of the scanned counter against sqrt(n/3)."""
    bits = parities.bit_list()
    xs = range(1, report.X + 1)
    evens = []
    running = 0
    for n in xs:
        running += 1 - bits[n]
        evens.append(running)
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    ax.plot(xs, evens, lw=1.2, label="even values among 1..n")
    ax.plot(xs, [math.sqrt(n / 3) for n in xs], lw=1.0, ls="--", label="sqrt(n/3)")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    A, a = report.params.A, report.params.a
    ax.set_title(f"even values of p_[{A},{a}], X = {report.X}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata=_PNG_META)
    plt.close(fig)


def save_density_figure(rows: list[tuple[int, int, float]], label: str, path: str) -> None:
    """Odd-coefficient density checkpoints for the theta parity series."""
    xs = [r[0] for r in rows]
    density = [r[2] for r in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    ax.plot(xs, density, lw=1.2, marker=".", ms=3)
    ax.set_xlabel("x")
    ax.set_ylabel("odd density among 1..x")
    ax.set_title(f"theta parity density, {label}")
    ax.set_ylim(bottom=0)
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata=_PNG_META)
    plt.close(fig)
