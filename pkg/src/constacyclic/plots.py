"""Figures for the verification report (matplotlib, file output only)."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def partition_figure(labels: Sequence[str], totals: Sequence[int], reference: Sequence[int], computed: Sequence[int | None], path: Path) -> Path:
    """Grouped bars: all divisors, reference class count, computed class count."""
    x = np.arange(len(labels))
    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(labels)), 4))
    ax.bar(x - 0.27, totals, 0.27, label="divisors (total)")
    ax.bar(x, reference, 0.27, label="classes, reference")
    comp = [c if c is not None else 0 for c in computed]
    ax.bar(x + 0.27, comp, 0.27, label="classes, computed")
    ax.set_yscale("log")
    ax.set_xticks(x, labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("count")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def weight_figure(dists: Mapping[str, Mapping[int, int]], path: Path) -> Path:
    """One stem panel per code showing its nonzero-weight spectrum."""
    k = len(dists)
    fig, axes = plt.subplots(1, k, figsize=(2.4 * k, 2.6), squeeze=False)
    for ax, (name, dist) in zip(axes[0], dists.items()):
        ws = sorted(w for w in dist if w)
        ax.stem(ws, [dist[w] for w in ws])
        ax.set_title(name, fontsize=8)
        ax.set_xlabel("weight", fontsize=7)
        ax.tick_params(labelsize=6)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def timing_figure(items: Sequence[str], seconds: Sequence[float], ok: Sequence[bool], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, max(3, 0.22 * len(items))))
    y = np.arange(len(items))
    ax.barh(y, seconds, color=["tab:green" if o else "tab:red" for o in ok])
    ax.set_yticks(y, items, fontsize=6)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
