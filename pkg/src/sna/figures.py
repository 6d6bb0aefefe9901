"""Matplotlib renderings of the tabular reports.

Figures are written next to the CSV/JSON output. Metadata that would vary
between runs (creation dates, SVG id salts) is pinned so repeated runs
produce identical files.
"""

from __future__ import annotations

import io
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .report import write_atomic  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "figure.dpi": 100,
    "savefig.bbox": "tight",
    "svg.hashsalt": "sna",
    "svg.fonttype": "path",
}

_METADATA = {
    "svg": {"Date": None, "Creator": None},
    "pdf": {"CreationDate": None, "ModDate": None, "Creator": None, "Producer": None},
    "png": {"Software": None},
}


def savefig(fig, path) -> None:
    """Save ``fig`` to ``path`` (format from the extension) and close it."""
    path = os.fspath(path)
    ext = os.path.splitext(path)[1].lstrip(".").lower() or "svg"
    buf = io.BytesIO()
    fig.savefig(buf, format=ext, metadata=_METADATA.get(ext))
    plt.close(fig)
    write_atomic(path, buf.getvalue())


def _figure(width=6.0, height=3.8):
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(width, height))
    return fig, ax


def degree_distribution_figure(rows, mode: str, path, log: bool = True) -> None:
    deg = np.array([r[0] for r in rows])
    cnt = np.array([r[1] for r in rows])
    with plt.rc_context(STYLE):
        fig, ax = _figure()
        ax.scatter(deg, cnt, s=8, color="0.2")
        if log:
            ax.set_xscale("symlog", linthresh=1)
            ax.set_yscale("log")
        label = {"in": "in-degree", "out": "out-degree", "all": "neighbors"}[mode]
        ax.set_xlabel(label)
        ax.set_ylabel("nodes")
        savefig(fig, path)


def layers_figure(counts: dict[int, int], source_label: str, path) -> None:
    with plt.rc_context(STYLE):
        fig, ax = _figure(5.0, 3.4)
        d = sorted(counts)
        ax.bar(d, [counts[x] for x in d], color="0.35")
        ax.set_xticks(d)
        ax.set_xlabel(f"hops from {source_label}")
        ax.set_ylabel("nodes")
        savefig(fig, path)


def community_sizes_figure(sizes, path) -> None:
    sizes = np.sort(np.asarray(sizes))[::-1]
    with plt.rc_context(STYLE):
        fig, ax = _figure()
        ax.bar(np.arange(1, len(sizes) + 1), sizes, color="0.35")
        ax.set_xlabel("community (by size)")
        ax.set_ylabel("nodes")
        savefig(fig, path)


def coreness_figure(coreness, path) -> None:
    k, cnt = np.unique(np.asarray(coreness), return_counts=True)
    with plt.rc_context(STYLE):
        fig, ax = _figure()
        ax.bar(k, cnt, color="0.35", width=0.9)
        ax.set_yscale("log")
        ax.set_xlabel("coreness")
        ax.set_ylabel("nodes")
        savefig(fig, path)


def rank_vs_degree_figure(scores, in_degree, path) -> None:
    with plt.rc_context(STYLE):
        fig, ax = _figure(4.8, 4.0)
        ax.scatter(np.asarray(in_degree) + 1, scores, s=5, color="0.2", alpha=0.6)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("in-degree + 1")
        ax.set_ylabel("PageRank")
        savefig(fig, path)
