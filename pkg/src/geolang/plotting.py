"""Figures for the CLI reports, written to files with the Agg backend."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def sphere_growth(sizes: list[int], title: str, path) -> Path:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.semilogy(range(len(sizes)), sizes, "o-")
    ax.set_xlabel("radius")
    ax.set_ylabel("sphere size")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    return _save(fig, path)


def length_counts(accepted: list[str], geodesics: list[str], title: str, path) -> Path:
    a, g = Counter(map(len, accepted)), Counter(map(len, geodesics))
    n = max([0, *a, *g])
    xs = list(range(n + 1))
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar([x - 0.2 for x in xs], [max(g[x], 0.5) for x in xs], width=0.4, label="oracle geodesics")
    ax.bar([x + 0.2 for x in xs], [max(a[x], 0.5) for x in xs], width=0.4, label="accepted")
    ax.set_yscale("log")
    ax.set_xlabel("word length")
    ax.set_ylabel("words")
    ax.set_title(title)
    ax.legend()
    return _save(fig, path)


def pumping(rows, n: int, path) -> Path:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    js = sorted({r.j for r in rows})
    ax.plot(js, [4 * n + j + 2 for j in js], "o-", label="pumped word length")
    ax.plot(js, [min(r.distance for r in rows if r.j == j) for j in js], "s-", label="distance of its element")
    ax.set_xlabel("pumped factor length j")
    ax.set_ylabel("length")
    ax.set_title(f"pumping the t^{n} prefix")
    ax.legend()
    return _save(fig, path)
