"""Figures written next to the CSV reports."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from isolab.dual import dual_norm, extreme_keys  # noqa: E402
from isolab.scalars import to_complex  # noqa: E402
from isolab.space import Subspace  # noqa: E402


def _angle_sorted(points):
    return sorted(points, key=lambda p: math.atan2(p[1], p[0]))


def dual_ball_figure(A: Subspace, path) -> Path:
    """The dual unit ball in basis coordinates with each generator marked.

    Two-dimensional real subspaces get the polygon itself; otherwise a bar
    chart of generator dual norms, extreme classes highlighted.
    """
    path = Path(path)
    keys = extreme_keys(A)
    fig, ax = plt.subplots(figsize=(5, 5) if A.dim == 2 else (6, 3.5))
    if A.dim == 2 and A.field.is_real:
        pts = []
        for g in A.generators:
            v = (float(g[0]), float(g[1]))
            pts += [v, (-v[0], -v[1])]
        ext = []
        for z in A.points:
            g = A.generator(z)
            if g.key in keys:
                v = (float(g.coords[0]), float(g.coords[1]))
                ext += [v, (-v[0], -v[1])]
        hull = _angle_sorted(set(ext))
        if len(hull) >= 2:
            xs, ys = zip(*(hull + hull[:1]))
            ax.fill(xs, ys, alpha=0.15, color="tab:blue")
            ax.plot(xs, ys, color="tab:blue", lw=1)
        for z in A.points:
            g = A.generator(z)
            x, y = float(g.coords[0]), float(g.coords[1])
            extreme = g.key in keys
            ax.plot([x, -x], [y, -y], "o", color="tab:red" if extreme else "tab:gray")
            ax.annotate(str(z), (x, y), textcoords="offset points", xytext=(4, 4))
        ax.set_aspect("equal")
        ax.axhline(0, color="black", lw=0.5)
        ax.axvline(0, color="black", lw=0.5)
        ax.set_xlabel("coordinate 1")
        ax.set_ylabel("coordinate 2")
        ax.set_title("dual unit ball (red: extreme)")
    else:
        labels = [str(z) for z in A.points]
        norms = []
        for z in A.points:
            val = dual_norm(A.generator(z))
            norms.append(abs(to_complex(val)) if val is not None else float("nan"))
        colors = ["tab:red" if A.generator(z).key in keys else "tab:gray" for z in A.points]
        ax.bar(labels, norms, color=colors)
        ax.axhline(1, color="black", lw=0.5, ls="--")
        ax.set_ylabel("dual norm of evaluation")
        ax.set_title("evaluation functionals (red: extreme)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def suite_figure(rows, path) -> Path:
    """Stacked bars of passed / skipped / failed trials per suite.

    ``rows`` is an iterable of (suite_id, passed, skipped, failed).
    """
    path = Path(path)
    rows = list(rows)
    ids = [r[0] for r in rows]
    passed = [r[1] for r in rows]
    skipped = [r[2] for r in rows]
    failed = [r[3] for r in rows]
    fig, ax = plt.subplots(figsize=(max(4, 0.45 * len(rows) + 2), 3.8))
    ax.bar(ids, passed, color="tab:green", label="passed")
    ax.bar(ids, skipped, bottom=passed, color="tab:gray", label="hypothesis not met")
    ax.bar(ids, failed, bottom=[p + s for p, s in zip(passed, skipped)], color="tab:red", label="failed")
    ax.set_ylabel("trials")
    ax.legend(fontsize=8)
    plt.setp(ax.get_xticklabels(), rotation=60, ha="right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
