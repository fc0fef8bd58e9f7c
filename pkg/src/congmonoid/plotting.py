"""Figures written alongside the tabular CLI output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _style(ax):
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.tick_params(direction="out")


def plot_summary(rows: list[dict], path, log_scale: bool = True):
    """Generator count against the partition/totient bound, per modulus."""
    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, [r["F"] for r in rows], "o-", label="F(n) = #IM")
    ax.plot(ns, [r["kac_bound"] for r in rows], "s--", label="p(n) + phi(n) - 1")
    missed = [r for r in rows if not r["bound_met"]]
    if missed:
        ax.plot([r["n"] for r in missed], [r["F"] for r in missed], "rx", ms=10, label="bound not met")
    if log_scale:
        ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.set_xticks(ns)
    ax.legend(frameon=False)
    _style(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_degree_profile(rows: list[dict], n: int, path):
    """Stacked bars of indecomposables per degree, split by level."""
    by = {}
    for r in rows:
        by.setdefault(r["level"], {}).setdefault(r["degree"], 0)
        by[r["level"]][r["degree"]] += 1
    degrees = list(range(1, n + 1))
    fig, ax = plt.subplots(figsize=(6, 4))
    bottom = [0] * len(degrees)
    for lv in sorted(by):
        heights = [by[lv].get(k, 0) for k in degrees]
        ax.bar(degrees, heights, bottom=bottom, label=f"level {lv}")
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel("degree k")
    ax.set_ylabel("#IM(k)")
    ax.set_title(f"n = {n}")
    ax.set_xticks(degrees)
    ax.legend(frameon=False)
    _style(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
