"""Figure rendering for verification reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_report_figure(report, path) -> None:
    """Per-weight term counts of both sides, saved as a PNG."""
    weights = [r["weight"] for r in report.rows]
    lhs = [r["lhsTermCount"] for r in report.rows]
    rhs = [r["rhsTermCount"] for r in report.rows]
    bad = [r["weight"] for r in report.rows if r["status"] != "ok"]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(weights, lhs, marker="o", markersize=3, label="lhs terms")
    ax.plot(weights, rhs, marker="s", markersize=3, linestyle="--",
            label="rhs terms")
    for w in bad:
        ax.axvline(w, color="red", alpha=0.3)
    params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
    ax.set_title(f"{report.theorem} [{params}] — {report.status}")
    ax.set_xlabel("weight")
    ax.set_ylabel("term count")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
