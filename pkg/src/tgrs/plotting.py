"""Matplotlib rendering for sweep reports (written to files, never shown)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

OUTCOME_COLORS = {
    "MDS": "#2b7a2b",
    "NMDS": "#2b4f7a",
    "built": "#888888",
    "refused": "#b03a3a",
}


def _row_outcome(row: dict) -> str:
    if not row.get("built"):
        return "refused"
    cls = row.get("classification")
    return cls if cls in ("MDS", "NMDS") else "built"


def render_sweep_figure(rows: list[dict], path: str, title: str = "construction sweep") -> str:
    """Render a two-panel summary of sweep rows: outcome counts and the code
    length of each parameter point colored by outcome.  Returns the path."""
    outcomes = [_row_outcome(r) for r in rows]
    order = ["MDS", "NMDS", "built", "refused"]
    counts = {o: outcomes.count(o) for o in order}

    fig, (ax_counts, ax_points) = plt.subplots(
        1, 2, figsize=(10, 4), gridspec_kw={"width_ratios": [1, 2]})

    labels = [o for o in order if counts[o]] or ["refused"]
    values = [counts[o] for o in labels]
    bars = ax_counts.bar(labels, values,
                         color=[OUTCOME_COLORS[o] for o in labels])
    ax_counts.bar_label(bars)
    ax_counts.set_ylabel("parameter points")
    ax_counts.set_title("outcomes")

    xs = list(range(1, len(rows) + 1))
    ys = [r.get("n") or 0 for r in rows]
    cs = [OUTCOME_COLORS[o] for o in outcomes]
    ax_points.scatter(xs, ys, c=cs, s=28)
    ax_points.set_xlabel("parameter point (sweep order)")
    ax_points.set_ylabel("code length n")
    ax_points.set_title(title)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
