"""Figures for bound reports.

matplotlib is imported lazily so the library and the text/JSON/CSV paths
work without it.
"""

from __future__ import annotations

from pathlib import Path

from .bounds import BoundReport


def plot_report(report: BoundReport, path: str | Path) -> Path:
    """Bound against ``m``, guaranteed rows filled, comparison bounds dashed."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    ms = [row.m for row in report.rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ms, [row.bound for row in report.rows], color="0.4", lw=1, zorder=1)
    for guaranteed, marker, label in ((True, "o", "guaranteed"), (False, "x", "not guaranteed")):
        pts = [(row.m, row.bound) for row in report.rows if row.status.guaranteed == guaranteed]
        if pts:
            ax.scatter(*zip(*pts), marker=marker, color="C0", label=label, zorder=2)

    c = report.comparisons
    for value, label, color in ((c.eisenbud_goto, "Eisenbud-Goto", "C2"),
                                (c.mumford, "Mumford", "C3"), (c.bel, "BEL", "C1")):
        ax.axhline(value, ls="--", lw=1, color=color, label=f"{label} ({value})")

    ax.set_xlabel("projection target m")
    ax.set_ylabel("regularity bound")
    ax.set_xticks(ms)
    ax.set_title(report.spec.name)
    ax.legend(fontsize="small", frameon=False)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps the file byte-stable
    fig.savefig(path, metadata={"Software": None} if path.suffix == ".png" else None)
    plt.close(fig)
    return path
