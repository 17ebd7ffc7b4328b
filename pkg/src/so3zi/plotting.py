"""Figure rendering for boundary samples; file output only."""

from __future__ import annotations


def render_boundary(rows: list[tuple[float, float, float]], kind: str, path: str) -> None:
    """Save a figure of boundary samples (x1, x2, y) to path."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [r[0] for r in rows]
    x2s = [r[1] for r in rows]
    ys = [r[2] for r in rows]
    fig, ax = plt.subplots(figsize=(5.0, 4.0))
    if any(abs(v) > 1e-12 for v in x2s):
        sc = ax.scatter(xs, x2s, c=ys, s=12, cmap="viridis")
        fig.colorbar(sc, ax=ax, label="height")
        ax.set_xlabel("x1")
        ax.set_ylabel("x2")
        ax.set_aspect("equal")
    else:
        order = sorted(range(len(xs)), key=lambda i: xs[i])
        ax.plot([xs[i] for i in order], [ys[i] for i in order], lw=1.2)
        ax.set_xlabel("x1")
        ax.set_ylabel("y")
    ax.set_title(f"{kind} boundary")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
