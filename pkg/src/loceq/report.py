"""Figures and delimited tables for census and verification runs.

Figures are written straight to files through the Agg backend; nothing here
opens a window.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .orbits import label_string, orbit_bound  # noqa: E402

__all__ = ["plot_census", "plot_verification", "census_table", "verification_table"]


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_census(report, path):
    """Bar chart of the orbit-size histogram, with the orbit-size bound marked."""
    sizes = sorted(report.size_histogram)
    counts = [report.size_histogram[s] for s in sizes]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar([str(s) for s in sizes], counts, color="tab:blue")
    ax.set_xlabel("orbit size l(G)")
    ax.set_ylabel("number of classes")
    kind = "connected" if report.connected_only else "all"
    ax.set_title(
        f"q={report.q}, n={report.n} ({kind}): C={report.class_count}, "
        f"max l bound={orbit_bound(report.q, report.n)}"
    )
    if len(sizes) > 12:
        for lab in ax.get_xticklabels():
            lab.set_rotation(90)
    return _finish(fig, path)


def plot_verification(reports, path):
    """Scatter of ``|scalar orbit| * λ`` against ``(q-1) ε`` (or ``l λ`` against ε when q = 2)."""
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    xs, ys, colors = [], [], []
    for r in reports:
        q = r.graph.q
        xs.append((q - 1) * r.epsilon)
        ys.append(r.scalar_orbit_size * r.lam if q != 2 else r.l * r.lam)
        colors.append("tab:green" if r.ok else "tab:red")
    ax.scatter(xs, ys, c=colors, s=14)
    if xs:
        hi = max(max(xs), max(ys))
        ax.plot([0, hi], [0, hi], color="0.5", lw=0.8, ls="--")
    ax.set_xlabel("(q-1) * epsilon")
    ax.set_ylabel("orbit count * lambda")
    ax.set_title(f"{sum(r.ok for r in reports)}/{len(reports)} graphs satisfy the identity")
    return _finish(fig, path)


def census_table(report, sep="\t"):
    lines = [sep.join(("representative", "orbit_size"))]
    for key, size in zip(report.representatives, report.orbit_sizes):
        lines.append(sep.join((label_string(key), str(size))))
    return "\n".join(lines) + "\n"


def verification_table(reports, sep="\t"):
    cols = ("graph", "l", "scalar_orbit_size", "epsilon", "lambda", "ok")
    lines = [sep.join(cols)]
    for r in reports:
        d = r.as_dict()
        lines.append(
            sep.join(
                (d["graph"], str(r.l), str(r.scalar_orbit_size), str(r.epsilon), str(r.lam), str(r.ok))
            )
        )
    return "\n".join(lines) + "\n"
