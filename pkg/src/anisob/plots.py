"""Figure rendering for the report-producing CLI subcommands.

Each function takes the rows a subcommand already computed and writes one
figure file next to the delimited output.  Rendering is headless (Agg) and
only happens when a plot path is requested, so the numeric pipeline never
depends on a display.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _finish(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_widths_plot(rows, path: str) -> str:
    """rows: (n, a_n) pairs."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog([r[0] for r in rows], [r[1] for r in rows], "o-", ms=4)
    ax.set_xlabel("n")
    ax.set_ylabel("approximation number")
    ax.grid(True, which="both", alpha=0.3)
    return _finish(fig, path)


def save_eigs_plot(rows, path: str) -> str:
    """rows: (n, eigenvalue) pairs."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy([r[0] for r in rows], [r[1] for r in rows], "o-", ms=4)
    ax.set_xlabel("n")
    ax.set_ylabel("eigenvalue")
    ax.grid(True, which="both", alpha=0.3)
    return _finish(fig, path)


def save_equiv_plot(rows, path: str) -> str:
    """rows: EquivalenceRow records."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogx([r.n for r in rows], [r.ratio for r in rows], "o-", ms=4)
    ax.axhline(1.0, color="k", lw=0.8, ls="--")
    ax.set_xlabel("n")
    ax.set_ylabel("n**g * a_n / limit constant")
    ax.grid(True, which="both", alpha=0.3)
    return _finish(fig, path)


def save_sandwich_plot(rows, path: str) -> str:
    """rows: SandwichRow records."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ms = [r.m for r in rows]
    ax.semilogy(ms, [max(r.lower, 1e-300) for r in rows], "v--", ms=4, label="lower")
    ax.semilogy(ms, [r.count for r in rows], "o-", ms=4, label="count")
    ax.semilogy(ms, [r.upper for r in rows], "^--", ms=4, label="upper")
    ax.set_xlabel("m")
    ax.set_ylabel("lattice count and volume bounds")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    return _finish(fig, path)


def save_probe_plot(rows, path: str) -> str:
    """rows: ProbeCell records; one line per dimension."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for d in sorted({r.d for r in rows}):
        pts = [(1.0 / r.eps, r.ratio) for r in rows if r.d == d and r.ratio is not None]
        if pts:
            ax.semilogx([p[0] for p in pts], [p[1] for p in pts], "o-", ms=4, label=f"d={d}")
    ax.set_xlabel("1/eps")
    ax.set_ylabel("log n / (eps**-s + d**t)")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    return _finish(fig, path)
