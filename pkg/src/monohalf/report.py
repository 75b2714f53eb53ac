"""Benchmark tables and figures."""

from __future__ import annotations

import csv
import io
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

BENCH_FIELDS = ("graph-id", "n", "m", "omega", "hm", "enum-ms", "check-ms")

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def bench_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def plot_enumeration_time(rows, path: str) -> str:
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.8, 3.2))
        omegas = sorted({r["omega"] for r in rows})
        for w in omegas:
            sel = [r for r in rows if r["omega"] == w]
            ax.scatter([r["n"] for r in sel], [r["enum-ms"] for r in sel], s=12, label=f"ω = {w}")
        ax.set_xlabel("vertices n")
        ax.set_ylabel("enumeration time [ms]")
        ax.set_yscale("log")
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_count_vs_bound(rows, path: str) -> str:
    """|Hm(G)| against the counting bound; the diagonal marks equality."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.0, 4.0))
        xs = [float(r["bound"]) for r in rows]
        ys = [r["hm"] for r in rows]
        ax.scatter(xs, ys, s=12, c=[r["omega"] for r in rows], cmap="viridis")
        top = max(xs + ys + [1.0])
        ax.plot([1, top], [1, top], color="0.5", lw=0.8, ls="--")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("4m·2^ω/ω + 2")
        ax.set_ylabel("number of halfspaces")
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def write_bench_report(rows, out_dir: str) -> list[str]:
    """Write ``bench.csv`` plus two PNG figures into ``out_dir``."""
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "bench.csv")
    with open(csv_path, "w") as fh:
        fh.write(bench_csv({k: r[k] for k in BENCH_FIELDS} for r in rows))
    return [
        csv_path,
        plot_enumeration_time(rows, os.path.join(out_dir, "enum_time.png")),
        plot_count_vs_bound(rows, os.path.join(out_dir, "count_vs_bound.png")),
    ]
