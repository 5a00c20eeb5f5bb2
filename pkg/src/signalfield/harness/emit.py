"""File emission: trajectory tables and static field plots.

Everything here is batch output. Plots are vector files (SVG) drawn
with matplotlib's non-interactive backend: a locus plot of the path
through the 10 by 10 field, and an SSI timeline with the severity
bands shaded behind the curve.
"""

from __future__ import annotations

import csv
import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from signalfield import engine  # noqa: E402
from signalfield.engine import Region, SsiBand  # noqa: E402
from signalfield.register import Register, Signal  # noqa: E402

TRAJECTORY_HEADER = [
    "session",
    "day",
    "gap_class",
    "n",
    "w_eff",
    "x",
    "y",
    "region",
    "d",
    "sms",
    "occurrences",
    "f",
    "ssi",
    "band",
    "note",
]

REGION_NAMES = {
    Region.QUESTION_MARKS: "Question Marks",
    Region.LIT_FUSES: "Lit Fuses",
    Region.SLEEPING_CATS: "Sleeping Cats",
    Region.OWLS: "Owls",
}

REGION_COLORS = {
    Region.QUESTION_MARKS: "#4878a8",
    Region.LIT_FUSES: "#e07b39",
    Region.SLEEPING_CATS: "#6a9a58",
    Region.OWLS: "#c03a2b",
}

BAND_COLORS = {
    SsiBand.LOW: "#eaf2ea",
    SsiBand.MODERATE: "#fdf3d8",
    SsiBand.ELEVATED: "#fbe3cd",
    SsiBand.CRITICAL: "#f6d5d0",
}

# upper edges of the shaded SSI bands, in band order
_BAND_EDGES = (
    (SsiBand.LOW, 0.5),
    (SsiBand.MODERATE, 1.5),
    (SsiBand.ELEVATED, 2.5),
)


def slugify(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-")
    return slug or "signal"


def trajectory_rows(signal: Signal) -> list[list[str]]:
    rows = []
    for rec in signal.locus:
        rows.append(
            [
                str(rec.session_index),
                str(rec.day),
                rec.gap_class.value if rec.gap_class else "",
                str(rec.n),
                f"{rec.w_eff:.3f}" if rec.w_eff is not None else "",
                f"{rec.position.x:.4f}",
                f"{rec.position.y:.4f}",
                rec.region.value,
                f"{rec.d:.4f}",
                "1" if rec.sms else "0",
                str(rec.occurrences),
                str(rec.f),
                f"{rec.ssi:.4f}",
                rec.band.value,
                rec.note,
            ]
        )
    return rows


def write_trajectory_csv(signal: Signal, path: Path) -> None:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TRAJECTORY_HEADER)
        writer.writerows(trajectory_rows(signal))


def locus_figure(signal: Signal) -> plt.Figure:
    """Path through the field: numbered nodes colored by region,
    quadrant lines at the midpoint, rings on SMS-active sessions."""
    fig, ax = plt.subplots(figsize=(7.5, 7.5))
    mid = engine.FIELD_MAX / 2
    ax.axvline(mid, color="#999999", linewidth=0.8)
    ax.axhline(mid, color="#999999", linewidth=0.8)
    for region, (cx, cy) in (
        (Region.QUESTION_MARKS, (0.25, 0.04)),
        (Region.LIT_FUSES, (0.75, 0.04)),
        (Region.SLEEPING_CATS, (0.25, 0.96)),
        (Region.OWLS, (0.75, 0.96)),
    ):
        ax.text(
            cx,
            cy,
            REGION_NAMES[region],
            transform=ax.transAxes,
            ha="center",
            va="center",
            fontsize=9,
            color="#777777",
        )
    xs = [rec.position.x for rec in signal.locus]
    ys = [rec.position.y for rec in signal.locus]
    ax.plot(xs, ys, color="#bbbbbb", linewidth=1.0, zorder=1)
    for rec in signal.locus:
        color = REGION_COLORS[rec.region]
        if rec.sms:
            ax.scatter(
                rec.position.x,
                rec.position.y,
                s=200,
                facecolors="none",
                edgecolors="#c03a2b",
                linewidths=1.4,
                zorder=2,
            )
        ax.scatter(rec.position.x, rec.position.y, s=60, color=color, zorder=3)
        ax.annotate(
            str(rec.session_index),
            (rec.position.x, rec.position.y),
            textcoords="offset points",
            xytext=(6, 6),
            fontsize=7,
            color="#444444",
        )
    ax.set_xlim(0, engine.FIELD_MAX)
    ax.set_ylim(0, engine.FIELD_MAX)
    ax.set_xlabel("Risk intensity (x)")
    ax.set_ylabel("Risk growth potential (y)")
    ax.set_title(f"{signal.name}: session locus")
    ax.set_aspect("equal")
    fig.tight_layout()
    return fig


def ssi_figure(signal: Signal) -> plt.Figure:
    """SSI per session over shaded severity bands, with SMS markers."""
    fig, ax = plt.subplots(figsize=(9, 4.5))
    sessions = [rec.session_index for rec in signal.locus]
    values = [rec.ssi for rec in signal.locus]
    top = max(3.0, max(values) + 0.5)
    lower = 0.0
    for band, edge in _BAND_EDGES:
        ax.axhspan(lower, edge, color=BAND_COLORS[band], zorder=0)
        lower = edge
    ax.axhspan(lower, top, color=BAND_COLORS[SsiBand.CRITICAL], zorder=0)
    ax.plot(sessions, values, color="#4878a8", marker="o", markersize=4, zorder=2)
    sms_x = [rec.session_index for rec in signal.locus if rec.sms]
    sms_y = [rec.ssi for rec in signal.locus if rec.sms]
    if sms_x:
        ax.scatter(
            sms_x,
            sms_y,
            s=140,
            facecolors="none",
            edgecolors="#c03a2b",
            linewidths=1.4,
            zorder=3,
            label="SMS active",
        )
        ax.legend(loc="upper right")
    ax.set_xlim(min(sessions) - 0.5, max(sessions) + 0.5)
    ax.set_ylim(0.0, top)
    ax.set_xlabel("Session")
    ax.set_ylabel("SSI")
    ax.set_title(f"{signal.name}: signal significance over time")
    fig.tight_layout()
    return fig


def emit_outputs(
    register: Register,
    out_dir: Path,
    formats: tuple[str, ...] = ("csv", "svg"),
) -> list[Path]:
    """Write per-signal trajectory tables and plots into out_dir.

    Returns the written paths; an empty register writes nothing and
    returns an empty list.
    """
    unknown = set(formats) - {"csv", "svg"}
    if unknown:
        raise ValueError(f"unsupported formats: {sorted(unknown)}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for signal in register.signals.values():
        stem = f"{signal.id}-{slugify(signal.name)}"
        if "csv" in formats:
            path = out_dir / f"{stem}-trajectory.csv"
            write_trajectory_csv(signal, path)
            written.append(path)
        if "svg" in formats:
            for suffix, figure in (
                ("locus", locus_figure(signal)),
                ("ssi", ssi_figure(signal)),
            ):
                path = out_dir / f"{stem}-{suffix}.svg"
                figure.savefig(path, format="svg")
                plt.close(figure)
                written.append(path)
    return written
