"""Render the five sweep presets from their CSV files.

The renderer never recomputes any quantity: it validates the CSV header
against the preset's schema, reshapes the grid, and plots.  Headers must
match exactly; a mismatch fails with the offending column names.
"""

from __future__ import annotations

import argparse
import csv
import pathlib
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

PRESET_SCHEMAS = {
    "fig1": ("z", "p", "S"),
    "fig2": ("z", "p", "laqc", "qd", "concurrence"),
    "fig3": ("z", "p", "Sprime"),
    "fig4": ("F", "gplus", "g1"),
    "fig5": ("F", "laqc", "qd", "concurrence"),
}

AXIS_LABELS = {
    "fig1": ("z", "p", "S(z, p)"),
    "fig2": ("z", "p", None),
    "fig3": ("z", "p", "S'(z, p)"),
    "fig4": ("F", "bits", None),
    "fig5": ("F", "value", None),
}


class SchemaError(ValueError):
    """Raised when a CSV header does not match the preset schema."""


@dataclass(frozen=True)
class FigureJob:
    """One rendering task: a preset, its input CSV, and the output image."""

    preset: str
    csv_path: pathlib.Path
    out_path: pathlib.Path
    labels: tuple = field(default=None)

    def __post_init__(self):
        if self.preset not in PRESET_SCHEMAS:
            raise ValueError(f"unknown preset {self.preset!r}")
        if self.labels is None:
            object.__setattr__(self, "labels", AXIS_LABELS[self.preset])


def load_columns(job: FigureJob) -> dict:
    """Read the CSV and return {column: 1-D float array}, schema-checked."""
    expected = PRESET_SCHEMAS[job.preset]
    with open(job.csv_path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise SchemaError(f"{job.csv_path}: empty CSV")
        if header != expected:
            missing = [c for c in expected if c not in header]
            unexpected = [c for c in header if c not in expected]
            raise SchemaError(
                f"{job.csv_path}: header mismatch for {job.preset}: "
                f"missing columns {missing}, unexpected columns {unexpected}, "
                f"expected exact order {list(expected)}"
            )
        rows = [[float(v) for v in row] for row in reader if row]
    if not rows:
        raise SchemaError(f"{job.csv_path}: no data rows")
    data = np.asarray(rows)
    return {name: data[:, k] for k, name in enumerate(expected)}


def _grid(cols, xname, yname, zname):
    """Reshape outer-ascending/inner-ascending rows into a 2-D surface."""
    x = np.unique(cols[xname])
    y = np.unique(cols[yname])
    z = cols[zname].reshape(len(x), len(y))
    return x, y, z


def _render_surface(cols, job, zname):
    x, y, z = _grid(cols, "z", "p", zname)
    fig, ax = plt.subplots(figsize=(6, 5))
    mesh = ax.pcolormesh(y, x, z, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label=job.labels[2])
    ax.set_xlabel(job.labels[1])
    ax.set_ylabel(job.labels[0])
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    return fig


def _render_panels(cols, job):
    x, y, _ = _grid(cols, "z", "p", "laqc")
    names = ("laqc", "qd", "concurrence")
    titles = ("LAQC", "quantum discord", "concurrence")
    fig, axes = plt.subplots(3, 1, figsize=(6, 12), constrained_layout=True)
    for ax, name, title in zip(axes, names, titles):
        z = cols[name].reshape(len(x), len(y))
        mesh = ax.pcolormesh(y, x, z, shading="nearest", cmap="viridis")
        fig.colorbar(mesh, ax=ax, label=title)
        ax.set_xlabel(job.labels[1])
        ax.set_ylabel(job.labels[0])
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
    return fig


def _render_curves(cols, job, series):
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for name, style, label in series:
        ax.plot(cols["F"], cols[name], style, label=label)
    ax.set_xlabel(job.labels[0])
    ax.set_ylabel(job.labels[1])
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.legend()
    return fig


def render(job: FigureJob) -> pathlib.Path:
    """Render one job and return the written image path."""
    cols = load_columns(job)
    if job.preset == "fig1":
        fig = _render_surface(cols, job, "S")
    elif job.preset == "fig2":
        fig = _render_panels(cols, job)
    elif job.preset == "fig3":
        fig = _render_surface(cols, job, "Sprime")
    elif job.preset == "fig4":
        fig = _render_curves(
            cols, job, (("gplus", "k-", "g_plus"), ("g1", "-", "g1"))
        )
    else:
        fig = _render_curves(
            cols,
            job,
            (
                ("laqc", "-", "LAQC"),
                ("qd", "--", "quantum discord"),
                ("concurrence", ":", "concurrence"),
            ),
        )
    job.out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(job.out_path, dpi=150)
    plt.close(fig)
    return job.out_path


def render_all(csv_dir, out_dir, presets=None) -> list:
    csv_dir = pathlib.Path(csv_dir)
    out_dir = pathlib.Path(out_dir)
    written = []
    for preset in presets or sorted(PRESET_SCHEMAS):
        job = FigureJob(
            preset=preset,
            csv_path=csv_dir / f"{preset}.csv",
            out_path=out_dir / f"{preset}.png",
        )
        written.append(render(job))
    return written


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="render_figures",
        description="Render figure presets from laqc sweep CSV files",
    )
    ap.add_argument("csv_dir", help="directory containing figN.csv files")
    ap.add_argument("out_dir", help="directory to write figN.png files")
    ap.add_argument("--preset", choices=sorted(PRESET_SCHEMAS), default=None)
    args = ap.parse_args(argv)
    try:
        written = render_all(
            args.csv_dir, args.out_dir, [args.preset] if args.preset else None
        )
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
