"""Two-point weight sweeps and their delimited/vector outputs.

A sweep evaluates h(theta) on an even theta grid together with the distance
to the two-point locus, regenerating the content of the worked figures as
data.  Numbers are written in shortest round-trip decimal form so emitted
files parse back bit-identically.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .core import EPS_DEGENERATE, two_point_mean
from .errors import DegenerateMean
from .geometry import LocusDescription, two_point_locus


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a sweep; h and locus_distance are None when the mean
    is degenerate at this theta (sentinel row)."""

    theta: float
    h: complex | None
    locus_distance: float | None
    degenerate: bool = False


def two_point_sweep(
    c1: complex, c2: complex, steps: int, eps_degenerate: float = EPS_DEGENERATE
) -> tuple[list[SweepRow], LocusDescription]:
    """Rows for theta = k/(steps-1), k = 0..steps-1, plus the locus."""
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps!r}")
    locus = two_point_locus(c1, c2)
    rows = []
    for k in range(steps):
        theta = k / (steps - 1)
        try:
            h = two_point_mean(c1, c2, theta, eps_degenerate)
        except DegenerateMean:
            rows.append(SweepRow(theta, None, None, degenerate=True))
            continue
        dist = locus.distance(h) if locus.kind != "degenerate" else None
        rows.append(SweepRow(theta, h, dist))
    return rows, locus


def _fmt(x: float | None) -> str:
    return "" if x is None else repr(float(x))


def write_csv(rows: list[SweepRow], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["theta", "re", "im", "locus_dist", "degenerate"])
    for row in rows:
        writer.writerow([
            _fmt(row.theta),
            _fmt(row.h.real if row.h is not None else None),
            _fmt(row.h.imag if row.h is not None else None),
            _fmt(row.locus_distance),
            "1" if row.degenerate else "0",
        ])


def read_csv(fh) -> list[SweepRow]:
    """Parse a sweep CSV back into rows (inverse of write_csv)."""
    reader = csv.DictReader(fh)
    rows = []
    for rec in reader:
        degenerate = rec["degenerate"] == "1"
        h = None if degenerate else complex(float(rec["re"]), float(rec["im"]))
        dist = float(rec["locus_dist"]) if rec["locus_dist"] else None
        rows.append(SweepRow(float(rec["theta"]), h, dist, degenerate))
    return rows


def rows_to_json(rows: list[SweepRow]) -> list[dict]:
    out = []
    for row in rows:
        out.append({
            "theta": row.theta,
            "h": None if row.h is None else {"re": row.h.real, "im": row.h.imag},
            "locus_dist": row.locus_distance,
            "degenerate": row.degenerate,
        })
    return out


def _bounds(locus: LocusDescription, rows: list[SweepRow]):
    if locus.kind == "arc":
        o, r = locus.circle.center, locus.circle.radius
        return o.real - r, o.imag - r, o.real + r, o.imag + r
    pts = list(locus.endpoints)
    if locus.kind == "degenerate":
        pts += [row.h for row in rows if row.h is not None]
    xs = [p.real for p in pts]
    ys = [p.imag for p in pts]
    return min(xs), min(ys), max(xs), max(ys)


def write_svg(rows: list[SweepRow], locus: LocusDescription,
              c1: complex, c2: complex, fh) -> None:
    """Hand-rolled SVG: one locus path, the atoms, the origin, and one point
    marker per non-degenerate swept theta.  viewBox fits the locus bounding
    box with a 10% margin."""
    x0, y0, x1, y1 = _bounds(locus, rows)
    span = max(x1 - x0, y1 - y0, 1e-6)
    margin = 0.1 * span
    x0, y0, x1, y1 = x0 - margin, y0 - margin, x1 + margin, y1 + margin

    def pt(z: complex) -> tuple[float, float]:
        # SVG y grows downward; flip about the viewBox midline
        return z.real, (y0 + y1) - z.imag

    stroke = 0.004 * span
    dot = 0.012 * span
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.6g} {y0:.6g} {x1 - x0:.6g} {y1 - y0:.6g}">'
    ]
    if locus.kind == "arc":
        o, r = locus.circle.center, locus.circle.radius
        ox, oy = pt(o)
        out.append(
            f'<path class="locus" fill="none" stroke="#1f77b4" stroke-width="{stroke:.6g}" '
            f'd="M {ox + r:.17g} {oy:.17g} '
            f'A {r:.17g} {r:.17g} 0 1 0 {ox - r:.17g} {oy:.17g} '
            f'A {r:.17g} {r:.17g} 0 1 0 {ox + r:.17g} {oy:.17g} Z"/>'
        )
    else:
        (ax, ay), (bx, by) = pt(locus.endpoints[0]), pt(locus.endpoints[1])
        dash = ' stroke-dasharray="0.05"' if locus.kind == "degenerate" else ""
        out.append(
            f'<path class="locus" fill="none" stroke="#1f77b4" '
            f'stroke-width="{stroke:.6g}"{dash} d="M {ax:.17g} {ay:.17g} L {bx:.17g} {by:.17g}"/>'
        )
    for atom in (c1, c2):
        x, y = pt(atom)
        half = dot
        out.append(
            f'<rect class="atom" fill="#d62728" x="{x - half:.17g}" y="{y - half:.17g}" '
            f'width="{2 * half:.17g}" height="{2 * half:.17g}"/>'
        )
    ox, oy = pt(0j)
    arm = 1.5 * dot
    out.append(
        f'<path class="origin" stroke="#2ca02c" fill="none" stroke-width="{stroke:.6g}" '
        f'd="M {ox - arm:.17g} {oy:.17g} L {ox + arm:.17g} {oy:.17g} '
        f'M {ox:.17g} {oy - arm:.17g} L {ox:.17g} {oy + arm:.17g}"/>'
    )
    for row in rows:
        if row.h is None:
            continue
        x, y = pt(row.h)
        out.append(f'<circle class="pt" fill="#000000" cx="{x:.17g}" cy="{y:.17g}" r="{dot:.17g}"/>')
    out.append("</svg>")
    fh.write("\n".join(out) + "\n")


def svg_text(rows, locus, c1, c2) -> str:
    buf = io.StringIO()
    write_svg(rows, locus, c1, c2, buf)
    return buf.getvalue()
