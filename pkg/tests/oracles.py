"""Independent brute-force oracles shared by the test modules.

These stay deliberately ignorant of the closed forms they check: the disk
image is fitted from inverted boundary samples, and the smallest enclosing
disk is found by enumerating pair/triple candidate circles.
"""

import cmath
import math

import numpy as np

from chmean import Circline, Disk, circle, circle_through, invert_point, line

TAU = 2.0 * math.pi


def points_on(g: Circline, k: int) -> list[complex]:
    """k sample points satisfying the circline equation."""
    if g.is_line:
        base = -g.c * g.b / (2 * (g.b.real**2 + g.b.imag**2))
        direction = 1j * g.b / abs(g.b)
        return [base + t * direction for t in np.linspace(-3, 3, k)]
    o, r = g.center, g.radius
    return [o + r * cmath.exp(1j * t) for t in np.linspace(0, TAU, k, endpoint=False)]


def random_circline(rng) -> Circline:
    if rng.uniform() < 0.5:
        center = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        return circle(center, float(rng.uniform(0.1, 5)))
    n = cmath.exp(1j * rng.uniform(0, TAU))
    return line(n, float(rng.uniform(-5, 5)))


def oracle_invert_disk(disk: Disk, samples: int = 64) -> tuple[complex, float]:
    """Fit the image circle of a disk under z -> 1/z from boundary samples.

    The samples are aligned so the two points on the line through 0 and the
    center are included; their inversions are the image circle's diameter
    ends, found as the min/max-distance-from-origin samples.
    """
    phase = cmath.phase(disk.center)
    boundary = [disk.center + disk.radius * cmath.exp(1j * (phase + TAU * k / samples))
                for k in range(samples)]
    inverted = [invert_point(z) for z in boundary]
    radii = [abs(w) for w in inverted]
    wmin = inverted[int(np.argmin(radii))]
    wmax = inverted[int(np.argmax(radii))]
    center = (wmin + wmax) / 2.0
    radius = abs(wmax - wmin) / 2.0
    # sanity: every inverted sample sits on the fitted circle
    assert max(abs(abs(w - center) - radius) for w in inverted) < 1e-9 * radius + 1e-12
    return center, radius


def brute_force_smallest_disk(pts: list[complex]):
    """O(n^3) smallest enclosing disk: best pair-diameter or triple circle."""
    best = None
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            center = (pts[i] + pts[j]) / 2
            r = max(abs(p - center) for p in (pts[i], pts[j]))
            if all(abs(p - center) <= r * (1 + 1e-12) for p in pts):
                if best is None or r < best[1]:
                    best = (center, r)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                cross = ((pts[j] - pts[i]) * (pts[k] - pts[i]).conjugate()).imag
                if abs(cross) < 1e-12:
                    continue
                g = circle_through(pts[i], pts[j], pts[k])
                center, r = g.center, g.radius
                if all(abs(p - center) <= r * (1 + 1e-12) for p in pts):
                    if best is None or r < best[1]:
                        best = (center, r)
    return best
