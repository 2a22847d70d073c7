"""Generalized circles (circlines) under the inversion z -> 1/z, plus
disk/half-plane regions and the circle-through-three-points construction.

A circline is the zero set { z : a|z|^2 + 2 Re(conj(b) z) + c = 0 }: a true
circle when a != 0, a line when a = 0.  Inversion acts on the coefficients as
the exact swap (a, b, c) -> (c, conj(b), a), which makes the image of a
circline a one-line algebraic operation and the double inversion a bitwise
identity.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Sequence, Union

from .core import EPS_DEGENERATE, inner_product
from .errors import (
    CoincidentPoints,
    ContainsOrigin,
    DegenerateCircline,
    DegenerateImage,
    NearPole,
)

TAU = 2.0 * math.pi

#: Normalized-cross-product threshold deciding the collinear branch.
EPS_COLLINEAR = 1e-12

#: Two construction points closer than this (relative to scale) coincide.
EPS_COINCIDENT = 1e-14


def _abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


@dataclass(frozen=True)
class Circline:
    """Generalized circle { z : a|z|^2 + 2 Re(conj(b) z) + c = 0 }.

    Coefficients are stored up to a positive scale, canonicalized only by an
    exact sign flip (a > 0 for circles; for lines, the first non-zero
    component of b is positive).  Rescaling at construction would round and
    break the bitwise involution of inversion; the conventional scale (a = 1
    for circles, |b| = 1 for lines) is available via ``normalized()`` and the
    center/radius/normal/offset properties.

    Non-degeneracy |b|^2 - a*c > 0 guarantees a non-empty set that is not a
    single point.
    """

    a: float
    b: complex
    c: float

    def __post_init__(self):
        a = float(self.a)
        b = complex(self.b)
        c = float(self.c)
        if not (math.isfinite(a) and math.isfinite(c) and cmath.isfinite(b)):
            raise DegenerateCircline("non-finite circline coefficients")
        if self.discriminant_of(a, b, c) <= 0.0:
            raise DegenerateCircline(
                f"degenerate circline: |b|^2 - a*c = {self.discriminant_of(a, b, c)!r}"
            )
        if a != 0.0:
            flip = a < 0.0
        else:
            flip = b.real < 0.0 or (b.real == 0.0 and b.imag < 0.0)
        if flip:
            a, b, c = -a, -b, -c
        # +0.0 collapses any negative zero so canonical forms compare cleanly
        object.__setattr__(self, "a", a + 0.0)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c + 0.0)

    @staticmethod
    def discriminant_of(a: float, b: complex, c: float) -> float:
        return b.real * b.real + b.imag * b.imag - a * c

    @property
    def discriminant(self) -> float:
        return self.discriminant_of(self.a, self.b, self.c)

    @property
    def is_line(self) -> bool:
        return self.a == 0.0

    @property
    def center(self) -> complex:
        if self.is_line:
            raise ValueError("a line has no center")
        return -self.b / self.a

    @property
    def radius(self) -> float:
        if self.is_line:
            raise ValueError("a line has no radius")
        return math.sqrt(self.discriminant) / abs(self.a)

    @property
    def normal(self) -> complex:
        """Unit normal of a line, oriented so that normal.z = offset on it."""
        if not self.is_line:
            raise ValueError("a circle has no normal")
        return self.b / abs(self.b)

    @property
    def offset(self) -> float:
        if not self.is_line:
            raise ValueError("a circle has no offset")
        return -self.c / (2.0 * abs(self.b))

    def normalized(self) -> "Circline":
        """Conventional scale: a = 1 for circles, |b| = 1 for lines."""
        if self.a != 0.0:
            return Circline(1.0, self.b / self.a, self.c / self.a)
        s = abs(self.b)
        return Circline(0.0, self.b / s, self.c / s)

    def evaluate(self, z: complex) -> float:
        """The implicit form a|z|^2 + 2 Re(conj(b) z) + c at z."""
        return self.a * _abs2(z) + 2.0 * inner_product(self.b, z) + self.c

    def residual(self, z: complex) -> float:
        """evaluate(z) normalized by the coefficient magnitude."""
        scale = max(abs(self.a), abs(self.b), abs(self.c))
        return self.evaluate(z) / scale


def circle(center: complex, radius: float) -> Circline:
    """Circline for the circle |z - center| = radius."""
    if not radius > 0.0:
        raise DegenerateCircline(f"radius must be positive, got {radius!r}")
    return Circline(1.0, -center, _abs2(center) - radius * radius)


def line(normal: complex, offset: float) -> Circline:
    """Circline for the line { z : normal.z = offset } (normal need not be unit)."""
    if normal == 0:
        raise DegenerateCircline("line normal must be non-zero")
    u = normal / abs(normal)
    return Circline(0.0, u, -2.0 * offset)


def invert_point(z: complex, eps_degenerate: float = EPS_DEGENERATE) -> complex:
    """The inversion z -> 1/z, computed as conj(z)/|z|^2."""
    if abs(z) <= eps_degenerate:
        raise NearPole(f"|z| = {abs(z):.3e} is too close to the pole at 0")
    return z.conjugate() / _abs2(z)


def invert_circline(g: Circline) -> Circline:
    """Image of a circline under z -> 1/z: the exact coefficient swap.

    Substituting z = 1/w into a|z|^2 + 2 Re(conj(b) z) + c = 0 and clearing
    |w|^2 gives c|w|^2 + 2 Re(b w) + a = 0.  Applying the swap twice returns
    the original coefficients bit for bit.
    """
    try:
        return Circline(g.c, g.b.conjugate(), g.a)
    except DegenerateCircline as exc:  # pragma: no cover - discriminant is preserved
        raise DegenerateImage(str(exc)) from exc


@dataclass(frozen=True)
class Disk:
    """Closed disk { z : |z - center| <= radius }."""

    center: complex
    radius: float

    def __post_init__(self):
        c = complex(self.center)
        r = float(self.radius)
        if not (cmath.isfinite(c) and math.isfinite(r)):
            raise ValueError("disk parameters must be finite")
        if not r > 0.0:
            raise ValueError(f"disk radius must be positive, got {r!r}")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", r)


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane { z : normal.z >= offset } with |normal| = 1."""

    normal: complex
    offset: float

    def __post_init__(self):
        n = complex(self.normal)
        a = float(self.offset)
        if not (cmath.isfinite(n) and math.isfinite(a)):
            raise ValueError("half-plane parameters must be finite")
        if abs(abs(n) - 1.0) > 1e-12:
            raise ValueError(f"half-plane normal must be unit, got |n| = {abs(n)!r}")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", a)


Region = Union[Disk, HalfPlane]


def region_contains(region: Region, z: complex, tol: float) -> bool:
    """Membership of z in the region, slackened outward by tol >= 0."""
    if tol < 0.0:
        raise ValueError("tol must be nonnegative")
    if isinstance(region, Disk):
        return abs(z - region.center) <= region.radius + tol
    if isinstance(region, HalfPlane):
        return inner_product(region.normal, z) >= region.offset - tol
    raise TypeError(f"unsupported region type {type(region).__name__}")


def invert_region(region: Region) -> Region:
    """Image of a region with 0 not in its interior under z -> 1/z.

    A disk with r < |c| maps to the disk (conj(c)/(|c|^2 - r^2),
    r/(|c|^2 - r^2)); the boundary case r = |c| maps to a closed half-plane;
    a half-plane with offset a > 0 maps to the disk (conj(n)/(2a), 1/(2a)),
    and with a = 0 to a half-plane through 0.
    """
    if isinstance(region, Disk):
        c, r = region.center, region.radius
        ac = abs(c)
        if r > ac:
            raise ContainsOrigin(f"disk has 0 in its interior (r = {r!r} > |c| = {ac!r})")
        if r == ac:
            # boundary through 0: the image is the half-plane bounded by the
            # inverted boundary line, on the side of an inverted interior witness
            n = c.conjugate() / ac
            a = 1.0 / (2.0 * ac)
            witness = invert_point(c)
            if inner_product(n, witness) < a:
                n, a = -n, -a
            return HalfPlane(n, a)
        d = (ac - r) * (ac + r)
        return Disk(c.conjugate() / d, r / d)
    if isinstance(region, HalfPlane):
        n, a = region.normal, region.offset
        if a < 0.0:
            raise ContainsOrigin(f"half-plane has 0 in its interior (offset {a!r} < 0)")
        if a == 0.0:
            return HalfPlane(n.conjugate(), 0.0)
        return Disk(n.conjugate() / (2.0 * a), 1.0 / (2.0 * a))
    raise TypeError(f"unsupported region type {type(region).__name__}")


def circle_through(p1: complex, p2: complex, p3: complex) -> Circline:
    """The unique circline through three distinct points.

    Collinearity is decided by |Im((p2-p1) * conj(p3-p1))| <= EPS_COLLINEAR
    * scale^2 with scale the maximum pairwise distance; collinear points give
    a line.
    """
    p1, p2, p3 = complex(p1), complex(p2), complex(p3)
    d12, d13, d23 = abs(p2 - p1), abs(p3 - p1), abs(p3 - p2)
    scale = max(d12, d13, d23)
    if min(d12, d13, d23) <= EPS_COINCIDENT * scale:
        raise CoincidentPoints("two construction points coincide")
    u = p2 - p1
    v = p3 - p1
    cross = (u * v.conjugate()).imag
    if abs(cross) <= EPS_COLLINEAR * scale * scale:
        n = 1j * u / abs(u)
        return line(n, inner_product(n, p1))
    # circumcenter relative to p1: solve 2 Re(conj(u) w) = |u|^2,
    # 2 Re(conj(v) w) = |v|^2 for w = center - p1
    u2 = _abs2(u)
    v2 = _abs2(v)
    det = u.real * v.imag - u.imag * v.real
    x = (u2 * v.imag - v2 * u.imag) / (2.0 * det)
    y = (v2 * u.real - u2 * v.real) / (2.0 * det)
    center = p1 + complex(x, y)
    radius = math.hypot(x, y)
    return Circline(1.0, -center, _abs2(center) - radius * radius)


def _segment_distance(p: complex, e1: complex, e2: complex) -> float:
    d = e2 - e1
    t = inner_product(d, p - e1) / _abs2(d)
    t = min(1.0, max(0.0, t))
    return abs(p - (e1 + t * d))


@dataclass(frozen=True)
class LocusDescription:
    """Where the two-point harmonic mean lives as the weight sweeps [0, 1].

    kind = "arc": the arc of ``circle`` between the endpoints that avoids
    ``excluded`` (the origin).  kind = "segment": the straight segment
    between the endpoints.  kind = "degenerate": 0 lies strictly between two
    collinear atoms, the mean blows up at one weight and no bounded locus is
    claimed.
    """

    kind: str
    endpoints: tuple[complex, complex]
    circle: Circline | None = None
    excluded: complex = 0j

    def _arc_interval(self) -> tuple[float, float]:
        """(start angle, ccw span) of the valid arc about the circle center."""
        o = self.circle.center
        a1 = cmath.phase(self.endpoints[0] - o)
        a2 = cmath.phase(self.endpoints[1] - o)
        a0 = cmath.phase(self.excluded - o)
        span = (a2 - a1) % TAU
        if (a0 - a1) % TAU <= span:
            # excluded point sits on the ccw arc from c1 to c2; take the other one
            return a2, TAU - span
        return a1, span

    def distance(self, p: complex) -> float:
        """Distance from p to the locus as a point set."""
        if self.kind == "segment":
            return _segment_distance(p, *self.endpoints)
        if self.kind == "arc":
            o = self.circle.center
            r = self.circle.radius
            start, span = self._arc_interval()
            off = (cmath.phase(p - o) - start) % TAU
            if off <= span or off >= TAU - 1e-12:
                return abs(abs(p - o) - r)
            return min(abs(p - self.endpoints[0]), abs(p - self.endpoints[1]))
        raise ValueError("a degenerate locus has no distance")

    def contains(self, p: complex, tol: float) -> bool:
        """Membership within tol; for arcs both the circle residual and the
        angular interval (excluded point left out) must agree."""
        if self.kind == "segment":
            return _segment_distance(p, *self.endpoints) <= tol
        if self.kind == "arc":
            o = self.circle.center
            r = self.circle.radius
            if abs(abs(p - o) - r) > tol:
                return False
            start, span = self._arc_interval()
            slop = tol / r + 1e-12
            off = (cmath.phase(p - o) - start) % TAU
            return off <= span + slop or off >= TAU - slop
        return False


def two_point_locus(c1: complex, c2: complex) -> LocusDescription:
    """Locus of H[Z] for Range[Z] = {c1, c2} as the weight sweeps [0, 1].

    Non-collinear with 0: the arc through c1, c2 avoiding 0 of the circle
    through c1, c2 and 0.  Collinear with 0 outside [c1, c2]: the segment.
    Collinear with 0 strictly inside: degenerate.
    """
    c1, c2 = complex(c1), complex(c2)
    if c1 == 0 or c2 == 0:
        raise ValueError("atoms must be non-zero")
    if c1 == c2:
        raise ValueError("atoms must be distinct")
    scale = max(abs(c1), abs(c2), abs(c1 - c2))
    cross = (c1 * c2.conjugate()).imag
    if abs(cross) > EPS_COLLINEAR * scale * scale:
        return LocusDescription("arc", (c1, c2), circle=circle_through(c1, c2, 0j))
    if inner_product(c1, c2) < 0.0:
        return LocusDescription("degenerate", (c1, c2))
    return LocusDescription("segment", (c1, c2))


def _circumcircle(a: complex, b: complex, c: complex) -> tuple[complex, float] | None:
    ox = (min(a.real, b.real, c.real) + max(a.real, b.real, c.real)) / 2.0
    oy = (min(a.imag, b.imag, c.imag) + max(a.imag, b.imag, c.imag)) / 2.0
    o = complex(ox, oy)
    ra, rb, rc = a - o, b - o, c - o
    d = 2.0 * (ra.real * (rb.imag - rc.imag) + rb.real * (rc.imag - ra.imag)
               + rc.real * (ra.imag - rb.imag))
    if d == 0.0:
        return None
    x = ox + (_abs2(ra) * (rb.imag - rc.imag) + _abs2(rb) * (rc.imag - ra.imag)
              + _abs2(rc) * (ra.imag - rb.imag)) / d
    y = oy + (_abs2(ra) * (rc.real - rb.real) + _abs2(rb) * (ra.real - rc.real)
              + _abs2(rc) * (rb.real - ra.real)) / d
    center = complex(x, y)
    return center, max(abs(a - center), abs(b - center), abs(c - center))


def _in_circle(c: tuple[complex, float] | None, p: complex) -> bool:
    return c is not None and abs(p - c[0]) <= c[1] * (1.0 + 1e-14)


def smallest_enclosing_disk(points: Sequence[complex]) -> Disk:
    """Smallest disk enclosing the points (Welzl's move-to-front algorithm).

    Expected O(n); the shuffle is seeded so results are reproducible, though
    only correctness (membership of every point) is promised.
    """
    pts = [complex(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    rng = random.Random(0x5EED)
    rng.shuffle(pts)

    best: tuple[complex, float] | None = None
    for i, p in enumerate(pts):
        if best is None or not _in_circle(best, p):
            best = _disk_one_boundary(pts[: i + 1], p)
    return Disk(best[0], best[1])


def _disk_one_boundary(pts: list[complex], p: complex) -> tuple[complex, float]:
    best = (p, 0.0)
    for i, q in enumerate(pts):
        if not _in_circle(best, q):
            if best[1] == 0.0:
                best = _diameter(p, q)
            else:
                best = _disk_two_boundary(pts[: i + 1], p, q)
    return best


def _disk_two_boundary(pts: list[complex], p: complex, q: complex) -> tuple[complex, float]:
    circ = _diameter(p, q)
    left: tuple[complex, float] | None = None
    right: tuple[complex, float] | None = None
    pq = q - p
    for r in pts:
        if _in_circle(circ, r):
            continue
        cross = (pq * (r - p).conjugate()).imag
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        side = (pq * (c[0] - p).conjugate()).imag
        if cross > 0.0 and (left is None or side > (pq * (left[0] - p).conjugate()).imag):
            left = c
        elif cross < 0.0 and (right is None or side < (pq * (right[0] - p).conjugate()).imag):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[1] <= right[1] else right


def _diameter(a: complex, b: complex) -> tuple[complex, float]:
    center = (a + b) / 2.0
    return center, max(abs(a - center), abs(b - center))
