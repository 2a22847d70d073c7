"""Executable theorem checks: each evaluates both sides of a bound on a
concrete distribution and emits a quantified BoundReport.

Every check holds for every input satisfying its hypotheses; a failed report
therefore signals an implementation bug or a tolerance breach, never new
mathematics.  Hypothesis violations raise HypothesisViolated (a refusal)
rather than producing a false report.

The randomized suites at the bottom drive the checks over seeded populations;
they back both the property tests and the ``verify`` CLI subcommand.  Only
the stated sufficient direction of the equality conditions (Z = vX) is
exercised; the converse is untested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import (
    FiniteDistribution,
    RealDistribution,
    SampleSet,
    complex_json,
    distribution_to_json_dict,
    expectation,
    existence_certificate,
    harmonic_mean,
    harmonic_mean_positive,
    inner_product,
    mean_inverse,
    pushforward_inner,
    pushforward_modulus,
    two_point_mean,
)
from .errors import ChMeanError, DegenerateMean, HypothesisViolated
from .geometry import (
    Disk,
    HalfPlane,
    Region,
    invert_region,
    region_contains,
    two_point_locus,
)

#: Default report tolerance: two orders above accumulated rounding at desk
#: scale, far below any true slack in random tests.
DEFAULT_TOL = 1e-10

#: The two algebraic forms of the proof quantity I must agree this tightly.
PROOF_I_IDENTITY_TOL = 1e-12


@dataclass(frozen=True)
class BoundReport:
    """One theorem check: both sides, the signed margin, and the verdict.

    ``slack >= -tol`` if and only if ``holds``.  ``refused`` marks reports
    that could not assert anything (degenerate locus); those carry
    slack = nan and holds = False but are not counterexamples.
    """

    name: str
    lhs: float | complex
    rhs: float | complex
    slack: float
    holds: bool
    tol: float
    notes: str = ""
    refused: bool = False

    def to_json_dict(self) -> dict:
        def _value(v):
            return complex_json(v) if isinstance(v, complex) else v

        return {
            "name": self.name,
            "lhs": _value(self.lhs),
            "rhs": _value(self.rhs),
            "slack": self.slack,
            "holds": self.holds,
            "tol": self.tol,
            "notes": ("REFUSED: " + self.notes) if self.refused else self.notes,
        }


def check_modulus(dist: FiniteDistribution | SampleSet, tol: float = DEFAULT_TOL) -> BoundReport:
    """|H[Z]| >= H[|Z|], with equality when Z = vX for constant v."""
    h = harmonic_mean(dist)
    lhs = abs(h)
    if isinstance(dist, FiniteDistribution):
        rhs = harmonic_mean_positive(pushforward_modulus(dist))
    else:
        rhs = float(1.0 / np.mean(1.0 / np.abs(dist.samples)))
    slack = lhs - rhs
    return BoundReport("modulus", lhs, rhs, slack, slack >= -tol, tol,
                       notes=f"H[Z]={h!r}")


def check_inner_product(
    dist: FiniteDistribution, c: complex, tol: float = DEFAULT_TOL
) -> BoundReport:
    """c.H[Z] >= H[c.Z], under the hypothesis min c.z = a > 0 on the support."""
    cert = existence_certificate(dist, c)
    if not cert.satisfied:
        raise HypothesisViolated(
            f"certificate fails for c = {c!r}: atom {cert.violating_atom} has "
            f"c.z = {cert.a!r} <= 0"
        )
    h = harmonic_mean(dist)
    lhs = inner_product(c, h)
    rhs = harmonic_mean_positive(pushforward_inner(dist, c))
    slack = lhs - rhs
    return BoundReport("inner_product", lhs, rhs, slack, slack >= -tol, tol,
                       notes=f"c={c!r} a={cert.a!r}")


def proof_quantity_forms(dist: FiniteDistribution) -> tuple[float, float]:
    """The nonnegative quantity behind the real-part estimate, both ways.

    Primary form:   E[1/ReZ] E[ReZ/|Z|^2] - E[ReZ/|Z|^2]^2 - E[ImZ/|Z|^2]^2
    Decomposed form: E[(ImZ)^2/(ReZ|Z|^2)] E[ReZ/|Z|^2] - E[ImZ/|Z|^2]^2
    which are equal by 1/ReZ - ReZ/|Z|^2 = (ImZ)^2/(ReZ |Z|^2).
    """
    e_inv_re = 0.0
    e_re = 0.0
    e_im = 0.0
    e_cross = 0.0
    for i, (z, w) in enumerate(dist.atoms):
        if w > 0.0 and z.real <= 0.0:
            raise HypothesisViolated(f"atom {i}: Re z = {z.real!r} is not positive")
        a2 = z.real * z.real + z.imag * z.imag
        e_inv_re += w * (1.0 / z.real)
        e_re += w * (z.real / a2)
        e_im += w * (z.imag / a2)
        e_cross += w * (z.imag * z.imag / (z.real * a2))
    primary = e_inv_re * e_re - e_re * e_re - e_im * e_im
    decomposed = e_cross * e_re - e_im * e_im
    return primary, decomposed


def proof_quantity_I(dist: FiniteDistribution, tol: float = DEFAULT_TOL) -> BoundReport:
    """I >= 0 (Cauchy-Schwarz); requires Re z > 0 on the support.

    Raises ChMeanError if the two algebraic forms of I disagree beyond
    PROOF_I_IDENTITY_TOL, which would be an implementation bug.
    """
    primary, decomposed = proof_quantity_forms(dist)
    delta = abs(primary - decomposed)
    if delta > PROOF_I_IDENTITY_TOL:
        raise ChMeanError(
            f"proof-quantity identity violated: forms differ by {delta:.3e}"
        )
    return BoundReport("proof_I", primary, 0.0, primary, primary >= -tol, tol,
                       notes=f"decomposed={decomposed!r} delta={delta:.3e}")


def check_disk_bound(
    dist: FiniteDistribution, region: Region, tol: float = DEFAULT_TOL
) -> BoundReport:
    """Range[Z] inside a region excluding 0 confines H[Z] to the same region.

    Also cross-checks the proof path E[1/Z] in invert_region(region); a
    breach there beyond tol is an implementation bug and raises ChMeanError.
    """
    if isinstance(region, Disk) and region.radius > abs(region.center):
        raise HypothesisViolated("region contains 0 in its interior")
    if isinstance(region, HalfPlane) and region.offset < 0.0:
        raise HypothesisViolated("region contains 0 in its interior")
    for i, z in dist.support():
        if not region_contains(region, z, 1e-12):
            raise HypothesisViolated(f"atom {i} lies outside the region")
    m = mean_inverse(dist)
    h = 1.0 / m
    if isinstance(region, Disk):
        slack = region.radius - abs(h - region.center)
    else:
        slack = inner_product(region.normal, h) - region.offset
    image = invert_region(region)
    if not region_contains(image, m, tol):
        raise ChMeanError(
            "proof path violated: E[1/Z] escaped the inverted region"
        )
    return BoundReport("disk_bound", h, 0.0, slack, slack >= -tol, tol,
                       notes=f"region={region!r}")


def check_two_point(
    c1: complex, c2: complex, thetas, tol: float = DEFAULT_TOL
) -> list[BoundReport]:
    """h(theta) stays on the two-point locus for every weight in thetas.

    A degenerate locus (0 strictly between collinear atoms) yields refused
    reports: no bounded locus is claimed there.
    """
    locus = two_point_locus(c1, c2)
    reports = []
    for theta in thetas:
        theta = float(theta)
        if not 0.0 <= theta <= 1.0:
            raise ValueError(f"theta must lie in [0, 1], got {theta!r}")
        if locus.kind == "degenerate":
            reports.append(BoundReport(
                "two_point", math.nan, 0.0, math.nan, False, tol,
                notes=f"degenerate locus (0 between collinear atoms), theta={theta!r}",
                refused=True,
            ))
            continue
        try:
            h = two_point_mean(c1, c2, theta)
        except DegenerateMean:  # pragma: no cover - only degenerate loci degenerate
            reports.append(BoundReport(
                "two_point", math.nan, 0.0, math.nan, False, tol,
                notes=f"degenerate mean at theta={theta!r}", refused=True,
            ))
            continue
        d = locus.distance(h)
        reports.append(BoundReport(
            "two_point", d, 0.0, -d, d <= tol and locus.contains(h, tol), tol,
            notes=f"theta={theta!r} kind={locus.kind}",
        ))
    return reports


def check_classical(dist: RealDistribution, tol: float = DEFAULT_TOL) -> list[BoundReport]:
    """Range and Jensen bounds for a positive-valued X.

    range_bound: inf <= H[X] <= sup (slack is the binding margin).
    jensen: H[X] <= E[X], equality exactly when X is constant.
    """
    h = harmonic_mean_positive(dist)
    e = expectation(dist)
    support = dist.support_points()
    lo, hi = min(support), max(support)
    range_slack = min(h - lo, hi - h)
    constant = all(x == support[0] for x in support)
    jensen_slack = e - h
    return [
        BoundReport("range_bound", h, lo if h - lo <= hi - h else hi,
                    range_slack, range_slack >= -tol, tol,
                    notes=f"inf={lo!r} sup={hi!r}"),
        BoundReport("jensen", e, h, jensen_slack, jensen_slack >= -tol, tol,
                    notes="equality expected (constant distribution)" if constant
                    else "strict inequality expected"),
    ]


# ---------------------------------------------------------------------------
# Randomized suites
# ---------------------------------------------------------------------------

#: Atom population for the randomized suites: Re z >= RE_MIN, |z| <= ABS_MAX.
RE_MIN = 0.1
ABS_MAX = 10.0


@dataclass
class SuiteResult:
    """Outcome of one randomized suite run."""

    suite: str
    cases: int
    seed: int
    tol: float
    passed: int = 0
    failed: int = 0
    refused: int = 0
    worst_slack: float = math.inf
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "seed": self.seed,
            "tol": self.tol,
            "passed": self.passed,
            "failed": self.failed,
            "refused": self.refused,
            "worst_slack": None if math.isinf(self.worst_slack) else self.worst_slack,
            "failures": self.failures,
        }

    def _absorb(self, report: BoundReport, ok: bool, payload: dict, case: int):
        if report.refused:
            self.refused += 1
            return
        if math.isfinite(report.slack):
            self.worst_slack = min(self.worst_slack, report.slack)
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 10:
                self.failures.append(
                    {"case": case, "payload": payload, "report": report.to_json_dict()}
                )


def _random_points(rng: np.random.Generator, k: int) -> list[complex]:
    pts: list[complex] = []
    while len(pts) < k:
        re = rng.uniform(RE_MIN, ABS_MAX, size=2 * k)
        im = rng.uniform(-ABS_MAX, ABS_MAX, size=2 * k)
        keep = re * re + im * im <= ABS_MAX * ABS_MAX
        pts.extend(complex(r, i) for r, i in zip(re[keep], im[keep]))
    return pts[:k]


def _random_weights(rng: np.random.Generator, k: int) -> np.ndarray:
    w = rng.uniform(0.05, 1.0, size=k)
    return w / w.sum()


def random_distribution(rng: np.random.Generator) -> FiniteDistribution:
    """2-16 atoms in { Re z >= 0.1, |z| <= 10 } with random weights."""
    k = int(rng.integers(2, 17))
    return FiniteDistribution(tuple(zip(_random_points(rng, k), _random_weights(rng, k))))


def random_positive_distribution(rng: np.random.Generator) -> RealDistribution:
    k = int(rng.integers(2, 17))
    xs = rng.uniform(RE_MIN, 100.0, size=k)
    return RealDistribution(tuple(zip(xs.tolist(), _random_weights(rng, k))))


def random_scaled_positive(rng: np.random.Generator) -> FiniteDistribution:
    """Equality case Z = vX: a random rotation/scale of a positive-valued X."""
    k = int(rng.integers(2, 17))
    xs = rng.uniform(RE_MIN, ABS_MAX, size=k)
    v = rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(-math.pi, math.pi))
    return FiniteDistribution(tuple(zip((complex(v * x) for x in xs),
                                        _random_weights(rng, k))))


def _random_valid_direction(rng: np.random.Generator, dist: FiniteDistribution) -> complex:
    """Unit c whose certificate holds: the support sits in an open half-plane
    around the positive reals, so the valid angles form a non-empty interval."""
    angles = [math.atan2(z.imag, z.real) for _, z in dist.support()]
    lo = max(angles) - math.pi / 2.0
    hi = min(angles) + math.pi / 2.0
    margin = 0.01 * (hi - lo)
    psi = rng.uniform(lo + margin, hi - margin)
    return complex(math.cos(psi), math.sin(psi))


def _random_disk_case(rng: np.random.Generator, degenerate: bool
                      ) -> tuple[FiniteDistribution, Disk]:
    ac = rng.uniform(0.5, 8.0)
    c = ac * np.exp(1j * rng.uniform(-math.pi, math.pi))
    c = complex(c)
    r = abs(c) if degenerate else float(rng.uniform(0.05, 0.95)) * abs(c)
    k = int(rng.integers(2, 17))
    pts: list[complex] = []
    while len(pts) < k:
        rr = r * math.sqrt(rng.uniform())
        ang = rng.uniform(0.0, TAU_)
        z = c + rr * complex(math.cos(ang), math.sin(ang))
        if degenerate and abs(z) < 0.05 * r:
            continue  # keep atoms bounded away from the origin on the boundary case
        pts.append(z)
    dist = FiniteDistribution(tuple(zip(pts, _random_weights(rng, k))))
    return dist, Disk(c, r)


TAU_ = 2.0 * math.pi


def suite_modulus(cases: int, seed: int, tol: float = DEFAULT_TOL) -> SuiteResult:
    """|H[Z]| >= H[|Z|] over random distributions; every 10th block adds an
    equality case Z = vX whose slack must vanish in absolute value."""
    result = SuiteResult("modulus", cases, seed, tol)
    rng = np.random.default_rng(seed)
    for i in range(cases):
        dist = random_distribution(rng)
        rep = check_modulus(dist, tol)
        result._absorb(rep, rep.holds, distribution_to_json_dict(dist), i)
        if i % 10 == 0:
            eq = random_scaled_positive(rng)
            rep = check_modulus(eq, tol)
            result._absorb(rep, abs(rep.slack) <= tol,
                           distribution_to_json_dict(eq), i)
    return result


def suite_inner(cases: int, seed: int, tol: float = DEFAULT_TOL) -> SuiteResult:
    """c.H[Z] >= H[c.Z] for c = 1 on every case, a random valid unit c on
    every 10th, and an equality case Z = vX with c aligned to v on every 10th."""
    result = SuiteResult("inner", cases, seed, tol)
    rng = np.random.default_rng(seed)
    for i in range(cases):
        dist = random_distribution(rng)
        payload = distribution_to_json_dict(dist)
        rep = check_inner_product(dist, 1 + 0j, tol)
        result._absorb(rep, rep.holds, payload, i)
        if i % 10 == 0:
            c = _random_valid_direction(rng, dist)
            rep = check_inner_product(dist, c, tol)
            result._absorb(rep, rep.holds, payload, i)
            eq = random_scaled_positive(rng)
            v = eq.points[0] / abs(eq.points[0])
            c = complex(v * np.exp(1j * rng.uniform(-1.4, 1.4)))
            rep = check_inner_product(eq, c, tol)
            result._absorb(rep, abs(rep.slack) <= tol,
                           distribution_to_json_dict(eq), i)
    return result


def suite_proof_i(cases: int, seed: int, tol: float = DEFAULT_TOL) -> SuiteResult:
    """I >= 0 with both algebraic forms agreeing, over random distributions."""
    result = SuiteResult("proofI", cases, seed, tol)
    rng = np.random.default_rng(seed)
    for i in range(cases):
        dist = random_distribution(rng)
        try:
            rep = proof_quantity_I(dist, tol)
        except ChMeanError as exc:
            result.failed += 1
            if len(result.failures) < 10:
                result.failures.append({"case": i, "error": str(exc),
                                        "payload": distribution_to_json_dict(dist)})
            continue
        result._absorb(rep, rep.holds, distribution_to_json_dict(dist), i)
    return result


def suite_disk(cases: int, seed: int, tol: float = DEFAULT_TOL) -> SuiteResult:
    """H[Z] stays in the enclosing disk (r <= 0.95|c|) for random cases, plus
    one boundary case r = |c| (half-plane image) per 10 regular ones."""
    result = SuiteResult("disk", cases, seed, tol)
    rng = np.random.default_rng(seed)
    for i in range(cases):
        degenerate = i % 10 == 0
        dist, disk = _random_disk_case(rng, degenerate=False)
        payload = {"distribution": distribution_to_json_dict(dist),
                   "disk": {"center": complex_json(disk.center), "radius": disk.radius}}
        try:
            rep = check_disk_bound(dist, disk, tol)
        except HypothesisViolated:
            result.refused += 1
        else:
            result._absorb(rep, rep.holds, payload, i)
        if degenerate:
            dist, disk = _random_disk_case(rng, degenerate=True)
            payload = {"distribution": distribution_to_json_dict(dist),
                       "disk": {"center": complex_json(disk.center), "radius": disk.radius}}
            try:
                rep = check_disk_bound(dist, disk, tol)
            except HypothesisViolated:
                result.refused += 1
            else:
                result._absorb(rep, rep.holds, payload, i)
    return result


def suite_twopoint(cases: int, seed: int, tol: float = DEFAULT_TOL) -> SuiteResult:
    """h(theta) on the two-point locus over an 11-step sweep per pair; every
    5th pair is collinear with 0 outside (segment), every 10th collinear with
    0 inside (degenerate, counted refused)."""
    result = SuiteResult("twopoint", cases, seed, tol)
    rng = np.random.default_rng(seed)
    thetas = [k / 10.0 for k in range(11)]
    for i in range(cases):
        c1 = complex(rng.uniform(0.3, 5.0) * np.exp(1j * rng.uniform(-math.pi, math.pi)))
        if i % 10 == 5:
            c2 = c1 * float(rng.uniform(1.2, 4.0))        # segment branch
        elif i % 10 == 0:
            c2 = -c1 * float(rng.uniform(0.5, 2.0))       # degenerate branch
        else:
            c2 = complex(rng.uniform(0.3, 5.0) * np.exp(1j * rng.uniform(-math.pi, math.pi)))
            scale = max(abs(c1), abs(c2), abs(c1 - c2))
            if abs((c1 * c2.conjugate()).imag) < 1e-6 * scale * scale or abs(c1 - c2) < 1e-6:
                continue  # stay clear of the collinearity threshold neighborhood
        payload = {"c1": complex_json(c1), "c2": complex_json(c2)}
        for rep in check_two_point(c1, c2, thetas, tol):
            result._absorb(rep, rep.holds, payload, i)
    return result


def suite_classical(cases: int, seed: int, tol: float = DEFAULT_TOL) -> SuiteResult:
    """Range and Jensen bounds over random positive distributions; every 10th
    case is constant, where the Jensen slack must vanish."""
    result = SuiteResult("classical", cases, seed, tol)
    rng = np.random.default_rng(seed)
    for i in range(cases):
        constant = i % 10 == 0
        if constant:
            x = float(rng.uniform(RE_MIN, 100.0))
            k = int(rng.integers(2, 9))
            dist = RealDistribution(tuple((x, w) for w in _random_weights(rng, k)))
        else:
            dist = random_positive_distribution(rng)
        payload = {"atoms": [{"x": x, "w": w} for x, w in dist.atoms]}
        range_rep, jensen_rep = check_classical(dist, tol)
        result._absorb(range_rep, range_rep.holds, payload, i)
        ok = abs(jensen_rep.slack) <= tol if constant else jensen_rep.holds
        result._absorb(jensen_rep, ok, payload, i)
    return result


SUITES: dict[str, Callable[[int, int, float], SuiteResult]] = {
    "modulus": suite_modulus,
    "inner": suite_inner,
    "proofI": suite_proof_i,
    "disk": suite_disk,
    "twopoint": suite_twopoint,
    "classical": suite_classical,
}


def run_suites(names, cases: int, seed: int, tol: float = DEFAULT_TOL) -> list[SuiteResult]:
    """Run the named suites ("all" expands to every one) with a shared seed."""
    if isinstance(names, str):
        names = list(SUITES) if names == "all" else [names]
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        results.append(SUITES[name](cases, seed, tol))
    return results
