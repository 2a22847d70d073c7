"""Non-zero complex-valued random variables and their mean functionals.

The central object is the complex harmonic mean H[Z] = E[1/Z]^(-1), defined
whenever E[1/Z] is a non-zero complex number.  Random variables are carried
either as finite weighted atom sets (FiniteDistribution), as empirical i.i.d.
samples (SampleSet), or, for real-valued pushforwards such as |Z| and c.Z, as
finite distributions on the real line (RealDistribution).

All types are immutable after construction and all operations are pure.
Weighted sums over atoms accumulate sequentially in input order; SampleSet
reductions use numpy's pairwise summation, which is deterministic for a fixed
array.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DegenerateMean, InvalidDistribution, InvalidSupport

#: |E[1/Z]| below this threshold is treated as "the harmonic mean does not exist".
EPS_DEGENERATE = 1e-13

#: Input weights may deviate from sum 1 by at most this before rejection;
#: anything closer is renormalized (tolerates file-format rounding).
WEIGHT_SUM_TOL = 1e-9


def _check_finite_complex(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidDistribution(f"{what}: non-finite value {z!r}")
    return z


@dataclass(frozen=True)
class FiniteDistribution:
    """Weighted atoms on C \\ {0}.

    Weights must be nonnegative and sum to 1 within WEIGHT_SUM_TOL; they are
    renormalized to sum to exactly the float sum 1 at construction.  Atoms
    with weight 0 are kept (order-preserving) but do not belong to the
    support.
    """

    atoms: tuple[tuple[complex, float], ...]

    def __post_init__(self):
        raw = tuple(self.atoms)
        if not raw:
            raise InvalidDistribution("distribution needs at least one atom")
        checked = []
        total = 0.0
        for i, (z, w) in enumerate(raw):
            z = _check_finite_complex(complex(z), f"atom {i}")
            if z == 0:
                raise InvalidDistribution(f"atom {i}: point is zero (support must avoid 0)")
            w = float(w)
            if not math.isfinite(w) or w < 0.0:
                raise InvalidDistribution(f"atom {i}: invalid weight {w!r}")
            checked.append((z, w))
            total += w
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidDistribution(
                f"weights sum to {total!r}; expected 1 within {WEIGHT_SUM_TOL:.0e}"
            )
        if total != 1.0:
            checked = [(z, w / total) for z, w in checked]
        object.__setattr__(self, "atoms", tuple(checked))

    @property
    def points(self) -> tuple[complex, ...]:
        return tuple(z for z, _ in self.atoms)

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(w for _, w in self.atoms)

    def support(self):
        """Yield (index, point) for atoms with positive weight (= Range[Z])."""
        for i, (z, w) in enumerate(self.atoms):
            if w > 0.0:
                yield i, z


@dataclass(frozen=True)
class SampleSet:
    """Empirical i.i.d. draws standing in for a continuous law.

    ``seed`` is a provenance tag recording how the samples were produced.
    """

    samples: np.ndarray
    seed: int

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidDistribution("samples must be a non-empty 1-d array")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise InvalidDistribution("samples contain non-finite values")
        zero = np.nonzero(arr == 0)[0]
        if zero.size:
            raise InvalidDistribution(f"sample {int(zero[0])} is zero (support must avoid 0)")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "seed", int(self.seed))

    @property
    def n(self) -> int:
        return int(self.samples.size)


@dataclass(frozen=True)
class RealDistribution:
    """Weighted atoms on the real line (pushforwards |Z|, Re Z, c.Z, ...).

    Points may have any sign at construction; positivity is demanded only by
    the operations that need it (harmonic_mean_positive).
    """

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        raw = tuple(self.atoms)
        if not raw:
            raise InvalidDistribution("distribution needs at least one atom")
        checked = []
        total = 0.0
        for i, (x, w) in enumerate(raw):
            x = float(x)
            if not math.isfinite(x):
                raise InvalidDistribution(f"atom {i}: non-finite point {x!r}")
            w = float(w)
            if not math.isfinite(w) or w < 0.0:
                raise InvalidDistribution(f"atom {i}: invalid weight {w!r}")
            checked.append((x, w))
            total += w
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidDistribution(
                f"weights sum to {total!r}; expected 1 within {WEIGHT_SUM_TOL:.0e}"
            )
        if total != 1.0:
            checked = [(x, w / total) for x, w in checked]
        object.__setattr__(self, "atoms", tuple(checked))

    @property
    def points(self) -> tuple[float, ...]:
        return tuple(x for x, _ in self.atoms)

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(w for _, w in self.atoms)

    def support_points(self) -> tuple[float, ...]:
        return tuple(x for x, w in self.atoms if w > 0.0)


Distribution = Union[FiniteDistribution, SampleSet]


def expectation(dist: Distribution | RealDistribution):
    """E[Z]: weighted sum in atom order, or the plain sample average.

    Returns complex for FiniteDistribution/SampleSet, float for
    RealDistribution.
    """
    if isinstance(dist, FiniteDistribution):
        total = 0j
        for z, w in dist.atoms:
            total += w * z
        return total
    if isinstance(dist, SampleSet):
        return complex(np.mean(dist.samples))
    if isinstance(dist, RealDistribution):
        total = 0.0
        for x, w in dist.atoms:
            total += w * x
        return total
    raise TypeError(f"unsupported distribution type {type(dist).__name__}")


def mean_inverse(dist: Distribution, eps_degenerate: float = EPS_DEGENERATE) -> complex:
    """E[1/Z], raising DegenerateMean when its modulus falls below the threshold."""
    if isinstance(dist, FiniteDistribution):
        m = 0j
        for z, w in dist.atoms:
            m += w * (1.0 / z)
    elif isinstance(dist, SampleSet):
        m = complex(np.mean(1.0 / dist.samples))
    else:
        raise TypeError(f"unsupported distribution type {type(dist).__name__}")
    if abs(m) < eps_degenerate:
        raise DegenerateMean(abs(m), eps_degenerate)
    return m


def _constant_support(dist: Distribution) -> complex | None:
    if isinstance(dist, FiniteDistribution):
        first = None
        for _, z in dist.support():
            if first is None:
                first = z
            elif z != first:
                return None
        return first
    arr = dist.samples
    if arr.size == 1 or np.all(arr == arr[0]):
        return complex(arr[0])
    return None


def harmonic_mean(dist: Distribution, eps_degenerate: float = EPS_DEGENERATE) -> complex:
    """Complex harmonic mean H[Z] = E[1/Z]^(-1).

    Raises DegenerateMean when |E[1/Z]| < eps_degenerate instead of returning
    an enormous finite number; downstream geometry is meaningless near the
    pole.  A constant Z returns its value exactly (the general path's double
    reciprocal would round).
    """
    const = _constant_support(dist)
    if const is not None:
        return const
    return 1.0 / mean_inverse(dist, eps_degenerate)


def harmonic_mean_positive(dist: RealDistribution) -> float:
    """Classical harmonic mean H[X] = E[1/X]^(-1) for positive-valued X."""
    m = 0.0
    first = None
    constant = True
    for i, (x, w) in enumerate(dist.atoms):
        if x <= 0.0:
            raise InvalidSupport(f"atom {i}: point {x!r} is not positive")
        if w > 0.0:
            if first is None:
                first = x
            elif x != first:
                constant = False
        # reciprocal-then-scale mirrors the complex-path accumulation, so
        # positive real inputs agree exactly with harmonic_mean
        m += w * (1.0 / x)
    if constant:
        return first
    return 1.0 / m


def two_point_mean(
    c1: complex, c2: complex, theta: float, eps_degenerate: float = EPS_DEGENERATE
) -> complex:
    """Closed form for a two-valued Z: H = c1*c2 / (c1*theta + c2*(1-theta)).

    theta is the probability of c2.  The endpoints theta = 0, 1 return the
    atoms themselves (the closed form reduces to them exactly).
    """
    if theta == 0.0:
        return complex(c1)
    if theta == 1.0:
        return complex(c2)
    den = c1 * theta + c2 * (1.0 - theta)
    scale = abs(c1 * c2)
    if abs(den) < eps_degenerate * scale:
        raise DegenerateMean(abs(den) / scale, eps_degenerate)
    return (c1 * c2) / den


def pushforward_modulus(dist: FiniteDistribution) -> RealDistribution:
    """The law of |Z|: atoms (|z_i|, w_i), order-preserving, no merging."""
    return RealDistribution(tuple((abs(z), w) for z, w in dist.atoms))


def inner_product(c: complex, z: complex) -> float:
    """Euclidean inner product of C as the plane: c.z = Re(conj(c) z)."""
    return c.real * z.real + c.imag * z.imag


def pushforward_inner(dist: FiniteDistribution, c: complex) -> RealDistribution:
    """The law of c.Z: atoms (c.z_i, w_i).

    Positivity of the pushed points is checked by whoever takes a harmonic
    mean of the result, not here.
    """
    if c == 0:
        raise ValueError("c must be non-zero")
    return RealDistribution(tuple((inner_product(c, z), w) for z, w in dist.atoms))


@dataclass(frozen=True)
class ExistenceCertificate:
    """Witness for the sufficient existence condition of H[Z].

    ``a`` is the minimum of c.z over the support, ``R`` the maximum modulus.
    The certificate holds when a > 0 (the support sits in the half-plane
    {c.z >= a} and the disk {|z| <= R}); otherwise ``violating_atom`` names
    the atom achieving the non-positive minimum.
    """

    a: float
    R: float
    satisfied: bool
    violating_atom: int | None

    def to_json_dict(self) -> dict:
        return {
            "a": self.a,
            "R": self.R,
            "satisfied": self.satisfied,
            "violating_atom": self.violating_atom,
        }


def existence_certificate(dist: FiniteDistribution, c: complex) -> ExistenceCertificate:
    """Compute the half-plane/disk existence certificate for direction c."""
    if c == 0:
        raise ValueError("c must be non-zero")
    a = math.inf
    R = 0.0
    worst = None
    for i, z in dist.support():
        ip = inner_product(c, z)
        if ip < a:
            a = ip
            worst = i
        R = max(R, abs(z))
    return ExistenceCertificate(a, R, a > 0.0, None if a > 0.0 else worst)


def complex_json(z: complex) -> dict:
    """Complex value in the wire format {"re": ..., "im": ...}."""
    return {"re": z.real, "im": z.imag}


def distribution_from_json_dict(data) -> FiniteDistribution:
    """Parse the interchange format { "atoms": [ {"re", "im", "w"}, ... ] }."""
    if not isinstance(data, dict) or "atoms" not in data:
        raise InvalidDistribution("expected an object with an 'atoms' array")
    entries = data["atoms"]
    if not isinstance(entries, list) or not entries:
        raise InvalidDistribution("'atoms' must be a non-empty array")
    atoms = []
    for i, entry in enumerate(entries):
        try:
            z = complex(float(entry["re"]), float(entry["im"]))
            w = float(entry["w"])
        except (TypeError, KeyError, ValueError) as exc:
            raise InvalidDistribution(
                f"atom {i}: expected numeric fields 're', 'im', 'w'"
            ) from exc
        atoms.append((z, w))
    return FiniteDistribution(tuple(atoms))


def distribution_to_json_dict(dist: FiniteDistribution) -> dict:
    return {"atoms": [{"re": z.real, "im": z.imag, "w": w} for z, w in dist.atoms]}
