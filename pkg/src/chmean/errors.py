"""Exception types shared across the library.

The CLI maps these onto its exit-code contract: construction/input problems
exit 1, a degenerate harmonic mean exits 2, verification failures exit 3.
"""


class ChMeanError(Exception):
    """Base class for all library errors."""


class InvalidDistribution(ChMeanError, ValueError):
    """A distribution violates a construction invariant (zero atom, bad weights, ...)."""


class InvalidSupport(ChMeanError, ValueError):
    """A positive-support operation received a non-positive point."""


class DegenerateMean(ChMeanError, ArithmeticError):
    """E[1/Z] is numerically zero, so the harmonic mean does not exist."""

    def __init__(self, magnitude: float, eps: float):
        self.magnitude = magnitude
        self.eps = eps
        super().__init__(
            f"|E[1/Z]| = {magnitude:.6e} is below {eps:.1e}; "
            "the harmonic mean does not exist as a finite number"
        )


class NearPole(ChMeanError, ArithmeticError):
    """A point too close to 0 was handed to the inversion z -> 1/z."""


class DegenerateCircline(ChMeanError, ValueError):
    """Circline coefficients describe an empty set or a single point."""


class DegenerateImage(ChMeanError):
    """The image of a circline under inversion is degenerate (defensive; cannot
    occur for valid input, since the coefficient swap preserves the discriminant
    exactly)."""


class ContainsOrigin(ChMeanError, ValueError):
    """A region handed to inversion has 0 in its interior."""


class CoincidentPoints(ChMeanError, ValueError):
    """Two of the points defining a circle coincide."""


class HypothesisViolated(ChMeanError):
    """A theorem check was refused because its hypotheses are unmet.

    Distinct from a failed check: a checker must never report a counterexample
    when the theorem did not apply in the first place.
    """
