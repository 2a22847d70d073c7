"""Harmonic means of non-zero complex-valued random variables.

Computes H[Z] = E[1/Z]^(-1) for finite and sampled complex distributions and
mechanically verifies the geometric bounds it satisfies: the modulus estimate
|H[Z]| >= H[|Z|], the real-part/inner-product estimate c.H[Z] >= H[c.Z],
confinement to any disk that contains the range and excludes 0, and the
circular two-point locus.
"""

from .core import (
    EPS_DEGENERATE,
    ExistenceCertificate,
    FiniteDistribution,
    RealDistribution,
    SampleSet,
    distribution_from_json_dict,
    distribution_to_json_dict,
    existence_certificate,
    expectation,
    harmonic_mean,
    harmonic_mean_positive,
    inner_product,
    mean_inverse,
    pushforward_inner,
    pushforward_modulus,
    two_point_mean,
)
from .errors import (
    ChMeanError,
    CoincidentPoints,
    ContainsOrigin,
    DegenerateCircline,
    DegenerateImage,
    DegenerateMean,
    HypothesisViolated,
    InvalidDistribution,
    InvalidSupport,
    NearPole,
)
from .estimates import (
    DEFAULT_TOL,
    BoundReport,
    SuiteResult,
    check_classical,
    check_disk_bound,
    check_inner_product,
    check_modulus,
    check_two_point,
    proof_quantity_I,
    run_suites,
)
from .geometry import (
    Circline,
    Disk,
    HalfPlane,
    LocusDescription,
    Region,
    circle,
    circle_through,
    invert_circline,
    invert_point,
    invert_region,
    line,
    region_contains,
    smallest_enclosing_disk,
    two_point_locus,
)
from .montecarlo import (
    ComplexNormalParams,
    ExperimentResult,
    lognormal_experiment,
    lognormal_se,
    sample_complex_normal,
    standard_complex_draws,
)
from .sweeps import SweepRow, two_point_sweep

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ChMeanError",
    "Circline",
    "CoincidentPoints",
    "ComplexNormalParams",
    "ContainsOrigin",
    "DEFAULT_TOL",
    "DegenerateCircline",
    "DegenerateImage",
    "DegenerateMean",
    "Disk",
    "EPS_DEGENERATE",
    "ExistenceCertificate",
    "ExperimentResult",
    "FiniteDistribution",
    "HalfPlane",
    "HypothesisViolated",
    "InvalidDistribution",
    "InvalidSupport",
    "LocusDescription",
    "NearPole",
    "RealDistribution",
    "Region",
    "SampleSet",
    "SuiteResult",
    "SweepRow",
    "check_classical",
    "check_disk_bound",
    "check_inner_product",
    "check_modulus",
    "check_two_point",
    "circle",
    "circle_through",
    "distribution_from_json_dict",
    "distribution_to_json_dict",
    "existence_certificate",
    "expectation",
    "harmonic_mean",
    "harmonic_mean_positive",
    "inner_product",
    "invert_circline",
    "invert_point",
    "invert_region",
    "line",
    "lognormal_experiment",
    "lognormal_se",
    "mean_inverse",
    "proof_quantity_I",
    "pushforward_inner",
    "pushforward_modulus",
    "region_contains",
    "run_suites",
    "sample_complex_normal",
    "smallest_enclosing_disk",
    "standard_complex_draws",
    "two_point_locus",
    "two_point_mean",
    "two_point_sweep",
]
