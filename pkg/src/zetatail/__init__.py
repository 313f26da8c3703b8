"""Zeta Tail count distributions: evaluation, sampling, fitting and versatility."""

from .data import REGIONS, region
from .dist import (
    FAMILIES,
    DistributionSpec,
    GeneralizedZetaTail,
    Geometric0,
    NegativeBinomial0,
    Quadratic0,
    Support,
    ZeroInflatedGeometric0,
    Zeta0,
    ZetaTail,
    ZetaTail0,
    make_spec,
)
from .errors import (
    ConvergenceError,
    DataError,
    DegenerateDataError,
    DivergentMomentError,
    DomainError,
    ZetaTailError,
)
from .fit import CountHistogram, FitConfig, FitResult, GofReport, chi_square_gof, compare_models, mle_fit
from .sampling import UniformSource, sample, sample_family
from .specfun import digamma, hurwitz_zeta, riemann_zeta, stirling2
from .versatility import VersatilityReport, fisher_information, table4, versatility_measure

__version__ = "0.1.0"

__all__ = [
    "REGIONS",
    "region",
    "FAMILIES",
    "DistributionSpec",
    "GeneralizedZetaTail",
    "Geometric0",
    "NegativeBinomial0",
    "Quadratic0",
    "Support",
    "ZeroInflatedGeometric0",
    "Zeta0",
    "ZetaTail",
    "ZetaTail0",
    "make_spec",
    "ConvergenceError",
    "DataError",
    "DegenerateDataError",
    "DivergentMomentError",
    "DomainError",
    "ZetaTailError",
    "CountHistogram",
    "FitConfig",
    "FitResult",
    "GofReport",
    "chi_square_gof",
    "compare_models",
    "mle_fit",
    "UniformSource",
    "sample",
    "sample_family",
    "digamma",
    "hurwitz_zeta",
    "riemann_zeta",
    "stirling2",
    "VersatilityReport",
    "fisher_information",
    "table4",
    "versatility_measure",
]
