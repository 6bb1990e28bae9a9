"""Stochastic conjugate gradient function approximation.

Least-squares fitting of complex functions on [0,1] in LUT form, driven
either by the exact density-weighted inner product or by sample-average
inner products from captured data, plus a closed-loop digital
predistortion simulator built on the multivariate solver.
"""

from .lut import (
    Density,
    Grid,
    LutFunction,
    SampleSet,
    inner_exact,
    inner_sample,
    lut_axpy,
    lut_eval,
)
from .sampling import (
    HistogramSpec,
    RayleighSpec,
    estimate_sigma,
    histogram_density,
    rayleigh_density,
    rayleigh_samples,
    uniform_density,
)
from .basis import (
    BasisSet,
    RankDeficiencyError,
    covariance_matrix,
    gram_schmidt,
    monomial_basis,
    orthonormal_polynomials_3term,
)

__version__ = "0.1.0"
