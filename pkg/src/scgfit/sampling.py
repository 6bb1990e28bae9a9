"""Sample generators and density estimation for the capture path.

Radial samples are built from two Gaussian components with rejection of
values outside [0,1]. Densities come either from the closed-form Rayleigh
shape (renormalized after truncation to [0,1]) or from a histogram of
observed samples. All randomness is numpy PCG64 seeded explicitly, so
every draw is reproducible byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lut import Density, Grid, LutFunction

__all__ = [
    "RayleighSpec",
    "HistogramSpec",
    "rayleigh_samples",
    "estimate_sigma",
    "rayleigh_density",
    "histogram_density",
    "uniform_density",
]

# histogram bins with zero counts are floored here so the density stays positive
PDF_FLOOR = 1e-8


@dataclass(frozen=True)
class RayleighSpec:
    """Parameters of the two-component Gaussian radial sampler."""

    mean: float = 0.25
    variance: float = 0.0625
    seed: int | np.random.SeedSequence = 0

    def __post_init__(self):
        if self.variance <= 0:
            raise ValueError("variance must be positive")


@dataclass(frozen=True)
class HistogramSpec:
    bins: int = 64

    def __post_init__(self):
        if self.bins < 2:
            raise ValueError("need at least 2 histogram bins")


def rayleigh_samples(spec: RayleighSpec, N: int) -> np.ndarray:
    """Draw exactly N radial samples sqrt(x1^2 + x2^2), rejecting those outside [0,1].

    Rejected draws consume RNG state but produce no output; the result is a
    pure function of (spec, N).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    rng = np.random.default_rng(spec.seed)
    sigma = np.sqrt(spec.variance)
    out = np.empty(0, dtype=np.float64)
    while out.size < N:
        chunk = max(N - out.size, 16)
        x1 = rng.normal(spec.mean, sigma, chunk)
        x2 = rng.normal(spec.mean, sigma, chunk)
        y = np.hypot(x1, x2)
        out = np.concatenate([out, y[(y >= 0.0) & (y <= 1.0)]])
    return out[:N]


def estimate_sigma(y: np.ndarray) -> float:
    """Rayleigh scale estimate sqrt((1/2N) * sum y_n^2)."""
    y = np.asarray(y, dtype=np.float64)
    if y.size == 0:
        raise ValueError("sample set is empty")
    return float(np.sqrt(np.mean(y**2) / 2.0))


def rayleigh_density(sigma: float, grid: Grid) -> Density:
    """Rayleigh-shaped density x*exp(-x^2/(2 sigma^2)), renormalized on the grid.

    Truncation to [0,1] makes renormalization necessary for a unit integral.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    x = grid.nodes
    pdf = x * np.exp(-(x**2) / (2.0 * sigma**2))
    pdf /= pdf.mean()
    return Density(LutFunction(grid, pdf.astype(np.complex128)), kind="rayleigh")


def histogram_density(y: np.ndarray, spec: HistogramSpec, grid: Grid) -> Density:
    """Histogram estimate of the sample density as a piecewise-constant LUT.

    Empty bins are floored at a small positive value before normalization so
    the density stays strictly positive (required by the weighted inner
    product downstream).
    """
    y = np.asarray(y, dtype=np.float64)
    if y.size == 0:
        raise ValueError("sample set is empty")
    if y.min() < 0.0 or y.max() > 1.0:
        raise ValueError("samples outside [0,1]")
    counts, _ = np.histogram(y, bins=spec.bins, range=(0.0, 1.0))
    pdf_bins = counts.astype(np.float64) * spec.bins / y.size
    pdf_bins = np.maximum(pdf_bins, PDF_FLOOR)
    bin_of_node = np.minimum((grid.nodes * spec.bins).astype(np.int64), spec.bins - 1)
    pdf = pdf_bins[bin_of_node]
    pdf /= pdf.mean()
    return Density(LutFunction(grid, pdf.astype(np.complex128)), kind="histogram")


def uniform_density(grid: Grid) -> Density:
    return Density(LutFunction(grid, np.ones(grid.B, dtype=np.complex128)), kind="uniform")
