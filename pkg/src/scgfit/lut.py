"""Lookup-table functions on [0,1] and the two inner products.

Complex functions are stored as B uniformly spaced samples (a LUT) with
nodes x_j = j/B. Evaluation quantizes the argument to the nearest lower
node, mirroring a hardware LUT. The exact inner product is the grid
quadrature of the density-weighted product; the sample inner product is
the plain average over a capture.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

__all__ = [
    "Grid",
    "LutFunction",
    "Density",
    "SampleSet",
    "counters",
    "lut_indices",
    "lut_eval",
    "lut_axpy",
    "inner_exact",
    "inner_sample",
]


@dataclass
class OpCounters:
    """Operation counters for complexity checks (test instrumentation only)."""

    basis_sample_evals: int = 0
    lut_passes: int = 0

    def reset(self) -> None:
        self.basis_sample_evals = 0
        self.lut_passes = 0


counters = OpCounters()


@dataclass(frozen=True)
class Grid:
    """Uniform quantization of [0,1] into B levels, nodes x_j = j/B."""

    B: int

    def __post_init__(self):
        if self.B < 2:
            raise ValueError(f"grid size must be >= 2, got {self.B}")

    @cached_property
    def nodes(self) -> np.ndarray:
        return np.arange(self.B) / self.B


@dataclass
class LutFunction:
    """A complex function on [0,1] stored by its values at the grid nodes."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.shape != (self.grid.B,):
            raise ValueError(
                f"values shape {self.values.shape} does not match grid size {self.grid.B}"
            )
        if not np.all(np.isfinite(self.values.view(np.float64))):
            raise ValueError("LUT values must be finite")

    @classmethod
    def zero(cls, grid: Grid) -> "LutFunction":
        return cls(grid, np.zeros(grid.B, dtype=np.complex128))

    @classmethod
    def from_callable(cls, grid: Grid, fn) -> "LutFunction":
        return cls(grid, fn(grid.nodes))

    def copy(self) -> "LutFunction":
        return LutFunction(self.grid, self.values.copy())


def _check_same_grid(*objs) -> Grid:
    grids = [o.grid for o in objs]
    B0 = grids[0].B
    for g in grids[1:]:
        if g.B != B0:
            raise ValueError(f"grid mismatch: sizes {[g.B for g in grids]}")
    return grids[0]


def lut_indices(x, B: int) -> np.ndarray:
    """Quantize arguments in [0,1] to LUT indices floor(x*B), clamped to B-1."""
    x = np.asarray(x, dtype=np.float64)
    if x.size and (x.min() < 0.0 or x.max() > 1.0):
        raise ValueError("argument outside [0,1]")
    return np.minimum((x * B).astype(np.int64), B - 1)


def lut_eval(f: LutFunction, x):
    """Evaluate f at x (scalar or array) by nearest-lower-node quantization."""
    idx = lut_indices(x, f.grid.B)
    out = f.values[idx]
    return complex(out) if np.isscalar(x) or np.ndim(x) == 0 else out


def lut_axpy(u: LutFunction, alpha: complex, v: LutFunction) -> LutFunction:
    """Pointwise u + alpha*v on a shared grid."""
    grid = _check_same_grid(u, v)
    counters.lut_passes += 1
    return LutFunction(grid, u.values + alpha * v.values)


@dataclass
class Density:
    """A probability density on [0,1] stored as a nonnegative LUT of unit integral."""

    pdf: LutFunction
    kind: str

    def __post_init__(self):
        vals = self.pdf.values
        if np.any(vals.real < 0) or np.any(vals.imag != 0):
            raise ValueError("density values must be real and nonnegative")
        total = vals.real.mean()  # grid quadrature of the pdf
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"density integral {total!r} is not 1 within 1e-9")

    @property
    def grid(self) -> Grid:
        return self.pdf.grid

    @property
    def weights(self) -> np.ndarray:
        return self.pdf.values.real


@dataclass
class SampleSet:
    """Paired capture arrays: inputs y in [0,1] and observed outputs z."""

    y: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        self.y = np.asarray(self.y, dtype=np.float64)
        self.z = np.asarray(self.z, dtype=np.complex128)
        if self.y.ndim != 1 or self.y.shape != self.z.shape:
            raise ValueError("y and z must be 1-d arrays of equal length")
        if self.y.size == 0:
            raise ValueError("sample set is empty")
        if self.y.min() < 0.0 or self.y.max() > 1.0:
            raise ValueError("samples outside [0,1]")

    @property
    def N(self) -> int:
        return self.y.size


def inner_exact(u: LutFunction, v: LutFunction, rho: Density) -> complex:
    """Weighted inner product (1/B) * sum_j rho_j * conj(u_j) * v_j.

    The first argument is conjugated, matching E(u* v).
    """
    _check_same_grid(u, v, rho.pdf)
    B = u.grid.B
    return complex(np.vdot(u.values, rho.weights * v.values) / B)


def inner_sample(u: LutFunction, v: LutFunction, s: SampleSet) -> complex:
    """Sample-average inner product (1/N) * sum_n conj(u(y_n)) * v(y_n)."""
    _check_same_grid(u, v)
    idx = lut_indices(s.y, u.grid.B)
    return complex(np.vdot(u.values[idx], v.values[idx]) / s.N)
