"""Basis function sets: monomials, weighted Gram-Schmidt, three-term recursion.

A BasisSet stores its M functions as rows of one (M, B) array so that
evaluation at a batch of samples is a single gather and synthesis of a
linear combination is a single matrix product. Orthonormalization is done
in the discrete weighted inner product of the LUT grid, never symbolically,
because the weight may be a histogram with no closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lut import Density, Grid, LutFunction, counters, lut_indices
from .sampling import uniform_density

__all__ = [
    "BasisSet",
    "RankDeficiencyError",
    "monomial_basis",
    "gram_schmidt",
    "orthonormal_polynomials_3term",
    "covariance_matrix",
]


class RankDeficiencyError(ValueError):
    """Raised when a basis is numerically dependent in the weighted inner product."""


@dataclass
class BasisSet:
    """M functions on one grid, optionally orthonormal under `weight`."""

    grid: Grid
    values: np.ndarray  # (M, B) complex, row i is the i-th function
    weight: Density
    orthonormal: bool = False

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.ndim != 2 or self.values.shape[1] != self.grid.B:
            raise ValueError("basis values must be (M, B)")
        if self.values.shape[0] < 1:
            raise ValueError("need at least one basis function")
        if self.weight.grid.B != self.grid.B:
            raise ValueError("weight grid mismatch")

    @property
    def M(self) -> int:
        return self.values.shape[0]

    @property
    def functions(self) -> list[LutFunction]:
        return [LutFunction(self.grid, row.copy()) for row in self.values]

    def function(self, i: int) -> LutFunction:
        return LutFunction(self.grid, self.values[i].copy())

    def sample_matrix(self, y: np.ndarray) -> np.ndarray:
        """All M functions evaluated at the samples: an (M, N) gather."""
        idx = lut_indices(y, self.grid.B)
        return self.sample_matrix_at(idx)

    def sample_matrix_at(self, idx: np.ndarray) -> np.ndarray:
        counters.basis_sample_evals += self.M * idx.size
        return self.values[:, idx]

    def synthesize(self, coef: np.ndarray) -> LutFunction:
        """Linear combination sum_i coef[i] * f_i as a LUT (M grid passes)."""
        coef = np.asarray(coef, dtype=np.complex128)
        if coef.shape != (self.M,):
            raise ValueError("coefficient length mismatch")
        counters.lut_passes += self.M
        return LutFunction(self.grid, coef @ self.values)

    def gram(self, rho: Density | None = None) -> np.ndarray:
        """Gram matrix under the given (default: own) weight; for certificates."""
        w = (rho or self.weight).weights
        return (self.values.conj() * w) @ self.values.T / self.grid.B


def monomial_basis(M: int, grid: Grid) -> BasisSet:
    """The raw polynomial basis 1, x, ..., x^(M-1) on the grid."""
    if M < 1:
        raise ValueError("M must be >= 1")
    vals = grid.nodes[None, :] ** np.arange(M)[:, None]
    return BasisSet(grid, vals.astype(np.complex128), uniform_density(grid), orthonormal=False)


def _weighted_dot(w: np.ndarray, a: np.ndarray, b: np.ndarray, B: int) -> complex:
    return np.vdot(a, w * b) / B


def gram_schmidt(basis: BasisSet, rho: Density) -> BasisSet:
    """Orthonormalize under rho: modified Gram-Schmidt with one reorthogonalization pass.

    Keeps the nested-span property (function k stays in the span of inputs
    0..k) and pins the phase by normalizing with real positive norms.
    Raises RankDeficiencyError naming the first numerically dependent index.
    """
    if basis.grid.B != rho.grid.B:
        raise ValueError("grid mismatch between basis and weight")
    B = basis.grid.B
    w = rho.weights
    out = basis.values.astype(np.complex128).copy()
    M = out.shape[0]
    for k in range(M):
        q = out[k]
        for _pass in range(2):  # MGS plus one reorthogonalization pass
            for i in range(k):
                q = q - _weighted_dot(w, out[i], q, B) * out[i]
        norm = np.sqrt(_weighted_dot(w, q, q, B).real)
        if norm < 1e-12:
            raise RankDeficiencyError(
                f"basis function {k} is numerically dependent (pivot norm {norm:.3e})"
            )
        out[k] = q / norm
    return BasisSet(basis.grid, out, rho, orthonormal=True)


def orthonormal_polynomials_3term(M: int, rho: Density, grid: Grid) -> BasisSet:
    """Orthonormal polynomials under rho by the Stieltjes three-term recursion.

    p_{k+1} = (x - a_k) p_k - b_k p_{k-1} with the recursion coefficients
    computed from the discrete weighted inner product, each p_k normalized.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if rho.grid.B != grid.B:
        raise ValueError("grid mismatch between density and grid")
    B = grid.B
    w = rho.weights
    x = grid.nodes
    out = np.empty((M, B), dtype=np.complex128)

    p = np.ones(B, dtype=np.complex128)
    nrm2 = _weighted_dot(w, p, p, B).real
    if nrm2 < 1e-14:
        raise ValueError("degenerate measure: constant function has zero norm")
    out[0] = p / np.sqrt(nrm2)
    p_prev = np.zeros(B, dtype=np.complex128)
    b = 0.0
    for k in range(M - 1):
        p = out[k]
        a = _weighted_dot(w, p, x * p, B).real
        q = (x - a) * p - b * p_prev
        q2 = _weighted_dot(w, q, q, B).real
        if q2 < 1e-14:
            raise ValueError(f"degenerate measure: recursion broke down at degree {k + 1}")
        b = np.sqrt(q2)
        p_prev = p
        out[k + 1] = q / b
    return BasisSet(grid, out, rho, orthonormal=True)


def covariance_matrix(basis: BasisSet, *, rho: Density | None = None, samples=None) -> np.ndarray:
    """Gram matrix a_ij = <f_i, f_j> under the exact or the sample inner product.

    Diagnostic-only: the solvers never materialize it. The result is
    symmetrized so A == A^H holds exactly.
    """
    if (rho is None) == (samples is None):
        raise ValueError("pass exactly one of rho= or samples=")
    if rho is not None:
        A = basis.gram(rho)
    else:
        phi = basis.sample_matrix(samples.y)
        A = phi.conj() @ phi.T / samples.N
    return (A + A.conj().T) / 2.0


def projection_coeffs(basis: BasisSet, f: LutFunction, rho: Density) -> np.ndarray:
    """Coefficients <f_i, f> under rho for each basis function (helper for tests)."""
    w = rho.weights
    return (basis.values.conj() * w) @ f.values / basis.grid.B


def orthonormality_defect(basis: BasisSet) -> float:
    """max |Gram - I| under the basis's own weight (re-checkable certificate)."""
    G = basis.gram()
    return float(np.abs(G - np.eye(basis.M)).max())
