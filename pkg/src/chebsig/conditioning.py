"""Conditioning of polynomial bases under the continuous L2 inner product.

A basis is discretized as a tall matrix whose column j samples the degree-j
basis function on a fine second-kind Chebyshev grid, with every row scaled
by the square root of the matching Clenshaw-Curtis quadrature weight.  The
Euclidean inner product of two such columns is then the quadrature value of
the L2 inner product of the basis functions, so singular values and
condition numbers of the matrix approximate those of the continuous basis.
For polynomial columns and the default grid the quadrature is exact to
rounding, which is why the digits here are grid-independent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .cheb import Domain, cheb_points_second_kind, eval_cheb_poly

__all__ = [
    "Basis",
    "BasisMatrix",
    "NumericallySingularError",
    "clenshaw_curtis_weights",
    "build_basis_matrix",
    "singular_values",
    "condition_number",
    "conditioning_sweep",
]

DEFAULT_GRID = 1024

#: sigma_min below 1e3 * eps * sigma_max counts as numerically singular.
_SINGULAR_FACTOR = 1e3 * 2.0 ** -52


class Basis(enum.Enum):
    CHEBYSHEV = "chebyshev"
    MONOMIAL = "monomial"


class NumericallySingularError(ValueError):
    """The basis matrix is numerically rank-deficient."""


@dataclass(frozen=True)
class BasisMatrix:
    """sqrt-weight scaled samples of basis functions, one column per degree."""

    basis: Basis
    domain: Domain
    max_degree: int
    grid_size: int
    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=float)
        if e.shape != (self.grid_size, self.max_degree + 1):
            raise ValueError("entries shape does not match grid/degree")
        e = e.copy()
        e.flags.writeable = False
        object.__setattr__(self, "entries", e)


def clenshaw_curtis_weights(n: int) -> np.ndarray:
    """Quadrature weights for the n+1 second-kind points on [-1, 1]."""
    if n == 0:
        return np.array([2.0])
    theta = np.arange(n + 1) * (np.pi / n)
    ks = np.arange(1, n // 2 + 1)
    b = np.where(ks == n / 2, 1.0, 2.0)
    correction = np.cos(2.0 * np.outer(theta, ks)) @ (b / (4.0 * ks ** 2 - 1.0))
    w = (1.0 - correction) * (2.0 / n)
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


def build_basis_matrix(
    basis: Basis,
    domain: Domain,
    max_degree: int,
    grid_size: int = DEFAULT_GRID,
) -> BasisMatrix:
    """Assemble the weighted sample matrix for degrees 0..max_degree.

    grid_size must be at least 4*(max_degree+1) so the quadrature resolves
    every column product.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    if grid_size < 4 * (max_degree + 1):
        raise ValueError(
            f"grid_size {grid_size} below resolution guard "
            f"{4 * (max_degree + 1)} for max_degree {max_degree}"
        )
    nodes = cheb_points_second_kind(grid_size - 1, domain)
    x = nodes.points
    weights = clenshaw_curtis_weights(grid_size - 1) * (domain.width / 2.0)
    sqrt_w = np.sqrt(weights)
    if basis is Basis.CHEBYSHEV:
        s = domain.to_unit(x)
        cols = [eval_cheb_poly(k, s) for k in range(max_degree + 1)]
    else:
        cols = [x ** k for k in range(max_degree + 1)]
    entries = np.column_stack(cols) * sqrt_w[:, None]
    return BasisMatrix(basis, domain, max_degree, grid_size, entries)


def singular_values(m: BasisMatrix) -> np.ndarray:
    """Singular values of the weighted sample matrix, descending."""
    return np.linalg.svd(m.entries, compute_uv=False)


def condition_number(m: BasisMatrix) -> float:
    """sigma_max / sigma_min of the basis matrix.

    Raises
    ------
    NumericallySingularError
        If sigma_min is below 1e3 * eps * sigma_max.
    """
    sv = singular_values(m)
    if sv[-1] <= _SINGULAR_FACTOR * sv[0]:
        raise NumericallySingularError(
            f"numerically singular basis matrix (sigma ratio {sv[-1] / sv[0]:.3e})"
        )
    return float(sv[0] / sv[-1])


def conditioning_sweep(
    basis: Basis,
    domain: Domain,
    n_max: int,
    grid_size: int | None = None,
) -> np.ndarray:
    """Condition number of the degree 0..n truncations for n = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if grid_size is None:
        grid_size = max(DEFAULT_GRID, 4 * (n_max + 1))
    full = build_basis_matrix(basis, domain, n_max, grid_size)
    out = np.empty(n_max + 1)
    for n in range(n_max + 1):
        sub = BasisMatrix(basis, domain, n, grid_size, full.entries[:, : n + 1])
        out[n] = condition_number(sub)
    return out
