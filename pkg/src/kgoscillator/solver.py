"""Finite-difference eigensolver for the radial oscillator operator.

Computes the lowest eigenvalues of

    -d^2/dr^2 + (Mω)^2 r^2 + (l^2 - 1/4) / r^2

on ``(0, r_max)`` without using the quantization condition, so it serves as
an independent check of ``Λ = 2Mω(2 n_r + |l| + 1)``.

The operator is discretized in flux form. Writing ``ψ = √r R`` turns it into
``-(1/r)(r R')' + l^2/r^2 R + (Mω)^2 r^2 R``; on cell centres
``r_i = (i - 1/2) h`` the flux through ``r = 0`` vanishes, and symmetrizing
with ``√r_i`` gives a symmetric tridiagonal matrix acting on ``ψ_i``. This
stays second order for ``l = 0``, where a plain central difference on the
``-1/(4 r^2)`` term converges only logarithmically. The outer boundary is
Dirichlet at the face ``r_max = N h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import GridTooCoarse
from .model import (
    BackgroundConfig,
    EnergyLevels,
    ModelParams,
    Prescription,
    dispersion_coefficients,
    solve_dispersion,
)
from .sturm import lowest_eigenvalues

__all__ = [
    "GridSpec",
    "LambdaSpectrum",
    "energies_from_lambda",
    "radial_matrix",
    "richardson_lambda",
    "solve_radial",
]

DEFAULT_POINTS = 4000


@dataclass(frozen=True)
class GridSpec:
    """Uniform cell-centred grid of ``points`` cells on ``(0, r_max)``."""

    r_max: float
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if not self.r_max > 0:
            raise ValueError(f"r_max must be positive, got {self.r_max}")
        if self.points < 100:
            raise ValueError(f"points must be >= 100, got {self.points}")

    @classmethod
    def default(cls, m_omega: float, n_max: int = 0, points: int = DEFAULT_POINTS) -> "GridSpec":
        # Mω r_max^2 / 2 >= 40 plus headroom for the highest level's tail.
        return cls(math.sqrt((80.0 + 2.0 * n_max) / m_omega), points)

    @property
    def h(self) -> float:
        return self.r_max / self.points

    def refined(self, factor: int = 2) -> "GridSpec":
        return GridSpec(self.r_max, self.points * factor)


@dataclass(frozen=True)
class LambdaSpectrum:
    lambdas: tuple[float, ...]
    grid: GridSpec
    l: int
    # Observed convergence order per eigenvalue (Richardson only).
    order: Optional[tuple[float, ...]] = field(default=None)


def radial_matrix(m_omega: float, l: int, grid: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of the discretized radial operator."""
    n, h = grid.points, grid.h
    r = h * (np.arange(1, n + 1) - 0.5)
    r_out = r + 0.5 * h
    r_in = r - 0.5 * h
    diag = (r_out + r_in) / (r * h * h) + (m_omega * r) ** 2 + (l * l) / (r * r)
    # Dirichlet at r_max: ghost value mirrors R_N with opposite sign.
    diag[-1] += r_out[-1] / (r[-1] * h * h)
    off = -r_out[:-1] / (h * h * np.sqrt(r[:-1] * r[1:]))
    return diag, off


@lru_cache(maxsize=512)
def _eigs(m_omega: float, l: int, count: int, grid: GridSpec) -> tuple[float, ...]:
    diag, off = radial_matrix(m_omega, l, grid)
    return tuple(float(v) for v in lowest_eigenvalues(diag, off, count))


def _check_count(count: int, grid: GridSpec) -> None:
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if count > grid.points // 10:
        raise ValueError(f"count={count} exceeds points/10 for a {grid.points}-cell grid")


def solve_radial(params: ModelParams, l: int, count: int, grid: Optional[GridSpec] = None) -> LambdaSpectrum:
    """Lowest ``count`` eigenvalues Λ of the radial operator, ascending.

    Error is O(h^2).

    Raises
    ------
    GridTooCoarse
        If ``h^2 Λ^2 / 12`` for the largest requested level exceeds 1% of
        its gap to the next level.
    """
    m_omega = params.m_omega
    grid = grid or GridSpec.default(m_omega)
    _check_count(count, grid)
    lams = _eigs(m_omega, abs(l), count + 1, grid)
    top = lams[count - 1]
    error_estimate = grid.h ** 2 * top * top / 12.0
    gap = lams[count] - top
    if error_estimate > 0.01 * gap:
        raise GridTooCoarse(
            f"estimated error {error_estimate:.3g} of level {count - 1} exceeds 1% of gap {gap:.3g}; "
            "increase points"
        )
    return LambdaSpectrum(lambdas=lams[:count], grid=grid, l=l)


def richardson_lambda(params: ModelParams, l: int, count: int, grid: Optional[GridSpec] = None) -> LambdaSpectrum:
    """Richardson-extrapolated eigenvalues from grids ``h`` and ``h/2``.

    A third solve at ``h/4`` gives the observed order
    ``log2((Λ_h - Λ_{h/2}) / (Λ_{h/2} - Λ_{h/4}))``, reported per level.
    """
    grid = grid or GridSpec.default(params.m_omega)
    coarse = solve_radial(params, l, count, grid)
    fine = solve_radial(params, l, count, grid.refined(2))
    finest = solve_radial(params, l, count, grid.refined(4))
    extrapolated = []
    orders = []
    for a, b, c in zip(coarse.lambdas, fine.lambdas, finest.lambdas):
        extrapolated.append((4.0 * b - a) / 3.0)
        d1, d2 = a - b, b - c
        orders.append(math.log2(d1 / d2) if d1 * d2 > 0 else math.nan)
    return LambdaSpectrum(lambdas=tuple(extrapolated), grid=grid, l=l, order=tuple(orders))


def energies_from_lambda(
    lam: float,
    params: ModelParams,
    config: BackgroundConfig,
    presc: Prescription = Prescription.CORRECTED,
) -> EnergyLevels:
    """Energies whose dispersion relation reproduces the radial eigenvalue ``lam``.

    Solves ``alpha E^2 + beta E + (2σMω - M^2 - k_coeff k^2) = lam``.
    """
    coeffs = dispersion_coefficients(params, config, presc)
    rhs = lam + params.M * params.M + coeffs.k_coeff * params.k * params.k - 2.0 * coeffs.sigma * params.m_omega
    return solve_dispersion(coeffs.alpha, coeffs.beta, rhs, lam)
