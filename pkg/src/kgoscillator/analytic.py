"""Closed-form eigenfunctions, normalization and conserved current.

Modes follow the decomposition ``Ψ = ψ(r)/√r · exp(-iEt + ilφ + ikz)`` with

    ψ(r) = N r^{|l|+1/2} exp(-Mω r^2/2) L_{n_r}^{(|l|)}(Mω r^2).

The charge density of a single mode is ``J^0 = F |Ψ|^2`` with a
configuration-dependent factor ``F``. Normalization integrates ``J^0`` over
``r dr`` only; the 2π from φ and the z extent are absorbed into the
plane-wave normalization, which is the convention that reproduces the
printed ``N_n``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import ZeroDensity
from .model import (
    BackgroundConfig,
    Mixed,
    ModelParams,
    QuantumNumbers,
    SpaceLike,
    TimeLike,
)
from .specfun import laguerre, laguerre_derivative, ln_gamma

__all__ = [
    "CurrentSample",
    "ModeState",
    "RadialSolution",
    "charge_density_factor",
    "charge_sign",
    "four_current",
    "make_mode",
    "normalization_constant",
    "radial_wavefunction",
]


@dataclass(frozen=True)
class RadialSolution:
    norm: float
    l: int
    n_r: int
    m_omega: float

    @property
    def power(self) -> float:
        return abs(self.l) + 0.5

    def __call__(self, r):
        """ψ(r); accepts scalars or arrays."""
        x = self.m_omega * r * r
        return self.norm * r ** self.power * np.exp(-0.5 * x) * laguerre(self.n_r, abs(self.l), x)

    def derivative(self, r):
        """dψ/dr, using d/dx L_n^{(a)} = -L_{n-1}^{(a+1)}."""
        mw = self.m_omega
        x = mw * r * r
        lag = laguerre(self.n_r, abs(self.l), x)
        dlag = laguerre_derivative(self.n_r, abs(self.l), x)
        s = self.power
        return self.norm * np.exp(-0.5 * x) * (
            r ** (s - 1.0) * (s * lag - x * lag + 2.0 * x * dlag)
        )

    def density(self, r):
        """ψ(r)^2 / r, finite at r = 0."""
        x = self.m_omega * r * r
        lag = laguerre(self.n_r, abs(self.l), x)
        return self.norm ** 2 * r ** (2 * abs(self.l)) * np.exp(-x) * lag * lag


def radial_wavefunction(params: ModelParams, qn: QuantumNumbers, norm: float) -> RadialSolution:
    return RadialSolution(norm=float(norm), l=qn.l, n_r=qn.n_r, m_omega=params.m_omega)


def _density_quantity(config: BackgroundConfig, E: float, k: float, g: float) -> float:
    # M * F; the quantity whose modulus replaces |E| in the normalization.
    if isinstance(config, TimeLike):
        return (1.0 + config.a * config.a * g) * E
    if isinstance(config, SpaceLike):
        return E
    if isinstance(config, Mixed):
        return (1.0 + config.a * config.a * g) * E - config.a * config.c * g * k
    raise TypeError(f"not a background configuration: {config!r}")


def charge_density_factor(config: BackgroundConfig, E: float, k: float, M: float, g: float) -> float:
    """Factor ``F`` with ``J^0 = F |Ψ|^2`` for a single mode.

    ``(1 + a^2 g) E / M`` (TimeLike), ``E / M`` (SpaceLike),
    ``((1 + a^2 g) E - a c g k) / M`` (Mixed).
    """
    return _density_quantity(config, E, k, g) / M


def charge_sign(config: BackgroundConfig, E: float, k: float, g: float) -> int:
    """+1 or -1: the value ``∫ J^0`` takes once the mode is normalized."""
    return 1 if _density_quantity(config, E, k, g) > 0 else -1


def normalization_constant(
    params: ModelParams,
    config: BackgroundConfig,
    qn: QuantumNumbers,
    E: float,
) -> float:
    """``N_n`` such that ``∫ J^0 r dr = ±1``, evaluated in log space.

    Raises
    ------
    ZeroDensity
        When ``(1 + a^2 g) E`` (TimeLike), ``E`` (SpaceLike) or
        ``(1 + a^2 g) E - a c g k`` (Mixed) vanishes.
    """
    q = _density_quantity(config, E, params.k, params.g)
    a, c, g, k = config.a, config.c, params.g, params.k
    scale = max(abs((1.0 + a * a * g) * E), abs(a * c * g * k))
    if q == 0.0 or abs(q) <= 4.0 * np.finfo(float).eps * scale:
        raise ZeroDensity(
            f"case {config.case}: charge density factor vanishes at E={E!r}; "
            "the mode cannot be normalized"
        )
    L = qn.abs_l
    ln_n2 = (
        math.log(2.0)
        + (L + 2) * math.log(params.M)
        + (L + 1) * math.log(params.omega)
        + ln_gamma(qn.n_r + 1.0)
        - math.log(abs(q))
        - ln_gamma(L + qn.n_r + 1.0)
    )
    return math.exp(0.5 * ln_n2)


@dataclass(frozen=True)
class ModeState:
    """One stationary mode ``ψ(r)/√r · exp(-iEt + ilφ + ikz)``."""

    energy: float
    k: float
    l: int
    radial: RadialSolution

    def field(self, t, r, phi, z) -> complex:
        return self.radial(r) / math.sqrt(r) * cmath.exp(1j * (-self.energy * t + self.l * phi + self.k * z))

    def gradient(self, t, r, phi, z) -> tuple[complex, complex, complex, complex]:
        """(∂_t, ∂_r, ∂_φ, ∂_z) of the field."""
        phase = cmath.exp(1j * (-self.energy * t + self.l * phi + self.k * z))
        sq = math.sqrt(r)
        u = self.radial(r) / sq
        du = (self.radial.derivative(r) - 0.5 * self.radial(r) / r) / sq
        return (-1j * self.energy * u * phase, du * phase, 1j * self.l * u * phase, 1j * self.k * u * phase)


def make_mode(
    params: ModelParams,
    config: BackgroundConfig,
    qn: QuantumNumbers,
    E: float,
    k: float | None = None,
) -> ModeState:
    """Normalized mode at energy ``E``; ``k`` defaults to ``params.k``."""
    if k is not None and k != params.k:
        params = ModelParams(params.M, params.omega, params.g, k)
    norm = normalization_constant(params, config, qn, E)
    return ModeState(energy=E, k=params.k, l=qn.l, radial=radial_wavefunction(params, qn, norm))


@dataclass(frozen=True)
class CurrentSample:
    """Components of ``J^μ``; ``jphi`` is the physical (orthonormal-frame) component."""

    j0: float
    jr: float
    jphi: float
    jz: float


def four_current(
    states: Union[ModeState, Sequence[ModeState]],
    config: BackgroundConfig,
    params: ModelParams,
    point: tuple[float, float, float, float],
) -> CurrentSample:
    """``J^μ`` of one mode or a two-mode superposition at ``(t, r, φ, z)``.

    The wave operator is ``∂_μ(G^{μν} ∂_ν)`` with ``G^{tt} = -(1 + g a^2)``,
    ``G^{tz} = -g a c``, ``G^{zz} = 1 - g c^2`` and the flat transverse
    Laplacian, so ``J^μ = Im(Ψ* G^{μν} ∂_ν Ψ) / M``. Only ``params.M`` and
    ``params.g`` are used; each state carries its own ``k``.
    """
    if isinstance(states, ModeState):
        states = (states,)
    if not 1 <= len(states) <= 2:
        raise ValueError("four_current supports one or two modes")
    t, r, phi, z = point
    psi = sum(s.field(t, r, phi, z) for s in states)
    grads = [s.gradient(t, r, phi, z) for s in states]
    dt, dr, dphi, dz = (sum(g[i] for g in grads) for i in range(4))
    g = params.g
    a, c = config.a, config.c
    conj = psi.conjugate()
    gtt = -(1.0 + g * a * a)
    gtz = -g * a * c
    gzz = 1.0 - g * c * c
    inv_m = 1.0 / params.M
    return CurrentSample(
        j0=inv_m * (conj * (gtt * dt + gtz * dz)).imag,
        jr=inv_m * (conj * dr).imag,
        jphi=inv_m * (conj * dphi).imag / r,
        jz=inv_m * (conj * (gtz * dt + gzz * dz)).imag,
    )
