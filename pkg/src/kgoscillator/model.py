"""Physical parameters, background-vector configurations and dispersion relations.

The radial problem fixes ``Λ = 2 M ω (2 n_r + |l| + 1)``. For each background
four-vector ``v^μ`` the energy then follows from a quadratic

    alpha E^2 + beta E = M^2 + k_coeff k^2 + 2 M ω (n + 1 - σ)

where ``σ = +1`` for the (p + iMωr)·(p - iMωr) ordering and ``σ = -1`` for the
reversed one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import ComplexEnergy, DegenerateDispersion, DomainError

__all__ = [
    "BackgroundConfig",
    "DispersionCoefficients",
    "EnergyLevels",
    "Mixed",
    "ModelParams",
    "Prescription",
    "QuantumNumbers",
    "SpaceLike",
    "TimeLike",
    "dispersion_coefficients",
    "energy_levels",
    "lambda_required",
    "solve_dispersion",
]


@dataclass(frozen=True)
class ModelParams:
    """Mass ``M``, frequency ``omega``, coupling ``g`` and wavenumber ``k``."""

    M: float = 1.0
    omega: float = 1.0
    g: float = 0.0
    k: float = 0.0

    def __post_init__(self):
        for name in ("M", "omega", "g", "k"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
        if not self.M > 0:
            raise DomainError(f"M must be positive, got {self.M}")
        # ω = 0 leaves the radial equation without bound states.
        if not self.omega > 0:
            raise DomainError(f"omega must be positive, got {self.omega}")

    @property
    def m_omega(self) -> float:
        return self.M * self.omega


@dataclass(frozen=True)
class QuantumNumbers:
    """Signed magnetic number ``l`` and radial number ``n_r``."""

    l: int
    n_r: int

    def __post_init__(self):
        if int(self.l) != self.l or int(self.n_r) != self.n_r:
            raise DomainError("quantum numbers must be integers")
        if self.n_r < 0:
            raise DomainError(f"n_r must be nonnegative, got {self.n_r}")

    @property
    def abs_l(self) -> int:
        return abs(self.l)

    @property
    def n(self) -> int:
        """Principal number ``2 n_r + |l|``."""
        return 2 * self.n_r + abs(self.l)


@dataclass(frozen=True)
class TimeLike:
    """``v^μ = (a, 0, 0, 0)``."""

    a: float

    case = "A"

    @property
    def c(self) -> float:
        return 0.0


@dataclass(frozen=True)
class SpaceLike:
    """``v^μ = (0, 0, 0, c)``."""

    c: float

    case = "B"

    @property
    def a(self) -> float:
        return 0.0


@dataclass(frozen=True)
class Mixed:
    """``v^μ = (a, 0, 0, c)``."""

    a: float
    c: float

    case = "C"


BackgroundConfig = Union[TimeLike, SpaceLike, Mixed]


def make_config(case: str, a: float = 0.0, c: float = 0.0) -> BackgroundConfig:
    """Build a configuration from its case letter."""
    case = case.upper()
    if case == "A":
        return TimeLike(a)
    if case == "B":
        return SpaceLike(c)
    if case == "C":
        return Mixed(a, c)
    raise DomainError(f"unknown case {case!r}, expected A, B or C")


class Prescription(enum.Enum):
    """Operator ordering in the oscillator substitution.

    ``CORRECTED`` is (p + iMωr)·(p - iMωr) and gives +2Mω in the wave
    equation. ``ORIGINAL`` is the reversed product: the commutator
    ``[r_j, p_j]`` summed over the two transverse components then enters
    with the opposite sign and the constant becomes -2Mω.
    """

    CORRECTED = 1
    ORIGINAL = -1

    @property
    def sigma(self) -> int:
        return self.value

    @classmethod
    def parse(cls, name: Union[str, "Prescription"]) -> "Prescription":
        if isinstance(name, cls):
            return name
        try:
            return cls[str(name).upper()]
        except KeyError:
            raise DomainError(f"unknown prescription {name!r}") from None


@dataclass(frozen=True)
class DispersionCoefficients:
    """``alpha E^2 + beta E = M^2 + k_coeff k^2 + 2Mω(n + 1 - σ)``."""

    alpha: float
    beta: float
    k_coeff: float
    sigma: int

    def rhs(self, params: ModelParams, n: int) -> float:
        shift = n + 1 - self.sigma
        return params.M * params.M + self.k_coeff * params.k * params.k + 2.0 * params.m_omega * shift


@dataclass(frozen=True)
class EnergyLevels:
    """Roots of the dispersion quadratic, ``e_plus >= e_minus``.

    When ``degenerate`` is set (``alpha == 0``) the single linear root sits
    in ``e_plus`` and ``e_minus`` is ``None``.
    """

    e_plus: Optional[float]
    e_minus: Optional[float]
    lam: float
    degenerate: bool = False

    @property
    def roots(self) -> tuple[float, ...]:
        return tuple(e for e in (self.e_plus, self.e_minus) if e is not None)


def dispersion_coefficients(
    params: ModelParams,
    config: BackgroundConfig,
    presc: Prescription = Prescription.CORRECTED,
) -> DispersionCoefficients:
    """Coefficients of the energy quadratic for one background configuration.

    Expanding ``-g (a ∂_t + c ∂_z)^2`` on ``exp(-iEt + ikz)`` gives
    ``g a^2 E^2 - 2 g a c k E + g c^2 k^2``; the pieces land on the
    ``E^2``, ``E`` and ``k^2`` coefficients respectively.
    """
    g, k = params.g, params.k
    a, c = config.a, config.c
    presc = Prescription.parse(presc)
    if isinstance(config, TimeLike):
        return DispersionCoefficients(1.0 + g * a * a, 0.0, 1.0, presc.sigma)
    if isinstance(config, SpaceLike):
        return DispersionCoefficients(1.0, 0.0, 1.0 - g * c * c, presc.sigma)
    if isinstance(config, Mixed):
        return DispersionCoefficients(1.0 + g * a * a, -2.0 * a * c * g * k, 1.0 - g * c * c, presc.sigma)
    raise TypeError(f"not a background configuration: {config!r}")


def lambda_required(params: ModelParams, qn: QuantumNumbers) -> float:
    """Radial eigenvalue ``Λ = 2Mω(2 n_r + |l| + 1)``."""
    return 2.0 * params.m_omega * (qn.n + 1)


def solve_dispersion(alpha: float, beta: float, rhs: float, lam: float = math.nan) -> EnergyLevels:
    """Solve ``alpha E^2 + beta E - rhs = 0``.

    The larger-magnitude root is taken first and the other recovered from the
    product of roots, so nothing cancels when ``beta`` dominates.
    """
    if alpha == 0.0:
        if beta == 0.0:
            raise DegenerateDispersion("alpha and beta both vanish")
        root = rhs / beta
        return EnergyLevels(root, None, lam, degenerate=True)
    if beta == 0.0:
        ratio = rhs / alpha
        if ratio < 0.0:
            raise ComplexEnergy(f"E^2 = {ratio!r} < 0")
        root = math.sqrt(ratio)
        return EnergyLevels(root, -root, lam)
    disc = beta * beta + 4.0 * alpha * rhs
    if disc < 0.0:
        raise ComplexEnergy(f"negative discriminant {disc!r}")
    q = -0.5 * (beta + math.copysign(math.sqrt(disc), beta))
    r1 = q / alpha
    r2 = -rhs / q if q != 0.0 else r1
    return EnergyLevels(max(r1, r2), min(r1, r2), lam)


def energy_levels(
    params: ModelParams,
    config: BackgroundConfig,
    presc: Prescription,
    qn: QuantumNumbers,
) -> EnergyLevels:
    """Both energy branches of the mode ``(l, n_r)`` under ``config``.

    Raises
    ------
    ComplexEnergy
        Negative discriminant (parameters outside the physical regime).
    DegenerateDispersion
        ``alpha == beta == 0``.
    """
    coeffs = dispersion_coefficients(params, config, presc)
    return solve_dispersion(coeffs.alpha, coeffs.beta, coeffs.rhs(params, qn.n), lambda_required(params, qn))
