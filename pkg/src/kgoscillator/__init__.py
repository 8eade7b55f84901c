"""Klein-Gordon oscillator under a Lorentz-violating background four-vector.

Closed-form spectra, eigenfunctions, normalization constants and conserved
current for timelike, spacelike and mixed backgrounds, plus the numerical
oracles (finite-difference eigensolver, Gauss-Laguerre quadrature, discrete
continuity residual) that check them.
"""

from .analytic import (
    CurrentSample,
    ModeState,
    RadialSolution,
    charge_density_factor,
    four_current,
    make_mode,
    normalization_constant,
    radial_wavefunction,
)
from .errors import (
    ComplexEnergy,
    ConvergenceError,
    DegenerateDispersion,
    DomainError,
    GridTooCoarse,
    ZeroDensity,
)
from .model import (
    DispersionCoefficients,
    EnergyLevels,
    Mixed,
    ModelParams,
    Prescription,
    QuantumNumbers,
    SpaceLike,
    TimeLike,
    dispersion_coefficients,
    energy_levels,
    lambda_required,
)
from .solver import GridSpec, LambdaSpectrum, energies_from_lambda, richardson_lambda, solve_radial
from .specfun import QuadratureRule, gauss_laguerre, laguerre, ln_gamma
from .sturm import BACKEND

__version__ = "0.1.0"
