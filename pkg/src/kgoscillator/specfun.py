"""Special functions used by the closed-form solutions.

Log-gamma (Lanczos), generalized Laguerre polynomials by forward recurrence,
and Gauss-Laguerre quadrature rules built by Newton iteration on the
Laguerre roots. Everything here is pure Python floating point; the ``x``
arguments of :func:`laguerre` may also be numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, DomainError

__all__ = [
    "QuadratureRule",
    "gauss_laguerre",
    "laguerre",
    "laguerre_derivative",
    "ln_gamma",
]

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LN_2PI = 0.5 * math.log(2.0 * math.pi)


def ln_gamma(x: float) -> float:
    """Natural logarithm of the gamma function for ``x > 0``.

    Parameters
    ----------
    x : float
        Positive real argument.

    Returns
    -------
    float
        ``ln Γ(x)``.

    Raises
    ------
    DomainError
        If ``x <= 0`` or ``x`` is not finite.
    """
    x = float(x)
    if not (x > 0.0) or math.isinf(x):
        raise DomainError(f"ln_gamma requires a finite x > 0, got {x!r}")
    if x < 0.5:
        # Γ(x) = Γ(x + 1) / x keeps the series inside its accurate range.
        return ln_gamma(x + 1.0) - math.log(x)
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LN_2PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def laguerre(n, alpha, x):
    """Generalized Laguerre polynomial ``L_n^{(alpha)}(x)``.

    Evaluated by the forward three-term recurrence

        (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}

    starting from ``L_0 = 1`` and ``L_1 = 1 + alpha - x``.

    Parameters
    ----------
    n : int
        Degree, ``n >= 0``.
    alpha : float
        Shape parameter, ``alpha > -1``.
    x : float or numpy.ndarray
        Evaluation point(s).
    """
    if n < 0:
        raise DomainError(f"Laguerre degree must be nonnegative, got {n}")
    if n == 0:
        return 1.0 + 0.0 * x
    prev = 1.0 + 0.0 * x
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def laguerre_derivative(n, alpha, x):
    """First derivative in ``x``: ``d/dx L_n^{(a)} = -L_{n-1}^{(a+1)}``."""
    if n == 0:
        return 0.0 * x
    return -laguerre(n - 1, alpha + 1.0, x)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Laguerre rule for ``∫_0^∞ x^alpha e^{-x} f(x) dx``."""

    order: int
    alpha: float
    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    def integrate(self, f) -> float:
        """Apply the rule to ``f``; ``f`` is called once per node."""
        return math.fsum(w * f(x) for x, w in zip(self.nodes, self.weights))


def _laguerre_pair(n: int, alpha: float, z: float) -> tuple[float, float]:
    # (L_n(z), L_{n-1}(z))
    p1, p2 = 1.0, 0.0
    for j in range(1, n + 1):
        p2, p3 = p1, p2
        p1 = ((2 * j - 1 + alpha - z) * p2 - (j - 1 + alpha) * p3) / j
    return p1, p2


@lru_cache(maxsize=256)
def gauss_laguerre(order: int, alpha: float = 0.0) -> QuadratureRule:
    """Nodes and weights of the ``order``-point generalized Gauss-Laguerre rule.

    Nodes are the roots of ``L_order^{(alpha)}``, located by Newton iteration
    from the usual asymptotic starting guesses and polished to about 1e-14
    relative. Weights come from the derivative formula

        w_i = Γ(order + alpha + 1) / (order! · x_i · L'_order(x_i)^2)

    evaluated in log space.

    Raises
    ------
    ConvergenceError
        If Newton fails to converge or the roots come out unordered.
    """
    n = int(order)
    alpha = float(alpha)
    if n < 1:
        raise DomainError(f"quadrature order must be >= 1, got {order}")
    if not alpha > -1.0:
        raise DomainError(f"alpha must exceed -1, got {alpha}")

    ln_scale = ln_gamma(n + alpha + 1.0) - ln_gamma(n + 1.0)
    nodes: list[float] = []
    weights: list[float] = []
    z = 0.0
    for i in range(n):
        if i == 0:
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha)
        elif i == 1:
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n)
        else:
            ai = i - 1
            z += (
                ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai))
                * (z - nodes[i - 2])
                / (1.0 + 0.3 * alpha)
            )
        for _ in range(100):
            p1, p2 = _laguerre_pair(n, alpha, z)
            dp = (n * p1 - (n + alpha) * p2) / z
            step = p1 / dp
            z -= step
            if abs(step) <= 1e-15 * abs(z):
                break
        else:
            if not abs(step) <= 1e-12 * abs(z):
                raise ConvergenceError(
                    f"Laguerre root {i} of order {n}, alpha={alpha} did not converge"
                )
        if not z > 0.0 or (nodes and z <= nodes[-1]):
            raise ConvergenceError(
                f"Laguerre roots out of order at index {i} (order {n}, alpha={alpha})"
            )
        p1, p2 = _laguerre_pair(n, alpha, z)
        dp = (n * p1 - (n + alpha) * p2) / z
        nodes.append(z)
        weights.append(math.exp(ln_scale - math.log(z) - 2.0 * math.log(abs(dp))))
    return QuadratureRule(order=n, alpha=alpha, nodes=tuple(nodes), weights=tuple(weights))
