import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from scipy.optimize import brentq

from kgoscillator.errors import ComplexEnergy, DegenerateDispersion, DomainError
from kgoscillator.model import (
    Mixed,
    ModelParams,
    Prescription,
    QuantumNumbers,
    SpaceLike,
    TimeLike,
    dispersion_coefficients,
    energy_levels,
    lambda_required,
    make_config,
    solve_dispersion,
)

C, O = Prescription.CORRECTED, Prescription.ORIGINAL

# Roots of 1.5 E^2 - E - 1.5 = 0 from scipy brentq, xtol 1e-15.
MIXED_E_PLUS = 1.387425886722793
MIXED_E_MINUS = -0.7207592200561265


def test_params_validation():
    with pytest.raises(DomainError):
        ModelParams(M=0.0)
    with pytest.raises(DomainError):
        ModelParams(omega=0.0)
    with pytest.raises(DomainError):
        ModelParams(omega=-1.0)
    with pytest.raises(DomainError):
        ModelParams(g=math.inf)
    with pytest.raises(DomainError):
        QuantumNumbers(0, -1)


def test_principal_number():
    qn = QuantumNumbers(-3, 2)
    assert qn.n == 7 and qn.abs_l == 3


def test_make_config():
    assert make_config("a", a=2.0) == TimeLike(2.0)
    assert make_config("B", c=1.5) == SpaceLike(1.5)
    assert make_config("C", 1.0, 2.0) == Mixed(1.0, 2.0)
    with pytest.raises(DomainError):
        make_config("D")


def test_prescription_parse():
    assert Prescription.parse("original") is O
    assert C.sigma == 1 and O.sigma == -1
    with pytest.raises(DomainError):
        Prescription.parse("sideways")


@pytest.mark.parametrize(
    "params, config, expected",
    [
        (ModelParams(1, 1, 0, 0), TimeLike(7.0), (1.0, 0.0, 1.0)),
        (ModelParams(1, 1, 1, 2), Mixed(1.0, 1.0), (2.0, -4.0, 0.0)),
        (ModelParams(1, 1, 0.5, 1), SpaceLike(1.0), (1.0, 0.0, 0.5)),
    ],
)
def test_dispersion_coefficients_examples(params, config, expected):
    coeffs = dispersion_coefficients(params, config, C)
    assert (coeffs.alpha, coeffs.beta, coeffs.k_coeff) == pytest.approx(expected, abs=0)


@pytest.mark.parametrize(
    "params, qn, expected",
    [
        (ModelParams(1, 1), QuantumNumbers(0, 0), 2.0),
        (ModelParams(1, 1), QuantumNumbers(2, 1), 10.0),
        (ModelParams(2, 0.5), QuantumNumbers(0, 0), 2.0),
    ],
)
def test_lambda_required(params, qn, expected):
    assert lambda_required(params, qn) == expected


def test_energy_rest_mass():
    levels = energy_levels(ModelParams(1, 1, 0, 0), TimeLike(0.0), C, QuantumNumbers(0, 0))
    assert (levels.e_plus, levels.e_minus) == (1.0, -1.0)
    assert not levels.degenerate


def test_energy_timelike_excited():
    levels = energy_levels(ModelParams(1, 1, 1, 0), TimeLike(1.0), C, QuantumNumbers(0, 1))
    assert levels.e_plus == pytest.approx(math.sqrt(2.5), rel=1e-15)
    assert levels.e_minus == -levels.e_plus


def test_energy_mixed_against_root_finder():
    f = lambda E: 1.5 * E * E - E - 1.5  # noqa: E731
    assert brentq(f, 0, 3, xtol=1e-15) == pytest.approx(MIXED_E_PLUS, rel=1e-14)
    levels = energy_levels(ModelParams(1, 1, 0.5, 1), Mixed(1.0, 1.0), C, QuantumNumbers(0, 0))
    assert levels.e_plus == pytest.approx(MIXED_E_PLUS, rel=1e-14)
    assert levels.e_minus == pytest.approx(MIXED_E_MINUS, rel=1e-14)
    # closed form: acgk/α ± sqrt((acgk/α)^2 + RHS/α)
    shift = 0.5 / 1.5
    assert levels.e_plus == pytest.approx(shift + math.sqrt(shift**2 + 1.0), rel=1e-14)


def test_energy_original_prescription():
    levels = energy_levels(ModelParams(1, 1, 0, 0), TimeLike(0.0), O, QuantumNumbers(0, 0))
    assert levels.e_plus == pytest.approx(math.sqrt(5.0), rel=1e-15)
    assert levels.e_minus == pytest.approx(-math.sqrt(5.0), rel=1e-15)


def test_complex_energy():
    # k_coeff = 1 - 2 = -1, RHS = 1 - 4 < 0
    with pytest.raises(ComplexEnergy):
        energy_levels(ModelParams(1, 1, 2.0, 2.0), SpaceLike(1.0), C, QuantumNumbers(0, 0))


def test_negative_alpha_still_solved():
    # g a^2 = -2 gives alpha = -1, RHS > 0, so E^2 < 0 and no real root.
    with pytest.raises(ComplexEnergy):
        energy_levels(ModelParams(1, 1, -2.0, 0.0), TimeLike(1.0), C, QuantumNumbers(0, 0))
    # With beta != 0 a real pair can survive alpha < 0.
    levels = solve_dispersion(-1.0, 3.0, -1.0)
    for E in levels.roots:
        assert -E * E + 3 * E + 1.0 == pytest.approx(0.0, abs=1e-14)
    assert levels.e_plus >= levels.e_minus


def test_degenerate_linear_root():
    # alpha = 1 + g a^2 = 0 with g = -1, a = 1; beta = -2 a c g k = 2
    params = ModelParams(1, 1, -1.0, 1.0)
    levels = energy_levels(params, Mixed(1.0, 1.0), C, QuantumNumbers(0, 0))
    assert levels.degenerate and levels.e_minus is None
    # RHS = 1 + (1 + 1) * 1 = 3, root 3/2
    assert levels.e_plus == pytest.approx(1.5, rel=1e-15)
    assert levels.roots == (levels.e_plus,)


def test_degenerate_dispersion_error():
    with pytest.raises(DegenerateDispersion):
        energy_levels(ModelParams(1, 1, -1.0, 0.0), TimeLike(1.0), C, QuantumNumbers(0, 0))


def test_stable_root_when_beta_dominates():
    levels = solve_dispersion(1.0, -1e9, 1.0)
    # small root ≈ -1e-9, a naive formula loses it entirely
    assert levels.e_minus == pytest.approx(-1e-9, rel=1e-12)


finite = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
positive = st.floats(min_value=0.2, max_value=3.0)
quantum = st.builds(QuantumNumbers, st.integers(-6, 6), st.integers(0, 5))


def _levels_or_none(*args):
    try:
        return energy_levels(*args)
    except (ComplexEnergy, DegenerateDispersion):
        return None


@given(positive, positive, finite, finite, finite, quantum, st.sampled_from([C, O]))
def test_branch_symmetry(M, w, g, k, a, qn, presc):
    params = ModelParams(M, w, g, k)
    for config in (TimeLike(a), SpaceLike(a)):
        levels = _levels_or_none(params, config, presc, qn)
        assume(levels is not None)
        assert levels.e_plus == -levels.e_minus


@given(positive, positive, st.floats(-0.9, 2.0), finite, st.floats(-2, 2), st.floats(-2, 2), quantum)
def test_branch_sum_mixed(M, w, g, k, a, c, qn):
    params = ModelParams(M, w, g, k)
    levels = _levels_or_none(params, Mixed(a, c), C, qn)
    assume(levels is not None and not levels.degenerate)
    expected = 2 * a * c * g * k / (1 + g * a * a)
    scale = max(abs(levels.e_plus), abs(levels.e_minus), 1.0)
    assert levels.e_plus + levels.e_minus == pytest.approx(expected, abs=1e-12 * scale)


@given(positive, positive, finite, finite, finite, quantum, st.sampled_from([C, O]))
def test_limit_collapse(M, w, g, k, v, qn, presc):
    params = ModelParams(M, w, g, k)
    assert _levels_or_none(params, Mixed(v, 0.0), presc, qn) == _levels_or_none(params, TimeLike(v), presc, qn)
    assert _levels_or_none(params, Mixed(0.0, v), presc, qn) == _levels_or_none(params, SpaceLike(v), presc, qn)


@given(positive, positive, finite, finite, finite, quantum)
def test_g_zero_universality(M, w, k, a, c, qn):
    params = ModelParams(M, w, 0.0, k)
    target = M * M + k * k + 2 * M * w * qn.n
    for config in (TimeLike(a), SpaceLike(c), Mixed(a, c)):
        for E in energy_levels(params, config, C, qn).roots:
            assert E * E == pytest.approx(target, rel=1e-14)


@given(positive, positive, finite, finite, finite, finite, quantum)
def test_prescription_shift(M, w, g, k, a, c, qn):
    params = ModelParams(M, w, g, k)
    shifted = QuantumNumbers(qn.l, qn.n_r + 1)
    for config in (TimeLike(a), SpaceLike(c), Mixed(a, c)):
        original = _levels_or_none(params, config, O, qn)
        corrected = _levels_or_none(params, config, C, shifted)
        assert (original is None) == (corrected is None)
        if original is not None:
            # Λ differs by construction; the energies must agree exactly.
            assert original.roots == corrected.roots


@given(positive, positive, finite, finite, finite, finite, quantum, st.sampled_from([C, O]))
def test_root_residual(M, w, g, k, a, c, qn, presc):
    params = ModelParams(M, w, g, k)
    for config in (TimeLike(a), SpaceLike(c), Mixed(a, c)):
        levels = _levels_or_none(params, config, presc, qn)
        if levels is None:
            continue
        coeffs = dispersion_coefficients(params, config, presc)
        rhs = coeffs.rhs(params, qn.n)
        for E in levels.roots:
            residual = coeffs.alpha * E * E + coeffs.beta * E - rhs
            scale = max(1.0, abs(rhs), abs(coeffs.alpha * E * E), abs(coeffs.beta * E))
            assert abs(residual) <= 1e-12 * scale


def test_roots_match_numpy_polynomial_solver():
    rng = np.random.default_rng(3)
    for _ in range(50):
        alpha, beta, rhs = rng.uniform(0.2, 3), rng.uniform(-4, 4), rng.uniform(0.5, 10)
        levels = solve_dispersion(alpha, beta, rhs)
        ref = sorted(np.roots([alpha, beta, -rhs]).real, reverse=True)
        assert [levels.e_plus, levels.e_minus] == pytest.approx(ref, rel=1e-12)
