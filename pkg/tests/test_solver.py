import math

import numpy as np
import pytest
from scipy.linalg import eigvalsh_tridiagonal

from kgoscillator.errors import GridTooCoarse
from kgoscillator.model import (
    Mixed,
    ModelParams,
    Prescription,
    QuantumNumbers,
    TimeLike,
    energy_levels,
    lambda_required,
)
from kgoscillator.solver import (
    GridSpec,
    energies_from_lambda,
    radial_matrix,
    richardson_lambda,
    solve_radial,
)

C, O = Prescription.CORRECTED, Prescription.ORIGINAL
UNIT = ModelParams(1.0, 1.0)


def closed_form(m_omega, l, count):
    return [2.0 * m_omega * (2 * n_r + abs(l) + 1) for n_r in range(count)]


def test_grid_validation():
    with pytest.raises(ValueError):
        GridSpec(1.0, 99)
    with pytest.raises(ValueError):
        GridSpec(0.0, 200)
    grid = GridSpec.default(1.0)
    assert 1.0 * grid.r_max**2 / 2 >= 40.0
    assert grid.points == 4000
    assert grid.refined(2).h == pytest.approx(grid.h / 2)


@pytest.mark.parametrize("l, count", [(0, 3), (1, 2)])
def test_solve_radial_examples(l, count):
    spectrum = solve_radial(UNIT, l, count)
    assert spectrum.lambdas == pytest.approx(closed_form(1.0, l, count), rel=1e-4)
    assert all(b > a for a, b in zip(spectrum.lambdas, spectrum.lambdas[1:]))
    assert len(spectrum.lambdas) == count


def test_solve_radial_depends_on_product():
    assert solve_radial(ModelParams(2.0, 0.5), 0, 1).lambdas[0] == pytest.approx(2.0, rel=1e-4)


def test_matrix_matches_dense_eigensolver():
    grid = GridSpec(math.sqrt(80.0), 800)
    diag, off = radial_matrix(1.0, 2, grid)
    expected = eigvalsh_tridiagonal(diag, off, select="i", select_range=(0, 3))
    assert solve_radial(UNIT, 2, 4, grid).lambdas == pytest.approx(expected, rel=1e-12)


def test_count_precondition():
    with pytest.raises(ValueError):
        solve_radial(UNIT, 0, 11, GridSpec(9.0, 100))
    with pytest.raises(ValueError):
        solve_radial(UNIT, 0, 0)


def test_grid_too_coarse():
    with pytest.raises(GridTooCoarse):
        solve_radial(UNIT, 0, 8, GridSpec(9.0, 100))


@pytest.mark.parametrize("l", [0, 3])
def test_richardson_examples(l):
    spectrum = richardson_lambda(UNIT, l, 1)
    assert spectrum.lambdas[0] == pytest.approx(2.0 * (abs(l) + 1), abs=1e-7)


def test_observed_order():
    spectrum = richardson_lambda(UNIT, 0, 1)
    assert 1.9 <= spectrum.order[0] <= 2.1


@pytest.mark.parametrize("l", [0, 1, 2, 3, -2])
def test_spectrum_match(l):
    spectrum = richardson_lambda(UNIT, l, 3)
    for n_r, lam in enumerate(spectrum.lambdas):
        assert lam == pytest.approx(lambda_required(UNIT, QuantumNumbers(l, n_r)), rel=1e-6)


def test_degeneracy_structure():
    a = richardson_lambda(UNIT, 2, 1).lambdas[0]
    b = richardson_lambda(UNIT, 0, 2).lambdas[1]
    assert a == pytest.approx(b, rel=1e-6)


@pytest.mark.parametrize("l", [0, 1, 4])
def test_refinement_monotone(l):
    exact = np.array(closed_form(1.0, l, 3))
    errors = []
    for points in (500, 1000, 2000, 4000):
        lams = np.array(solve_radial(UNIT, l, 3, GridSpec(math.sqrt(80.0), points)).lambdas)
        errors.append(np.max(np.abs(lams - exact)))
    assert all(b < a for a, b in zip(errors, errors[1:]))


@pytest.mark.parametrize("presc", [C, O])
@pytest.mark.parametrize("config", [TimeLike(1.0), Mixed(1.0, 1.0)])
def test_energy_consistency(presc, config):
    params = ModelParams(1.3, 0.7, 0.5, 0.9)
    for qn in (QuantumNumbers(0, 0), QuantumNumbers(-2, 1), QuantumNumbers(3, 2)):
        via_lambda = energies_from_lambda(lambda_required(params, qn), params, config, presc)
        direct = energy_levels(params, config, presc, qn)
        assert via_lambda.roots == pytest.approx(direct.roots, rel=1e-12)


def test_energies_from_lambda_examples():
    levels = energies_from_lambda(2.0, ModelParams(1, 1, 0, 0), TimeLike(0.0), C)
    assert levels.roots == pytest.approx((1.0, -1.0), rel=1e-15)
    levels = energies_from_lambda(2.0, ModelParams(1, 1, 1, 0), TimeLike(1.0), C)
    assert levels.roots == pytest.approx((1 / math.sqrt(2), -1 / math.sqrt(2)), rel=1e-15)
    levels = energies_from_lambda(2.0, ModelParams(1, 1, 0.5, 1), Mixed(1.0, 1.0), C)
    assert levels.e_plus == pytest.approx(1.387425886722793, rel=1e-14)
