import numpy as np
import pytest

from xhermite.core.exactpoly import Polynomial
from xhermite.core.families import FamilyParams, FirstOrderFamily, Which, admissible_nus, build_family, hermite, potential_v2, seed_function, wavefunction
from xhermite.core.numerics import (
    FdGrid,
    QuadratureSpec,
    evaluate,
    fd_convergence_ratio,
    fd_spectrum,
    gram_matrix,
    inner_product,
    ladder_norm_check,
    norm_of_state,
    oscillator_calibration,
    sample_potential,
    sign_change_scan,
    verify_calibration,
    verify_first_order_numerics,
    verify_numerics,
)
from xhermite.core.quasigauss import OSCILLATOR
from xhermite.errors import InvalidParametersError, NonDecayingStateError


def test_oscillator_calibration():
    levels = oscillator_calibration(k=4)
    assert levels == pytest.approx([1.0, 3.0, 5.0, 7.0], abs=1e-4)
    assert verify_calibration().passed


def test_calibration_on_the_production_grid():
    # three-point error on level n is about h^2 (6n^2 + 6n + 3) / 48 below exact; h = 0.008 at M = 2000
    levels = oscillator_calibration(FdGrid(8.0, 2000), k=4)
    assert levels[:3] == pytest.approx([1.0, 3.0, 5.0], abs=1e-4)
    assert 5e-5 < 7.0 - levels[3] < 2e-4
    assert not verify_calibration(grid=FdGrid(8.0, 2000), tol=5e-5).passed


def test_second_order_convergence():
    ratio = fd_convergence_ratio(OSCILLATOR, [1.0, 3.0, 5.0], FdGrid(8.0, 1000))
    assert 3.5 < ratio < 4.5


def test_fd_accepts_a_callable():
    levels = fd_spectrum(lambda x: x * x, FdGrid(8.0, 2000), k=2)
    assert levels == pytest.approx([1.0, 3.0], abs=1e-3)


def test_fd_spectrum_of_x23(p23):
    levels = fd_spectrum(potential_v2(p23), FdGrid(), k=5)
    assert levels == pytest.approx([-1.0, 1.0, 7.0, 9.0, 11.0], abs=1e-3)


def test_fd_spectrum_of_first_order_partner():
    fam = FirstOrderFamily(2)
    assert fd_spectrum(fam.potential, FdGrid(), k=4) == pytest.approx([-5.0, 1.0, 3.0, 5.0], abs=1e-3)


@pytest.mark.parametrize("pair", [(2, 3), (2, 5), (4, 7)])
def test_states_are_orthonormal(pair):
    params = FamilyParams(*pair)
    states = [wavefunction(params, Which.H2, nu) for nu in admissible_nus(params, Which.H2, 8)]
    gram = gram_matrix(states)
    assert np.max(np.abs(gram - np.eye(8))) < 1e-7


@pytest.mark.parametrize("which", [Which.H1, Which.H])
def test_partner_states_are_normalised(p25, which):
    for nu in admissible_nus(p25, which, 4):
        assert norm_of_state(wavefunction(p25, which, nu)) == pytest.approx(1.0, abs=1e-8)


def test_adaptive_scheme_agrees(p23):
    spec = QuadratureSpec(scheme="adaptive")
    f = wavefunction(p23, Which.H2, -3)
    g = wavefunction(p23, Which.H2, 1)
    assert inner_product(f, f, spec) == pytest.approx(1.0, abs=1e-8)
    assert inner_product(f, g, spec) == pytest.approx(0.0, abs=1e-8)


def test_growing_states_rejected():
    with pytest.raises(NonDecayingStateError):
        inner_product(seed_function(2), seed_function(2))


@pytest.mark.parametrize("nu", [1, 2, 3])
def test_ladder_norm_by_quadrature(p23, nu):
    res = ladder_norm_check(p23, nu)
    assert res.passed()
    assert res.expected == pytest.approx(res.numeric, rel=1e-6)


def test_ladder_norm_of_b(p25):
    assert ladder_norm_check(p25, 2, operator="b").passed()


def test_evaluate_gaussian_weight():
    f = wavefunction(FamilyParams(2, 3), Which.H1, 0)
    x = np.array([0.0, 1.0])
    assert evaluate(f, x) == pytest.approx(np.pi ** -0.25 * np.exp(-0.5 * x * x))


def test_sample_potential(p23):
    df = sample_potential(potential_v2(p23), 4.0, 9)
    assert list(df.columns) == ["x", "V"]
    # V2(0) = 2 for (2,3)
    assert df.loc[4, "V"] == pytest.approx(2.0)


def test_sign_change_scan():
    assert sign_change_scan(build_family(2, 5).g) == 0
    assert sign_change_scan(hermite(4), half_width=4.0) == 4
    assert sign_change_scan(Polynomial((-1, 0, 1)), half_width=3.0, points=1000) == 2


def test_bounds_validation():
    with pytest.raises(InvalidParametersError):
        QuadratureSpec(nodes=10)
    with pytest.raises(InvalidParametersError):
        QuadratureSpec(scheme="simpson")
    with pytest.raises(InvalidParametersError):
        FdGrid(points=10)
    with pytest.raises(InvalidParametersError):
        FdGrid(half_width=0.0)
    with pytest.raises(InvalidParametersError):
        fd_spectrum(OSCILLATOR, FdGrid(8.0, 400), k=500)


def test_numeric_batteries(p23):
    report = verify_numerics(p23)
    assert report.passed, [(c.name, c.witness) for c in report.failures()]
    assert verify_first_order_numerics(FirstOrderFamily(4)).passed
