from fractions import Fraction

import pytest

from xhermite.core.exactpoly import Polynomial, RationalFunction
from xhermite.core.families import FamilyParams, Which, build_family, exact_state
from xhermite.core import operators
from xhermite.core.operators import (
    DAGGER,
    FirstOrderOp,
    OperatorChain,
    build_supercharges,
    energy_to_nu,
    hamiltonians,
    ladder_norm_poly,
    pha_polys,
    second_order_operator,
    verify_factorization_commutes,
    verify_hat_chain,
    verify_intertwining_c,
    verify_pha_products,
    verify_pha_specs,
    verify_second_order_operator,
    verify_supercharge_intertwining,
    verify_susy_norm_factors,
    verify_zero_modes_exact,
    zero_modes,
)
from xhermite.core.quasigauss import gaussian, qg_apply_hamiltonian, qg_scale, qg_sub
from xhermite.errors import InvalidParametersError

X = RationalFunction.x()


def assert_passed(report):
    assert report.checks
    assert report.passed, [(c.name, c.params, c.witness) for c in report.failures()]


def test_annihilation_operator_kills_the_gaussian():
    a = FirstOrderOp(1, X, "a")
    assert a.apply(gaussian(-1)).is_zero
    # a† e^{-x^2/2} = 2x e^{-x^2/2}
    assert a.adjoint().apply(gaussian(-1)).r == X.scale(2)


def test_adjoint_label_and_involution():
    op = FirstOrderOp(1, X, "A1")
    assert op.adjoint().label == "A1" + DAGGER
    assert op.adjoint().sign == -1
    assert op.adjoint().adjoint() == op


def test_chain_adjoint_reverses_order():
    a = FirstOrderOp(1, X, "a")
    b = FirstOrderOp(1, -X, "b")
    chain = OperatorChain.of(a, b, label="ab")
    assert chain.adjoint().labels() == ["b" + DAGGER, "a" + DAGGER]
    assert chain.adjoint().adjoint() == chain
    assert (chain @ chain).order == 4


def test_invalid_first_order_sign():
    with pytest.raises(ValueError):
        FirstOrderOp(0, X)


def test_ladder_orders(p25):
    sc = build_supercharges(p25)
    assert sc.c.order == p25.ell + 2
    assert sc.b.order == 5
    assert len(sc.hat) == p25.ell
    with pytest.raises(InvalidParametersError):
        sc.ladder("d")


def test_pha_roots_for_x23(p23):
    pha = pha_polys(p23)
    assert pha["P"].roots == (7, 1, -1, 3, 1)
    assert pha["Q"].roots == (3, 7, -1)
    assert ladder_norm_poly(p23, "c_dagger").roots == (1, 5, -3)
    assert pha["Q"](1) == 24
    assert pha["Q"](9) == 120


def test_second_order_operator_eta(published_params):
    op = second_order_operator(published_params)
    g = build_family(published_params.m1, published_params.m2).g
    assert op.eta == -X.scale(2) - RationalFunction(g.derivative(), g)


def test_second_order_operator_adjoint_round_trip(p23):
    op = second_order_operator(p23)
    assert op.adjoint().adjoint() == op


@pytest.mark.parametrize(
    "operator,energies",
    [("c", [-1, 7]), ("b", [-1, 1, 7]), ("c_dagger", [1]), ("b_dagger", [-1, 1])],
)
def test_zero_mode_energies_x23(p23, operator, energies):
    assert zero_modes(p23, operator).physical_energies == energies


def test_energy_to_nu(p23):
    assert energy_to_nu(p23, 7) == 0
    assert energy_to_nu(p23, 1) == -3
    assert energy_to_nu(p23, 3) is None
    assert energy_to_nu(p23, 8) is None


def test_lowest_state_annihilated_by_a2_dagger(published_params):
    sc = build_supercharges(published_params)
    assert sc.A2.adjoint().apply(exact_state(published_params, Which.H2, -published_params.m2 - 1)).is_zero


def test_factorization_energies_on_oscillator_states(p23):
    sc = build_supercharges(p23)
    h1 = hamiltonians(p23)["H1"]
    ell = p23.ell
    for nu in range(4):
        psi = exact_state(p23, Which.H1, nu)
        e = 2 * nu + 7
        image = (sc.calA.adjoint() @ sc.calA).apply(psi)
        assert qg_sub(image, qg_scale(psi, (e - ell) * (e + ell))).is_zero
        assert qg_sub(qg_apply_hamiltonian(h1, psi), qg_scale(psi, e)).is_zero


@pytest.mark.parametrize("pair", [(2, 3), (2, 5), (4, 5)])
def test_exact_operator_batteries(pair):
    params = FamilyParams(*pair)
    assert_passed(verify_pha_specs(params))
    assert_passed(verify_supercharge_intertwining(params, probes=4))
    assert_passed(verify_factorization_commutes(params, probes=4))
    assert_passed(verify_second_order_operator(params, probes=4))
    assert_passed(verify_hat_chain(params, max_nu=4, probes=3))
    assert_passed(verify_susy_norm_factors(params, max_nu=4))
    assert_passed(verify_intertwining_c(params, max_nu=4))


@pytest.mark.parametrize("pair", [(2, 3), (2, 5), (4, 7)])
def test_susy_factors_follow_the_state_norms(pair):
    assert_passed(verify_susy_norm_factors(FamilyParams(*pair), max_nu=6))


def test_susy_factors_catch_a_wrong_norm(p23, monkeypatch):
    real = operators.exact_norm_sq

    def off_by_four(params, which, nu):
        value = real(params, which, nu)
        return value * 4 if Which(which) is Which.H2 and nu >= 0 else value

    monkeypatch.setattr(operators, "exact_norm_sq", off_by_four)
    report = verify_susy_norm_factors(p23, max_nu=3)
    assert not report.passed
    assert {c.name for c in report.failures()} == {"A2 ψ", "A2† ψ2"}


@pytest.mark.parametrize("operator", ["b", "b_dagger", "c", "c_dagger"])
def test_zero_modes_found_by_exact_application(p25, operator):
    assert_passed(verify_zero_modes_exact(p25, operator, max_nu=5))


def test_pha_products(p23):
    assert_passed(verify_pha_products(p23, max_nu=2))


def test_pha_products_x47():
    assert_passed(verify_pha_products(FamilyParams(4, 7), max_nu=1))
