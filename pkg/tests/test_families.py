from fractions import Fraction

import pytest
import sympy

from xhermite.core.exactpoly import Polynomial
from xhermite.core.families import (
    ExtendedFamily,
    FamilyParams,
    FirstOrderFamily,
    Which,
    build_family,
    degree_gaps,
    degree_set,
    diffeq_residual_first,
    diffeq_residual_second,
    energy,
    eop_derivative_residual,
    eop_first,
    eop_second,
    exact_norm_sq,
    exact_state,
    format_v2,
    hat_potential,
    hermite,
    hermite_identity_residuals,
    potential_triple,
    potential_v2,
    pseudo_hermite,
    pseudo_hermite_explicit,
    spectrum,
    split_v2,
    wronskian_identity_residuals,
)
from xhermite.core.quasigauss import Potential, qg_apply_hamiltonian, qg_scale, qg_sub
from xhermite.core.sturm import count_real_roots
from xhermite.errors import DegreeGapError, InvalidParametersError

sx = sympy.Symbol("x")


def sympy_coeffs(expr):
    """Ascending integer coefficients of a sympy polynomial in x."""
    return [int(c) for c in reversed(sympy.Poly(sympy.expand(expr), sx).all_coeffs())]


def int_coeffs(p: Polynomial):
    return [int(c) for c in p.coeffs]


@pytest.mark.parametrize("n", range(0, 11))
def test_hermite_matches_sympy(n):
    assert int_coeffs(hermite(n)) == sympy_coeffs(sympy.hermite(n, sx))


@pytest.mark.parametrize("n", range(0, 11))
def test_pseudo_hermite_matches_rotated_hermite(n):
    expected = sympy_coeffs((-sympy.I) ** n * sympy.hermite(n, sympy.I * sx))
    assert int_coeffs(pseudo_hermite(n)) == expected
    assert pseudo_hermite_explicit(n) == pseudo_hermite(n)


def test_small_pseudo_hermite():
    assert pseudo_hermite(2) == Polynomial((2, 0, 4))
    assert pseudo_hermite(3) == Polynomial((0, 12, 0, 8))
    assert pseudo_hermite(4) == Polynomial((12, 0, 48, 0, 16))


@pytest.mark.parametrize("n", range(1, 9))
def test_hermite_identities(n):
    for name, residual in hermite_identity_residuals(n).items():
        assert residual.is_zero, name


@pytest.mark.parametrize("m1,m2", [(0, 3), (3, 5), (2, 4), (4, 3), (2, 2), (-2, 3)])
def test_invalid_family_parameters(m1, m2):
    with pytest.raises(InvalidParametersError):
        FamilyParams(m1, m2)


def test_parameter_message_quotes_the_constraint():
    with pytest.raises(InvalidParametersError, match="m2 odd and such that m2 > m1"):
        FamilyParams(2, 4)


def test_mu_and_ell(p25):
    assert p25.mu == 6
    assert p25.ell == 3
    assert p25.to_json() == {"m1": 2, "m2": 5, "mu": 6, "ell": 3}


def test_g_for_x23(p23):
    fam = build_family(2, 3)
    assert fam.g == Polynomial((24, 0, 0, 0, 32))
    assert fam.gbar.degree == p23.mu - 2


def test_g_degree_lead_and_nodeless(published_params):
    fam = build_family(published_params.m1, published_params.m2)
    assert fam.g.degree == published_params.mu
    assert fam.g.leading == 2 ** (published_params.mu + 1) * published_params.ell
    assert count_real_roots(fam.g) == 0
    assert fam.gbar.degree == published_params.mu - 2


def test_g_matches_sympy_wronskian(published_params):
    h1 = (-sympy.I) ** published_params.m1 * sympy.hermite(published_params.m1, sympy.I * sx)
    h2 = (-sympy.I) ** published_params.m2 * sympy.hermite(published_params.m2, sympy.I * sx)
    w = sympy.expand(h1 * sympy.diff(h2, sx) - sympy.diff(h1, sx) * h2)
    assert int_coeffs(build_family(published_params.m1, published_params.m2).g) == sympy_coeffs(w)


def test_wronskian_identities(published_params):
    for name, residual in wronskian_identity_residuals(published_params).items():
        assert residual.is_zero, name


def test_degree_set_and_gaps(p23):
    assert degree_set(p23, 9) == [2, 3, 6, 7, 8, 9]
    assert degree_gaps(p23) == [0, 1, 4, 5]
    assert len(degree_gaps(FamilyParams(4, 7))) == 10


def test_gap_degree_raises_with_admissible_list(p23):
    with pytest.raises(DegreeGapError) as info:
        eop_second(p23, 4)
    assert info.value.admissible[:3] == [2, 3, 6]


def test_second_order_eops_solve_their_equation(published_params):
    for n in degree_set(published_params, 14):
        y = eop_second(published_params, n)
        assert y.degree == n
        assert diffeq_residual_second(published_params, n).is_zero, n


@pytest.mark.parametrize("m", [2, 4, 6])
def test_first_order_eops(m):
    fam = FirstOrderFamily(m)
    assert fam.degree_set(m + 4) == [0] + list(range(m + 1, m + 5))
    for n in fam.degree_set(m + 8):
        assert eop_first(m, n).degree == n
        assert diffeq_residual_first(m, n).is_zero
    for nu in range(6):
        assert eop_derivative_residual(m, nu).is_zero


def test_first_order_gap_and_seed_checks():
    with pytest.raises(DegreeGapError):
        eop_first(2, 1)
    with pytest.raises(InvalidParametersError):
        FirstOrderFamily(3)
    with pytest.raises(InvalidParametersError):
        FirstOrderFamily(0)
    # odd indices are allowed as formal members
    assert eop_first(3, 5, formal=True).degree == 5


def test_first_order_spectrum():
    fam = FirstOrderFamily(2)
    assert fam.admissible_nus(4) == [-3, 0, 1, 2]
    assert [fam.energy(nu) for nu in fam.admissible_nus(4)] == [-5, 1, 3, 5]
    with pytest.raises(DegreeGapError):
        fam.energy(-1)


@pytest.mark.parametrize("nu", [-3, 0, 1, 2, 3])
def test_first_order_states_are_eigenfunctions(nu):
    fam = FirstOrderFamily(2)
    psi = fam.wavefunction(nu).exact()
    residual = qg_sub(qg_apply_hamiltonian(fam.potential, psi), qg_scale(psi, fam.energy(nu)))
    assert residual.is_zero


def test_spectrum_of_x25(p25):
    levels = spectrum(p25, Which.H2, 6)
    assert [lvl.nu for lvl in levels] == [-6, -3, 0, 1, 2, 3]
    assert [lvl.energy for lvl in levels] == [-3, 3, 9, 11, 13, 15]


@pytest.mark.parametrize("which", list(Which))
def test_exact_states_are_eigenfunctions(published_params, which):
    pots = potential_triple(published_params)
    potential = {Which.H1: pots["V1"], Which.H: pots["V"], Which.H2: pots["V2"]}[which]
    for lvl in spectrum(published_params, which, 6):
        psi = exact_state(published_params, which, lvl.nu)
        residual = qg_sub(qg_apply_hamiltonian(potential, psi), qg_scale(psi, energy(published_params, lvl.nu)))
        assert residual.is_zero, (which, lvl.nu)


def test_inadmissible_state_index(p23):
    with pytest.raises(DegreeGapError):
        exact_state(p23, Which.H2, -1)
    with pytest.raises(DegreeGapError):
        exact_state(p23, Which.H1, -3)


def test_exact_norms_of_x23(p23):
    assert exact_norm_sq(p23, Which.H2, -4) == 96
    assert exact_norm_sq(p23, Which.H2, -3) == 16
    assert exact_norm_sq(p23, Which.H2, 0) == Fraction(1, 12)
    assert exact_norm_sq(p23, Which.H2, 2) == Fraction(1, 240)


def test_potential_triple_constants(p23):
    pots = potential_triple(p23)
    assert set(pots) == {"V1", "V", "V2", "Vbar", "V_plus", "V_minus", "Vt_plus", "Vt_minus"}
    assert pots["V1"].constant == 6
    assert pots["V"].constant == 4
    assert pots["V2"].constant == 2
    assert pots["V2"].full_rational() == potential_v2(p23).full_rational()


def test_hat_potential_range(p25):
    assert isinstance(hat_potential(p25, 4), Potential)
    with pytest.raises(InvalidParametersError):
        hat_potential(p25, 5)
    with pytest.raises(InvalidParametersError):
        hat_potential(p25, 0)


def test_format_v2_layout(p23):
    assert format_v2(p23) == "x^2 + 32x^2/(4x^4 + 3) - 384x^2/(4x^4 + 3)^2 + 2"


def test_split_v2_shape(published_params):
    q, a, b, c = split_v2(published_params)
    assert q.degree == published_params.mu
    assert b.degree < q.degree
    assert c == published_params.m1 + published_params.m2 - 3


def test_extended_family_json_round_trip(p47):
    fam = build_family(4, 7)
    back = ExtendedFamily.from_json(fam.to_json())
    assert back == fam
    assert fam.to_json()["codimension"] == p47.mu
