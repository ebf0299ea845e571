import math
from fractions import Fraction

import pytest

from xhermite.core.families import FamilyParams, Which, energy
from xhermite.core.operators import (
    build_supercharges,
    closed_form_c_coefficient_sq,
    ladder_action,
    ladder_c_action,
    ladder_c_dagger_action,
    ladder_norm_poly,
    ladder_table,
    standard_b_action,
    standard_b_dagger_action,
    transition,
    verify_ladder_actions,
)
from xhermite.errors import DegreeGapError, InvalidParametersError


def test_c_on_x23(p23):
    low = ladder_c_action(p23, -3)
    assert low.target_nu == -4
    assert low.coefficient_sq == 24
    assert ladder_c_action(p23, 1).coefficient_sq == 120
    assert ladder_c_action(p23, 1).target_nu == 0
    assert ladder_c_action(p23, 0).is_zero
    assert ladder_c_action(p23, -4).is_zero


def test_c_dagger_on_the_singlets(p23):
    up = ladder_c_dagger_action(p23, -4)
    assert up.target_nu == -3
    assert up.coefficient_sq == up.expected_sq
    assert ladder_c_dagger_action(p23, -3).is_zero


def test_b_on_x23(p23):
    act = standard_b_action(p23, 1)
    assert act.target_nu == 0
    assert act.coefficient_sq == 7680
    assert standard_b_action(p23, 0).is_zero
    assert standard_b_action(p23, -3).is_zero
    assert standard_b_dagger_action(p23, -3).is_zero
    assert standard_b_dagger_action(p23, 0).target_nu == 1


def test_coefficient_squares_back(p23):
    act = ladder_c_action(p23, 3)
    assert act.coefficient ** 2 == pytest.approx(float(act.coefficient_sq))
    assert act.matches
    assert act.to_json()["coefficient_sq"] == str(act.coefficient_sq)


@pytest.mark.parametrize("operator", ["b", "b_dagger", "c", "c_dagger"])
def test_ladder_table_x23_up_to_twelve(p23, operator):
    for act in ladder_table(p23, operator, 12):
        assert act.matches, (operator, act.nu, act.coefficient_sq, act.expected_sq)


def test_c_table_matches_closed_form(p47):
    for act in ladder_table(p47, "c", 6):
        assert act.coefficient_sq == closed_form_c_coefficient_sq(p47, act.nu), act.nu


@pytest.mark.parametrize("pair", [(2, 3), (2, 5), (4, 7)])
def test_c_transitions_match_closed_form(pair):
    params = FamilyParams(*pair)
    c = build_supercharges(params).c
    for act in ladder_table(params, "c", 12):
        t = transition(params, c, Which.H2, act.nu, Which.H2, act.target_nu)
        got = Fraction(0) if t.zero else t.coefficient_sq
        assert got == closed_form_c_coefficient_sq(params, act.nu), (pair, act.nu)


def test_closed_form_lowest_singlet(published_params):
    m1, m2, ell = published_params.m1, published_params.m2, published_params.ell
    expected = Fraction(ell**2 * 2 ** (ell + 2) * math.factorial(m2), math.factorial(m1))
    assert closed_form_c_coefficient_sq(published_params, -m1 - 1) == expected
    assert ladder_norm_poly(published_params, "c")(energy(published_params, -m1 - 1)) == expected


def test_verify_ladder_actions(p25):
    report = verify_ladder_actions(p25, max_nu=6)
    assert report.passed, [(c.name, c.params, c.witness) for c in report.failures()]


def test_bad_requests(p23):
    with pytest.raises(InvalidParametersError):
        ladder_action(p23, "up", 0)
    with pytest.raises(DegreeGapError):
        ladder_c_action(p23, -2)
    with pytest.raises(InvalidParametersError):
        closed_form_c_coefficient_sq(p23, -2)
