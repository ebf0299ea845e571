import pytest

from xhermite.agents.verification_agent import (
    perturbed_references,
    require_pass,
    verify_construction,
    verify_degrees,
    verify_family,
    verify_first_order,
    verify_grid,
    verify_identities,
)
from xhermite.core.families import FamilyParams, pseudo_hermite
from xhermite.core.report import CheckStatus, VerificationReport, check_zero, run_check
from xhermite.errors import InvalidParametersError, VerificationFailure


def failures(report):
    return [(c.name, c.params, c.witness) for c in report.failures()]


def test_identities_pass():
    report = verify_identities(8)
    assert report.passed, failures(report)
    assert report.summary()["total"] == 8 * 8


def test_construction_and_degrees(published_params):
    report = verify_construction(published_params).merge(verify_degrees(published_params, 14))
    assert report.passed, failures(report)
    assert any(c.name == "V2 matches the published form" for c in report.checks)


def test_family_exact_suite(p23):
    report = verify_family(p23, max_nu=4, max_degree=10, numeric=False)
    assert report.passed, failures(report)


def test_family_full_suite_with_numerics(p25):
    report = verify_family(p25, max_nu=3, max_degree=10)
    assert report.passed, failures(report)
    names = {c.name for c in report.checks}
    assert {"Gram matrix = identity", "FD spectrum of V2", "||c ψ||^2 = Q(E)"} <= names


def test_perturbed_fixture_fails(p23):
    report = verify_construction(p23, references=perturbed_references(2, 3))
    assert not report.passed
    [failed] = report.failures()
    assert failed.name == "V2 matches the published form"
    assert failed.status is CheckStatus.FAIL
    assert failed.witness


def test_require_pass_raises_with_report(p23):
    report = verify_construction(p23, references=perturbed_references(2, 3, delta=-1))
    with pytest.raises(VerificationFailure) as info:
        require_pass(report)
    assert info.value.report is report
    assert require_pass(verify_construction(p23)).passed


def test_exceptions_become_error_checks():
    def boom():
        raise RuntimeError("no luck")

    result = run_check("explodes", {"n": 1}, boom)
    assert result.status is CheckStatus.ERROR
    assert "no luck" in result.witness


def test_check_zero_reports_the_residual():
    result = check_zero("residual", {}, pseudo_hermite(2))
    assert result.status is CheckStatus.FAIL
    assert result.witness == "4x^2 + 2"


def test_first_order_suite():
    report = verify_first_order(2, max_nu=4, max_degree=10)
    assert report.passed, failures(report)


def test_grid_in_process():
    report = verify_grid([(2, 3), (4, 5)], workers=1, identities=False, max_nu=3, max_degree=10, numeric=False)
    assert report.passed, failures(report)
    assert {(c.params["m1"], c.params["m2"]) for c in report.checks} == {(2, 3), (4, 5)}


def test_grid_in_worker_processes():
    report = verify_grid([(2, 3), (2, 5)], workers=2, identities=False, max_nu=2, max_degree=8, numeric=False)
    assert isinstance(report, VerificationReport)
    assert report.passed, failures(report)


def test_grid_rejects_bad_pairs_before_running():
    with pytest.raises(InvalidParametersError):
        verify_grid([(2, 3), (2, 4)], identities=False)


def test_report_json_shape(p23):
    data = verify_construction(p23).to_json()
    assert data["passed"] is True
    assert data["summary"]["fail"] == 0
    assert data["checks"][0]["status"] == "pass"


@pytest.mark.slow
def test_default_grid_passes():
    report = verify_grid([(2, 3), (2, 5), (2, 7), (4, 5), (4, 7)], max_nu=8, max_degree=16)
    assert report.passed, failures(report)
