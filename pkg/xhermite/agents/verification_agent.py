# xhermite/agents/verification_agent.py
"""Runs the exact and numeric check batteries and merges them into one report."""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, Mapping, Optional, Tuple

from xhermite import config
from xhermite.core.families import (
    FamilyParams,
    FirstOrderFamily,
    build_family,
    degree_gaps,
    degree_set,
    diffeq_residual_first,
    diffeq_residual_second,
    eop_derivative_residual,
    eop_first,
    eop_second,
    hermite_identity_residuals,
    pseudo_hermite,
    wronskian_identity_residuals,
)
from xhermite.core.numerics import (
    FdGrid,
    QuadratureSpec,
    sign_change_scan,
    verify_calibration,
    verify_first_order_numerics,
    verify_numerics,
)
from xhermite.core.operators import verify_operators
from xhermite.core.quasigauss import qg_apply_hamiltonian, qg_scale, qg_sub
from xhermite.core.reference_potentials import REFERENCE_POTENTIALS, ReferencePotential
from xhermite.core.report import VerificationReport, check_true, check_zero, run_check
from xhermite.core.sturm import count_real_roots
from xhermite.errors import VerificationFailure

logger = logging.getLogger(__name__)

References = Mapping[Tuple[int, int], ReferencePotential]


def _p(params: FamilyParams, **extra) -> dict:
    return {"m1": params.m1, "m2": params.m2, **extra}


def verify_identities(n_max: int = 12) -> VerificationReport:
    """Recurrences and differential equations of H_n and 𝓗_n, n = 1..n_max; 𝓗_m nodeless iff m even."""
    report = VerificationReport()
    for n in range(1, n_max + 1):
        for name, residual in hermite_identity_residuals(n).items():
            report.add(check_zero(name, {"n": n}, residual))
        roots = count_real_roots(pseudo_hermite(n))
        report.add(check_true("real zeros of 𝓗_n", {"n": n}, roots == n % 2, f"{roots} real zeros"))
    return report


def verify_construction(params: FamilyParams, references: Optional[References] = None) -> VerificationReport:
    """g, ḡ, V2 against their defining identities and (when known) the published closed form."""
    references = REFERENCE_POTENTIALS if references is None else references
    report = VerificationReport()

    def _g():
        fam = build_family(params.m1, params.m2)
        lead = 2 ** (params.mu + 1) * params.ell
        ok = fam.g.degree == params.mu and fam.g.leading == lead and fam.gbar.degree == params.mu - 2
        return check_true("deg/lead of g and ḡ", _p(params), ok,
                          f"deg g={fam.g.degree}, lead g={fam.g.leading}, deg ḡ={fam.gbar.degree}")

    def _nodeless():
        g = build_family(params.m1, params.m2).g
        exact, scanned = count_real_roots(g), sign_change_scan(g)
        return check_true("g nodeless", _p(params), exact == 0 and scanned == 0,
                          f"Sturm count {exact}, sign changes {scanned}")

    report.add(run_check("deg/lead of g and ḡ", _p(params), _g))
    report.add(run_check("g nodeless", _p(params), _nodeless))
    for name, residual in wronskian_identity_residuals(params).items():
        report.add(check_zero(name, _p(params), residual))

    ref = references.get((params.m1, params.m2))
    if ref is not None:
        def _regression(ref=ref):
            got = build_family(params.m1, params.m2).v2_rational
            return check_zero("V2 matches the published form", _p(params), got - ref.rational())

        report.add(run_check("V2 matches the published form", _p(params), _regression))
    return report


def verify_degrees(params: FamilyParams, max_degree: int = config.MAX_DEGREE) -> VerificationReport:
    """deg y_n = n, the differential equation for every member, and μ gaps."""
    report = VerificationReport()
    gaps = degree_gaps(params)
    report.add(check_true("codimension = μ", _p(params), len(gaps) == params.mu, f"gaps {gaps}"))
    for n in degree_set(params, max_degree):
        def _member(n=n):
            y = eop_second(params, n)
            if y.degree != n:
                return check_true("deg y_n = n", _p(params, n=n), False, f"degree {y.degree}")
            return check_zero("second-order EOP equation", _p(params, n=n), diffeq_residual_second(params, n))

        report.add(run_check("second-order EOP equation", _p(params, n=n), _member))
    return report


def verify_family(
    params: FamilyParams,
    max_nu: int = config.MAX_NU,
    max_degree: int = config.MAX_DEGREE,
    numeric: bool = True,
    quad: Optional[QuadratureSpec] = None,
    grid: Optional[FdGrid] = None,
    references: Optional[References] = None,
) -> VerificationReport:
    logger.info("verifying family %s (max ν %d, max degree %d, numeric=%s)", params.label, max_nu, max_degree, numeric)
    report = VerificationReport()
    report.merge(
        verify_construction(params, references),
        verify_degrees(params, max_degree),
        verify_operators(params, max_nu),
    )
    if numeric:
        report.merge(verify_numerics(params, quad, grid))
    logger.info("family %s: %s", params.label, report.summary())
    return report


def verify_first_order(
    m: int,
    max_nu: int = config.MAX_NU,
    max_degree: int = config.MAX_DEGREE,
    numeric: bool = True,
    quad: Optional[QuadratureSpec] = None,
    grid: Optional[FdGrid] = None,
) -> VerificationReport:
    fam = FirstOrderFamily(m)
    report = VerificationReport()
    params = {"m": m}
    for n in fam.degree_set(max_degree):
        def _member(n=n):
            y = eop_first(m, n)
            if y.degree != n:
                return check_true("deg y_n = n", {**params, "n": n}, False, f"degree {y.degree}")
            return check_zero("first-order EOP equation", {**params, "n": n}, diffeq_residual_first(m, n))

        report.add(run_check("first-order EOP equation", {**params, "n": n}, _member))
    for nu in range(max_nu + 1):
        report.add(check_zero("EOP derivative identity", {**params, "nu": nu}, eop_derivative_residual(m, nu)))
    for nu in fam.admissible_nus(max_nu + 2):
        def _eigen(nu=nu):
            psi = fam.wavefunction(nu).exact()
            residual = qg_sub(qg_apply_hamiltonian(fam.potential, psi), qg_scale(psi, fam.energy(nu))).r
            return check_zero("H- ψ = (2ν+1) ψ", {**params, "nu": nu}, residual)

        report.add(run_check("H- ψ = (2ν+1) ψ", {**params, "nu": nu}, _eigen))
    if numeric:
        report.merge(verify_first_order_numerics(fam, quad, grid))
    return report


def _verify_pair(args) -> dict:
    (m1, m2), kwargs = args
    return verify_family(FamilyParams(m1, m2), **kwargs).model_dump(mode="json")


def verify_grid(
    pairs: Iterable[Tuple[int, int]],
    workers: int = config.WORKERS,
    identities: bool = True,
    **kwargs,
) -> VerificationReport:
    """Verify every family in ``pairs``; families run in separate processes when workers > 1."""
    pairs = [(int(a), int(b)) for a, b in pairs]
    for m1, m2 in pairs:
        FamilyParams(m1, m2)
    report = verify_identities() if identities else VerificationReport()
    if identities and kwargs.get("numeric", True):
        report.merge(verify_calibration())
    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for dumped in pool.map(_verify_pair, [(pair, kwargs) for pair in pairs]):
                report.merge(VerificationReport.model_validate(dumped))
    else:
        for pair in pairs:
            report.merge(verify_family(FamilyParams(*pair), **kwargs))
    return report


def require_pass(report: VerificationReport) -> VerificationReport:
    if not report.passed:
        failed = report.failures()
        raise VerificationFailure(f"{len(failed)} check(s) failed, first: {failed[0].name} {failed[0].params}", report)
    return report


def perturbed_references(m1: int, m2: int, delta: int = 1) -> Dict[Tuple[int, int], ReferencePotential]:
    """Reference table with the additive constant of one entry shifted by ``delta``."""
    refs = dict(REFERENCE_POTENTIALS)
    ref = refs[(m1, m2)]
    refs[(m1, m2)] = ref.with_constant(ref.constant + delta)
    return refs
