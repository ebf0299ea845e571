# xhermite/core/numerics.py
"""Floating-point checks: quadrature on quasi-Gaussians and a finite-difference eigensolver.

Quadrature truncates to [-L, L].  Every integrand here carries e^{-x^2} times a
rational function that is bounded on the real line (the denominators are
nodeless), so at the default L = 9 the discarded tails are below e^{-81} ~ 1e-35
times the rational part's polynomial growth.

The eigensolver discretises -d^2/dx^2 + V with the three-point Laplacian on M - 1
interior points of [-L, L] (Dirichlet ends) and asks LAPACK's bisection driver
for the lowest k eigenvalues of the resulting symmetric tridiagonal matrix.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from numpy.polynomial import legendre
from numpy.polynomial import polynomial as npoly
from scipy import integrate
from scipy.linalg import eigh_tridiagonal

from xhermite import config
from xhermite.core.exactpoly import Polynomial, RationalFunction
from xhermite.core.families import (
    FamilyParams,
    FirstOrderFamily,
    Which,
    admissible_nus,
    energy,
    potential_v2,
    spectrum,
    wavefunction,
)
from xhermite.core.operators import build_supercharges, ladder_norm_poly
from xhermite.core.quasigauss import OSCILLATOR, Potential, QuasiGaussian
from xhermite.core.report import VerificationReport, check_true, run_check
from xhermite.errors import InvalidParametersError, NonDecayingStateError, XHermiteError

logger = logging.getLogger(__name__)

SCHEMES = ("gauss_legendre", "adaptive")
PANEL_ORDER = 16


@dataclass(frozen=True)
class QuadratureSpec:
    half_width: float = config.QUAD_HALF_WIDTH
    nodes: int = config.QUAD_NODES
    scheme: str = "gauss_legendre"

    def __post_init__(self):
        if not self.half_width > 0:
            raise InvalidParametersError(f"quadrature half-width must be > 0, got {self.half_width}")
        if self.nodes < 64:
            raise InvalidParametersError(f"quadrature needs at least 64 nodes, got {self.nodes}")
        if self.scheme not in SCHEMES:
            raise InvalidParametersError(f"unknown quadrature scheme {self.scheme!r}; expected one of {', '.join(SCHEMES)}")

    @property
    def panels(self) -> int:
        return max(self.nodes // PANEL_ORDER, 1)


@dataclass(frozen=True)
class FdGrid:
    half_width: float = config.FD_HALF_WIDTH
    points: int = config.FD_POINTS

    def __post_init__(self):
        if not self.half_width > 0:
            raise InvalidParametersError(f"grid half-width must be > 0, got {self.half_width}")
        if self.points < 400:
            raise InvalidParametersError(f"finite-difference grid needs M >= 400 points, got {self.points}")

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / self.points

    def interior(self) -> np.ndarray:
        return -self.half_width + self.spacing * np.arange(1, self.points)

    def refined(self) -> "FdGrid":
        return FdGrid(self.half_width, 2 * self.points)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def _ratfunc_values(r: RationalFunction, x: np.ndarray) -> np.ndarray:
    return npoly.polyval(x, r.num.float_coeffs() or [0.0]) / npoly.polyval(x, r.den.float_coeffs())


def evaluate(f: QuasiGaussian, x) -> np.ndarray:
    """scale * R(x) * exp(s x^2 / 2) at the points x."""
    x = np.asarray(x, dtype=float)
    values = f.scale * _ratfunc_values(f.r, x)
    if f.s:
        values = values * np.exp(0.5 * f.s * x * x)
    return values


def potential_values(potential: Potential, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return x * x + _ratfunc_values(potential.full_rational(), x)


def sample_potential(potential: Potential, half_width: float = config.FD_HALF_WIDTH, points: int = 801) -> pd.DataFrame:
    """(x, V(x)) on an even grid, for plotting."""
    x = np.linspace(-half_width, half_width, points)
    return pd.DataFrame({"x": x, "V": potential_values(potential, x)})


def sign_change_scan(p: Polynomial, half_width: float = 10.0, points: int = 4001) -> int:
    """Sign changes of p on a uniform grid; a numeric companion to the exact Sturm count."""
    x = np.linspace(-half_width, half_width, points)
    signs = np.sign(npoly.polyval(x, p.float_coeffs() or [0.0]))
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------

@lru_cache(maxsize=16)
def _composite_rule(spec: QuadratureSpec) -> Tuple[np.ndarray, np.ndarray]:
    t, w = legendre.leggauss(PANEL_ORDER)
    edges = np.linspace(-spec.half_width, spec.half_width, spec.panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    x = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return x, weights


def _require_decaying(*states: QuasiGaussian) -> None:
    for f in states:
        if f.s != -1 and not f.is_zero:
            raise NonDecayingStateError(f"quadrature needs decaying states (s = -1), got s = {f.s}")


def inner_product(f: QuasiGaussian, g: QuasiGaussian, spec: Optional[QuadratureSpec] = None) -> float:
    """∫ f g dx over [-L, L]"""
    spec = spec or QuadratureSpec()
    _require_decaying(f, g)
    if f.is_zero or g.is_zero:
        return 0.0
    if spec.scheme == "adaptive":
        value, err = integrate.quad(
            lambda t: float(evaluate(f, t) * evaluate(g, t)),
            -spec.half_width,
            spec.half_width,
            epsabs=1e-13,
            epsrel=1e-12,
            limit=max(spec.nodes // 4, 50),
        )
        if err > 1e-10:
            logger.warning("adaptive quadrature error estimate %.3g exceeds 1e-10", err)
        return value
    x, w = _composite_rule(spec)
    return float(np.sum(w * evaluate(f, x) * evaluate(g, x)))


def norm_of_state(f: QuasiGaussian, spec: Optional[QuadratureSpec] = None) -> float:
    return math.sqrt(inner_product(f, f, spec))


def gram_matrix(states: Sequence[QuasiGaussian], spec: Optional[QuadratureSpec] = None) -> np.ndarray:
    spec = spec or QuadratureSpec()
    _require_decaying(*states)
    if spec.scheme == "adaptive":
        n = len(states)
        out = np.empty((n, n))
        for i in range(n):
            for j in range(i, n):
                out[i, j] = out[j, i] = inner_product(states[i], states[j], spec)
        return out
    x, w = _composite_rule(spec)
    values = np.vstack([evaluate(f, x) for f in states])
    return (values * w) @ values.T


# ---------------------------------------------------------------------------
# Finite differences
# ---------------------------------------------------------------------------

PotentialLike = Union[Potential, Callable[[np.ndarray], np.ndarray]]


def fd_spectrum(potential: PotentialLike, grid: Optional[FdGrid] = None, k: int = 5) -> List[float]:
    """Lowest k eigenvalues of -d^2/dx^2 + V on the grid, ascending."""
    grid = grid or FdGrid()
    n = grid.points - 1
    if k < 1 or k > n:
        raise InvalidParametersError(f"cannot extract {k} levels from a grid with {n} interior points")
    x = grid.interior()
    v = potential_values(potential, x) if isinstance(potential, Potential) else np.asarray(potential(x), dtype=float)
    if not np.all(np.isfinite(v)):
        raise XHermiteError("potential is not finite on the grid")
    h2 = grid.spacing**2
    diag = 2.0 / h2 + v
    off = np.full(n - 1, -1.0 / h2)
    logger.debug("tridiagonal eigensolve: n=%d, k=%d, h=%.4g", n, k, grid.spacing)
    vals = eigh_tridiagonal(diag, off, eigvals_only=True, select="i", select_range=(0, k - 1))
    return [float(e) for e in np.sort(vals)]


def fd_convergence_ratio(potential: PotentialLike, exact: Sequence[float], grid: Optional[FdGrid] = None) -> float:
    """max error on ``grid`` divided by max error on the grid with h halved (about 4 for a second-order scheme)."""
    grid = grid or FdGrid()
    exact = np.asarray(exact, dtype=float)
    coarse = np.asarray(fd_spectrum(potential, grid, len(exact)))
    fine = np.asarray(fd_spectrum(potential, grid.refined(), len(exact)))
    return float(np.max(np.abs(coarse - exact)) / np.max(np.abs(fine - exact)))


# ---------------------------------------------------------------------------
# Ladder norms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LadderNormCheck:
    operator: str
    nu: int
    numeric: float
    expected: float

    @property
    def rel_error(self) -> float:
        if self.expected == 0:
            return abs(self.numeric)
        return abs(self.numeric - self.expected) / abs(self.expected)

    def passed(self, tol: float = config.NORM_REL_TOL) -> bool:
        return self.rel_error <= tol


def ladder_norm_check(
    params: FamilyParams,
    nu: int,
    spec: Optional[QuadratureSpec] = None,
    operator: str = "c",
) -> LadderNormCheck:
    """||L ψ_ν||^2 / ||ψ_ν||^2 by quadrature against the exact polynomial value at E_ν."""
    psi = wavefunction(params, Which.H2, nu)
    image = build_supercharges(params).ladder(operator).apply(psi)
    numeric = inner_product(image, image, spec) / inner_product(psi, psi, spec)
    expected = float(ladder_norm_poly(params, operator)(energy(params, nu)))
    return LadderNormCheck(operator, nu, numeric, expected)


# ---------------------------------------------------------------------------
# Numeric batteries
# ---------------------------------------------------------------------------

def _p(params: FamilyParams, **extra) -> dict:
    return {"m1": params.m1, "m2": params.m2, **extra}


def verify_gram(params: FamilyParams, count: int = 8, spec: Optional[QuadratureSpec] = None,
                tol: float = config.GRAM_TOL) -> VerificationReport:
    def _check():
        states = [wavefunction(params, Which.H2, nu) for nu in admissible_nus(params, Which.H2, count)]
        deviation = float(np.max(np.abs(gram_matrix(states, spec) - np.eye(count))))
        return check_true("Gram matrix = identity", _p(params, count=count), deviation <= tol,
                          f"max deviation {deviation:.3e} > {tol:.1e}")

    return VerificationReport(checks=[run_check("Gram matrix = identity", _p(params, count=count), _check)])


def verify_fd_spectrum(params: FamilyParams, k: int = 5, grid: Optional[FdGrid] = None,
                       tol: float = config.FD_TOL) -> VerificationReport:
    def _check():
        exact = [lvl.energy for lvl in spectrum(params, Which.H2, k)]
        fd = fd_spectrum(potential_v2(params), grid, k)
        worst = max(abs(a - b) for a, b in zip(fd, exact))
        return check_true("FD spectrum of V2", _p(params, k=k), worst <= tol,
                          f"FD {['%.6f' % e for e in fd]} vs exact {exact}")

    return VerificationReport(checks=[run_check("FD spectrum of V2", _p(params, k=k), _check)])


def verify_ladder_norms(params: FamilyParams, spec: Optional[QuadratureSpec] = None, extra: int = 3,
                        tol: float = config.NORM_REL_TOL) -> VerificationReport:
    report = VerificationReport()
    for nu in range(params.ell, params.ell + extra + 1):
        def _check(nu=nu):
            res = ladder_norm_check(params, nu, spec)
            return check_true("||c ψ||^2 = Q(E)", _p(params, nu=nu), res.passed(tol),
                              f"quadrature {res.numeric!r}, Q(E) = {res.expected!r}")

        report.add(run_check("||c ψ||^2 = Q(E)", _p(params, nu=nu), _check))
    return report


def verify_numerics(params: FamilyParams, quad: Optional[QuadratureSpec] = None, grid: Optional[FdGrid] = None,
                    levels: int = 5) -> VerificationReport:
    return VerificationReport().merge(
        verify_gram(params, spec=quad),
        verify_fd_spectrum(params, levels, grid),
        verify_ladder_norms(params, quad),
    )


def verify_first_order_numerics(fam: FirstOrderFamily, quad: Optional[QuadratureSpec] = None,
                                grid: Optional[FdGrid] = None, levels: int = 4) -> VerificationReport:
    """Orthonormality and FD spectrum for the single-index system."""
    params = {"m": fam.m}
    report = VerificationReport()

    def _gram():
        states = [fam.wavefunction(nu) for nu in fam.admissible_nus(levels)]
        deviation = float(np.max(np.abs(gram_matrix(states, quad) - np.eye(levels))))
        return check_true("Gram matrix = identity", params, deviation <= config.GRAM_TOL, f"max deviation {deviation:.3e}")

    def _fd():
        exact = [fam.energy(nu) for nu in fam.admissible_nus(levels)]
        fd = fd_spectrum(fam.potential, grid, levels)
        worst = max(abs(a - b) for a, b in zip(fd, exact))
        return check_true("FD spectrum of V-", params, worst <= config.FD_TOL, f"FD {fd} vs exact {exact}")

    report.add(run_check("Gram matrix = identity", params, _gram))
    report.add(run_check("FD spectrum of V-", params, _fd))
    return report


def oscillator_calibration(grid: Optional[FdGrid] = None, k: int = 4) -> List[float]:
    """FD levels of the plain oscillator x^2 (exact values 1, 3, 5, ...).

    Defaults to the calibration grid (M = CALIBRATION_FD_POINTS), not the production one.
    """
    grid = grid or FdGrid(config.FD_HALF_WIDTH, config.CALIBRATION_FD_POINTS)
    return fd_spectrum(OSCILLATOR, grid, k)


def verify_calibration(k: int = 4, grid: Optional[FdGrid] = None,
                       tol: float = config.CALIBRATION_TOL) -> VerificationReport:
    def _check():
        levels = oscillator_calibration(grid, k)
        worst = max(abs(e - (2 * n + 1)) for n, e in enumerate(levels))
        return check_true("FD oscillator calibration", {"k": k}, worst <= tol,
                          f"FD {['%.6f' % e for e in levels]}, worst error {worst:.2e}")

    return VerificationReport(checks=[run_check("FD oscillator calibration", {"k": k}, _check)])
