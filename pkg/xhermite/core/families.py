# xhermite/core/families.py
"""Hermite-type polynomial families and the rationally extended oscillators built from them.

Conventions used throughout:

* H_n are the physicists' Hermite polynomials, 𝓗_m(x) = (-i)^m H_m(ix) the
  pseudo-Hermite ones (all coefficients nonnegative).
* Potentials are ``Potential`` objects: x^2 is implicit, the rest is an exact
  rational part plus an exact constant.
* Every normalised state is ``N * exact_part`` with N^2 = (rational) / sqrt(pi);
  ``exact_norm_sq`` returns that rational so ladder coefficients can be squared
  and compared without floats.

Single-index (first-order) systems use m even >= 2.  Double-index systems use
m1 even >= 2 and m2 odd with m2 > m1; m1 = 0 is rejected rather than guessed.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional

from xhermite.core.exactpoly import Polynomial, RationalFunction, format_polynomial, wronskian2
from xhermite.core.quasigauss import Potential, QuasiGaussian
from xhermite.core.sturm import count_real_roots
from xhermite.errors import DegreeGapError, InvalidParametersError, XHermiteError

logger = logging.getLogger(__name__)

X = Polynomial.x()
SQRT_PI = math.sqrt(math.pi)


class Which(str, Enum):
    """Hamiltonian tag: H1 = shifted oscillator, H = intermediate partner, H2 = extended oscillator."""

    H1 = "H1"
    H = "H"
    H2 = "H2"


# ---------------------------------------------------------------------------
# Classical building blocks
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def hermite(n: int) -> Polynomial:
    """H_{n+1} = 2x H_n - 2n H_{n-1}"""
    if n < 0:
        raise InvalidParametersError(f"Hermite degree must be >= 0, got {n}")
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return Polynomial((0, 2))
    return X * hermite(n - 1) * 2 - hermite(n - 2) * (2 * (n - 1))


@lru_cache(maxsize=None)
def pseudo_hermite(m: int) -> Polynomial:
    """𝓗_{m+1} = 2x 𝓗_m + 2m 𝓗_{m-1}"""
    if m < 0:
        raise InvalidParametersError(f"pseudo-Hermite degree must be >= 0, got {m}")
    if m == 0:
        return Polynomial.one()
    if m == 1:
        return Polynomial((0, 2))
    return X * pseudo_hermite(m - 1) * 2 + pseudo_hermite(m - 2) * (2 * (m - 1))


def pseudo_hermite_explicit(m: int) -> Polynomial:
    """m! sum_{p=0}^{[m/2]} (2x)^{m-2p} / (p! (m-2p)!)"""
    if m < 0:
        raise InvalidParametersError(f"pseudo-Hermite degree must be >= 0, got {m}")
    coeffs = [Fraction(0)] * (m + 1)
    for p in range(m // 2 + 1):
        k = m - 2 * p
        coeffs[k] = Fraction(math.factorial(m) * 2**k, math.factorial(p) * math.factorial(k))
    return Polynomial(coeffs)


def log_second_derivative(p: Polynomial) -> RationalFunction:
    """(log p)'' = (p'' p - p'^2) / p^2"""
    d1 = p.derivative()
    return RationalFunction(d1.derivative() * p - d1 * d1, p * p)


def seed_function(m: int) -> QuasiGaussian:
    """φ_m = 𝓗_m e^{x^2/2}; an eigenfunction of -d^2 + x^2 with energy -2m-1 for any m >= 0."""
    return QuasiGaussian(RationalFunction(pseudo_hermite(m)), 1)


def seed_energy(m: int) -> int:
    return -2 * m - 1


# ---------------------------------------------------------------------------
# Single-index X_m systems
# ---------------------------------------------------------------------------

def _check_seed_index(m: int) -> None:
    if not isinstance(m, int) or m < 2 or m % 2:
        raise InvalidParametersError(
            f"seed index m={m} is not allowed: the seed needs m = 2, 4, 6, ... "
            "(odd m vanishes at x=0, m=0 is the plain oscillator)"
        )


def potential_v_minus(m: int) -> Potential:
    """x^2 - 2[𝓗''/𝓗 - (𝓗'/𝓗)^2 + 1]"""
    _check_seed_index(m)
    return Potential(log_second_derivative(pseudo_hermite(m)).scale(-2), -2, label=f"V-(m={m})")


def eop_first(m: int, n: int, formal: bool = False) -> Polynomial:
    """y^(m)_n: 1 for n = 0, else -𝓗_m H_{ν+1} - 2m 𝓗_{m-1} H_ν with ν = n - m - 1.

    ``formal=True`` accepts any m >= 1 (odd m gives members of a singular system).
    """
    if formal:
        if m < 1:
            raise InvalidParametersError(f"formal index m must be >= 1, got {m}")
    else:
        _check_seed_index(m)
    if n == 0:
        return Polynomial.one()
    if n < 0:
        raise InvalidParametersError(f"degree must be >= 0, got {n}")
    if n <= m:
        raise DegreeGapError(
            f"degree {n} lies in the gap {{1, ..., {m}}} of X_{m}; admissible degrees are 0, {m + 1}, {m + 2}, ...",
            admissible=[0] + list(range(m + 1, m + 6)),
        )
    nu = n - m - 1
    return -(pseudo_hermite(m) * hermite(nu + 1)) - pseudo_hermite(m - 1) * hermite(nu) * (2 * m)


def diffeq_residual_first(m: int, n: int) -> Polynomial:
    """𝓗 y'' - 2(x𝓗 + 𝓗') y' + 2n 𝓗 y, which must vanish identically."""
    h = pseudo_hermite(m)
    y = eop_first(m, n)
    y1 = y.derivative()
    return h * y1.derivative() - (X * h + h.derivative()) * y1 * 2 + h * y * (2 * n)


def eop_derivative_residual(m: int, nu: int) -> Polynomial:
    """(y^(m)_{ν+m+1})' + 2(ν+m+1) 𝓗_m H_ν, identically zero for every m >= 1, ν >= 0."""
    y = eop_first(m, nu + m + 1, formal=True)
    return y.derivative() + pseudo_hermite(m) * hermite(nu) * (2 * (nu + m + 1))


@dataclass(frozen=True)
class FirstOrderFamily:
    """The X_m system: seed φ_m, partner potential V^(-) and its eigenstates.

    Eigenvalues of -d^2 + V^(-) are 2ν + 1 for ν = -m-1, 0, 1, 2, ...
    """

    m: int

    def __post_init__(self):
        _check_seed_index(self.m)

    @property
    def h(self) -> Polynomial:
        return pseudo_hermite(self.m)

    @property
    def potential(self) -> Potential:
        return potential_v_minus(self.m)

    @property
    def superpotential(self) -> RationalFunction:
        """W = -x - 𝓗'/𝓗"""
        return -RationalFunction.x() - RationalFunction(self.h.derivative(), self.h)

    def admissible_nus(self, count: int) -> List[int]:
        return [-self.m - 1] + list(range(max(count - 1, 0)))

    def degree_set(self, upto: int) -> List[int]:
        return [0] + list(range(self.m + 1, upto + 1))

    def energy(self, nu: int) -> int:
        self._check_nu(nu)
        return 2 * nu + 1

    def susy_energy(self, nu: int) -> int:
        """Eigenvalue of A A^dagger = 2(ν + m + 1)."""
        self._check_nu(nu)
        return 2 * (nu + self.m + 1)

    def _check_nu(self, nu: int) -> None:
        if nu != -self.m - 1 and nu < 0:
            raise DegreeGapError(
                f"level index {nu} is not admissible for V^(-) with m={self.m}",
                admissible=self.admissible_nus(5),
            )

    def eop(self, n: int) -> Polynomial:
        return eop_first(self.m, n)

    def norm_sq(self, nu: int) -> Fraction:
        self._check_nu(nu)
        m = self.m
        if nu == -m - 1:
            return Fraction(2**m * math.factorial(m))
        return Fraction(1, 2 ** (nu + 1) * (nu + m + 1) * math.factorial(nu))

    def wavefunction(self, nu: int) -> QuasiGaussian:
        n = nu + self.m + 1
        exact = RationalFunction(self.eop(n), self.h)
        return QuasiGaussian(exact, -1, _scale(self.norm_sq(nu)))

    def to_json(self, upto: int = 20, levels: int = 6) -> dict:
        pot = self.potential
        return {
            "m": self.m,
            "h": self.h.to_json(),
            "v_minus_rational": pot.full_rational().to_json(),
            "degree_set": self.degree_set(upto),
            "spectrum": [{"nu": nu, "energy": self.energy(nu)} for nu in self.admissible_nus(levels)],
        }


# ---------------------------------------------------------------------------
# Double-index X_{m1,m2} systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyParams:
    m1: int
    m2: int

    def __post_init__(self):
        m1, m2 = self.m1, self.m2
        if not isinstance(m1, int) or not isinstance(m2, int) or isinstance(m1, bool) or isinstance(m2, bool):
            raise InvalidParametersError(f"m1 and m2 must be integers, got {m1!r}, {m2!r}")
        if m1 < 2 or m1 % 2:
            raise InvalidParametersError(
                f"m1={m1} is not allowed: m1 must be even with m1 >= 2 (m1 = 0 is rejected)"
            )
        if m2 % 2 == 0 or m2 <= m1:
            raise InvalidParametersError(
                f"m2={m2} is not allowed for m1={m1}: the second seed needs m2 odd and such that m2 > m1"
            )

    @property
    def mu(self) -> int:
        return self.m1 + self.m2 - 1

    @property
    def ell(self) -> int:
        return self.m2 - self.m1

    @property
    def label(self) -> str:
        return f"({self.m1},{self.m2})"

    def to_json(self) -> dict:
        return {"m1": self.m1, "m2": self.m2, "mu": self.mu, "ell": self.ell}


@dataclass(frozen=True)
class EnergyLevel:
    nu: int
    energy: int
    which: Which

    def to_json(self) -> dict:
        return {"nu": self.nu, "energy": self.energy, "which": self.which.value}


def wronskian_g(params: FamilyParams) -> Polynomial:
    """g_μ = W(𝓗_{m1}, 𝓗_{m2}) = 2(m2 𝓗_{m1} 𝓗_{m2-1} - m1 𝓗_{m1-1} 𝓗_{m2}); both forms must agree."""
    m1, m2 = params.m1, params.m2
    direct = wronskian2(pseudo_hermite(m1), pseudo_hermite(m2))
    closed = (pseudo_hermite(m1) * pseudo_hermite(m2 - 1) * m2 - pseudo_hermite(m1 - 1) * pseudo_hermite(m2) * m1) * 2
    if direct != closed:
        raise XHermiteError(f"Wronskian forms disagree for {params.label}: residual {direct - closed}")
    return direct


def gbar(params: FamilyParams) -> Polynomial:
    """ḡ_{μ-2} = W(𝓗'_{m1}, 𝓗'_{m2}) = -2m1 𝓗_{m1} 𝓗'_{m2} + 2m2 𝓗'_{m1} 𝓗_{m2}; both forms must agree."""
    m1, m2 = params.m1, params.m2
    h1, h2 = pseudo_hermite(m1), pseudo_hermite(m2)
    direct = wronskian2(h1.derivative(), h2.derivative())
    closed = h1 * h2.derivative() * (-2 * m1) + h1.derivative() * h2 * (2 * m2)
    if direct != closed:
        raise XHermiteError(f"ḡ forms disagree for {params.label}: residual {direct - closed}")
    return direct


def potential_v2(params: FamilyParams) -> Potential:
    """x^2 - 2[g''/g - (g'/g)^2] + m1 + m2 - 3"""
    g = wronskian_g(params)
    return Potential(log_second_derivative(g).scale(-2), params.m1 + params.m2 - 3, label=f"V2{params.label}")


def potential_triple(params: FamilyParams) -> Dict[str, Potential]:
    """All potentials of the two equivalent second-order factorisations.

    ``V1``, ``V``, ``V2`` are the chain H^(1) -> H -> H^(2); ``Vbar`` is the formal
    intermediate of the swapped factorisation (singular at x = 0); ``V_minus``,
    ``Vt_plus``, ``Vt_minus`` are the unshifted partners.
    """
    m1, m2 = params.m1, params.m2
    k1 = log_second_derivative(pseudo_hermite(m1)).scale(-2)
    k2 = log_second_derivative(pseudo_hermite(m2)).scale(-2)
    kg = log_second_derivative(wronskian_g(params)).scale(-2)
    return {
        "V1": Potential(RationalFunction.zero(), m1 + m2 + 1, label="V1"),
        "V": Potential(k1, m1 + m2 - 1, label="V"),
        "V2": Potential(kg, m1 + m2 - 3, label="V2"),
        "Vbar": Potential(k2, m1 + m2 - 1, label="Vbar"),
        "V_plus": Potential(label="V+"),
        "V_minus": Potential(k1, -2, label="V-"),
        "Vt_plus": Potential(k1, -2, label="V~+"),
        "Vt_minus": Potential(kg, -4, label="V~-"),
    }


def hat_potential(params: FamilyParams, i: int) -> Potential:
    """Potential of Ĥ_i, i = 1..ℓ+1: x^2 - 2(log 𝓗_{m1+i-1})'' - 3."""
    if not 1 <= i <= params.ell + 1:
        raise InvalidParametersError(f"hat index i={i} outside 1..{params.ell + 1}")
    k = params.m1 + i - 1
    return Potential(log_second_derivative(pseudo_hermite(k)).scale(-2), -3, label=f"Hhat{i}")


def degree_set(params: FamilyParams, upto: int) -> List[int]:
    """Degrees of the X_{m1,m2} members up to ``upto``: m1, m2, m1+m2+1, m1+m2+2, ..."""
    base = [params.m1, params.m2]
    return [n for n in base if n <= upto] + list(range(params.m1 + params.m2 + 1, upto + 1))


def degree_gaps(params: FamilyParams) -> List[int]:
    admissible = {params.m1, params.m2}
    return [n for n in range(params.m1 + params.m2 + 1) if n not in admissible]


def eop_second(params: FamilyParams, n: int) -> Polynomial:
    """y^(μ)_n of the X_{m1,m2} system."""
    m1, m2 = params.m1, params.m2
    if n == m1:
        return pseudo_hermite(m1)
    if n == m2:
        return pseudo_hermite(m2)
    if n < m1 + m2 + 1:
        raise DegreeGapError(
            f"degree {n} is a gap of X_{m1},{m2} (codimension {params.mu}); admissible degrees are "
            f"{m1}, {m2}, {m1 + m2 + 1}, {m1 + m2 + 2}, ...",
            admissible=degree_set(params, m1 + m2 + 5),
        )
    nu = n - m1 - m2 - 1
    h1, h2 = pseudo_hermite(m1), pseudo_hermite(m2)
    bracket = (
        pseudo_hermite(m1 - 1) * h2 * (m1 * (m2 + nu + 1))
        - h1 * pseudo_hermite(m2 - 1) * (m2 * (m1 + nu + 1))
    )
    return h1 * h2 * hermite(nu + 1) * (m2 - m1) + bracket * hermite(nu) * 2


def diffeq_residual_second(params: FamilyParams, n: int) -> Polynomial:
    """g y'' - 2(x g + g') y' + (2n g + 2ḡ) y, which must vanish identically."""
    fam = build_family(params.m1, params.m2)
    g, gb = fam.g, fam.gbar
    y = eop_second(params, n)
    y1 = y.derivative()
    return g * y1.derivative() - (X * g + g.derivative()) * y1 * 2 + (g * (2 * n) + gb * 2) * y


# ---------------------------------------------------------------------------
# Spectra and states
# ---------------------------------------------------------------------------

def energy(params: FamilyParams, nu: int) -> int:
    return 2 * nu + params.m1 + params.m2 + 2


def admissible_nus(params: FamilyParams, which: Which, count: int) -> List[int]:
    which = Which(which)
    head = {
        Which.H1: [],
        Which.H: [-params.m1 - 1],
        Which.H2: [-params.m2 - 1, -params.m1 - 1],
    }[which]
    if count <= len(head):
        return head[:count]
    return head + list(range(count - len(head)))


def is_admissible(params: FamilyParams, which: Which, nu: int) -> bool:
    which = Which(which)
    if nu >= 0:
        return True
    if which is Which.H:
        return nu == -params.m1 - 1
    if which is Which.H2:
        return nu in (-params.m1 - 1, -params.m2 - 1)
    return False


def check_nu(params: FamilyParams, which: Which, nu: int) -> None:
    if not is_admissible(params, which, nu):
        raise DegreeGapError(
            f"level index ν={nu} is not admissible for {Which(which).value} of {params.label}; "
            f"admissible: {admissible_nus(params, which, 5)} ...",
            admissible=admissible_nus(params, which, 5),
        )


def spectrum(params: FamilyParams, which: Which, count: int) -> List[EnergyLevel]:
    if count < 1:
        raise InvalidParametersError(f"level count must be >= 1, got {count}")
    which = Which(which)
    return [EnergyLevel(nu, energy(params, nu), which) for nu in admissible_nus(params, which, count)]


def exact_norm_sq(params: FamilyParams, which: Which, nu: int) -> Fraction:
    """The rational r with N^2 = r / sqrt(pi)."""
    which = Which(which)
    check_nu(params, which, nu)
    m1, m2 = params.m1, params.m2
    f = math.factorial
    if which is Which.H1:
        return Fraction(1, 2**nu * f(nu))
    if which is Which.H:
        if nu == -m1 - 1:
            return Fraction(2**m1 * f(m1))
        return Fraction(1, 2 ** (nu + 1) * (nu + m1 + 1) * f(nu))
    if nu == -m2 - 1:
        return Fraction(2 ** (m2 + 1) * f(m2) * (m2 - m1))
    if nu == -m1 - 1:
        return Fraction(2 ** (m1 + 1) * f(m1) * (m2 - m1))
    return Fraction(1, 2**nu * (nu + m1 + 1) * (nu + m2 + 1) * f(nu))


def _scale(norm_sq: Fraction) -> float:
    return math.sqrt(float(norm_sq) / SQRT_PI)


def exact_state(params: FamilyParams, which: Which, nu: int) -> QuasiGaussian:
    """Unnormalised exact part of the eigenstate ν of H1, H or H2."""
    which = Which(which)
    check_nu(params, which, nu)
    m1, m2 = params.m1, params.m2
    if which is Which.H1:
        return QuasiGaussian(RationalFunction(hermite(nu)), -1)
    if which is Which.H:
        h1 = pseudo_hermite(m1)
        num = Polynomial.one() if nu == -m1 - 1 else eop_first(m1, nu + m1 + 1)
        return QuasiGaussian(RationalFunction(num, h1), -1)
    g = build_family(m1, m2).g
    if nu == -m2 - 1:
        num = pseudo_hermite(m1)
    elif nu == -m1 - 1:
        num = pseudo_hermite(m2)
    else:
        num = eop_second(params, nu + params.mu + 2)
    return QuasiGaussian(RationalFunction(num, g), -1)


def wavefunction(params: FamilyParams, which: Which, nu: int) -> QuasiGaussian:
    """Normalised eigenstate: exact part plus float scale N."""
    return exact_state(params, which, nu).with_scale(_scale(exact_norm_sq(params, which, nu)))


# ---------------------------------------------------------------------------
# Identity residuals (all must be the zero polynomial)
# ---------------------------------------------------------------------------

def hermite_identity_residuals(n: int) -> Dict[str, Polynomial]:
    """Recurrences and differential equations for H_n and 𝓗_n (n >= 1)."""
    if n < 1:
        raise InvalidParametersError(f"identity checks need n >= 1, got {n}")
    H, Hm, Hp = hermite(n), hermite(n - 1), hermite(n + 1)
    P, Pm, Pp = pseudo_hermite(n), pseudo_hermite(n - 1), pseudo_hermite(n + 1)
    return {
        "H'_n = 2n H_{n-1}": H.derivative() - Hm * (2 * n),
        "H_{n+1} = 2x H_n - 2n H_{n-1}": Hp - X * H * 2 + Hm * (2 * n),
        "H''_n - 2x H'_n + 2n H_n = 0": H.derivative().derivative() - X * H.derivative() * 2 + H * (2 * n),
        "𝓗'_n = 2n 𝓗_{n-1}": P.derivative() - Pm * (2 * n),
        "𝓗_{n+1} = 2x 𝓗_n + 2n 𝓗_{n-1}": Pp - X * P * 2 - Pm * (2 * n),
        "𝓗''_n + 2x 𝓗'_n - 2n 𝓗_n = 0": P.derivative().derivative() + X * P.derivative() * 2 - P * (2 * n),
        "𝓗_n explicit sum": P - pseudo_hermite_explicit(n),
    }


def wronskian_identity_residuals(params: FamilyParams) -> Dict[str, Polynomial]:
    fam = build_family(params.m1, params.m2)
    g, gb = fam.g, fam.gbar
    g1 = g.derivative()
    return {
        "g' + 2xg = 2(m2-m1) 𝓗_m1 𝓗_m2": g1 + X * g * 2 - fam.h1 * fam.h2 * (2 * params.ell),
        "g'' + 2xg' - 2μg = 2ḡ": g1.derivative() + X * g1 * 2 - g * (2 * params.mu) - gb * 2,
    }


# ---------------------------------------------------------------------------
# The assembled family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtendedFamily:
    params: FamilyParams
    h1: Polynomial
    h2: Polynomial
    g: Polynomial
    gbar: Polynomial
    v2_rational: RationalFunction

    @property
    def mu(self) -> int:
        return self.params.mu

    @property
    def ell(self) -> int:
        return self.params.ell

    @property
    def v2(self) -> Potential:
        return potential_v2(self.params)

    def potentials(self) -> Dict[str, Potential]:
        return potential_triple(self.params)

    def degree_set(self, upto: int) -> List[int]:
        return degree_set(self.params, upto)

    def spectrum(self, which: Which = Which.H2, count: int = 5) -> List[EnergyLevel]:
        return spectrum(self.params, which, count)

    def to_json(self, upto: int = 20, levels: int = 8) -> dict:
        return {
            "params": self.params.to_json(),
            "h1": self.h1.to_json(),
            "h2": self.h2.to_json(),
            "g": self.g.to_json(),
            "gbar": self.gbar.to_json(),
            "v2_rational": self.v2_rational.to_json(),
            "degree_set": self.degree_set(upto),
            "codimension": len(degree_gaps(self.params)),
            "spectrum": [lvl.to_json() for lvl in self.spectrum(Which.H2, levels)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExtendedFamily":
        params = FamilyParams(int(data["params"]["m1"]), int(data["params"]["m2"]))
        return cls(
            params=params,
            h1=Polynomial.from_json(data["h1"]),
            h2=Polynomial.from_json(data["h2"]),
            g=Polynomial.from_json(data["g"]),
            gbar=Polynomial.from_json(data["gbar"]),
            v2_rational=RationalFunction.from_json(data["v2_rational"]),
        )


@lru_cache(maxsize=64)
def build_family(m1: int, m2: int) -> ExtendedFamily:
    params = FamilyParams(m1, m2)
    g = wronskian_g(params)
    expected_lead = Fraction(2 ** (params.mu + 1) * params.ell)
    if g.degree != params.mu or g.leading != expected_lead:
        raise XHermiteError(
            f"g for {params.label} has degree {g.degree} and leading coefficient {g.leading}, "
            f"expected {params.mu} and {expected_lead}"
        )
    if count_real_roots(g) != 0:
        raise XHermiteError(f"g for {params.label} has real zeros; the extended potential would be singular")
    fam = ExtendedFamily(
        params=params,
        h1=pseudo_hermite(m1),
        h2=pseudo_hermite(m2),
        g=g,
        gbar=gbar(params),
        v2_rational=potential_v2(params).full_rational(),
    )
    logger.debug("built family %s: g = %s", params.label, format_polynomial(g))
    return fam


# ---------------------------------------------------------------------------
# Display
# ---------------------------------------------------------------------------

def _fraction_term(p: Polynomial, den: str, leading: bool) -> str:
    if p.is_zero:
        return ""
    sign = -1 if p.leading < 0 else 1
    mag = p.scale(sign)
    content = mag.content()
    prim = mag.primitive_part()
    nonzero_terms = sum(1 for c in prim.coeffs if c)
    if nonzero_terms == 1:
        body = format_polynomial(mag)
    elif content == 1:
        body = f"({format_polynomial(prim)})"
    else:
        body = f"{content}({format_polynomial(prim)})"
    op = "-" if sign < 0 else "+"
    if leading:
        return f"{'-' if sign < 0 else ''}{body}/{den}"
    return f" {op} {body}/{den}"


def split_v2(params: FamilyParams):
    """(q, A, B, C) with V2 = x^2 + A/q + B/q^2 + C, q the primitive form of g and deg B < deg q."""
    g = build_family(params.m1, params.m2).g
    q = g.primitive_part()
    q1 = q.derivative()
    numerator = (q1.derivative() * q - q1 * q1) * -2
    a, b = divmod(numerator, q)
    return q, a, b, params.m1 + params.m2 - 3


def format_v2(params: FamilyParams) -> str:
    """Layout ``x^2 + A/(q) - B/(q)^2 + C`` as printed in the literature."""
    q, a, b, c = split_v2(params)
    qs = format_polynomial(q)
    text = "x^2" + _fraction_term(a, f"({qs})", False) + _fraction_term(b, f"({qs})^2", False)
    if c:
        text += f" {'-' if c < 0 else '+'} {abs(c)}"
    return text


def describe(params: FamilyParams) -> Dict[str, Optional[str]]:
    fam = build_family(params.m1, params.m2)
    return {
        "g": format_polynomial(fam.g),
        "gbar": format_polynomial(fam.gbar),
        "V2": format_v2(params),
    }
