# xhermite/core/operators.py
"""Supercharges, ladder operators and the exact checks built on them.

Every operator is a product of first-order factors ``±d/dx + W`` with rational W,
so applying one to a quasi-Gaussian is exact.  Chains are written in the usual
left-to-right operator order and applied right to left.

For a family (m1, m2) with ℓ = m2 - m1:

* A^(1), A^(2) connect H^(1) -> H -> H^(2); Ā^(1), Ā^(2) go through the formal
  intermediate H̄ instead.
* Â_1 ... Â_ℓ map H to H̄ + 2ℓ.
* c = Ā^(2) Â_ℓ ... Â_1 A^(2)† lowers the energy by 2ℓ; b = 𝓐 a 𝓐† by 2.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from xhermite.core.exactpoly import Polynomial, RationalFunction, poly_gcd
from xhermite.core.families import (
    FamilyParams,
    EnergyLevel,
    Which,
    admissible_nus,
    build_family,
    check_nu,
    energy,
    eop_first,
    exact_norm_sq,
    exact_state,
    hat_potential,
    is_admissible,
    potential_triple,
    pseudo_hermite,
)
from xhermite.core.quasigauss import (
    Potential,
    QuasiGaussian,
    oscillator_state,
    qg_add,
    qg_apply_first_order,
    qg_apply_hamiltonian,
    qg_derivative,
    qg_equal,
    qg_scale,
    qg_second_derivative,
    qg_sub,
)
from xhermite.core.report import VerificationReport, check_true, check_zero, report_of, run_check
from xhermite.errors import InvalidParametersError, XHermiteError

logger = logging.getLogger(__name__)

X = RationalFunction.x()
DAGGER = "†"
LADDERS = ("b", "b_dagger", "c", "c_dagger")


# ---------------------------------------------------------------------------
# Operator values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FirstOrderOp:
    """sign * d/dx + w"""

    sign: int
    w: RationalFunction
    label: str = ""

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"first-order operator sign must be +1 or -1, got {self.sign}")
        if not isinstance(self.w, RationalFunction):
            object.__setattr__(self, "w", RationalFunction(self.w))

    def adjoint(self) -> "FirstOrderOp":
        label = self.label[:-1] if self.label.endswith(DAGGER) else self.label + DAGGER
        return FirstOrderOp(-self.sign, self.w, label)

    def apply(self, f: QuasiGaussian) -> QuasiGaussian:
        return qg_apply_first_order(self, f)

    __call__ = apply

    def to_json(self) -> dict:
        return {"sign": self.sign, "w": self.w.to_json(), "label": self.label}


@dataclass(frozen=True)
class OperatorChain:
    ops: Tuple[FirstOrderOp, ...] = ()
    label: str = ""

    @classmethod
    def of(cls, *ops: FirstOrderOp, label: str = "") -> "OperatorChain":
        return cls(tuple(ops), label)

    @property
    def order(self) -> int:
        return len(self.ops)

    def adjoint(self) -> "OperatorChain":
        label = self.label[:-1] if self.label.endswith(DAGGER) else (self.label + DAGGER if self.label else "")
        return OperatorChain(tuple(op.adjoint() for op in reversed(self.ops)), label)

    def __matmul__(self, other: "OperatorChain") -> "OperatorChain":
        return OperatorChain(self.ops + other.ops, f"{self.label}{other.label}")

    def apply(self, f: QuasiGaussian) -> QuasiGaussian:
        for op in reversed(self.ops):
            if f.is_zero:
                break
            f = op.apply(f)
        return f

    __call__ = apply

    def labels(self) -> List[str]:
        return [op.label for op in self.ops]


def chain_apply(chain: OperatorChain, f: QuasiGaussian) -> QuasiGaussian:
    return chain.apply(f)


@dataclass(frozen=True)
class SecondOrderOp:
    """d^2/dx^2 + eta d/dx + kappa"""

    eta: RationalFunction
    kappa: RationalFunction

    def apply(self, f: QuasiGaussian) -> QuasiGaussian:
        r = qg_second_derivative(f).r + self.eta * qg_derivative(f).r + self.kappa * f.r
        return QuasiGaussian(r, f.s, f.scale)

    def adjoint(self) -> "SecondOrderOp":
        return SecondOrderOp(-self.eta, self.kappa - self.eta.derivative())


@dataclass(frozen=True)
class Supercharges:
    params: FamilyParams
    a: FirstOrderOp
    A1: FirstOrderOp
    A2: FirstOrderOp
    Abar1: FirstOrderOp
    Abar2: FirstOrderOp
    hat: Tuple[FirstOrderOp, ...]

    @property
    def a_dagger(self) -> FirstOrderOp:
        return self.a.adjoint()

    @property
    def calA(self) -> OperatorChain:
        return OperatorChain.of(self.A2, self.A1, label="𝓐")

    @property
    def calA_bar(self) -> OperatorChain:
        return OperatorChain.of(self.Abar2, self.Abar1, label="𝓐bar")

    @property
    def hat_chain(self) -> OperatorChain:
        """Â_ℓ ... Â_1"""
        return OperatorChain(tuple(reversed(self.hat)), "Â")

    @property
    def c(self) -> OperatorChain:
        return OperatorChain((self.Abar2,) + self.hat_chain.ops + (self.A2.adjoint(),), "c")

    @property
    def c_dagger(self) -> OperatorChain:
        return self.c.adjoint()

    @property
    def b(self) -> OperatorChain:
        return OperatorChain.of(self.A2, self.A1, self.a, self.A1.adjoint(), self.A2.adjoint(), label="b")

    @property
    def b_dagger(self) -> OperatorChain:
        return self.b.adjoint()

    def ladder(self, name: str) -> OperatorChain:
        if name not in LADDERS:
            raise InvalidParametersError(f"unknown ladder operator {name!r}; expected one of {', '.join(LADDERS)}")
        return getattr(self, name)

    def as_dict(self) -> Dict[str, object]:
        return {
            "A1": self.A1,
            "A2": self.A2,
            "Abar1": self.Abar1,
            "Abar2": self.Abar2,
            "a": self.a,
            "a_dagger": self.a_dagger,
            "hat_chain": self.hat,
        }


def _log_derivative(p: Polynomial) -> RationalFunction:
    return RationalFunction(p.derivative(), p)


@lru_cache(maxsize=64)
def _build(m1: int, m2: int) -> Supercharges:
    params = FamilyParams(m1, m2)
    fam = build_family(m1, m2)
    lg1, lg2, lg = _log_derivative(fam.h1), _log_derivative(fam.h2), _log_derivative(fam.g)
    hat = []
    for i in range(1, params.ell + 1):
        k = m1 + i - 1
        w = X + _log_derivative(pseudo_hermite(k)) - _log_derivative(pseudo_hermite(k + 1))
        hat.append(FirstOrderOp(1, w, f"Â{i}"))
    sc = Supercharges(
        params=params,
        a=FirstOrderOp(1, X, "a"),
        A1=FirstOrderOp(1, -X - lg1, "A1"),
        A2=FirstOrderOp(1, -X + lg1 - lg, "A2"),
        Abar1=FirstOrderOp(1, -X - lg2, "Abar1"),
        Abar2=FirstOrderOp(1, -X + lg2 - lg, "Abar2"),
        hat=tuple(hat),
    )
    logger.debug("supercharges for %s: c has order %d, b has order %d", params.label, sc.c.order, sc.b.order)
    return sc


def build_supercharges(params: FamilyParams) -> Supercharges:
    return _build(params.m1, params.m2)


def hamiltonians(params: FamilyParams) -> Dict[str, Potential]:
    pots = potential_triple(params)
    return {"H1": pots["V1"], "H": pots["V"], "H2": pots["V2"], "Hbar": pots["Vbar"]}


def second_order_operator(params: FamilyParams, barred: bool = False) -> SecondOrderOp:
    """𝓐 = A^(2) A^(1) (or Ā^(2) Ā^(1)) written as d^2 + η d + κ."""
    sc = build_supercharges(params)
    w1, w2 = (sc.Abar1.w, sc.Abar2.w) if barred else (sc.A1.w, sc.A2.w)
    return SecondOrderOp(w1 + w2, w1.derivative() + w1 * w2)


def probe_states(count: int = 6) -> List[QuasiGaussian]:
    return [oscillator_state(n) for n in range(count)]


def _p(params: FamilyParams, **extra) -> dict:
    return {"m1": params.m1, "m2": params.m2, **extra}


def _divides_power_of(den: Polynomial, g: Polynomial) -> bool:
    d = den
    while d.degree > 0:
        h = poly_gcd(d, g)
        if h.degree == 0:
            return False
        d = d // h
    return True


# ---------------------------------------------------------------------------
# Polynomial Heisenberg algebra data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhaSpec:
    """Polynomial in the energy variable given by its integer roots, in factor order."""

    name: str
    roots: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.roots)

    @property
    def poly(self) -> Polynomial:
        out = Polynomial.one()
        for r in self.roots:
            out = out * Polynomial((-r, 1))
        return out

    def __call__(self, e) -> Fraction:
        return math.prod((Fraction(e) - r for r in self.roots), start=Fraction(1))

    def shifted(self, s: int) -> "PhaSpec":
        """Roots of E -> poly(E + s)."""
        return PhaSpec(f"{self.name}(E+{s})", tuple(r - s for r in self.roots))

    def to_json(self) -> dict:
        return {"name": self.name, "order": self.order, "roots": list(self.roots), "poly": self.poly.to_json()}


def pha_polys(params: FamilyParams) -> Dict[str, PhaSpec]:
    m1, m2, ell = params.m1, params.m2, params.ell
    p_roots = (m1 + m2 + 2, m1 - m2 + 2, m1 - m2, m2 - m1 + 2, m2 - m1)
    q_roots = (3 * ell,) + tuple(2 * m1 + ell + 2 * i for i in range(1, ell + 1)) + (-ell,)
    return {"P": PhaSpec("P", p_roots), "Q": PhaSpec("Q", q_roots)}


def ladder_norm_poly(params: FamilyParams, operator: str) -> PhaSpec:
    """Polynomial f with ||L ψ_ν||^2 = f(E_ν) for the ladder L."""
    pha = pha_polys(params)
    return {
        "b": pha["P"],
        "b_dagger": pha["P"].shifted(2),
        "c": pha["Q"],
        "c_dagger": pha["Q"].shifted(2 * params.ell),
    }[operator]


def _shift(params: FamilyParams, operator: str) -> int:
    return {"b": -1, "b_dagger": 1, "c": -params.ell, "c_dagger": params.ell}[operator]


@dataclass(frozen=True)
class ZeroModes:
    operator: str
    formal: Tuple[int, ...]
    physical: Tuple[EnergyLevel, ...]

    @property
    def physical_energies(self) -> List[int]:
        return [lvl.energy for lvl in self.physical]

    def to_json(self) -> dict:
        return {
            "operator": self.operator,
            "formal": list(self.formal),
            "physical": [lvl.to_json() for lvl in self.physical],
        }


def energy_to_nu(params: FamilyParams, e: int) -> Optional[int]:
    twice = e - params.m1 - params.m2 - 2
    if twice % 2:
        return None
    nu = twice // 2
    return nu if is_admissible(params, Which.H2, nu) else None


def zero_modes(params: FamilyParams, operator: str) -> ZeroModes:
    if operator not in LADDERS:
        raise InvalidParametersError(f"unknown ladder operator {operator!r}; expected one of {', '.join(LADDERS)}")
    formal = ladder_norm_poly(params, operator).roots
    physical = {}
    for e in formal:
        nu = energy_to_nu(params, e)
        if nu is not None:
            physical[e] = EnergyLevel(nu, e, Which.H2)
    return ZeroModes(operator, formal, tuple(physical[e] for e in sorted(physical)))


# ---------------------------------------------------------------------------
# State transitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Transition:
    """op ψ_src = coefficient * ψ_dst, with coefficient = ratio * N_src / N_dst."""

    zero: bool
    ratio: Optional[Fraction] = None
    coefficient_sq: Fraction = Fraction(0)

    @property
    def coefficient(self) -> float:
        if self.zero:
            return 0.0
        return math.copysign(math.sqrt(self.coefficient_sq), self.ratio)


def transition(
    params: FamilyParams,
    op,
    src: Which,
    nu: int,
    dst: Which,
    dst_nu: Optional[int],
) -> Transition:
    """Apply ``op`` to the exact state (src, nu) and identify the image as a multiple of (dst, dst_nu)."""
    image = op.apply(exact_state(params, src, nu))
    if image.is_zero:
        return Transition(True)
    if dst_nu is None or not is_admissible(params, dst, dst_nu):
        raise XHermiteError(
            f"{getattr(op, 'label', 'operator')} maps {Which(src).value}[ν={nu}] of {params.label} to a nonzero "
            f"function with no eigenstate at ν={dst_nu}"
        )
    target = exact_state(params, dst, dst_nu)
    prop = qg_equal(image, target)
    if not prop.proportional:
        raise XHermiteError(
            f"{getattr(op, 'label', 'operator')} image of {Which(src).value}[ν={nu}] is not proportional to "
            f"{Which(dst).value}[ν={dst_nu}] for {params.label}"
        )
    coeff_sq = prop.ratio**2 * exact_norm_sq(params, src, nu) / exact_norm_sq(params, dst, dst_nu)
    return Transition(False, prop.ratio, coeff_sq)


@dataclass(frozen=True)
class LadderAction:
    operator: str
    nu: int
    target_nu: Optional[int]
    ratio: Optional[Fraction]
    coefficient_sq: Fraction
    expected_sq: Fraction

    @property
    def is_zero(self) -> bool:
        return self.target_nu is None

    @property
    def coefficient(self) -> float:
        if self.is_zero:
            return 0.0
        return math.copysign(math.sqrt(self.coefficient_sq), self.ratio)

    @property
    def matches(self) -> bool:
        return self.coefficient_sq == self.expected_sq

    def to_json(self) -> dict:
        return {
            "operator": self.operator,
            "nu": self.nu,
            "target_nu": self.target_nu,
            "zero": self.is_zero,
            "coefficient": self.coefficient,
            "coefficient_sq": str(self.coefficient_sq),
            "expected_sq": str(self.expected_sq),
            "matches": self.matches,
        }


@lru_cache(maxsize=1024)
def _ladder_action(m1: int, m2: int, operator: str, nu: int) -> LadderAction:
    params = FamilyParams(m1, m2)
    check_nu(params, Which.H2, nu)
    chain = build_supercharges(params).ladder(operator)
    target = nu + _shift(params, operator)
    t = transition(params, chain, Which.H2, nu, Which.H2, target)
    expected = ladder_norm_poly(params, operator)(energy(params, nu))
    if t.zero:
        return LadderAction(operator, nu, None, None, Fraction(0), expected)
    return LadderAction(operator, nu, target, t.ratio, t.coefficient_sq, expected)


def ladder_action(params: FamilyParams, operator: str, nu: int) -> LadderAction:
    if operator not in LADDERS:
        raise InvalidParametersError(f"unknown ladder operator {operator!r}; expected one of {', '.join(LADDERS)}")
    return _ladder_action(params.m1, params.m2, operator, nu)


def ladder_c_action(params: FamilyParams, nu: int) -> LadderAction:
    return ladder_action(params, "c", nu)


def ladder_c_dagger_action(params: FamilyParams, nu: int) -> LadderAction:
    return ladder_action(params, "c_dagger", nu)


def standard_b_action(params: FamilyParams, nu: int) -> LadderAction:
    return ladder_action(params, "b", nu)


def standard_b_dagger_action(params: FamilyParams, nu: int) -> LadderAction:
    return ladder_action(params, "b_dagger", nu)


def closed_form_c_coefficient_sq(params: FamilyParams, nu: int) -> Fraction:
    """Squared coefficient of c ψ_ν from the closed-form action table."""
    m1, m2, ell = params.m1, params.m2, params.ell
    f = math.factorial
    if nu == -m1 - 1:
        return Fraction(ell**2 * 2 ** (ell + 2) * f(m2), f(m1))
    if nu == -m2 - 1 or 0 <= nu < ell:
        return Fraction(0)
    if nu < 0:
        raise InvalidParametersError(f"ν={nu} is not an eigenstate index of H2 for {params.label}")
    return Fraction(2 ** (ell + 2) * f(nu) * (nu + 2 * m1 - m2 + 1) * (nu + m2 + 1), f(nu + m1 - m2))


def ladder_table(params: FamilyParams, operator: str, max_nu: int) -> List[LadderAction]:
    return [ladder_action(params, operator, nu) for nu in _states(params, max_nu)]


def _states(params: FamilyParams, max_nu: int) -> List[int]:
    """H2 indices: both singlets then 0..max_nu."""
    return admissible_nus(params, Which.H2, max_nu + 3)


# ---------------------------------------------------------------------------
# Verification batteries
# ---------------------------------------------------------------------------

def verify_supercharge_intertwining(params: FamilyParams, probes: int = 6) -> VerificationReport:
    """A H_in f = H_out A f for every supercharge, on oscillator probes."""
    sc = build_supercharges(params)
    hs = hamiltonians(params)
    pairs = [
        ("A1 H1 = H A1", sc.A1, hs["H1"], hs["H"]),
        ("A2 H = H2 A2", sc.A2, hs["H"], hs["H2"]),
        ("Abar1 H1 = Hbar Abar1", sc.Abar1, hs["H1"], hs["Hbar"]),
        ("Abar2 Hbar = H2 Abar2", sc.Abar2, hs["Hbar"], hs["H2"]),
        ("𝓐 H1 = H2 𝓐", sc.calA, hs["H1"], hs["H2"]),
    ]
    report = VerificationReport()
    for name, op, h_in, h_out in pairs:
        for k, f in enumerate(probe_states(probes)):
            def _check(op=op, h_in=h_in, h_out=h_out, f=f, name=name, k=k):
                lhs = op.apply(qg_apply_hamiltonian(h_in, f))
                rhs = qg_apply_hamiltonian(h_out, op.apply(f))
                return check_zero(name, _p(params, probe=k), qg_sub(lhs, rhs).r)

            report.add(run_check(name, _p(params, probe=k), _check))
    return report


def verify_factorization_commutes(params: FamilyParams, probes: int = 6) -> VerificationReport:
    """A^(2) A^(1) f = Ā^(2) Ā^(1) f exactly, and the result is regular (denominator built from g only)."""
    sc = build_supercharges(params)
    g = build_family(params.m1, params.m2).g
    report = VerificationReport()
    for k, f in enumerate(probe_states(probes)):
        def _check(f=f, k=k):
            left = sc.calA.apply(f)
            right = sc.calA_bar.apply(f)
            residual = qg_sub(left, right).r
            if not residual.is_zero:
                return check_zero("A2 A1 = Abar2 Abar1", _p(params, probe=k), residual)
            regular = _divides_power_of(left.r.den, g)
            return check_true(
                "A2 A1 = Abar2 Abar1",
                _p(params, probe=k),
                regular,
                f"image denominator {left.r.den} is not a power of g",
            )

        report.add(run_check("A2 A1 = Abar2 Abar1", _p(params, probe=k), _check))
    return report


def verify_second_order_operator(params: FamilyParams, probes: int = 6) -> VerificationReport:
    """𝓐 as d^2 + η d + κ: both factorisations give the same η, κ; 𝓐†𝓐 = (H1-ℓ)(H1+ℓ); 𝓐𝓐† = (H2-ℓ)(H2+ℓ)."""
    sc = build_supercharges(params)
    hs = hamiltonians(params)
    ell = params.ell
    op = second_order_operator(params)
    op_bar = second_order_operator(params, barred=True)
    g = build_family(params.m1, params.m2).g
    report = VerificationReport()
    report.add(check_zero("η = η̄", _p(params), op.eta - op_bar.eta))
    report.add(check_zero("κ = κ̄", _p(params), op.kappa - op_bar.kappa))
    report.add(check_zero("η = -2x - g'/g", _p(params), op.eta + X.scale(2) + _log_derivative(g)))

    def _quad(h: Potential, f: QuasiGaussian) -> QuasiGaussian:
        u = qg_add(qg_apply_hamiltonian(h, f), qg_scale(f, ell))
        return qg_sub(qg_apply_hamiltonian(h, u), qg_scale(u, ell))

    for k, f in enumerate(probe_states(probes)):
        report.add(run_check(
            "𝓐 = d^2 + η d + κ", _p(params, probe=k),
            lambda f=f, k=k: check_zero("𝓐 = d^2 + η d + κ", _p(params, probe=k), qg_sub(sc.calA.apply(f), op.apply(f)).r),
        ))
        report.add(run_check(
            "𝓐†𝓐 = (H1-ℓ)(H1+ℓ)", _p(params, probe=k),
            lambda f=f, k=k: check_zero(
                "𝓐†𝓐 = (H1-ℓ)(H1+ℓ)", _p(params, probe=k),
                qg_sub((sc.calA.adjoint() @ sc.calA).apply(f), _quad(hs["H1"], f)).r,
            ),
        ))
    for nu in _states(params, 2):
        f = exact_state(params, Which.H2, nu)
        report.add(run_check(
            "𝓐𝓐† = (H2-ℓ)(H2+ℓ)", _p(params, nu=nu),
            lambda f=f, nu=nu: check_zero(
                "𝓐𝓐† = (H2-ℓ)(H2+ℓ)", _p(params, nu=nu),
                qg_sub((sc.calA @ sc.calA.adjoint()).apply(f), _quad(hs["H2"], f)).r,
            ),
        ))
    return report


def verify_hat_chain(params: FamilyParams, max_nu: int = 6, probes: int = 5) -> VerificationReport:
    """Â_i Ĥ_i = (Ĥ_{i+1} + 2) Â_i and the explicit step of Â_i on the intermediate states."""
    sc = build_supercharges(params)
    m1 = params.m1
    report = VerificationReport()
    for i, op in enumerate(sc.hat, start=1):
        h_in = hat_potential(params, i)
        h_out = hat_potential(params, i + 1).shifted(2)
        name = f"Â{i} Ĥ{i} = (Ĥ{i + 1}+2) Â{i}"
        for k, f in enumerate(probe_states(probes)):
            report.add(run_check(name, _p(params, i=i, probe=k), lambda op=op, h_in=h_in, h_out=h_out, f=f, k=k, name=name: check_zero(
                name, _p(params, i=i, probe=k),
                qg_sub(op.apply(qg_apply_hamiltonian(h_in, f)), qg_apply_hamiltonian(h_out, op.apply(f))).r,
            )))

        k_idx = m1 + i - 1

        def _ground(op=op, k_idx=k_idx, i=i):
            lhs = op.apply(QuasiGaussian(RationalFunction(1, pseudo_hermite(k_idx)), -1))
            rhs = QuasiGaussian(RationalFunction(-2 * (k_idx + 1), pseudo_hermite(k_idx + 1)), -1)
            return check_zero(f"Â{i} step on 1/𝓗", _p(params, i=i), qg_sub(lhs, rhs).r)

        report.add(run_check(f"Â{i} step on 1/𝓗", _p(params, i=i), _ground))
        for nu in range(i - 1, max_nu + 1):
            n = nu + m1 + 1

            def _step(op=op, k_idx=k_idx, nu=nu, n=n, i=i):
                src = QuasiGaussian(RationalFunction(eop_first(k_idx, n, formal=True), pseudo_hermite(k_idx)), -1)
                lhs = op.apply(src)
                if nu == i - 1:
                    return check_zero(f"Â{i} step", _p(params, i=i, nu=nu), lhs.r)
                rhs = QuasiGaussian(
                    RationalFunction(eop_first(k_idx + 1, n, formal=True), pseudo_hermite(k_idx + 1)), -1
                )
                return check_zero(f"Â{i} step", _p(params, i=i, nu=nu), qg_sub(lhs, qg_scale(rhs, 2 * (nu - i + 1))).r)

            report.add(run_check(f"Â{i} step", _p(params, i=i, nu=nu), _step))
    return report


def verify_susy_norm_factors(params: FamilyParams, max_nu: int = 6) -> VerificationReport:
    """Squared SUSY factors between consecutive Hamiltonians, compared exactly."""
    sc = build_supercharges(params)
    m1, m2 = params.m1, params.m2
    report = VerificationReport()
    cases = []
    for nu in range(max_nu + 1):
        cases.append(("A1 ψ1", sc.A1, Which.H1, Which.H, nu, Fraction(2 * (nu + m1 + 1))))
        cases.append(("A1† ψ", sc.A1.adjoint(), Which.H, Which.H1, nu, Fraction(2 * (nu + m1 + 1))))
    for nu in [-m1 - 1] + list(range(max_nu + 1)):
        cases.append(("A2 ψ", sc.A2, Which.H, Which.H2, nu, Fraction(2 * (nu + m2 + 1))))
        cases.append(("A2† ψ2", sc.A2.adjoint(), Which.H2, Which.H, nu, Fraction(2 * (nu + m2 + 1))))
    for name, op, src, dst, nu, expected in cases:
        def _check(name=name, op=op, src=src, dst=dst, nu=nu, expected=expected):
            t = transition(params, op, src, nu, dst, nu)
            got = Fraction(0) if t.zero else t.coefficient_sq
            return check_true(name, _p(params, nu=nu), got == expected, f"squared factor {got}, expected {expected}")

        report.add(run_check(name, _p(params, nu=nu), _check))

    report.add(run_check("A2† ψ2[-m2-1] = 0", _p(params), lambda: check_true(
        "A2† ψ2[-m2-1] = 0", _p(params),
        sc.A2.adjoint().apply(exact_state(params, Which.H2, -m2 - 1)).is_zero,
        "A2† does not annihilate the lowest state",
    )))
    report.add(run_check("A1† ψ[-m1-1] = 0", _p(params), lambda: check_true(
        "A1† ψ[-m1-1] = 0", _p(params),
        sc.A1.adjoint().apply(exact_state(params, Which.H, -m1 - 1)).is_zero,
        "A1† does not annihilate the lowest state of H",
    )))
    return report


def verify_intertwining_c(params: FamilyParams, max_nu: int = 6) -> VerificationReport:
    """c H2 = (H2 + 2ℓ) c on eigenstates, and c ψ_ν is an eigenstate with energy E_ν - 2ℓ."""
    sc = build_supercharges(params)
    h2 = hamiltonians(params)["H2"]
    shift = 2 * params.ell
    report = VerificationReport()
    for nu in _states(params, max_nu):
        f = exact_state(params, Which.H2, nu)

        def _inter(f=f, nu=nu):
            cf = sc.c.apply(f)
            lhs = sc.c.apply(qg_apply_hamiltonian(h2, f))
            rhs = qg_apply_hamiltonian(h2.shifted(shift), cf)
            return check_zero("c H2 = (H2+2ℓ) c", _p(params, nu=nu), qg_sub(lhs, rhs).r)

        def _eigen(f=f, nu=nu):
            cf = sc.c.apply(f)
            if cf.is_zero:
                return check_true("H2 c ψ = (E-2ℓ) c ψ", _p(params, nu=nu), True)
            residual = qg_sub(qg_apply_hamiltonian(h2, cf), qg_scale(cf, energy(params, nu) - shift)).r
            return check_zero("H2 c ψ = (E-2ℓ) c ψ", _p(params, nu=nu), residual)

        report.add(run_check("c H2 = (H2+2ℓ) c", _p(params, nu=nu), _inter))
        report.add(run_check("H2 c ψ = (E-2ℓ) c ψ", _p(params, nu=nu), _eigen))
    return report


def verify_ladder_actions(params: FamilyParams, max_nu: int = 6, operators: Sequence[str] = LADDERS) -> VerificationReport:
    """Squared ladder coefficients equal P or Q at the state energy; c also matches its closed-form table."""
    report = VerificationReport()
    for op in operators:
        for nu in _states(params, max_nu):
            name = f"|{op} ψ|^2"

            def _check(op=op, nu=nu, name=name):
                act = ladder_action(params, op, nu)
                if not act.matches:
                    return check_true(name, _p(params, nu=nu), False,
                                      f"squared coefficient {act.coefficient_sq}, expected {act.expected_sq}")
                if op == "c":
                    closed = closed_form_c_coefficient_sq(params, nu)
                    return check_true(name, _p(params, nu=nu), act.coefficient_sq == closed,
                                      f"squared coefficient {act.coefficient_sq}, closed form {closed}")
                return check_true(name, _p(params, nu=nu), True)

            report.add(run_check(name, _p(params, nu=nu), _check))
    return report


def verify_pha_products(params: FamilyParams, max_nu: int = 3) -> VerificationReport:
    """b†b = P(H2), b b† = P(H2+2), c†c = Q(H2), c c† = Q(H2+2ℓ) on eigenstates."""
    sc = build_supercharges(params)
    pha = pha_polys(params)
    products = [
        ("b†b = P(H2)", sc.b_dagger @ sc.b, pha["P"]),
        ("bb† = P(H2+2)", sc.b @ sc.b_dagger, pha["P"].shifted(2)),
        ("c†c = Q(H2)", sc.c_dagger @ sc.c, pha["Q"]),
        ("cc† = Q(H2+2ℓ)", sc.c @ sc.c_dagger, pha["Q"].shifted(2 * params.ell)),
    ]
    report = VerificationReport()
    for name, chain, spec in products:
        for nu in _states(params, max_nu):
            def _check(name=name, chain=chain, spec=spec, nu=nu):
                f = exact_state(params, Which.H2, nu)
                value = spec(energy(params, nu))
                return check_zero(name, _p(params, nu=nu), qg_sub(chain.apply(f), qg_scale(f, value)).r)

            report.add(run_check(name, _p(params, nu=nu), _check))
    return report


def verify_pha_specs(params: FamilyParams) -> VerificationReport:
    """The expanded P and Q vanish at every listed root and have the claimed orders."""
    pha = pha_polys(params)
    report = VerificationReport()
    for key, expected_order in (("P", 5), ("Q", params.ell + 2)):
        spec = pha[key]
        poly = spec.poly
        ok = poly.degree == expected_order and spec.order == expected_order and all(poly(r) == 0 for r in spec.roots)
        report.add(check_true(f"{key} factors over its roots", _p(params), ok, f"{key} = {poly}"))
    sc = build_supercharges(params)
    report.add(check_true("order(b) = 5", _p(params), sc.b.order == 5, f"order {sc.b.order}"))
    report.add(check_true("order(c) = ℓ+2", _p(params), sc.c.order == params.ell + 2, f"order {sc.c.order}"))
    return report


def verify_zero_modes_exact(params: FamilyParams, operator: str, max_nu: int = 6) -> VerificationReport:
    """The states annihilated by exact application equal the physical zero-mode list."""
    chain = build_supercharges(params).ladder(operator)
    bound = max(max_nu, params.ell + 1)

    def _check():
        annihilated = sorted(
            nu for nu in _states(params, bound) if chain.apply(exact_state(params, Which.H2, nu)).is_zero
        )
        expected = sorted(lvl.nu for lvl in zero_modes(params, operator).physical)
        return check_true(
            f"zero modes of {operator}",
            _p(params),
            annihilated == expected,
            f"annihilated {annihilated}, expected {expected}",
        )

    return report_of([run_check(f"zero modes of {operator}", _p(params), _check)])


def verify_operators(params: FamilyParams, max_nu: int = 6, probes: int = 6) -> VerificationReport:
    """Every exact operator battery for one family."""
    report = VerificationReport()
    report.merge(
        verify_pha_specs(params),
        verify_supercharge_intertwining(params, probes),
        verify_factorization_commutes(params, probes),
        verify_second_order_operator(params, probes),
        verify_hat_chain(params, max_nu),
        verify_susy_norm_factors(params, max_nu),
        verify_intertwining_c(params, max_nu),
        verify_ladder_actions(params, max_nu),
        verify_pha_products(params, min(max_nu, 3)),
    )
    for op in LADDERS:
        report.merge(verify_zero_modes_exact(params, op, max_nu))
    return report
