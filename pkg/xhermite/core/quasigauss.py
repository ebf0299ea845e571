# xhermite/core/quasigauss.py
"""Functions of the form R(x) e^{s x^2/2} with R rational and s in {-1, 0, +1}.

The class is closed under d/dx and under every first-order operator
±d/dx + W(x) with rational W, so every wavefunction, seed function and ladder
image in the toolkit is one of these.  The exact part (R, s) and the float
normalisation ``scale`` are kept apart: exact identities never see a float.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple, Optional

from xhermite.core.exactpoly import Polynomial, RationalFunction, Scalar, as_ratfunc
from xhermite.errors import IncomparableError

if TYPE_CHECKING:  # pragma: no cover
    from xhermite.core.operators import FirstOrderOp

X = RationalFunction.x()
X2 = X * X


@dataclass(frozen=True, eq=False)
class QuasiGaussian:
    r: RationalFunction
    s: int = 0
    scale: float = 1.0

    def __post_init__(self):
        if self.s not in (-1, 0, 1):
            raise ValueError(f"gaussian sign must be -1, 0 or +1, got {self.s}")
        object.__setattr__(self, "r", as_ratfunc(self.r))

    @property
    def is_zero(self) -> bool:
        return self.r.is_zero

    def exact(self) -> "QuasiGaussian":
        return QuasiGaussian(self.r, self.s)

    def with_scale(self, scale: float) -> "QuasiGaussian":
        return QuasiGaussian(self.r, self.s, float(scale))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuasiGaussian):
            return NotImplemented
        return (
            self.s == other.s
            and self.r == other.r
            and math.isclose(self.scale, other.scale, rel_tol=1e-12, abs_tol=0.0)
        )

    def __hash__(self) -> int:
        return hash((self.r, self.s))

    def to_json(self) -> dict:
        return {"r": self.r.to_json(), "s": self.s, "scale": repr(float(self.scale))}

    @classmethod
    def from_json(cls, data: dict) -> "QuasiGaussian":
        return cls(RationalFunction.from_json(data["r"]), int(data["s"]), float(data["scale"]))

    def __str__(self) -> str:
        gauss = {-1: " e^(-x^2/2)", 0: "", 1: " e^(x^2/2)"}[self.s]
        prefix = "" if self.scale == 1.0 else f"{self.scale!r} * "
        return f"{prefix}[{self.r}]{gauss}"


@dataclass(frozen=True)
class Potential:
    """x^2 + rational(x) + constant; the x^2 term is implicit."""

    rational: RationalFunction = field(default_factory=RationalFunction.zero)
    constant: Fraction = Fraction(0)
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "rational", as_ratfunc(self.rational))
        object.__setattr__(self, "constant", Fraction(self.constant))

    def full_rational(self) -> RationalFunction:
        return self.rational + self.constant

    def shifted(self, c: Scalar, label: Optional[str] = None) -> "Potential":
        return Potential(self.rational, self.constant + Fraction(c), label or self.label)

    def __str__(self) -> str:
        parts = ["x^2"]
        if not self.rational.is_zero:
            parts.append(f"+ {self.rational}")
        if self.constant:
            sign = "-" if self.constant < 0 else "+"
            parts.append(f"{sign} {abs(self.constant)}")
        return " ".join(parts)


OSCILLATOR = Potential(label="x^2")


class Proportionality(NamedTuple):
    proportional: bool
    ratio: Optional[Fraction]


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def qg_derivative(f: QuasiGaussian) -> QuasiGaussian:
    """(R' + s x R) e^{s x^2/2}"""
    r = f.r.derivative()
    if f.s:
        r = r + f.r * X.scale(f.s)
    return QuasiGaussian(r, f.s, f.scale)


def qg_second_derivative(f: QuasiGaussian) -> QuasiGaussian:
    """(R'' + 2 s x R' + (s + s^2 x^2) R) e^{s x^2/2}"""
    s = f.s
    r1 = f.r.derivative()
    r = r1.derivative()
    if s:
        r = r + r1 * X.scale(2 * s) + f.r * (X2.scale(s * s) + s)
    return QuasiGaussian(r, s, f.scale)


def qg_scale(f: QuasiGaussian, c: Scalar) -> QuasiGaussian:
    return QuasiGaussian(f.r.scale(c), f.s, f.scale)


def _check_same_sign(f: QuasiGaussian, g: QuasiGaussian) -> None:
    if f.s != g.s:
        raise IncomparableError(f"gaussian signs differ ({f.s} vs {g.s}); the functions are not comparable")


def _check_same_scale(f: QuasiGaussian, g: QuasiGaussian) -> None:
    # the float normalisation is carried through, never combined
    if not math.isclose(f.scale, g.scale, rel_tol=1e-12, abs_tol=0.0):
        raise IncomparableError(
            f"scales differ ({f.scale!r} vs {g.scale!r}); combine the exact parts via .exact() instead"
        )


def qg_add(f: QuasiGaussian, g: QuasiGaussian) -> QuasiGaussian:
    _check_same_sign(f, g)
    _check_same_scale(f, g)
    return QuasiGaussian(f.r + g.r, f.s, f.scale)


def qg_sub(f: QuasiGaussian, g: QuasiGaussian) -> QuasiGaussian:
    _check_same_sign(f, g)
    _check_same_scale(f, g)
    return QuasiGaussian(f.r - g.r, f.s, f.scale)


def qg_apply_first_order(op: "FirstOrderOp", f: QuasiGaussian) -> QuasiGaussian:
    """(±d/dx + W) f"""
    d = qg_derivative(f).r
    if op.sign < 0:
        d = -d
    return QuasiGaussian(d + op.w * f.r, f.s, f.scale)


def qg_apply_hamiltonian(v: Potential, f: QuasiGaussian) -> QuasiGaussian:
    """(-d^2/dx^2 + x^2 + V) f"""
    f2 = qg_second_derivative(f)
    r = -f2.r + f.r * (X2 + v.full_rational())
    return QuasiGaussian(r, f.s, f.scale)


def qg_equal(f: QuasiGaussian, g: QuasiGaussian) -> Proportionality:
    """Decide whether f = ratio * g on exact parts."""
    _check_same_sign(f, g)
    if g.is_zero:
        return Proportionality(f.is_zero, Fraction(0) if f.is_zero else None)
    if f.is_zero:
        return Proportionality(True, Fraction(0))
    if f.r.den != g.r.den or f.r.num.degree != g.r.num.degree:
        return Proportionality(False, None)
    ratio = f.r.num.leading / g.r.num.leading
    if f.r.num == g.r.num.scale(ratio):
        return Proportionality(True, ratio)
    return Proportionality(False, None)


def oscillator_state(n: int) -> QuasiGaussian:
    """Exact part H_n(x) e^{-x^2/2} (unnormalised)."""
    from xhermite.core.families import hermite

    return QuasiGaussian(RationalFunction(hermite(n)), -1)


def gaussian(s: int = -1) -> QuasiGaussian:
    return QuasiGaussian(RationalFunction.one(), s)


def from_polynomials(num: Polynomial, den: Polynomial = Polynomial.one(), s: int = -1) -> QuasiGaussian:
    return QuasiGaussian(RationalFunction(num, den), s)
