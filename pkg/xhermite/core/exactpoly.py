# xhermite/core/exactpoly.py
"""Exact univariate polynomials and rational functions over the rationals.

A polynomial is a dense ascending tuple of ``Fraction`` coefficients, e.g.
``(1, 0, 4)`` is ``1 + 4x^2``.  Trailing zeros are stripped on construction, so
the zero polynomial is the empty tuple and its degree is ``ZERO_DEGREE`` (-1).

Rational functions are kept reduced: ``gcd(num, den) = 1`` and ``den`` is monic.
Two objects are equal iff their normalized coefficients are equal; there is no
tolerance anywhere in this module.

Hermite-type polynomials are parity-restricted (only even or only odd powers), but the
dense representation does not exploit that.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from functools import reduce
from typing import Iterable, List, Sequence, Tuple, Union

from xhermite.errors import ZeroDenominatorError

Scalar = Union[int, Fraction]
ZERO_DEGREE = -1


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not polynomial coefficients")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected (int, Fraction or str), got {type(value).__name__}")


def _trim(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Polynomial:
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim([_to_fraction(c) for c in self.coeffs]))

    # ---- constructors ----
    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Polynomial":
        return cls((0,) * n + (c,))

    # ---- basic properties ----
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    # ---- ring operations ----
    def __add__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Polynomial(res)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero()
        res = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                res[i + j] += ca * cb
        return Polynomial(res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = _to_fraction(c)
        if c == 0:
            return Polynomial.zero()
        return Polynomial([c * a for a in self.coeffs])

    def __divmod__(self, other) -> Tuple["Polynomial", "Polynomial"]:
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # ---- calculus ----
    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    # ---- evaluation ----
    def __call__(self, x: Scalar) -> Fraction:
        x = _to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.float_coeffs()):
            acc = acc * x + c
        return acc

    def float_coeffs(self) -> List[float]:
        return [float(c) for c in self.coeffs]

    # ---- normal forms ----
    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if self.is_zero:
            return Fraction(0)
        num = reduce(gcd, (c.numerator for c in self.coeffs))
        den = reduce(lcm, (c.denominator for c in self.coeffs))
        return Fraction(abs(num), den)

    def primitive_part(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.content())

    def integer_coeffs(self) -> List[int]:
        """Coefficients of the primitive part as Python ints."""
        return [int(c) for c in self.primitive_part().coeffs]

    # ---- serialization ----
    def to_json(self) -> list:
        return [[str(c.numerator), str(c.denominator)] for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable) -> "Polynomial":
        return cls([Fraction(int(n), int(d)) for n, d in data])

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def _coerce_poly(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return None


def as_polynomial(value) -> Polynomial:
    p = _coerce_poly(value)
    if p is None:
        raise TypeError(f"cannot interpret {type(value).__name__} as a polynomial")
    return p


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r} (expected add, sub or mul)")


def derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def wronskian2(p: Polynomial, q: Polynomial) -> Polynomial:
    """p q' - p' q"""
    return p * q.derivative() - p.derivative() * q


def poly_eval(p: Polynomial, x: Scalar) -> Fraction:
    return p(x)


def poly_eval_float(p: Polynomial, x: float) -> float:
    return p.eval_float(x)


def poly_divmod(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial]:
    if b.is_zero:
        raise ZeroDenominatorError("polynomial division by the zero polynomial")
    if a.degree < b.degree:
        return Polynomial.zero(), a
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading
    quot = [Fraction(0)] * (a.degree - db + 1)
    for k in range(a.degree - db, -1, -1):
        c = rem[k + db] / lb
        quot[k] = c
        if c:
            for i, bc in enumerate(b.coeffs):
                rem[k + i] -= c * bc
    return Polynomial(quot), Polynomial(rem[:db])


def _int_prem(f: List[int], g: List[int]) -> List[int]:
    """Pseudo-remainder of integer polynomials (ascending), up to a constant factor."""
    r = list(f)
    dg, lg = len(g) - 1, g[-1]
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        lr = r[-1]
        r = [c * lg for c in r]
        for i, gc in enumerate(g):
            r[i + shift] -= lr * gc
        while r and r[-1] == 0:
            r.pop()
    return r


def _int_primitive(r: List[int]) -> List[int]:
    if not r:
        return r
    c = reduce(gcd, r)
    return [v // c for v in r]


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd via the primitive polynomial remainder sequence over the integers."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return Polynomial.one()
    f, g = a.integer_coeffs(), b.integer_coeffs()
    if len(f) < len(g):
        f, g = g, f
    while g:
        f, g = g, _int_primitive(_int_prem(f, g))
    return Polynomial(f).monic()


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

def _normalize(num: Polynomial, den: Polynomial) -> Tuple[Polynomial, Polynomial]:
    if den.is_zero:
        raise ZeroDenominatorError("rational function with identically zero denominator")
    if num.is_zero:
        return Polynomial.zero(), Polynomial.one()
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
    lc = den.leading
    if lc != 1:
        num, den = num.scale(1 / lc), den.scale(1 / lc)
    return num, den


@dataclass(frozen=True, init=False)
class RationalFunction:
    num: Polynomial
    den: Polynomial

    def __init__(self, num=0, den=1, *, normalized: bool = False):
        num, den = as_polynomial(num), as_polynomial(den)
        if not normalized:
            num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(Polynomial.zero(), Polynomial.one(), normalized=True)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(Polynomial.one(), Polynomial.one(), normalized=True)

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Polynomial.x(), Polynomial.one(), normalized=True)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    # ---- field operations ----
    def __add__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        d1, d2 = self.den // g, other.den // g
        return RationalFunction(self.num * d2 + other.num * d1, self.den * d2)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalFunction.zero()
        # cross-cancel keeps the product reduced; monic * monic stays monic
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        lc = den.leading
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return RationalFunction(num, den, normalized=True)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDenominatorError("reciprocal of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def scale(self, c: Scalar) -> "RationalFunction":
        c = _to_fraction(c)
        if c == 0:
            return RationalFunction.zero()
        return RationalFunction(self.num.scale(c), self.den, normalized=True)

    def derivative(self) -> "RationalFunction":
        if self.is_polynomial:
            return RationalFunction(self.num.derivative(), self.den, normalized=True)
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    # ---- evaluation ----
    def __call__(self, x: Scalar) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDenominatorError(f"pole at x = {x}")
        return self.num(x) / d

    def eval_float(self, x: float) -> float:
        return self.num.eval_float(x) / self.den.eval_float(x)

    # ---- serialization ----
    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data["den"]))

    def __str__(self) -> str:
        if self.is_polynomial:
            return format_polynomial(self.num)
        return f"({format_polynomial(self.num)})/({format_polynomial(self.den)})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _coerce_ratfunc(value):
    if isinstance(value, RationalFunction):
        return value
    p = _coerce_poly(value)
    if p is None:
        return None
    return RationalFunction(p, Polynomial.one(), normalized=True)


def as_ratfunc(value) -> RationalFunction:
    r = _coerce_ratfunc(value)
    if r is None:
        raise TypeError(f"cannot interpret {type(value).__name__} as a rational function")
    return r


def ratfunc_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def log_derivative(p: Polynomial) -> RationalFunction:
    """p'/p"""
    return RationalFunction(p.derivative(), p)


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def format_polynomial(p: Polynomial, var: str = "x") -> str:
    """Descending layout, e.g. ``4x^4 + 3``."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _format_coeff(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{_format_coeff(mag)}{power}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
