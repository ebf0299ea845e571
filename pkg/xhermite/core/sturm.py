# xhermite/core/sturm.py
"""Exact real-root counting with Sturm sequences.

The number of distinct real roots of p in (a, b] is V(a) - V(b), where V(t) is
the number of sign changes of the Sturm sequence evaluated at t.  Infinite
endpoints use the signs of the leading coefficients.
"""
from fractions import Fraction
from typing import List, Optional

from xhermite.core.exactpoly import Polynomial, Scalar


def _positive_primitive(p: Polynomial) -> Polynomial:
    # dividing by a positive constant keeps every sign
    return p.primitive_part() if not p.is_zero else p


def sturm_sequence(p: Polynomial) -> List[Polynomial]:
    if p.is_zero:
        raise ValueError("Sturm sequence of the zero polynomial is undefined")
    seq = [_positive_primitive(p)]
    dp = p.derivative()
    if dp.is_zero:
        return seq
    seq.append(_positive_primitive(dp))
    while True:
        r = -(seq[-2] % seq[-1])
        if r.is_zero:
            break
        seq.append(_positive_primitive(r))
    return seq


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _sign_at(p: Polynomial, t: Optional[Scalar], side: int) -> int:
    if t is None:
        lead = _sign(p.leading)
        return lead if side > 0 or p.degree % 2 == 0 else -lead
    return _sign(p(t))


def sign_changes(values: List[int]) -> int:
    nonzero = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def count_real_roots(p: Polynomial, lo: Optional[Scalar] = None, hi: Optional[Scalar] = None) -> int:
    """Distinct real roots of p in (lo, hi]; None means -inf / +inf."""
    if p.degree <= 0:
        if p.is_zero:
            raise ValueError("the zero polynomial has infinitely many roots")
        return 0
    seq = sturm_sequence(p)
    v_lo = sign_changes([_sign_at(q, lo, -1) for q in seq])
    v_hi = sign_changes([_sign_at(q, hi, +1) for q in seq])
    return v_lo - v_hi


def is_nodeless(p: Polynomial) -> bool:
    return count_real_roots(p) == 0
