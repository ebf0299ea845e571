import pytest

from xhermite.core.exactpoly import Polynomial
from xhermite.core.families import hermite, pseudo_hermite
from xhermite.core.sturm import count_real_roots, is_nodeless, sign_changes, sturm_sequence

X = Polynomial.x()


@pytest.mark.parametrize("n", range(1, 10))
def test_hermite_has_n_real_roots(n):
    assert count_real_roots(hermite(n)) == n


@pytest.mark.parametrize("m", range(0, 10))
def test_pseudo_hermite_real_roots(m):
    # only the odd ones vanish, and only at the origin
    assert count_real_roots(pseudo_hermite(m)) == m % 2


def test_repeated_roots_counted_once():
    p = (X - 1) * (X - 1) * (X + 2)
    assert count_real_roots(p) == 2


def test_interval_counts():
    p = X * X - 2
    assert count_real_roots(p, 0, 2) == 1
    assert count_real_roots(p, -2, 2) == 2
    assert count_real_roots(p, 2, 5) == 0


def test_nodeless():
    assert is_nodeless(Polynomial((3, 0, 0, 0, 4)))
    assert not is_nodeless(X * X - 1)
    assert is_nodeless(Polynomial.constant(5))


def test_sign_changes_skips_zeros():
    assert sign_changes([1, 0, -1, -1, 0, 1]) == 2


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        sturm_sequence(Polynomial.zero())
    with pytest.raises(ValueError):
        count_real_roots(Polynomial.zero())
