from fractions import Fraction as F

import pytest

from lagint.polynomial import MultiPoly, RationalPoly


def test_normalization_strips_zeros_and_tracks_offset():
    p = RationalPoly((0, 0, 3, 0), offset=-1)
    assert p.coeffs == (F(3),)
    assert p.low == p.degree == 1
    assert RationalPoly((0, 0)).is_zero()
    assert RationalPoly((0, 0)) == RationalPoly()


def test_laurent_arithmetic():
    u = RationalPoly((1, 2, 1), offset=-1)  # 1/z + 2 + z
    sq = u * u
    assert sq.terms() == {-2: 1, -1: 4, 0: 6, 1: 4, 2: 1}
    assert (u - u).is_zero()
    assert (u + 3).coefficient(0) == 5
    assert u.shift(2).low == 1


def test_compose_and_derivative():
    p = RationalPoly((1, -1))  # 1 - x
    u = RationalPoly((2, 0, 1))  # 2 + x^2
    assert p.compose(u) == RationalPoly((-1, 0, -1))
    assert RationalPoly((5, 3, F(1, 2))).derivative() == RationalPoly((3, 1))
    with pytest.raises(ValueError):
        RationalPoly((1,), -1).compose(u)


def test_exact_evaluation():
    p = RationalPoly((3, -3, F(1, 2)))
    assert p(F(9, 4)) == F(-39, 32)
    assert RationalPoly((1, 1), offset=-1)(F(2)) == F(3, 2)


def test_floats_are_not_exact_coefficients():
    with pytest.raises(TypeError):
        RationalPoly((0.5,))


def test_multipoly_select_and_products():
    z_s = MultiPoly({(1, 1): 1, (-1, 0): 2}, 2)
    sq = z_s * z_s
    assert sq.coefficient((0, 1)) == 4
    assert sq.select(0, 2) == MultiPoly({(2,): 1}, 1)
    assert (sq + (-1) * sq) == MultiPoly(nvars=2)
