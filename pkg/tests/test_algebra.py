"""Field arithmetic in K, rational functions of y, series, closed forms."""

import random
from fractions import Fraction

import pytest

from motzkin.algebra import (
    K_C,
    K_ONE,
    K_X,
    K_ZERO,
    KElem,
    NotAPowerSeriesError,
    P_ONE,
    PoleAtPointError,
    R_XX,
    RatX,
    Y_ONE,
    Y_VAR,
    YRat,
    catalan_coefficients,
    from_sqrt_form,
    k_of,
    k_str,
    minimal_polynomial,
    poly,
    poly_str,
    px_gcd,
    px_mul,
    ratx,
    ratx_str,
    series,
    to_sqrt_form,
    y_const,
    y_series,
    yp,
)


def test_poly_constructor_strips_trailing_zeros():
    assert poly([1, 2, 0, 0]) == (Fraction(1), Fraction(2))
    assert poly([0, 0]) == ()
    assert poly([]) == ()


def test_px_gcd_is_monic():
    a = poly([-1, 0, 1])          # x^2 - 1
    b = poly([-1, 1])             # x - 1
    assert px_gcd(a, b) == poly([-1, 1])
    assert px_gcd((), b) == poly([-1, 1])
    g = px_gcd(poly([2, 2]), poly([4, 4]))
    assert g == poly([1, 1])


def test_ratx_cancellation():
    u = ratx([1], [1, -1]) * ratx([1, -1])
    assert u == ratx(1)
    with pytest.raises(ZeroDivisionError):
        ratx(1, 0)
    with pytest.raises(ZeroDivisionError):
        ratx(1) / ratx(0)


def test_defining_relation():
    lhs = KElem(R_XX, RatX.make(poly([0]))) * K_C * K_C - K_C + K_ONE
    assert lhs.is_zero()


def test_k_mul_c_squared():
    # C*C = (-1/x^2) + (1/x^2) C
    got = K_C * K_C
    assert got.a == ratx([-1], [0, 0, 1])
    assert got.b == ratx([1], [0, 0, 1])


def test_k_mul_by_one_is_identity():
    u = KElem(ratx([1, 2], [3, 0, 1]), ratx([0, 1], [1, 1]))
    assert (u * K_ONE - u).is_zero()


def test_k_inv_round_trips():
    rng = random.Random(11)
    for _ in range(100):
        a = ratx([rng.randint(-3, 3) for _ in range(rng.randint(1, 5))],
                 [1] + [rng.randint(-2, 2) for _ in range(4)])
        b = ratx([rng.randint(-3, 3) for _ in range(rng.randint(1, 5))],
                 [1] + [rng.randint(-2, 2) for _ in range(4)])
        u = KElem(a, b)
        if u.is_zero():
            continue
        assert (u * u.inverse() - K_ONE).is_zero()
    with pytest.raises(ZeroDivisionError):
        K_ZERO.inverse()


def test_inv_of_c():
    v = K_C.inverse()
    assert (v * K_C - K_ONE).is_zero()
    v = (K_ONE - K_X * K_C).inverse()
    assert (v * (K_ONE - K_X * K_C) - K_ONE).is_zero()


def test_field_axiom_spot_checks():
    rng = random.Random(5)
    def rand_k():
        return KElem(
            ratx([rng.randint(-2, 2) for _ in range(3)],
                 [1, rng.randint(-2, 2)]),
            ratx([rng.randint(-2, 2) for _ in range(3)],
                 [1, rng.randint(-2, 2)]))
    for _ in range(25):
        u, v, w = rand_k(), rand_k(), rand_k()
        assert ((u * v) * w - u * (v * w)).is_zero()
        assert (u * (v + w) - (u * v + u * w)).is_zero()
        assert ((u + v) - (v + u)).is_zero()


def test_y_subst():
    # 1/(1-x-xy) at y=0 -> 1/(1-x)
    f = Y_ONE / YRat.make(yp([k_of(ratx([1, -1])), -K_X]))
    assert (f.subst(K_ZERO) - k_of(ratx(1, [1, -1]))).is_zero()
    # y at xC -> xC
    assert (Y_VAR.subst(K_X * K_C) - K_X * K_C).is_zero()
    # constants ignore the point
    g = y_const(K_C)
    assert (g.subst(K_X) - K_C).is_zero()


def test_y_subst_pole():
    f = Y_ONE / YRat.make(yp([-(K_X * K_C), K_ONE]))   # 1/(y - xC)
    with pytest.raises(PoleAtPointError):
        f.subst(K_X * K_C)


def test_y_subst_commutes_with_arithmetic():
    f = Y_ONE / YRat.make(yp([K_ONE, -K_X]))
    g = Y_VAR * y_const(K_C) + Y_ONE
    v = K_X * K_C
    assert ((f + g).subst(v) - (f.subst(v) + g.subst(v))).is_zero()
    assert ((f * g).subst(v) - (f.subst(v) * g.subst(v))).is_zero()


def test_yrat_reduction_cancels_linear_factor():
    # (y^2 - (xC)^2)/(y - xC) reduces to y + xC
    xc = K_X * K_C
    num = yp([-(xc * xc), K_ZERO, K_ONE])
    den = yp([-xc, K_ONE])
    f = YRat.make(num, den)
    assert f == YRat.make(yp([xc, K_ONE]))


def test_catalan_coefficients():
    assert catalan_coefficients(8) == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    assert catalan_coefficients(0) == [1]


def test_catalan_self_consistency():
    cs = catalan_coefficients(20)
    for n in range(21):
        conv = sum(cs[i] * cs[n - 2 - i] for i in range(max(0, n - 1)))
        assert cs[n] == (1 if n == 0 else 0) + conv


def test_series_of_c():
    assert series(K_C, 6) == [1, 0, 1, 0, 2, 0, 5]


def test_series_of_rational():
    assert series(k_of(ratx(1, [1, -1])), 4) == [1, 1, 1, 1, 1]


def test_series_pole_detection():
    with pytest.raises(NotAPowerSeriesError):
        series(k_of(ratx(1, [0, 1])), 3)
    # cancelling pole is fine: (C - 1)/x^2 = C^2
    u = (K_C - K_ONE) / KElem(R_XX, ratx(0))
    got = series(u, 6)
    want = series(K_C * K_C, 6)
    assert got == want


def test_series_of_product_is_convolution():
    u = k_of(ratx(1, [1, -1]))
    v = K_C
    su, sv = series(u, 10), series(v, 10)
    sp = series(u * v, 10)
    for n in range(11):
        assert sp[n] == sum(su[i] * sv[n - i] for i in range(n + 1))


def test_minimal_polynomial_of_c():
    assert minimal_polynomial(K_C) == (poly([0, 0, 1]), poly([-1]), poly([1]))


def test_minimal_polynomial_linear_case():
    c2, c1, c0 = minimal_polynomial(k_of(ratx(1, [1, -1])))
    assert c2 == ()
    # (1-x) * u - 1 = 0
    assert c1 == poly([1, -1]) and c0 == poly([-1]) or \
        c1 == poly([-1, 1]) and c0 == poly([1])


def test_minimal_polynomial_annihilates():
    rng = random.Random(3)
    for _ in range(10):
        u = KElem(
            ratx([rng.randint(-2, 2) for _ in range(3)],
                 [1, rng.randint(-2, 2)]),
            ratx([rng.randint(-2, 2) for _ in range(3)],
                 [1, rng.randint(-2, 2)]))
        c2, c1, c0 = minimal_polynomial(u)
        wrap = lambda p: KElem(RatX.make(p), ratx(0))
        got = wrap(c2) * u * u + wrap(c1) * u + wrap(c0)
        assert got.is_zero(), u


def test_sqrt_form_of_c():
    n1, n2, d = to_sqrt_form(K_C)
    assert (n1, n2, d) == (poly([1]), poly([-1]), poly([0, 0, 2]))


def test_sqrt_form_round_trip():
    u = KElem(ratx([1, -3], [1, 0, 2]), ratx([2, 1], [1, -1]))
    n1, n2, d = to_sqrt_form(u)
    assert (from_sqrt_form(n1, n2, d) - u).is_zero()
    assert to_sqrt_form(K_ZERO) == ((), (), P_ONE)
    n1, n2, d = to_sqrt_form(K_ONE)
    assert n2 == ()


def test_y_series_expansion():
    # 1/(1 - Cy) has coefficients C^h
    f = Y_ONE / YRat.make(yp([K_ONE, -K_C]))
    coefs = y_series(f, 4)
    acc = K_ONE
    for h in range(5):
        assert (coefs[h] - acc).is_zero()
        acc = acc * K_C


def test_display_strings():
    assert poly_str(poly([-1, 0, 5])) == "5*x^2 - 1"
    assert poly_str(()) == "0"
    assert poly_str(poly([0, 1])) == "x"
    assert ratx_str(ratx(1)) == "1"
    assert k_str(K_C) == "0 + 1*C"
    assert "C" in k_str(K_X * K_C)
