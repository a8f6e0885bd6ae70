from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probfe.series import (
    TruncatedSeries,
    XPolynomial,
    bivariate_exp_xlog,
    bivariate_scale,
    series_compose,
    series_exp,
    series_inverse_mul,
    series_log1p,
    series_mul,
    series_reversion,
)
from probfe.stirling import classical_s2

from conftest import polynomials, rationals

N = 10


def series(order=N, zero_constant=False, unit_constant=False):
    def build(cs):
        cs = list(cs)
        if zero_constant:
            cs[0] = Fraction(0)
        if unit_constant:
            cs[0] = Fraction(1)
        return TruncatedSeries(tuple(cs))
    return st.lists(rationals(20), min_size=order + 1, max_size=order + 1).map(build)


def delta_series_st(order=N):
    return series(order, zero_constant=True).filter(lambda s: s.coeffs[1] != 0)


def naive_egf_product(a, b):
    return [sum(comb(n, k) * a[k] * b[n - k] for k in range(n + 1)) for n in range(len(a))]


# -- XPolynomial -----------------------------------------------------------

def test_trailing_zeros_stripped():
    assert XPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert XPolynomial((0, 0)).degree == -1


def test_falling_expansion():
    assert XPolynomial.falling(3) == XPolynomial((0, 2, -3, 1))
    assert XPolynomial.falling(4, 0) == XPolynomial.monomial(4)


@given(polynomials(), polynomials(), rationals())
def test_poly_ring_laws(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(polynomials(), rationals(), rationals())
def test_shift_is_evaluation(p, y, x):
    assert p.shift(y)(x) == p(x + y)


@given(polynomials(8))
def test_derivative_matches_power_rule(p):
    want = XPolynomial([j * c for j, c in enumerate(p.coeffs)][1:])
    assert p.derivative() == want
    assert p.derivative(3) == p.derivative().derivative().derivative()


def test_poly_str():
    assert str(XPolynomial((1, Fraction(-1, 2), 0, -1))) == "-x^3 - 1/2*x + 1"
    assert str(XPolynomial()) == "0"


# -- products and inverses ---------------------------------------------------

def test_exp_squared_is_powers_of_two():
    e = TruncatedSeries.exp(N)
    assert series_mul(e, e).coeffs == tuple(2**n for n in range(N + 1))


def test_t_squared():
    t = TruncatedSeries.t(N)
    assert series_mul(t, t).coeffs == (0, 0, 2) + (0,) * (N - 2)


def test_power_of_exp_minus_one_is_stirling_column():
    e1 = TruncatedSeries.exp(N) - 1
    s2 = classical_s2(N)
    assert (series_mul(e1, e1) / 2).coeffs == tuple(s2(n, 2) for n in range(N + 1))


@given(series(), series())
def test_mul_matches_binomial_convolution(a, b):
    assert list(series_mul(a, b).coeffs) == naive_egf_product(a.coeffs, b.coeffs)


def test_inverse_examples():
    assert series_inverse_mul(TruncatedSeries.constant(2, N)) == TruncatedSeries.constant(Fraction(1, 2), N)
    assert series_inverse_mul(TruncatedSeries.exp(N)).coeffs == tuple((-1) ** n for n in range(N + 1))
    one_plus_t = TruncatedSeries.constant(1, N) + TruncatedSeries.t(N)
    assert series_mul(one_plus_t, series_inverse_mul(one_plus_t)) == TruncatedSeries.constant(1, N)


@given(series().filter(lambda s: s.coeffs[0] != 0))
def test_inverse_roundtrip(a):
    assert series_mul(a, series_inverse_mul(a)) == TruncatedSeries.constant(1, N)


def test_inverse_needs_unit():
    with pytest.raises((ValueError, ZeroDivisionError)):
        series_inverse_mul(TruncatedSeries.t(N))


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        series_mul(TruncatedSeries.exp(3), TruncatedSeries.exp(4))


# -- log / exp ---------------------------------------------------------------

def test_log1p_examples():
    assert series_log1p(TruncatedSeries.exp(N) - 1) == TruncatedSeries.t(N)
    want = (0,) + tuple((-1) ** (n - 1) * factorial(n - 1) for n in range(1, N + 1))
    assert series_log1p(TruncatedSeries.t(N)).coeffs == want
    assert series_log1p(TruncatedSeries.zero(N)) == TruncatedSeries.zero(N)


def test_exp_examples():
    assert series_exp(TruncatedSeries.t(N)) == TruncatedSeries.exp(N)
    assert series_exp(TruncatedSeries.zero(N)) == TruncatedSeries.constant(1, N)


@settings(max_examples=40)
@given(series(8, zero_constant=True))
def test_log_exp_roundtrip(a):
    assert series_log1p(series_exp(a) - 1) == a
    assert series_exp(series_log1p(a)) - 1 == a


def test_log_needs_zero_constant():
    with pytest.raises(ValueError):
        series_log1p(TruncatedSeries.constant(1, 3))


# -- composition and reversion ---------------------------------------------

@settings(max_examples=40)
@given(series(8), delta_series_st(8))
def test_compose_identities(a, b):
    t = TruncatedSeries.t(8)
    assert series_compose(t, b) == b
    assert series_compose(a, t) == a


def test_compose_exp_with_log():
    outer = TruncatedSeries.exp(N) - 1
    inner = series_log1p(TruncatedSeries.t(N))
    assert series_compose(outer, inner) == TruncatedSeries.t(N)


@settings(max_examples=40)
@given(series(6), delta_series_st(6))
def test_compose_against_naive_substitution(a, b):
    # sum a_k/k! b(t)^k, powers by repeated multiplication
    acc = TruncatedSeries.zero(6)
    power = TruncatedSeries.constant(1, 6)
    for k in range(7):
        acc = acc + power * (a.coeffs[k] / factorial(k))
        power = series_mul(power, b)
    assert series_compose(a, b) == acc


def test_reversion_examples():
    t = TruncatedSeries.t(N)
    assert series_reversion(t) == t
    assert series_reversion(TruncatedSeries.exp(N) - 1) == series_log1p(t)


@settings(max_examples=40)
@given(delta_series_st(8))
def test_reversion_is_two_sided_inverse(a):
    b = series_reversion(a)
    t = TruncatedSeries.t(8)
    assert series_compose(a, b) == t
    assert series_compose(b, a) == t


def test_reversion_rejects_non_delta():
    with pytest.raises(ValueError):
        series_reversion(TruncatedSeries.exp(4))
    with pytest.raises(ValueError):
        series_reversion(TruncatedSeries((0, 0, 1)))


def test_reversion_order_zero():
    assert series_reversion(TruncatedSeries((0,))) == TruncatedSeries((0,))


def test_ogf_roundtrip():
    s = TruncatedSeries.exp(5, 3)
    assert TruncatedSeries.from_ogf(s.ogf(), 5) == s


def test_degenerate_exp_at_zero_is_exp():
    assert TruncatedSeries.degenerate_exp(N, 0, 3) == TruncatedSeries.exp(N, 3)


# -- bivariate ----------------------------------------------------------------

def test_exp_xlog_of_exp_is_monomials():
    b = bivariate_exp_xlog(TruncatedSeries.exp(N))
    assert list(b.coeffs) == [XPolynomial.monomial(n) for n in range(N + 1)]


def test_exp_xlog_of_one_plus_exp_minus_one():
    a = TruncatedSeries.constant(1, N) + (TruncatedSeries.exp(N) - 1)
    s2 = classical_s2(N)
    b = bivariate_exp_xlog(a)
    for n in range(N + 1):
        want = XPolynomial()
        for k in range(n + 1):
            want = want + XPolynomial.falling(k) * s2(n, k)
        assert b[n] == want == XPolynomial.monomial(n)
    assert [p(0) for p in b.coeffs] == [1] + [0] * N


@settings(max_examples=25)
@given(series(6, unit_constant=True), st.integers(-4, 4))
def test_exp_xlog_at_integer_is_power(a, j):
    # a(t)**j for integer j, by repeated multiplication or inversion
    b = bivariate_exp_xlog(a)
    base = a if j >= 0 else series_inverse_mul(a)
    want = TruncatedSeries.constant(1, 6)
    for _ in range(abs(j)):
        want = series_mul(want, base)
    assert b.at(j) == want


def test_scale_examples():
    b = bivariate_exp_xlog(TruncatedSeries.exp(N))
    assert bivariate_scale(b, TruncatedSeries.constant(1, N)) == b
    shifted = bivariate_scale(b, TruncatedSeries.exp(N))
    x1 = XPolynomial((1, 1))
    assert list(shifted.coeffs) == [x1**n for n in range(N + 1)]


@settings(max_examples=25)
@given(series(5, unit_constant=True), series(5), rationals())
def test_scale_commutes_with_evaluation(a, s, x):
    b = bivariate_exp_xlog(a)
    assert bivariate_scale(b, s).at(x) == series_mul(b.at(x), s)


def test_bivariate_requires_unit_constant():
    with pytest.raises(ValueError):
        bivariate_exp_xlog(TruncatedSeries.constant(2, 3))
