"""Power series acting on polynomials.

A :class:`~probfe.series.TruncatedSeries` ``f(t) = sum a_k t**k / k!``
acts on polynomials as the differential operator f(D), D = d/dx:

    f(t) p(x) = sum_k a_k / k! * p^(k)(x)

and as a linear functional by evaluating that result at x = 0.  There is
no separate operator type; any series of high enough order will do.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .exact import RationalLike
from .series import TruncatedSeries, XPolynomial

OperatorSeries = TruncatedSeries


def _check_order(f: TruncatedSeries, p: XPolynomial):
    if f.order < p.degree:
        raise ValueError(f"operator of order {f.order} cannot act on a polynomial of degree {p.degree}")


def apply_operator(f: TruncatedSeries, p: XPolynomial) -> XPolynomial:
    """f(t) p(x) = sum_k (a_k / k!) p^(k)(x)."""
    _check_order(f, p)
    d = p.degree
    if d < 0:
        return XPolynomial()
    out = [Fraction(0)] * (d + 1)
    for k in range(d + 1):
        a = f.coeffs[k]
        if not a:
            continue
        # (a_k/k!) p^(k) has coefficient of x^(j-k) equal to a_k * C(j,k) * c_j
        for j in range(k, d + 1):
            c = p.coeffs[j]
            if c:
                out[j - k] += a * comb(j, k) * c
    return XPolynomial(out)


def pair_functional(f: TruncatedSeries, p: XPolynomial) -> Fraction:
    """<f(t) | p(x)> = (f(t) p)(0)."""
    return apply_operator(f, p)(0)


def pair_by_coefficients(f: TruncatedSeries, p: XPolynomial) -> Fraction:
    """<f | p> computed from <f | x^k> = a_k alone, without applying f."""
    _check_order(f, p)
    return sum((f.coeffs[k] * c for k, c in enumerate(p.coeffs)), Fraction(0))


def shift(p: XPolynomial, y: RationalLike) -> XPolynomial:
    """p(x + y) as the operator e^{yt}."""
    return apply_operator(TruncatedSeries.exp(max(p.degree, 0), y), p)


def forward_difference(p: XPolynomial, j: int = 1) -> XPolynomial:
    """Delta^j p = sum_i C(j,i) (-1)^(j-i) p(x + i)."""
    if j < 0:
        raise ValueError("difference order must be nonnegative")
    out = XPolynomial()
    for i in range(j + 1):
        out = out + shift(p, i) * (comb(j, i) * (-1) ** (j - i))
    return out


def difference_powers(p: XPolynomial, jmax: int) -> list[XPolynomial]:
    """[p, Delta p, ..., Delta^jmax p], each one difference of the previous."""
    out = [p]
    for _ in range(jmax):
        out.append(forward_difference(out[-1], 1))
    return out


def sheffer_orthonormality_check(op: TruncatedSeries, family, n: int, k: int) -> Fraction:
    """<op | s_n> for op = g(t)^r f(t)^k; the Sheffer condition wants n! delta_{n,k}.

    ``family`` is anything with a ``polys`` sequence (a PolynomialFamily).
    The argument ``k`` is only carried so callers can compare against
    :func:`expected_pairing`.
    """
    return pair_functional(op, family.polys[n])


def expected_pairing(n: int, k: int) -> int:
    return factorial(n) if n == k else 0
