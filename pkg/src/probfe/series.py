"""Truncated formal power series and dense polynomials over the rationals.

Series use the exponential convention: ``TruncatedSeries((c0, c1, ...))``
stands for ``sum c_n t**n / n!``.  That is the convention of every
generating function in this package, so products are binomial
convolutions.  Composition and reversion switch to ordinary coefficients
internally because the bookkeeping is simpler there.

A series of order N carries exactly N+1 coefficients.  Binary operations
insist on equal orders; truncate first if you need to mix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .exact import RationalLike, degenerate_falling_factorial, rat, rat_str

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _binom_row(n: int) -> tuple[int, ...]:
    return tuple(comb(n, k) for k in range(n + 1))


# ---------------------------------------------------------------------------
# polynomials in x
# ---------------------------------------------------------------------------


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [rat(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class XPolynomial:
    """Dense polynomial ``sum a_j x**j`` with Fraction coefficients.

    Trailing zeros are removed on construction, so equality is exact
    structural equality.  The zero polynomial has ``degree == -1``.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: RationalLike) -> "XPolynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "XPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> "XPolynomial":
        return cls((0,) * n + (c,))

    @classmethod
    def falling(cls, n: int, lam: RationalLike = 1) -> "XPolynomial":
        """Expanded form of (x)_{n,lam}; ``lam=1`` is (x)_n, ``lam=0`` is x**n."""
        lam = rat(lam)
        out = [Fraction(1)]
        for j in range(n):
            shift = -j * lam
            nxt = [Fraction(0)] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i + 1] += c
                nxt[i] += shift * c
            out = nxt
        return cls(out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return XPolynomial(self.coeff(j) + other.coeff(j) for j in range(n))

    __radd__ = __add__

    def __neg__(self) -> "XPolynomial":
        return XPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return XPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, XPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return XPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return XPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "XPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out, base = XPolynomial.constant(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: RationalLike) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, k: int = 1) -> "XPolynomial":
        """k-th derivative."""
        if k == 0:
            return self
        return XPolynomial(
            c * _falling_int(j, k) for j, c in enumerate(self.coeffs) if j >= k
        )

    def shift(self, y: RationalLike) -> "XPolynomial":
        """p(x + y), by Taylor expansion around x."""
        y = rat(y)
        if y == 0 or self.degree < 1:
            return self
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            row = _binom_row(j)
            ypow = Fraction(1)
            for i in range(j, -1, -1):
                out[i] += c * row[i] * ypow
                ypow *= y
        return XPolynomial(out)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            elif mono:
                s = f"{rat_str(c)}*{mono}"
            else:
                s = rat_str(c)
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")


def _falling_int(j: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= j - i
    return out


def _as_poly(value) -> XPolynomial:
    if isinstance(value, XPolynomial):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return XPolynomial.constant(value)
    return NotImplemented


# ---------------------------------------------------------------------------
# truncated series in t (EGF coefficients)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum c_n t**n / n!`` for n = 0..order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(rat(c) for c in self.coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> "TruncatedSeries":
        return cls((c,) + (0,) * order)

    @classmethod
    def t(cls, order: int) -> "TruncatedSeries":
        """The identity series t."""
        return cls.from_ogf([0, 1], order)

    @classmethod
    def exp(cls, order: int, y: RationalLike = 1) -> "TruncatedSeries":
        """e**(y t); its EGF coefficients are y**n."""
        y = rat(y)
        return cls(tuple(y**n for n in range(order + 1)))

    @classmethod
    def degenerate_exp(cls, order: int, lam: RationalLike, x: RationalLike = 1) -> "TruncatedSeries":
        """e_lam^x(t) = (1 + lam t)**(x/lam), coefficients (x)_{n,lam}."""
        return cls(tuple(degenerate_falling_factorial(x, n, lam) for n in range(order + 1)))

    @classmethod
    def from_ogf(cls, ogf: Sequence, order: int) -> "TruncatedSeries":
        """Build from ordinary coefficients (``sum b_n t**n``), padding or truncating."""
        cs = [Fraction(0)] * (order + 1)
        for n, b in enumerate(ogf[: order + 1]):
            cs[n] = rat(b) * factorial(n)
        return cls(tuple(cs))

    def ogf(self) -> list[Fraction]:
        """Ordinary coefficients c_n / n!."""
        return [c / factorial(n) for n, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order <= self.order:
            return TruncatedSeries(self.coeffs[: order + 1])
        return TruncatedSeries(self.coeffs + (Fraction(0),) * (order - self.order))

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (1 / Fraction(other))
        if isinstance(other, TruncatedSeries):
            return series_mul(self, series_inverse_mul(other))
        return NotImplemented

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int):
            raise TypeError("series powers must be integers")
        if k < 0:
            return series_inverse_mul(self) ** (-k)
        out = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = series_mul(out, base)
            base = series_mul(base, base)
            k >>= 1
        return out


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """EGF Cauchy product: c_n = sum_k C(n,k) a_k b_{n-k}."""
    a._check(b)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(len(ac)):
        row = _binom_row(n)
        s = Fraction(0)
        for k in range(n + 1):
            x = ac[k]
            if x:
                y = bc[n - k]
                if y:
                    s += row[k] * x * y
        out.append(s)
    return TruncatedSeries(tuple(out))


def series_inverse_mul(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; needs a nonzero constant term."""
    ac = a.coeffs
    if ac[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    inv0 = 1 / ac[0]
    out = [inv0]
    for n in range(1, len(ac)):
        row = _binom_row(n)
        s = sum((row[k] * ac[k] * out[n - k] for k in range(1, n + 1) if ac[k]), Fraction(0))
        out.append(-inv0 * s)
    return TruncatedSeries(tuple(out))


def _require_zero_constant(a: TruncatedSeries, what: str):
    if a.coeffs[0] != 0:
        raise ValueError(f"{what} needs a series with zero constant term")


def series_log1p(a: TruncatedSeries) -> TruncatedSeries:
    """log(1 + a) as the alternating sum of powers a**k / k."""
    _require_zero_constant(a, "log1p")
    out = TruncatedSeries.zero(a.order)
    power = a
    for k in range(1, a.order + 1):
        sign = 1 if k % 2 else -1
        out = out + power * Fraction(sign, k)
        power = series_mul(power, a)
    return out


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) from the recurrence b' = a' b."""
    _require_zero_constant(a, "exp")
    ac = a.coeffs
    out = [Fraction(1)]
    for n in range(a.order):
        row = _binom_row(n)
        out.append(sum((row[k] * ac[k + 1] * out[n - k] for k in range(n + 1) if ac[k + 1]), Fraction(0)))
    return TruncatedSeries(tuple(out))


def _ogf_mul(a: list, b: list, n: int) -> list:
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j in range(min(len(b), n + 1 - i)):
                y = b[j]
                if y:
                    out[i + j] += x * y
    return out


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(t)) by Horner's rule on ordinary coefficients."""
    outer._check(inner)
    _require_zero_constant(inner, "the inner series of a composition")
    n = outer.order
    o, g = outer.ogf(), inner.ogf()
    acc = [o[n]] + [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        acc = _ogf_mul(acc, g, n)
        acc[0] += o[k]
    return TruncatedSeries.from_ogf(acc, n)


def series_reversion(a: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of a delta series, by Lagrange inversion.

    With phi(z) = z / a(z), the inverse has ordinary coefficients
    b_n = [z**(n-1)] phi(z)**n / n.
    """
    ac = a.ogf()
    if ac[0] != 0 or (len(ac) > 1 and ac[1] == 0):
        raise ValueError("reversion needs a delta series (c0 = 0, c1 != 0)")
    n = a.order
    if n == 0:
        return a
    # a(z)/z, then its reciprocal, to order n-1
    quot = ac[1:] + [Fraction(0)]
    phi = [1 / quot[0]]
    for m in range(1, n):
        s = sum((quot[k] * phi[m - k] for k in range(1, m + 1)), Fraction(0))
        phi.append(-s / quot[0])
    out = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for k in range(1, n + 1):
        power = _ogf_mul(power, phi, n - 1)
        out[k] = power[k - 1] / k
    return TruncatedSeries.from_ogf(out, n)


# ---------------------------------------------------------------------------
# series in t with polynomial-in-x coefficients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BivariateSeries:
    """``sum P_n(x) t**n / n!`` with XPolynomial coefficients."""

    coeffs: tuple[XPolynomial, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> XPolynomial:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def at(self, x: RationalLike) -> TruncatedSeries:
        """Specialise x to a rational value."""
        return TruncatedSeries(tuple(p(x) for p in self.coeffs))


def bivariate_exp_xlog(a: TruncatedSeries) -> BivariateSeries:
    """a(t)**x = exp(x log a(t)) as a series with polynomial coefficients.

    P_n(x) = sum_j x**j [t**n/n!] (log a)**j / j!, so deg P_n <= n.
    """
    if a.coeffs[0] != 1:
        raise ValueError("exp(x log a) needs a(0) = 1")
    N = a.order
    log_a = series_log1p(a - 1)
    cols = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]  # cols[n][j]
    power = TruncatedSeries.constant(1, N)
    for j in range(N + 1):
        for n in range(j, N + 1):
            cols[n][j] = power.coeffs[n]
        power = series_mul(power, log_a) * Fraction(1, j + 1)
    return BivariateSeries(tuple(XPolynomial(c) for c in cols))


def bivariate_scale(b: BivariateSeries, s: TruncatedSeries) -> BivariateSeries:
    """Termwise EGF product of a bivariate series with a scalar series."""
    if b.order != s.order:
        raise ValueError(f"order mismatch: {b.order} vs {s.order}")
    out = []
    for n in range(b.order + 1):
        row = _binom_row(n)
        width = max((p.degree for p in b.coeffs[: n + 1]), default=-1) + 1
        acc = [Fraction(0)] * max(width, 0)
        for k in range(n + 1):
            w = row[k] * s.coeffs[k]
            if not w:
                continue
            for j, c in enumerate(b.coeffs[n - k].coeffs):
                acc[j] += w * c
        out.append(XPolynomial(acc))
    return BivariateSeries(tuple(out))
