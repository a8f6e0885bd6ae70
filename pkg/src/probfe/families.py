"""Probabilistic (degenerate, higher-order) Frobenius-Euler polynomials.

With A(t) = E[e^{Yt}] (or E[e_lam^Y(t)] when lam != 0) the family of
order r is read off from

    ((1 - u) / (A(t) - u))**r * A(t)**x = sum_n P_n(x) t**n / n!

The unit model Y = 1 gives the classical Frobenius-Euler polynomials
and their degenerate/higher-order versions; r = 0 gives
sum_k S2^Y(n,k) (x)_k.  Families are only ever built from the generating
function, so the identity checks below are genuine checks.

In umbral terms the order-r family is Sheffer for (g(t)**r, f(t)) with
g(t) = (e^t - u)/(1 - u) and f the compositional inverse of log A(t).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .exact import RationalLike, rat, rat_str
from .rvmodels import UNIT, MomentModel, degenerate_mgf_series, mgf_series
from .series import (
    TruncatedSeries,
    XPolynomial,
    bivariate_exp_xlog,
    bivariate_scale,
    series_inverse_mul,
    series_log1p,
    series_mul,
    series_reversion,
)
from .stirling import probabilistic_degenerate_s2, probabilistic_s2
from .umbral import apply_operator


@dataclass(frozen=True)
class FamilySpec:
    model: MomentModel = UNIT
    u: Fraction = Fraction(-1)
    lam: Fraction = Fraction(0)
    order_r: int = 1
    nmax: int = 16

    def __post_init__(self):
        object.__setattr__(self, "u", rat(self.u))
        object.__setattr__(self, "lam", rat(self.lam))
        if self.u == 1:
            raise ValueError("u = 1 is excluded: the prefactor (1-u)/(A(t)-u) needs u != 1")
        if not isinstance(self.order_r, int) or self.order_r < 0:
            raise ValueError("order r must be a nonnegative integer")
        if not isinstance(self.nmax, int) or self.nmax < 0:
            raise ValueError("nmax must be a nonnegative integer")

    def with_(self, **changes) -> "FamilySpec":
        fields = dict(model=self.model, u=self.u, lam=self.lam, order_r=self.order_r, nmax=self.nmax)
        fields.update(changes)
        return FamilySpec(**fields)

    def describe(self) -> dict:
        return {
            "model": self.model.describe(),
            "u": rat_str(self.u),
            "lambda": rat_str(self.lam),
            "order": self.order_r,
            "nmax": self.nmax,
        }


@dataclass(frozen=True)
class PolynomialFamily:
    spec: FamilySpec
    polys: tuple[XPolynomial, ...]

    def __getitem__(self, n: int) -> XPolynomial:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)

    def numbers(self) -> list[Fraction]:
        """Values at x = 0."""
        return [p(0) for p in self.polys]

    def to_json(self) -> dict:
        return {
            "basis": self.spec.describe(),
            "polynomials": [[rat_str(c) for c in p.coeffs] or ["0"] for p in self.polys],
        }


# ---------------------------------------------------------------------------
# the series behind a family
# ---------------------------------------------------------------------------


def base_series(model: MomentModel, lam: RationalLike, N: int) -> TruncatedSeries:
    """A(t): the MGF, or the degenerate MGF when lam != 0."""
    lam = rat(lam)
    if lam == 0:
        return mgf_series(model, N)
    return degenerate_mgf_series(model, lam, N)


def g_series(u: RationalLike, N: int) -> TruncatedSeries:
    """g(t) = (e^t - u) / (1 - u)."""
    u = rat(u)
    if u == 1:
        raise ValueError("u = 1 is excluded")
    return (TruncatedSeries.exp(N) - u) * (1 / (1 - u))


def log_base(model: MomentModel, lam: RationalLike, N: int) -> TruncatedSeries:
    """log A(t), the compositional inverse of the family's delta series."""
    return series_log1p(base_series(model, lam, N) - 1)


@lru_cache(maxsize=256)
def _delta(model: MomentModel, lam: Fraction, N: int) -> TruncatedSeries:
    return series_reversion(log_base(model, lam, N))


def delta_series(model: MomentModel, lam: RationalLike, N: int) -> TruncatedSeries:
    """f(t) with f(log A(t)) = t."""
    return _delta(model, rat(lam), N)


def sheffer_operator(spec: FamilySpec, k: int, N: Optional[int] = None) -> TruncatedSeries:
    """g(t)**r f(t)**k, truncated at order N (default spec.nmax)."""
    N = spec.nmax if N is None else N
    g = g_series(spec.u, N) ** spec.order_r
    return series_mul(g, delta_series(spec.model, spec.lam, N) ** k)


# ---------------------------------------------------------------------------
# building
# ---------------------------------------------------------------------------


@lru_cache(maxsize=512)
def _build(spec: FamilySpec) -> PolynomialFamily:
    N = spec.nmax
    A = base_series(spec.model, spec.lam, N)
    gen = bivariate_exp_xlog(A)
    if spec.order_r:
        pref = series_inverse_mul(A - spec.u) * (1 - spec.u)
        gen = bivariate_scale(gen, pref ** spec.order_r)
    return PolynomialFamily(spec, tuple(gen.coeffs))


def build_family(spec: FamilySpec) -> PolynomialFamily:
    """P_0..P_nmax from the generating function of ``spec``."""
    return _build(spec)


def frobenius_euler(u: RationalLike, nmax: int, model: MomentModel = UNIT,
                    lam: RationalLike = 0, r: int = 1) -> PolynomialFamily:
    """Shorthand for ``build_family(FamilySpec(model, u, lam, r, nmax))``."""
    return build_family(FamilySpec(model, rat(u), rat(lam), r, nmax))


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    name: str
    results: tuple[tuple[str, int, bool], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r[2] for r in self.results)

    def failures(self) -> list[tuple[str, int]]:
        return [(label, n) for label, n, good in self.results if not good]


def _s2_table(spec: FamilySpec):
    if spec.lam == 0:
        return probabilistic_s2(spec.model, spec.nmax)
    return probabilistic_degenerate_s2(spec.model, spec.lam, spec.nmax)


def family_boundary_check(f: PolynomialFamily) -> CheckReport:
    """P_n(x+1) - u P_n(x) = (1-u) sum_k S2(n,k) (x)_k, and its x = 0 case.

    S2 is the probabilistic table (degenerate one when lam != 0).
    """
    spec = f.spec
    if spec.order_r != 1:
        raise ValueError("the boundary identity applies to order r = 1")
    u = spec.u
    s2 = _s2_table(spec)
    out = []
    for n, p in enumerate(f.polys):
        lhs = p.shift(1) - p * u
        rhs = XPolynomial()
        for k in range(n + 1):
            rhs = rhs + XPolynomial.falling(k) * s2(n, k)
        rhs = rhs * (1 - u)
        out.append(("boundary", n, lhs == rhs))
        out.append(("x=0", n, p(1) - u * p(0) == ((1 - u) if n == 0 else 0)))
    return CheckReport("boundary", tuple(out))


def order_reduction_check(f_r: PolynomialFamily, f_rminus1: PolynomialFamily) -> CheckReport:
    """P^(r)_n(x+1) - u P^(r)_n(x) = (1-u) P^(r-1)_n(x)."""
    a, b = f_r.spec, f_rminus1.spec
    if a.with_(order_r=b.order_r) != b or a.order_r != b.order_r + 1:
        raise ValueError("families must agree except for order r and r-1")
    u = a.u
    out = []
    for n, (p, q) in enumerate(zip(f_r.polys, f_rminus1.polys)):
        out.append(("order", n, p.shift(1) - p * u == q * (1 - u)))
    return CheckReport("order-reduction", tuple(out))


def sheffer_recurrence_check(f: PolynomialFamily) -> CheckReport:
    """f(t) P_n = n P_{n-1}, with f the inverse of log A(t)."""
    spec = f.spec
    op = delta_series(spec.model, spec.lam, spec.nmax)
    out = []
    for n, p in enumerate(f.polys):
        expected = f.polys[n - 1] * n if n else XPolynomial()
        out.append(("sheffer", n, apply_operator(op, p) == expected))
    return CheckReport("sheffer-recurrence", tuple(out))
