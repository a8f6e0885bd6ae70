"""Expanding a polynomial in a probabilistic Frobenius-Euler basis.

Given p of degree at most n, find a_0..a_n with p = sum a_k P_k where
P_k is one of the families built in :mod:`probfe.families`.  Three
formula sets are available, keyed by the tags used on the command line;
each set has several closed formulas for a_k that must agree.

``31``  order 1, lam = 0, coefficients through S1^Y         (formulas 1-3)
``33``  order 1, any lam, coefficients through S1^Y_lam     (formulas 1-3)
``4``   any order r, any lam, through f(t) = inv(log A(t))  (formulas 1-4)

Order-1 formulas (tags 31 and 33):
  1. finite differences   Delta^j p(1) - u Delta^j p(0)
  2. derivatives          p^(k)(1) - u p^(k)(0), weighted by S2(k,j)
  3. point values         p(i+1) - u p(i)

Order-r formulas (tag 4):
  1. a_k = <g^r f^k | p> / k!
  2. binomial expansion of g^r into shifts e^{it}
  3. binomial expansion of g^r into differences (e^t - 1)^i
  4. as 3 with (e^t - 1)^i expanded through S2(m, i)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from .exact import RationalLike, rat, rat_str
from .families import FamilySpec, build_family, delta_series, g_series
from .rvmodels import UNIT, MomentModel
from .series import TruncatedSeries, XPolynomial, series_mul
from .stirling import (
    StirlingTable,
    classical_s2,
    probabilistic_degenerate_s1,
    probabilistic_s1,
)
from .umbral import apply_operator, difference_powers, forward_difference, pair_functional

THEOREM_FORMULAS = {"31": (1, 2, 3), "33": (1, 2, 3), "4": (1, 2, 3, 4)}


@dataclass(frozen=True)
class BasisExpansion:
    spec: FamilySpec
    coefficients: tuple[Fraction, ...]
    source_formula: str

    def to_json(self, reconstruction_ok: Optional[bool] = None) -> dict:
        out = {
            "basis": self.spec.describe(),
            "formula": self.source_formula,
            "coefficients": [rat_str(c) for c in self.coefficients],
        }
        if reconstruction_ok is not None:
            out["reconstruction_ok"] = reconstruction_ok
        return out


def _degree(p: XPolynomial, n: Optional[int]) -> int:
    d = max(p.degree, 0)
    if n is None:
        return d
    if n < d:
        raise ValueError(f"requested length n={n} is below deg p = {p.degree}")
    return n


def _check_u(u: Fraction):
    if u == 1:
        raise ValueError("u = 1 is excluded")


# ---------------------------------------------------------------------------
# order 1 (tags 31 and 33)
# ---------------------------------------------------------------------------


def _order_one_coeffs(p: XPolynomial, u: Fraction, s1: StirlingTable, n: int, formula: int) -> list[Fraction]:
    c = 1 / (1 - u)
    if formula == 1:
        diffs = difference_powers(p, n)
        d = [(q(1) - u * q(0)) / factorial(j) for j, q in enumerate(diffs)]
        return [c * sum((s1(j, r) * d[j] for j in range(r, n + 1)), Fraction(0)) for r in range(n + 1)]
    if formula == 2:
        s2 = classical_s2(n)
        dv = []
        for k in range(n + 1):
            q = p.derivative(k)
            dv.append((q(1) - u * q(0)) / factorial(k))
        out = []
        for r in range(n + 1):
            acc = Fraction(0)
            for k in range(r, n + 1):
                for j in range(r, k + 1):
                    acc += s1(j, r) * s2(k, j) * dv[k]
            out.append(c * acc)
        return out
    if formula == 3:
        vals = [p(i + 1) - u * p(i) for i in range(n + 1)]
        out = []
        for r in range(n + 1):
            acc = Fraction(0)
            for j in range(r, n + 1):
                w = s1(j, r) / factorial(j)
                if not w:
                    continue
                for i in range(j + 1):
                    acc += (-1) ** (j - i) * comb(j, i) * w * vals[i]
            out.append(c * acc)
        return out
    raise ValueError(f"tags 31 and 33 have formulas 1-3, got {formula}")


def expand_thm31(p: XPolynomial, model: MomentModel = UNIT, u: RationalLike = -1,
                 formula: int = 1, n: Optional[int] = None) -> BasisExpansion:
    """Coefficients of p in the H^Y_k(x|u) basis."""
    u = rat(u)
    _check_u(u)
    n = _degree(p, n)
    s1 = probabilistic_s1(model, n)
    coeffs = _order_one_coeffs(p, u, s1, n, formula)
    return BasisExpansion(FamilySpec(model, u, Fraction(0), 1, n), tuple(coeffs), f"thm31-{formula}")


def expand_thm33(p: XPolynomial, model: MomentModel = UNIT, u: RationalLike = -1,
                 lam: RationalLike = 0, formula: int = 1, n: Optional[int] = None) -> BasisExpansion:
    """Coefficients of p in the h^Y_{k,lam}(x|u) basis."""
    u, lam = rat(u), rat(lam)
    _check_u(u)
    n = _degree(p, n)
    s1 = probabilistic_degenerate_s1(model, lam, n)
    coeffs = _order_one_coeffs(p, u, s1, n, formula)
    return BasisExpansion(FamilySpec(model, u, lam, 1, n), tuple(coeffs), f"thm33-{formula}")


# ---------------------------------------------------------------------------
# order r (tag 4)
# ---------------------------------------------------------------------------


def _delta_powers(model: MomentModel, lam: Fraction, n: int) -> list[TruncatedSeries]:
    f = delta_series(model, lam, n)
    out = [TruncatedSeries.constant(1, n)]
    for _ in range(n):
        out.append(series_mul(out[-1], f))
    return out


def _order_r_coeffs(p: XPolynomial, spec: FamilySpec, formula: int) -> list[Fraction]:
    n, u, r = spec.nmax, spec.u, spec.order_r
    fk = _delta_powers(spec.model, spec.lam, n)
    out = []
    if formula == 1:
        gr = g_series(u, n) ** r
        for k in range(n + 1):
            out.append(pair_functional(series_mul(gr, fk[k]), p) / factorial(k))
        return out
    if formula == 2:
        shifted = [p.shift(i) for i in range(r + 1)]
        scale = 1 / (1 - u) ** r
        for k in range(n + 1):
            acc = Fraction(0)
            for i in range(r + 1):
                acc += comb(r, i) * (-u) ** (r - i) * apply_operator(fk[k], shifted[i])(0)
            out.append(scale * acc / factorial(k))
        return out
    if formula == 3:
        for k in range(n + 1):
            q = apply_operator(fk[k], p)
            acc = Fraction(0)
            for i in range(r + 1):
                acc += comb(r, i) * forward_difference(q, i)(0) / (1 - u) ** i
            out.append(acc / factorial(k))
        return out
    if formula == 4:
        s2 = classical_s2(max(n, r))
        derivs = [p.derivative(m) for m in range(n + 1)]
        for k in range(n + 1):
            vals = [apply_operator(fk[k], d)(0) for d in derivs]
            acc = Fraction(0)
            for i in range(r + 1):
                w = comb(r, i) / (1 - u) ** i
                for m in range(i, n + 1):
                    acc += Fraction(factorial(i), factorial(m)) * w * s2(m, i) * vals[m]
            out.append(acc / factorial(k))
        return out
    raise ValueError(f"tag 4 has formulas 1-4, got {formula}")


def expand_thm4(p: XPolynomial, model: MomentModel = UNIT, u: RationalLike = -1,
                lam: RationalLike = 0, r: int = 1, formula: int = 1,
                n: Optional[int] = None) -> BasisExpansion:
    """Coefficients of p in the order-r basis H^{Y,(r)} (lam = 0) or h^{Y,(r)}_lam."""
    u, lam = rat(u), rat(lam)
    _check_u(u)
    n = _degree(p, n)
    spec = FamilySpec(model, u, lam, r, n)
    coeffs = _order_r_coeffs(p, spec, formula)
    return BasisExpansion(spec, tuple(coeffs), f"thm4-{formula}")


def expand(p: XPolynomial, spec: FamilySpec, theorem: str = "4", formula: int = 1,
           n: Optional[int] = None) -> BasisExpansion:
    """Dispatch on formula-set tag ``"31"``, ``"33"`` or ``"4"``.

    ``spec.nmax`` is ignored; the expansion length follows deg p (or ``n``).
    """
    theorem = str(theorem)
    if theorem == "31":
        if spec.order_r != 1 or spec.lam != 0:
            raise ValueError("theorem 31 is for order 1 and lambda 0")
        return expand_thm31(p, spec.model, spec.u, formula, n)
    if theorem == "33":
        if spec.order_r != 1:
            raise ValueError("theorem 33 is for order 1")
        return expand_thm33(p, spec.model, spec.u, spec.lam, formula, n)
    if theorem == "4":
        return expand_thm4(p, spec.model, spec.u, spec.lam, spec.order_r, formula, n)
    raise ValueError(f"unknown theorem {theorem!r}; use 31, 33 or 4")


def reconstruct(e: BasisExpansion) -> XPolynomial:
    """sum_k a_k P_k(x) with the family rebuilt from its generating function."""
    fam = build_family(e.spec)
    out = XPolynomial()
    for a, poly in zip(e.coefficients, fam.polys):
        if a:
            out = out + poly * a
    return out


def expansion_from_coefficients(spec: FamilySpec, coeffs: Sequence, source: str) -> BasisExpansion:
    """Wrap externally computed coefficients (e.g. closed forms) for :func:`reconstruct`."""
    coeffs = tuple(rat(c) for c in coeffs)
    return BasisExpansion(spec.with_(nmax=len(coeffs) - 1), coeffs, source)
