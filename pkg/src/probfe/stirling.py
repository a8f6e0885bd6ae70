"""Stirling numbers: classical, degenerate, probabilistic and both together.

Every table is a full lower triangle (0 <= k <= n <= nmax) of Fractions.
Second-kind tables come from powers of a delta series divided by k!;
first-kind tables in the probabilistic families come from the powers of
its compositional inverse.  :func:`table_invert` is a separate route
(triangular matrix inversion) and is kept for cross-checking.

Family codes::

    s1, s2      classical
    s1l, s2l    degenerate (parameter lam)
    s1y, s2y    probabilistic, attached to a MomentModel
    s1yl, s2yl  probabilistic degenerate
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional, Sequence

from .exact import RationalLike, rat, rat_str
from .rvmodels import MomentModel, degenerate_mgf_series, mgf_series
from .series import TruncatedSeries, series_mul, series_reversion

FAMILIES = ("s1", "s2", "s1l", "s2l", "s1y", "s2y", "s1yl", "s2yl")
_DUAL = {"s1": "s2", "s2": "s1", "s1l": "s2l", "s2l": "s1l",
         "s1y": "s2y", "s2y": "s1y", "s1yl": "s2yl", "s2yl": "s1yl"}


@dataclass(frozen=True)
class StirlingTable:
    family: str
    nmax: int
    values: tuple[tuple[Fraction, ...], ...]
    lam: Optional[Fraction] = None
    model: Optional[MomentModel] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown Stirling family {self.family!r}")
        if len(self.values) != self.nmax + 1 or any(len(r) != i + 1 for i, r in enumerate(self.values)):
            raise ValueError("values must be a lower triangle with nmax+1 rows")

    def __call__(self, n: int, k: int) -> Fraction:
        """Entry (n, k); zero outside 0 <= k <= n."""
        if k < 0 or k > n:
            return Fraction(0)
        if n > self.nmax:
            raise IndexError(f"row {n} beyond nmax={self.nmax}")
        return self.values[n][k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.values[n]

    def same_values(self, other: "StirlingTable") -> bool:
        return self.nmax == other.nmax and self.values == other.values

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "nmax": self.nmax,
            "lambda": None if self.lam is None else rat_str(self.lam),
            "model": None if self.model is None else self.model.describe(),
            "rows": [[rat_str(v) for v in r] for r in self.values],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, quoting=csv.QUOTE_NONE, lineterminator="\n")
        for r in self.values:
            w.writerow([rat_str(v) for v in r])
        return buf.getvalue()


def _table(family, values, lam=None, model=None) -> StirlingTable:
    vals = tuple(tuple(Fraction(v) for v in r) for r in values)
    return StirlingTable(family, len(vals) - 1, vals, lam, model)


def power_table(delta: TruncatedSeries) -> list[list[Fraction]]:
    """Rows n of the coefficients of delta**k / k! (k <= n)."""
    N = delta.order
    rows = [[Fraction(0)] * (n + 1) for n in range(N + 1)]
    power = TruncatedSeries.constant(1, N)
    for k in range(N + 1):
        for n in range(k, N + 1):
            rows[n][k] = power.coeffs[n]
        if k < N:
            power = series_mul(power, delta) * Fraction(1, k + 1)
    return rows


@lru_cache(maxsize=None)
def classical_s2(nmax: int) -> StirlingTable:
    """S2(n,k) = k S2(n-1,k) + S2(n-1,k-1)."""
    _check_nmax(nmax)
    rows = [[1]]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        r = [0] * (n + 1)
        for k in range(1, n + 1):
            r[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
        rows.append(r)
    return _table("s2", rows)


@lru_cache(maxsize=None)
def classical_s1(nmax: int) -> StirlingTable:
    """Signed S1(n,k) = S1(n-1,k-1) - (n-1) S1(n-1,k)."""
    _check_nmax(nmax)
    rows = [[1]]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        r = [0] * (n + 1)
        for k in range(1, n + 1):
            r[k] = prev[k - 1] - (n - 1) * (prev[k] if k < n else 0)
        rows.append(r)
    return _table("s1", rows)


@lru_cache(maxsize=None)
def _degenerate_s2(nmax: int, lam: Fraction) -> StirlingTable:
    e_lam = TruncatedSeries.degenerate_exp(nmax, lam)
    return _table("s2l", power_table(e_lam - 1), lam=lam)


def degenerate_s2(nmax: int, lam: RationalLike) -> StirlingTable:
    """S2_lam(n,k) from (e_lam(t) - 1)**k / k!."""
    _check_nmax(nmax)
    return _degenerate_s2(nmax, rat(lam))


@lru_cache(maxsize=None)
def _degenerate_s1(nmax: int, lam: Fraction) -> StirlingTable:
    inv = table_invert(_degenerate_s2(nmax, lam))
    return StirlingTable("s1l", nmax, inv.values, lam)


def degenerate_s1(nmax: int, lam: RationalLike) -> StirlingTable:
    """S1_lam as the triangular inverse of S2_lam.

    The degenerate logarithm is never evaluated, so lam = 0 is fine.
    """
    _check_nmax(nmax)
    return _degenerate_s1(nmax, rat(lam))


@lru_cache(maxsize=None)
def probabilistic_s2(m: MomentModel, nmax: int) -> StirlingTable:
    """S2^Y(n,k): coefficients of (E[e^{Yt}] - 1)**k / k!."""
    _check_nmax(nmax)
    return _table("s2y", power_table(mgf_series(m, nmax) - 1), model=m)


def probabilistic_s2_direct(m: MomentModel, n: int, k: int) -> Fraction:
    """S2^Y(n,k) = 1/k! sum_j C(k,j) (-1)**(k-j) E[S_j^n].

    E[S_j^n] is the n-th coefficient of E[e^{Yt}]**j.  Independent of the
    power-of-delta-series route in :func:`probabilistic_s2`.
    """
    if k < 0 or k > n:
        return Fraction(0)
    A = mgf_series(m, n)
    total = Fraction(0)
    power = TruncatedSeries.constant(1, n)
    for j in range(k + 1):
        total += comb(k, j) * (-1) ** (k - j) * power.coeffs[n]
        power = series_mul(power, A)
    return total / factorial(k)


@lru_cache(maxsize=None)
def probabilistic_s1(m: MomentModel, nmax: int) -> StirlingTable:
    """S1^Y(n,k): coefficients of inv(e_Y)(t)**k / k!, inv = reversion."""
    _check_nmax(nmax)
    inv = series_reversion(mgf_series(m, nmax) - 1)
    return _table("s1y", power_table(inv), model=m)


@lru_cache(maxsize=None)
def _prob_deg_s2(m: MomentModel, lam: Fraction, nmax: int) -> StirlingTable:
    return _table("s2yl", power_table(degenerate_mgf_series(m, lam, nmax) - 1), lam=lam, model=m)


def probabilistic_degenerate_s2(m: MomentModel, lam: RationalLike, nmax: int) -> StirlingTable:
    _check_nmax(nmax)
    return _prob_deg_s2(m, rat(lam), nmax)


@lru_cache(maxsize=None)
def _prob_deg_s1(m: MomentModel, lam: Fraction, nmax: int) -> StirlingTable:
    inv = series_reversion(degenerate_mgf_series(m, lam, nmax) - 1)
    return _table("s1yl", power_table(inv), lam=lam, model=m)


def probabilistic_degenerate_s1(m: MomentModel, lam: RationalLike, nmax: int) -> StirlingTable:
    _check_nmax(nmax)
    return _prob_deg_s1(m, rat(lam), nmax)


def table_invert(t: StirlingTable) -> StirlingTable:
    """Inverse of the lower-triangular matrix, by forward substitution."""
    N = t.nmax
    for n in range(N + 1):
        if t.values[n][n] == 0:
            raise ZeroDivisionError(f"zero diagonal entry at ({n},{n})")
    inv = [[Fraction(0)] * (n + 1) for n in range(N + 1)]
    for l in range(N + 1):
        inv[l][l] = 1 / t.values[l][l]
        for n in range(l + 1, N + 1):
            s = sum((t.values[n][k] * inv[k][l] for k in range(l, n)), Fraction(0))
            inv[n][l] = -s / t.values[n][n]
    return _table(_DUAL[t.family], inv, lam=t.lam, model=t.model)


def family_table(family: str, nmax: int, lam: RationalLike = 0,
                 model: Optional[MomentModel] = None) -> StirlingTable:
    """Dispatch by family code; probabilistic codes need ``model``."""
    if family == "s1":
        return classical_s1(nmax)
    if family == "s2":
        return classical_s2(nmax)
    if family == "s1l":
        return degenerate_s1(nmax, lam)
    if family == "s2l":
        return degenerate_s2(nmax, lam)
    if family not in FAMILIES:
        raise ValueError(f"unknown Stirling family {family!r}")
    if model is None:
        raise ValueError(f"family {family} needs a random-variable model")
    if family == "s1y":
        return probabilistic_s1(model, nmax)
    if family == "s2y":
        return probabilistic_s2(model, nmax)
    if family == "s1yl":
        return probabilistic_degenerate_s1(model, lam, nmax)
    return probabilistic_degenerate_s2(model, lam, nmax)


# ---------------------------------------------------------------------------
# inverse relations
# ---------------------------------------------------------------------------


def transform_rows(t: StirlingTable, b: Sequence) -> list[Fraction]:
    """a_n = sum_{k<=n} T(n,k) b_k."""
    return [sum((t(n, k) * rat(b[k]) for k in range(n + 1)), Fraction(0)) for n in range(len(b))]


def transform_columns(t: StirlingTable, b: Sequence) -> list[Fraction]:
    """a_n = sum_{k=n}^{m} T(k,n) b_k with m = len(b) - 1."""
    m = len(b) - 1
    return [sum((t(k, n) * rat(b[k]) for k in range(n, m + 1)), Fraction(0)) for n in range(m + 1)]


def orthogonality_defect(second: StirlingTable, first: StirlingTable) -> list[tuple[int, int, Fraction]]:
    """Cells where sum_k second(n,k) first(k,l) differs from delta_{n,l}."""
    N = min(second.nmax, first.nmax)
    bad = []
    for n in range(N + 1):
        for l in range(n + 1):
            s = sum((second(n, k) * first(k, l) for k in range(l, n + 1)), Fraction(0))
            if s != (1 if n == l else 0):
                bad.append((n, l, s))
    return bad


def _check_nmax(nmax: int):
    if not isinstance(nmax, int) or nmax < 0:
        raise ValueError("nmax must be a nonnegative integer")
