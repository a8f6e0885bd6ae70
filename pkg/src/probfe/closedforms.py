"""Closed forms for (x)_n and x^n in the order-1 bases, per model.

For Y Bernoulli(p), Poisson(alpha), geometric(p) and exponential(alpha)
the first-kind probabilistic Stirling numbers have explicit forms.
Substituting them into

    (x)_n = sum_r { s(n,r) + n/(1-u) s(n-1,r) } P_r
    x^n   = sum_r { sum_{j=r}^{n} s(j,r) S2(n,j)
                    + 1/(1-u) sum_{k=r}^{n-1} sum_{j=r}^{k} C(n,k) s(j,r) S2(k,j) } P_r

gives the per-model expansions computed here.  They are written out as
printed, index ranges and empty sums included, so a mismatch against the
generic engine in :mod:`probfe.represent` shows up rather than being
smoothed over.  ``s`` is S1^Y when lam = 0 and S1^Y_lam otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .exact import RationalLike, falling_factorial, rat, rat_str
from .families import FamilySpec
from .represent import BasisExpansion
from .rvmodels import MomentModel
from .stirling import (
    StirlingTable,
    classical_s1,
    classical_s2,
    degenerate_s1,
    probabilistic_degenerate_s1,
    probabilistic_s1,
)

CLOSED_KINDS = ("bernoulli", "poisson", "geometric", "exponential")

EntryFn = Callable[[int, int], Fraction]


@dataclass(frozen=True)
class ClosedFormResult:
    target: str  # "falling" or "monomial"
    n: int
    basis: str  # "probabilistic" or "probabilistic-degenerate"
    model: MomentModel
    u: Fraction
    lam: Fraction
    coefficients: tuple[Fraction, ...]

    def spec(self) -> FamilySpec:
        return FamilySpec(self.model, self.u, self.lam, 1, self.n)

    def as_expansion(self) -> BasisExpansion:
        return BasisExpansion(self.spec(), self.coefficients, f"closed-{self.target}")

    def to_json(self) -> dict:
        return {
            "basis": self.spec().describe(),
            "target": f"{self.target}({self.n})",
            "source": "closed-form",
            "coefficients": [rat_str(c) for c in self.coefficients],
        }


# ---------------------------------------------------------------------------
# S1^Y and S1^Y_lam, one entry at a time
# ---------------------------------------------------------------------------


def _s1_base(lam: Fraction, nmax: int) -> StirlingTable:
    """S1 when lam = 0, S1_lam otherwise."""
    return classical_s1(nmax) if lam == 0 else degenerate_s1(nmax, lam)


def closed_s1_entry(m: MomentModel, lam: RationalLike, nmax: int) -> EntryFn:
    """Entry function (n, k) -> S1^Y(n,k) or S1^Y_lam(n,k) from the model's closed form."""
    lam = rat(lam)
    if m.kind not in CLOSED_KINDS:
        raise ValueError(f"no closed form for model kind {m.kind!r}")
    base = _s1_base(lam, nmax)
    s1 = classical_s1(nmax)

    if m.kind == "bernoulli":
        p = m.param("p")

        def entry(n, k):
            return base(n, k) / p**n

    elif m.kind == "poisson":
        alpha = m.param("alpha")

        def entry(n, k):
            return sum((base(l, k) * s1(n, l) / alpha**l for l in range(k, n + 1)), Fraction(0))

    elif m.kind == "geometric":
        p = m.param("p")

        def entry(n, k):
            return sum(
                (comb(n, l) * falling_factorial(n - 1, n - l) * p**l * (p - 1) ** (n - l) * base(l, k)
                 for l in range(k, n + 1)),
                Fraction(0),
            )

    elif lam == 0:
        alpha = m.param("alpha")

        def entry(n, k):
            if k < 0 or k > n:
                return Fraction(0)
            return (-1) ** (n - k) * comb(n, k) * falling_factorial(n - 1, n - k) * alpha**k

    else:
        alpha = m.param("alpha")
        s2 = classical_s2(nmax)

        def entry(n, k):
            return sum(
                (comb(n, l) * (-1) ** (n - l) * falling_factorial(n - 1, n - l) * alpha**l
                 * lam ** (l - k) * s2(l, k) for l in range(k, n + 1)),
                Fraction(0),
            )

    def guarded(n: int, k: int) -> Fraction:
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        return entry(n, k)

    return guarded


def model_closed_s1(m: MomentModel, lam: RationalLike, nmax: int) -> StirlingTable:
    """Closed-form S1^Y (lam = 0) or S1^Y_lam table for the four models."""
    lam = rat(lam)
    entry = closed_s1_entry(m, lam, nmax)
    vals = tuple(tuple(entry(n, k) for k in range(n + 1)) for n in range(nmax + 1))
    family = "s1y" if lam == 0 else "s1yl"
    return StirlingTable(family, nmax, vals, None if lam == 0 else lam, m)


def _generic_entry(m: MomentModel, lam: Fraction, nmax: int) -> EntryFn:
    table = probabilistic_s1(m, nmax) if lam == 0 else probabilistic_degenerate_s1(m, lam, nmax)

    def entry(n, k):
        if n < 0:
            return Fraction(0)
        return table(n, k)

    return entry


def _entry_for(m: MomentModel, lam: Fraction, nmax: int) -> EntryFn:
    if m.kind in CLOSED_KINDS:
        return closed_s1_entry(m, lam, nmax)
    return _generic_entry(m, lam, nmax)


# ---------------------------------------------------------------------------
# the two expansions
# ---------------------------------------------------------------------------


def falling_coefficients(s: EntryFn, u: Fraction, n: int) -> list[Fraction]:
    """a_r = s(n,r) + n/(1-u) s(n-1,r)."""
    return [s(n, r) + Fraction(n) / (1 - u) * s(n - 1, r) for r in range(n + 1)]


def monomial_coefficients(s: EntryFn, u: Fraction, n: int) -> list[Fraction]:
    """Double/triple sum for x^n; the second part is empty when r = n."""
    s2 = classical_s2(n)
    out = []
    for r in range(n + 1):
        first = sum((s(j, r) * s2(n, j) for j in range(r, n + 1)), Fraction(0))
        second = Fraction(0)
        for k in range(r, n):
            for j in range(r, k + 1):
                second += comb(n, k) * s(j, r) * s2(k, j)
        out.append(first + second / (1 - u))
    return out


def _bernoulli_falling(m: MomentModel, u: Fraction, lam: Fraction, n: int) -> list[Fraction]:
    # printed with p^{-n} pulled out and np/(1-u) on the second term
    p = m.param("p")
    base = _s1_base(lam, n)
    return [(base(n, r) + n * p / (1 - u) * base(n - 1, r)) / p**n for r in range(n + 1)]


def _result(target, m, u, lam, n, coeffs) -> ClosedFormResult:
    basis = "probabilistic" if lam == 0 else "probabilistic-degenerate"
    return ClosedFormResult(target, n, basis, m, u, lam, tuple(coeffs))


def closed_falling(m: MomentModel, u: RationalLike, lam: RationalLike, n: int) -> ClosedFormResult:
    """Coefficients of (x)_n in the H^Y (lam = 0) or h^Y_lam basis."""
    u, lam = rat(u), rat(lam)
    if u == 1:
        raise ValueError("u = 1 is excluded")
    if m.kind == "bernoulli":
        coeffs = _bernoulli_falling(m, u, lam, n)
    else:
        coeffs = falling_coefficients(_entry_for(m, lam, n), u, n)
    return _result("falling", m, u, lam, n, coeffs)


def closed_monomial(m: MomentModel, u: RationalLike, lam: RationalLike, n: int) -> ClosedFormResult:
    """Coefficients of x^n in the H^Y (lam = 0) or h^Y_lam basis."""
    u, lam = rat(u), rat(lam)
    if u == 1:
        raise ValueError("u = 1 is excluded")
    coeffs = monomial_coefficients(_entry_for(m, lam, n), u, n)
    return _result("monomial", m, u, lam, n, coeffs)
