"""Random variables described only by their exact raw moments.

A :class:`MomentModel` is an immutable, hashable description of Y.  The
moment generating function E[e^{Yt}] is produced as a truncated EGF
series whose n-th coefficient is E[Y^n]; the degenerate version
E[e_lam^Y(t)] has coefficients E[(Y)_{n,lam}].
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from os import PathLike
from typing import Sequence, Union

from .exact import RationalLike, rat, rat_str
from .series import TruncatedSeries, XPolynomial, series_exp, series_inverse_mul

KINDS = ("unit", "bernoulli", "poisson", "geometric", "exponential", "custom")

# the parameter each built-in kind takes
PARAM_NAMES = {
    "unit": (),
    "bernoulli": ("p",),
    "poisson": ("alpha",),
    "geometric": ("p",),
    "exponential": ("alpha",),
}


@dataclass(frozen=True)
class MomentModel:
    """Y given by kind and exact parameters.

    Use the module-level constructors (:func:`bernoulli`, :func:`poisson`,
    ...) rather than building this directly.  For ``kind == "custom"``
    ``moments`` holds E[Y^0..Y^N].
    """

    kind: str
    params: tuple[tuple[str, Fraction], ...] = ()
    moments: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        params = tuple((name, rat(v)) for name, v in self.params)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "moments", tuple(rat(m) for m in self.moments))
        self._validate()

    def _validate(self):
        kind = self.kind
        if kind == "custom":
            if len(self.moments) < 2:
                raise ValueError("a custom model needs at least E[Y^0] and E[Y^1]")
            if self.moments[0] != 1:
                raise ValueError("E[Y^0] must be 1")
        else:
            expected = PARAM_NAMES[kind]
            got = tuple(name for name, _ in self.params)
            if got != expected:
                raise ValueError(f"{kind} takes parameters {expected}, got {got}")
            if kind == "bernoulli" and not (0 < self.param("p") <= 1):
                raise ValueError("bernoulli needs 0 < p <= 1")
            if kind == "geometric" and not (0 < self.param("p") < 1):
                raise ValueError("geometric needs 0 < p < 1")
            if kind in ("poisson", "exponential") and not self.param("alpha") > 0:
                raise ValueError(f"{kind} needs alpha > 0")
        if self.mean == 0:
            raise ValueError("E[Y] must be nonzero")

    def param(self, name: str) -> Fraction:
        for n, v in self.params:
            if n == name:
                return v
        raise KeyError(name)

    @property
    def mean(self) -> Fraction:
        if self.kind == "custom":
            return self.moments[1]
        return raw_moment(self, 1)

    @property
    def max_order(self) -> int | None:
        """Largest moment index available; None means unbounded."""
        if self.kind == "custom":
            return len(self.moments) - 1
        return None

    def describe(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "custom":
            out["moments"] = [rat_str(m) for m in self.moments]
        else:
            out["params"] = {n: rat_str(v) for n, v in self.params}
        return out

    def __str__(self) -> str:
        if self.kind == "custom":
            return f"custom(N={len(self.moments) - 1})"
        if not self.params:
            return self.kind
        inner = ", ".join(f"{n}={rat_str(v)}" for n, v in self.params)
        return f"{self.kind}({inner})"


def unit() -> MomentModel:
    """Y = 1 almost surely; recovers the classical objects."""
    return UNIT


def bernoulli(p: RationalLike) -> MomentModel:
    return MomentModel("bernoulli", (("p", p),))


def poisson(alpha: RationalLike) -> MomentModel:
    return MomentModel("poisson", (("alpha", alpha),))


def geometric(p: RationalLike) -> MomentModel:
    """Geometric on {1, 2, ...}: P(Y = i) = (1-p)**(i-1) p."""
    return MomentModel("geometric", (("p", p),))


def exponential(alpha: RationalLike) -> MomentModel:
    """Exponential with rate alpha, E[Y^n] = n! / alpha**n."""
    return MomentModel("exponential", (("alpha", alpha),))


def custom(moments: Sequence[RationalLike]) -> MomentModel:
    return MomentModel("custom", moments=tuple(moments))


def make_model(kind: str, **params: RationalLike) -> MomentModel:
    """Build a built-in model by name, e.g. ``make_model("poisson", alpha=2)``."""
    if kind not in PARAM_NAMES:
        raise ValueError(f"unknown built-in model {kind!r}")
    names = PARAM_NAMES[kind]
    if set(params) != set(names):
        raise ValueError(f"{kind} takes parameters {names}, got {tuple(sorted(params))}")
    return MomentModel(kind, tuple((n, params[n]) for n in names))


def load_custom_moments(source: Union[str, PathLike, dict]) -> MomentModel:
    """Read ``{"moments": ["1", "1/2", ...]}`` from a path or a parsed dict."""
    if isinstance(source, dict):
        doc = source
    else:
        with open(source) as fh:
            doc = json.load(fh)
    try:
        raw = doc["moments"]
    except (KeyError, TypeError):
        raise ValueError('custom moments document needs a "moments" list') from None
    if not isinstance(raw, list) or not all(isinstance(m, str) for m in raw):
        raise ValueError("moments must be a list of rational strings")
    return custom([rat(m) for m in raw])


# ---------------------------------------------------------------------------
# moment queries
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def _mgf(m: MomentModel, N: int) -> TruncatedSeries:
    kind = m.kind
    if kind == "unit":
        return TruncatedSeries.exp(N)
    if kind == "bernoulli":
        p = m.param("p")
        return TruncatedSeries((Fraction(1),) + (p,) * N)
    if kind == "poisson":
        alpha = m.param("alpha")
        return series_exp((TruncatedSeries.exp(N) - 1) * alpha)
    if kind == "geometric":
        p = m.param("p")
        et = TruncatedSeries.exp(N)
        return (et * p) * series_inverse_mul(1 - et * (1 - p))
    if kind == "exponential":
        alpha = m.param("alpha")
        return TruncatedSeries(tuple(Fraction(factorial(n)) / alpha**n for n in range(N + 1)))
    # custom
    if N > len(m.moments) - 1:
        raise ValueError(f"custom model supplies moments up to order {len(m.moments) - 1}, {N} requested")
    return TruncatedSeries(m.moments[: N + 1])


def mgf_series(m: MomentModel, N: int) -> TruncatedSeries:
    """E[e^{Yt}] to order N."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    return _mgf(m, N)


def raw_moment(m: MomentModel, n: int) -> Fraction:
    """E[Y^n]."""
    if m.kind == "custom":
        if not 0 <= n < len(m.moments):
            raise ValueError(f"moment {n} not supplied by the custom model")
        return m.moments[n]
    return _mgf(m, n).coeffs[n]


def degenerate_moment(m: MomentModel, n: int, lam: RationalLike) -> Fraction:
    """E[(Y)_{n,lam}] = sum_k S1(n,k) lam**(n-k) E[Y^k].

    The coefficients of the expanded product (x)_{n,lam} are exactly
    S1(n,k) lam**(n-k).
    """
    poly = XPolynomial.falling(n, lam)
    mom = mgf_series(m, n)
    return sum((c * mom.coeffs[k] for k, c in enumerate(poly.coeffs)), Fraction(0))


@lru_cache(maxsize=256)
def _dmgf(m: MomentModel, lam: Fraction, N: int) -> TruncatedSeries:
    # no shortcut at lam = 0: (x)_{n,0} = x^n makes this reduce on its own
    mom = mgf_series(m, N)
    out = []
    for n in range(N + 1):
        poly = XPolynomial.falling(n, lam)
        out.append(sum((c * mom.coeffs[k] for k, c in enumerate(poly.coeffs)), Fraction(0)))
    return TruncatedSeries(tuple(out))


def degenerate_mgf_series(m: MomentModel, lam: RationalLike, N: int) -> TruncatedSeries:
    """E[e_lam^Y(t)] to order N; equals :func:`mgf_series` at lam = 0."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    return _dmgf(m, rat(lam), N)


UNIT = MomentModel("unit")
