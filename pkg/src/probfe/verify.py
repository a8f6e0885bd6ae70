"""Self-check suites used by ``probfe verify`` and the test-suite.

Each suite returns a list of :class:`Check` records.  Nothing here is
sampled or approximate: a check passes only on exact equality.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .closedforms import closed_falling, closed_monomial, model_closed_s1
from .families import (
    FamilySpec,
    build_family,
    family_boundary_check,
    order_reduction_check,
    sheffer_operator,
    sheffer_recurrence_check,
)
from .represent import THEOREM_FORMULAS, expand_thm31, expand_thm33, expand_thm4, reconstruct
from .rvmodels import MomentModel, bernoulli, exponential, geometric, poisson
from .series import XPolynomial
from .stirling import (
    orthogonality_defect,
    probabilistic_degenerate_s1,
    probabilistic_degenerate_s2,
    probabilistic_s1,
    probabilistic_s2,
    table_invert,
)
from .umbral import expected_pairing, sheffer_orthonormality_check

SUITES = ("orthogonality", "roundtrip", "closedforms", "identities")

MODELS: tuple[MomentModel, ...] = (
    bernoulli(Fraction(1, 3)),
    poisson(2),
    geometric(Fraction(1, 3)),
    exponential(3),
)
U_VALUES = (Fraction(1, 2), Fraction(-1))
LAMBDAS = (Fraction(0), Fraction(1, 4))


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f"  ({self.detail})" if self.detail and not self.ok else "")


def random_polynomial(rng: random.Random, max_degree: int, bound: int = 100) -> XPolynomial:
    """Degree uniform in 0..max_degree, coefficients a/b with |a|, b <= bound."""
    d = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(d)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    coeffs.append(Fraction(lead, rng.randint(1, bound)))
    return XPolynomial(coeffs)


def orthogonality_suite(nmax: int, models: Sequence[MomentModel] = MODELS,
                        lambdas: Iterable = (0, Fraction(1, 4), 1)) -> list[Check]:
    out = []
    for m in models:
        for lam in lambdas:
            lam = Fraction(lam)
            if lam == 0:
                s2, s1 = probabilistic_s2(m, nmax), probabilistic_s1(m, nmax)
            else:
                s2 = probabilistic_degenerate_s2(m, lam, nmax)
                s1 = probabilistic_degenerate_s1(m, lam, nmax)
            tag = f"{m} lambda={lam}"
            bad1 = orthogonality_defect(s2, s1)
            bad2 = orthogonality_defect(s1, s2)
            out.append(Check(f"orthogonality S2*S1 {tag}", not bad1, f"{len(bad1)} bad cells"))
            out.append(Check(f"orthogonality S1*S2 {tag}", not bad2, f"{len(bad2)} bad cells"))
            out.append(Check(f"inverse table {tag}", table_invert(s2).same_values(s1)))
    return out


def roundtrip_suite(nmax: int, count: int = 5, seed: int = 20240, models: Sequence[MomentModel] = MODELS,
                    u_values=U_VALUES, lambdas=LAMBDAS, orders=(0, 1, 2, 3)) -> list[Check]:
    rng = random.Random(seed)
    polys = [random_polynomial(rng, nmax) for _ in range(count)]
    out = []
    for m in models:
        for u in u_values:
            for lam in lambdas:
                tag = f"{m} u={u} lambda={lam}"
                ok_rt, ok_agree = True, True
                for p in polys:
                    groups = []
                    if lam == 0:
                        groups.append([expand_thm31(p, m, u, f) for f in THEOREM_FORMULAS["31"]])
                    groups.append([expand_thm33(p, m, u, lam, f) for f in THEOREM_FORMULAS["33"]])
                    for r in orders:
                        groups.append([expand_thm4(p, m, u, lam, r, f) for f in THEOREM_FORMULAS["4"]])
                    for g in groups:
                        if len({e.coefficients for e in g}) != 1:
                            ok_agree = False
                        if reconstruct(g[0]) != p:
                            ok_rt = False
                out.append(Check(f"roundtrip {tag}", ok_rt))
                out.append(Check(f"formula agreement {tag}", ok_agree))
    return out


def closedforms_suite(nmax: int, models: Sequence[MomentModel] = MODELS,
                      u_values=U_VALUES, lambdas=LAMBDAS) -> list[Check]:
    out = []
    for m in models:
        for lam in lambdas:
            generic = probabilistic_s1(m, nmax) if lam == 0 else probabilistic_degenerate_s1(m, lam, nmax)
            out.append(Check(f"closed S1 table {m} lambda={lam}",
                             model_closed_s1(m, lam, nmax).values == generic.values))
            for u in u_values:
                ok = True
                for n in range(nmax + 1):
                    cf = closed_falling(m, u, lam, n).coefficients
                    cm = closed_monomial(m, u, lam, n).coefficients
                    ef = expand_thm33(XPolynomial.falling(n), m, u, lam, 1).coefficients
                    em = expand_thm33(XPolynomial.monomial(n), m, u, lam, 2).coefficients
                    ok = ok and cf == ef and cm == em
                out.append(Check(f"closed forms {m} u={u} lambda={lam}", ok))
    return out


def identities_suite(nmax: int, models: Sequence[MomentModel] = MODELS,
                     u_values=U_VALUES, lambdas=LAMBDAS, orders=(0, 1, 2, 3)) -> list[Check]:
    out = []
    for m in models:
        for u in u_values:
            for lam in lambdas:
                tag = f"{m} u={u} lambda={lam}"
                fams = {r: build_family(FamilySpec(m, u, lam, r, nmax)) for r in orders}
                if 1 in fams:
                    rep = family_boundary_check(fams[1])
                    out.append(Check(f"boundary identity {tag}", rep.ok, str(rep.failures())))
                for r in orders:
                    if r - 1 in fams:
                        rep = order_reduction_check(fams[r], fams[r - 1])
                        out.append(Check(f"order reduction r={r} {tag}", rep.ok, str(rep.failures())))
                    rep = sheffer_recurrence_check(fams[r])
                    out.append(Check(f"sheffer recurrence r={r} {tag}", rep.ok, str(rep.failures())))
                    spec = fams[r].spec
                    ok = True
                    for k in range(nmax + 1):
                        op = sheffer_operator(spec, k)
                        for n in range(nmax + 1):
                            if sheffer_orthonormality_check(op, fams[r], n, k) != expected_pairing(n, k):
                                ok = False
                    out.append(Check(f"sheffer pairing r={r} {tag}", ok))
    return out


_RUNNERS: dict[str, Callable[[int], list[Check]]] = {
    "orthogonality": orthogonality_suite,
    "roundtrip": roundtrip_suite,
    "closedforms": closedforms_suite,
    "identities": identities_suite,
}


def run_suite(name: str, nmax: int) -> list[Check]:
    if name == "all":
        return [c for s in SUITES for c in _RUNNERS[s](nmax)]
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    return _RUNNERS[name](nmax)
