import json
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from probfe.exact import degenerate_falling_factorial
from probfe.rvmodels import (
    UNIT,
    MomentModel,
    bernoulli,
    custom,
    degenerate_moment,
    degenerate_mgf_series,
    exponential,
    geometric,
    load_custom_moments,
    make_model,
    mgf_series,
    poisson,
    raw_moment,
)
from probfe.stirling import classical_s2

from conftest import MODELS

N = 10


def test_unit_mgf_is_exp():
    assert mgf_series(UNIT, N).coeffs == (1,) * (N + 1)


def test_exponential_third_moment():
    assert raw_moment(exponential(2), 3) == Fraction(3, 4)


@pytest.mark.parametrize("p", [Fraction(1, 3), Fraction(1, 2), Fraction(1)])
def test_bernoulli_moments_equal_p(p):
    assert mgf_series(bernoulli(p), N).coeffs[1:] == (p,) * N


def test_normalisation(model):
    assert raw_moment(model, 0) == 1


def test_poisson_bell_number():
    assert raw_moment(poisson(1), 3) == 5


@pytest.mark.parametrize("alpha", [Fraction(1, 2), 2, 5])
def test_poisson_touchard(alpha):
    s2 = classical_s2(N)
    alpha = Fraction(alpha)
    for n in range(N + 1):
        assert raw_moment(poisson(alpha), n) == sum(s2(n, k) * alpha**k for k in range(n + 1))


def test_geometric_mean():
    assert raw_moment(geometric(Fraction(1, 2)), 1) == 2


def test_geometric_partial_sums():
    # E[Y^n] = sum_k k^n (1-p)^{k-1} p, truncated at M with a crude tail bound
    p, M = Fraction(1, 2), 200
    for n in range(9):
        partial = sum(Fraction(k**n) * (1 - p) ** (k - 1) * p for k in range(1, M + 1))
        tail_bound = Fraction((2 * M) ** n, 2 ** (M - n - 2))
        exact = raw_moment(geometric(p), n)
        assert partial <= exact <= partial + tail_bound
        assert tail_bound < Fraction(1, 10**30)


@pytest.mark.parametrize("alpha", [1, 3, Fraction(1, 2)])
def test_exponential_moments(alpha):
    alpha = Fraction(alpha)
    for n in range(N + 1):
        assert raw_moment(exponential(alpha), n) == factorial(n) / alpha**n


@given(st.integers(1, 20), st.integers(1, 20))
def test_bernoulli_binomial_moment_against_enumeration(a, b):
    # E[Y^n] for Bernoulli is p directly; here check second moment of a
    # two-point sum via the square of the MGF.
    p = Fraction(min(a, b), max(a, b))
    m = mgf_series(bernoulli(p), 4)
    sq = [sum(comb(n, k) * m[k] * m[n - k] for k in range(n + 1)) for n in range(5)]
    enum = [sum(comb(2, j) * p**j * (1 - p) ** (2 - j) * j**n for j in range(3)) for n in range(5)]
    assert sq == enum


def test_degenerate_moment_examples(model):
    for n in range(6):
        assert degenerate_moment(model, n, 0) == raw_moment(model, n)
    assert degenerate_moment(bernoulli(Fraction(1, 3)), 2, 1) == 0
    assert degenerate_moment(exponential(3), 1, Fraction(1, 4)) == Fraction(1, 3)


@pytest.mark.parametrize("lam", [0, Fraction(1, 4), 1, -2])
def test_unit_degenerate_moments(lam):
    for n in range(8):
        assert degenerate_moment(UNIT, n, lam) == degenerate_falling_factorial(1, n, lam)
    assert degenerate_mgf_series(UNIT, lam, 7).coeffs == tuple(
        degenerate_falling_factorial(1, n, lam) for n in range(8))


def test_degenerate_mgf_at_zero(model):
    assert degenerate_mgf_series(model, 0, N) == mgf_series(model, N)


def test_bernoulli_degenerate_mgf_by_enumeration():
    # E[(Y)_{n,lam}] = (1-p)(0)_{n,lam} + p (1)_{n,lam}
    p, lam = Fraction(2, 5), Fraction(1, 3)
    d = degenerate_mgf_series(bernoulli(p), lam, 8)
    for n in range(9):
        want = (1 - p) * degenerate_falling_factorial(0, n, lam) + p * degenerate_falling_factorial(1, n, lam)
        assert d[n] == want


@pytest.mark.parametrize("kind,params", [
    ("bernoulli", {"p": 0}), ("bernoulli", {"p": Fraction(3, 2)}),
    ("poisson", {"alpha": 0}), ("geometric", {"p": 1}), ("geometric", {"p": 0}),
    ("exponential", {"alpha": -1}), ("poisson", {"p": 1}), ("nonsense", {}),
])
def test_parameter_ranges(kind, params):
    with pytest.raises(ValueError):
        make_model(kind, **params)


def test_bernoulli_p_one_allowed():
    assert raw_moment(bernoulli(1), 5) == 1


def test_custom_requires_nonzero_mean():
    with pytest.raises(ValueError):
        custom([1, 0, 1])


def test_custom_model_matches_builtin():
    ref = poisson(2)
    m = custom([raw_moment(ref, n) for n in range(9)])
    assert mgf_series(m, 8) == mgf_series(ref, 8)
    with pytest.raises(ValueError):
        mgf_series(m, 9)


def test_load_custom_moments(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"moments": ["1", "1/2", "1/2"]}))
    m = load_custom_moments(path)
    assert m.moments == (1, Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        load_custom_moments({"moments": [1, 2]})
    with pytest.raises(ValueError):
        load_custom_moments({"values": ["1"]})


def test_models_hashable_and_equal():
    assert poisson(2) == make_model("poisson", alpha=2)
    assert len({poisson(2), poisson(Fraction(4, 2)), poisson(3)}) == 2
    assert isinstance(UNIT, MomentModel)
    assert {m.kind for m in MODELS} == {"bernoulli", "poisson", "geometric", "exponential"}
