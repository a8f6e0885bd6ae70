import json
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probfe.exact import degenerate_falling_factorial, falling_factorial, rat_parse
from probfe.rvmodels import UNIT, bernoulli, exponential, poisson, raw_moment
from probfe.series import XPolynomial
from probfe.stirling import (
    FAMILIES,
    StirlingTable,
    classical_s1,
    classical_s2,
    degenerate_s1,
    degenerate_s2,
    family_table,
    orthogonality_defect,
    probabilistic_degenerate_s1,
    probabilistic_degenerate_s2,
    probabilistic_s1,
    probabilistic_s2,
    probabilistic_s2_direct,
    table_invert,
    transform_columns,
    transform_rows,
)

from conftest import MODELS, rationals

N = 10


def s2_explicit(n, k):
    return Fraction(sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1)), factorial(k))


def rising(x, n):
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def falling_basis_sum(table, n, lam=1):
    out = XPolynomial()
    for k in range(n + 1):
        out = out + XPolynomial.falling(k, lam) * table(n, k)
    return out


# -- classical ----------------------------------------------------------------

def test_classical_values():
    s2, s1 = classical_s2(4), classical_s1(3)
    assert s2(4, 2) == 7
    assert s2.row(4) == (0, 1, 7, 6, 1)
    assert s1(3, 1) == 2 and s1(3, 2) == -3
    assert all(classical_s2(N)(n, n) == 1 and classical_s1(N)(n, n) == 1 for n in range(N + 1))
    assert [classical_s2(N)(n, 0) for n in range(N + 1)] == [1] + [0] * N


def test_classical_s2_explicit():
    s2 = classical_s2(12)
    for n in range(13):
        for k in range(n + 1):
            assert s2(n, k) == s2_explicit(n, k)


def test_classical_s1_from_falling_product():
    s1 = classical_s1(12)
    for n in range(13):
        # multiply out x(x-1)...(x-n+1) directly
        p = XPolynomial.constant(1)
        for j in range(n):
            p = p * XPolynomial((-j, 1))
        assert list(p.coeffs) == list(s1.row(n))


def test_classical_orthogonality():
    assert orthogonality_defect(classical_s2(12), classical_s1(12)) == []
    assert orthogonality_defect(classical_s1(12), classical_s2(12)) == []


def test_out_of_range_is_zero():
    t = classical_s2(5)
    assert t(3, 4) == 0 and t(3, -1) == 0
    with pytest.raises(IndexError):
        t(6, 2)


# -- degenerate -----------------------------------------------------------------

def test_degenerate_at_zero_is_classical():
    assert degenerate_s2(N, 0).values == classical_s2(N).values
    assert degenerate_s1(N, 0).values == classical_s1(N).values


def test_degenerate_s2_at_one_is_identity():
    t = degenerate_s2(N, 1)
    assert all(t(n, k) == (1 if n == k else 0) for n in range(N + 1) for k in range(n + 1))


@pytest.mark.parametrize("lam", [Fraction(1, 4), Fraction(-2, 3), 3])
def test_degenerate_change_of_basis(lam):
    s2, s1 = degenerate_s2(N, lam), degenerate_s1(N, lam)
    for n in range(N + 1):
        assert falling_basis_sum(s2, n) == XPolynomial.falling(n, lam)
        assert falling_basis_sum(s1, n, lam) == XPolynomial.falling(n)
    assert orthogonality_defect(s2, s1) == []


# -- probabilistic ---------------------------------------------------------------

def test_unit_model_is_classical():
    assert probabilistic_s2(UNIT, N).values == classical_s2(N).values
    assert probabilistic_s1(UNIT, N).values == classical_s1(N).values
    for lam in (Fraction(1, 4), 1):
        assert probabilistic_degenerate_s2(UNIT, lam, N).values == degenerate_s2(N, lam).values
        assert probabilistic_degenerate_s1(UNIT, lam, N).values == degenerate_s1(N, lam).values


def test_diagonals(model):
    mean = raw_moment(model, 1)
    s2, s1 = probabilistic_s2(model, N), probabilistic_s1(model, N)
    for k in range(N + 1):
        assert s2(k, k) == mean**k
        assert s1(k, k) == 1 / mean**k
    assert [s2(n, 0) for n in range(N + 1)] == [1] + [0] * N


def test_degenerate_lambda_zero_is_probabilistic(model):
    assert probabilistic_degenerate_s2(model, 0, N).values == probabilistic_s2(model, N).values
    assert probabilistic_degenerate_s1(model, 0, N).values == probabilistic_s1(model, N).values


def test_degenerate_k0_column(model):
    t = probabilistic_degenerate_s2(model, Fraction(1, 4), N)
    assert [t(n, 0) for n in range(N + 1)] == [1] + [0] * N


def test_bernoulli_factorisation():
    p = Fraction(2, 7)
    s2, c2 = probabilistic_s2(bernoulli(p), N), classical_s2(N)
    assert all(s2(n, k) == p**k * c2(n, k) for n in range(N + 1) for k in range(n + 1))


def _sum_moments_check(model, table, moment_of_sum):
    # sum_k S2^Y(n,k) (j)_k = E[(Y_1+...+Y_j)^n] for j = 0..n
    for n in range(table.nmax + 1):
        for j in range(n + 1):
            lhs = sum((table(n, k) * falling_factorial(j, k) for k in range(n + 1)), Fraction(0))
            assert lhs == moment_of_sum(j, n), (n, j)


def test_bernoulli_against_binomial_enumeration():
    p = Fraction(1, 3)

    def moment(j, n):
        return sum(comb(j, i) * p**i * (1 - p) ** (j - i) * Fraction(i) ** n for i in range(j + 1))

    _sum_moments_check(bernoulli(p), probabilistic_s2(bernoulli(p), 8), moment)


def test_poisson_against_touchard():
    alpha, c2 = Fraction(2), classical_s2(8)

    def moment(j, n):
        return sum(c2(n, k) * (j * alpha) ** k for k in range(n + 1))

    _sum_moments_check(poisson(alpha), probabilistic_s2(poisson(alpha), 8), moment)


def test_exponential_against_gamma_moments():
    alpha = Fraction(3)
    _sum_moments_check(exponential(alpha), probabilistic_s2(exponential(alpha), 8),
                       lambda j, n: rising(j, n) / alpha**n)


def test_degenerate_bernoulli_against_enumeration():
    # sum_k S2^Y_lam(n,k) (j)_k = E[(S_j)_{n,lam}]
    p, lam = Fraction(1, 3), Fraction(1, 4)
    t = probabilistic_degenerate_s2(bernoulli(p), lam, 8)
    for n in range(9):
        for j in range(n + 1):
            lhs = sum((t(n, k) * falling_factorial(j, k) for k in range(n + 1)), Fraction(0))
            rhs = sum(comb(j, i) * p**i * (1 - p) ** (j - i) * degenerate_falling_factorial(i, n, lam)
                      for i in range(j + 1))
            assert lhs == rhs


def test_direct_formula(model):
    t = probabilistic_s2(model, N)
    for n in range(N + 1):
        for k in range(n + 1):
            assert probabilistic_s2_direct(model, n, k) == t(n, k)
    assert probabilistic_s2_direct(UNIT, 4, 2) == 7
    assert probabilistic_s2_direct(model, 3, 0) == 0 and probabilistic_s2_direct(model, 0, 0) == 1


@pytest.mark.parametrize("lam", [0, Fraction(1, 4), 1])
def test_orthogonality_all_models(model, lam):
    s2 = probabilistic_degenerate_s2(model, lam, 12)
    s1 = probabilistic_degenerate_s1(model, lam, 12)
    assert orthogonality_defect(s2, s1) == []
    assert orthogonality_defect(s1, s2) == []


def test_table_invert(model):
    assert table_invert(classical_s2(N)).values == classical_s1(N).values
    assert table_invert(probabilistic_s2(model, N)).values == probabilistic_s1(model, N).values
    t = probabilistic_degenerate_s2(model, Fraction(1, 4), N)
    assert table_invert(table_invert(t)).values == t.values
    assert table_invert(t).family == "s1yl"


@settings(max_examples=30)
@given(st.lists(rationals(), min_size=N + 1, max_size=N + 1))
def test_inverse_relations(b):
    # a = S2 b  <=>  b = S1 a, both row- and column-wise
    s2, s1 = probabilistic_s2(MODELS[1], N), probabilistic_s1(MODELS[1], N)
    assert transform_rows(s1, transform_rows(s2, b)) == b
    assert transform_columns(s1, transform_columns(s2, b)) == b


def test_family_table_dispatch():
    assert family_table("s2", 4).values == classical_s2(4).values
    assert family_table("s1l", 4, Fraction(1, 2)).values == degenerate_s1(4, Fraction(1, 2)).values
    assert family_table("s2yl", 4, Fraction(1, 2), MODELS[0]).family == "s2yl"
    with pytest.raises(ValueError):
        family_table("s2y", 4)
    with pytest.raises(ValueError):
        family_table("s3", 4)
    assert set(FAMILIES) == {"s1", "s2", "s1l", "s2l", "s1y", "s2y", "s1yl", "s2yl"}


def test_serialisation_roundtrip():
    t = probabilistic_degenerate_s1(MODELS[3], Fraction(1, 4), 6)
    doc = json.loads(json.dumps(t.to_json()))
    assert doc["family"] == "s1yl" and doc["lambda"] == "1/4"
    assert [[rat_parse(v) for v in r] for r in doc["rows"]] == [list(r) for r in t.values]
    rows = [[rat_parse(v) for v in line.split(",")] for line in t.to_csv().splitlines()]
    assert rows == [list(r) for r in t.values]


def test_table_shape_validated():
    with pytest.raises(ValueError):
        StirlingTable("s2", 1, ((1,), (0,)))
    with pytest.raises(ValueError):
        classical_s2(-1)


def test_nmax_zero():
    assert probabilistic_s1(MODELS[0], 0).values == ((1,),)
