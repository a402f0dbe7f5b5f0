from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from symplectica.errors import DomainError
from symplectica.exact_arith import (
    GaussianRational,
    bernoulli,
    coprime_fraction,
    falling_factorial_ratio,
    format_rational,
    is_prime,
    padic_valuation,
    parse_rational,
    set_bernoulli_memo_limit,
)

from .oracles import akiyama_tanigawa

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
gaussians = st.builds(GaussianRational, rationals, rationals)


@pytest.mark.parametrize("n, expected", [(0, Fraction(1)), (2, Fraction(1, 6)), (12, Fraction(-691, 2730))])
def test_bernoulli_examples(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_matches_akiyama_tanigawa():
    for n in range(0, 61, 2):
        assert bernoulli(n) == akiyama_tanigawa(n)


def test_bernoulli_frozen_large_values():
    assert bernoulli(20) == Fraction(-174611, 330)
    assert bernoulli(30) == Fraction(8615841276005, 14322)


def test_bernoulli_recurrence_holds():
    b = {j: bernoulli(j) for j in range(0, 61, 2)}
    b[1] = Fraction(-1, 2)
    for m in range(1, 60):
        total = sum(comb(m + 1, j) * b.get(j, Fraction(0)) for j in range(m + 1))
        assert total == 0, m


def test_von_staudt_clausen_denominators():
    for n in range(2, 61, 2):
        primes = [p for p in range(2, n + 2) if is_prime(p) and n % (p - 1) == 0]
        assert bernoulli(n).denominator == prod(primes)


@pytest.mark.parametrize("n", [-2, 3, 1])
def test_bernoulli_rejects_bad_index(n):
    with pytest.raises(DomainError):
        bernoulli(n)


def test_bernoulli_beyond_memo_limit():
    set_bernoulli_memo_limit(10)
    try:
        assert bernoulli(14) == Fraction(7, 6)
        assert bernoulli(14) == akiyama_tanigawa(14)
    finally:
        set_bernoulli_memo_limit(200)


@pytest.mark.parametrize(
    "q, p, v",
    [(12, 2, 2), (Fraction(-691, 2730), 3, -1), (1, 7, 0), (Fraction(8, 27), 3, -3)],
)
def test_padic_valuation(q, p, v):
    assert padic_valuation(q, p) == v


def test_padic_valuation_errors():
    with pytest.raises(DomainError):
        padic_valuation(0, 2)
    with pytest.raises(DomainError):
        padic_valuation(5, 4)
    with pytest.raises(DomainError):
        padic_valuation(1.5, 2)


@pytest.mark.parametrize("a, b, v", [(3, 2, 3), (18, 12, 13366080), (5, 5, 1)])
def test_falling_factorial_ratio(a, b, v):
    assert falling_factorial_ratio(a, b) == v


def test_falling_factorial_ratio_rejects():
    with pytest.raises(DomainError):
        falling_factorial_ratio(2, 3)


def test_coprime_fraction_equals_reduced():
    q = coprime_fraction(691, 2730)
    assert q == Fraction(691, 2730) and q.denominator == 2730
    with pytest.raises(DomainError):
        coprime_fraction(1, 0)


@given(rationals)
def test_rational_serialization_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_serialization_format():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    with pytest.raises(DomainError):
        parse_rational("one half")


@given(rationals, rationals, rationals, rationals)
def test_rational_arithmetic_exact(a, b, c, d):
    assert (a + c) * 1 == a + c
    if b and d:
        x, y = Fraction(a) / b, Fraction(c) / d
        assert (x + y) * b * d == a * d + c * b


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x.conjugate().conjugate() == x
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    if x:
        assert x * (1 / x) == GaussianRational(1)


def test_gaussian_basics():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert str(GaussianRational(Fraction(1, 2), -1)) == "1/2-1i"
    assert GaussianRational.coerce(complex(0, 2)) == 2 * i
    with pytest.raises(ZeroDivisionError):
        i / 0
