from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coleps.padic import (DomainError, PadicNumber, PrecisionZeroDivisor, padic_exp, padic_log,
                          parse_padic, teichmuller, teichmuller_int)

primes = st.sampled_from([3, 5, 7])


def fraction_log(x, p, N, terms=120):
    """Independent oracle: the log series summed with exact rationals, then reduced."""
    z = Fraction(x) - 1
    s = sum(Fraction((-1) ** (k + 1)) * z ** k / k for k in range(1, terms))
    return s.numerator * pow(s.denominator, -1, p ** N) % p ** N


def test_log_of_one_plus_p_matches_rational_series():
    for p in (3, 5, 7):
        got = padic_log(PadicNumber.from_rational(p, 1 + p, 20))
        assert got.to_int() % p ** 20 == fraction_log(1 + p, p, 20)


def test_log_frozen_value():
    # oracle: exact rational partial sum of the log series, 120 terms
    assert padic_log(PadicNumber.from_rational(5, 6, 20)).to_int() == 45734245251805


def test_log_of_p_is_zero():
    assert padic_log(PadicNumber.from_rational(3, 3, 20)).is_zero()


def test_teichmuller_frozen():
    assert teichmuller_int(2, 5, 10) == pow(2, 5 ** 10, 5 ** 10) == 6139557
    w = teichmuller(2, 5, 20)
    assert (w ** 4 - 1).is_zero()


def test_exp_domain():
    with pytest.raises(DomainError):
        padic_exp(PadicNumber.from_rational(5, 2, 20))


def test_zero_division():
    with pytest.raises(PrecisionZeroDivisor):
        PadicNumber.zero(5, 10).inverse()


def test_precision_tracking():
    x = PadicNumber.from_rational(5, Fraction(1, 25), 20)
    assert x.valuation() == -2
    y = x * 25
    assert y.to_int() == 1
    assert (PadicNumber(5, 0, 1, 10) + PadicNumber(5, 0, 1, 20)).N == 10


@given(primes, st.integers(1, 10 ** 12), st.integers(-3, 3))
def test_parse_roundtrip(p, u, v):
    x = PadicNumber(p, v, u, v + 15)
    assert parse_padic(str(x)) == x


@given(primes, st.fractions(max_denominator=10 ** 6), st.fractions(max_denominator=10 ** 6))
def test_field_ops_match_rationals(p, a, b):
    N = 25
    x, y = PadicNumber.from_rational(p, a, N), PadicNumber.from_rational(p, b, N)
    assert (x + y).agree(PadicNumber.from_rational(p, a + b, N)) >= min(x.N, y.N) - 1
    assert (x * y - PadicNumber.from_rational(p, a * b, N)).is_zero()
    if b:
        assert ((x / y) * y - x).is_zero()


@given(primes, st.integers(1, 10 ** 9), st.integers(1, 10 ** 9))
def test_log_is_homomorphism(p, a, b):
    a, b = a * p + 1 if a % p == 0 else a, b * p + 1 if b % p == 0 else b
    x, y = PadicNumber.from_rational(p, a, 20), PadicNumber.from_rational(p, b, 20)
    assert (padic_log(x * y) - padic_log(x) - padic_log(y)).is_zero()


@given(primes, st.integers(1, 10 ** 9))
def test_exp_inverts_log(p, z):
    x = PadicNumber.from_rational(p, 1 + p * z, 20)
    assert (padic_exp(padic_log(x)) - x).is_zero()
