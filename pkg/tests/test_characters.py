import pytest
from hypothesis import given, strategies as st
from sympy import Poly, cyclotomic_poly, legendre_symbol, symbols

from coleps.characters import (Character, characters_of_conductor_dividing, gauss_sum, gauss_sum_basis_change,
                               idempotent_project, units_mod, varsigma, varsigma_idempotent)
from coleps.extensions import unram_ring

x = symbols("x")


def quadratic(p):
    return Character(p, tame=(p - 1) // 2)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_quadratic_gauss_sum_matches_sympy(p):
    # oracle: sum of Legendre symbols times x^c, reduced mod the cyclotomic polynomial over Z
    g = Poly(sum(legendre_symbol(c, p) * x ** c for c in range(1, p)), x)
    want = g.rem(Poly(cyclotomic_poly(p, x), x)).all_coeffs()[::-1]
    R = unram_ring(p, 1, 20).level(1)
    tau = gauss_sum(quadratic(p), 1, R)
    mod = p ** 20
    got = [tau.coeff(i, 0).to_int() % mod if not tau.coeff(i, 0).is_zero() else 0 for i in range(p - 1)]
    assert got == [int(c) % mod for c in want] + [0] * (p - 1 - len(want))


def test_frozen_quadratic_gauss_sum_p5():
    R = unram_ring(5, 1, 20).level(1)
    e = R.eps()
    assert (gauss_sum(quadratic(5), 1, R) - (-1 - 2 * e ** 2 - 2 * e ** 3)).is_zero()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_trivial_gauss_sum(p):
    R = unram_ring(p, 1, 20).level(1)
    assert (gauss_sum(Character(p), 1, R) + 1).is_zero()


@pytest.mark.parametrize("p,k", [(3, 1), (3, 2), (5, 2), (7, 1)])
def test_kernel_conductor_matches_conductor(p, k):
    for rho in characters_of_conductor_dividing(p, k):
        assert rho.kernel_conductor(k) == rho.conductor


def test_character_counts():
    # (p - 1) p^(k-1) characters of (Z/p^k)^x
    assert len(characters_of_conductor_dividing(5, 2)) == 20
    assert len(characters_of_conductor_dividing(3, 1)) == 2


@pytest.mark.parametrize("p", [3, 5])
def test_gauss_product_and_basis_change(p):
    R = unram_ring(p, 1, 20).level(2)
    for rho in characters_of_conductor_dividing(p, 2):
        n = rho.conductor
        if n == 0:
            continue
        prod = gauss_sum(rho, n, R) * gauss_sum(rho.inverse(), n, R)
        assert (prod - rho.sign() * p ** n).is_zero()
        for c in (2, -1):
            lhs, rhs = gauss_sum_basis_change(rho, n, R, c)
            assert (lhs - rhs).is_zero()


chars5 = st.builds(lambda u, t, j: Character(5, u, t, 1 if j else 0, j),
                   st.integers(0, 3), st.integers(0, 3), st.integers(0, 4))


@given(chars5, st.sampled_from(units_mod(5, 2)), st.sampled_from(units_mod(5, 2)))
def test_character_is_multiplicative(rho, a, b):
    R = unram_ring(5, 1, 15).level(2)
    assert (rho.value(a * b % 25, R) - rho.value(a, R) * rho.value(b, R)).is_zero()
    assert (rho.value(a, R) * rho.inverse().value(a, R) - 1).is_zero()


@given(chars5, chars5)
def test_times_matches_values(r1, r2):
    R = unram_ring(5, 1, 15).level(2)
    for c in (2, 7, 24):
        assert (r1.times(r2).value(c, R) - r1.value(c, R) * r2.value(c, R)).is_zero()


def test_idempotent_lands_in_eigenspace():
    R = unram_ring(5, 1, 20).level(1)
    chi = Character(5, tame=1)
    y = idempotent_project(R.eps() * 3 + R.eps() ** 2, chi, 1)
    for c in (2, 3):
        assert (y.sigma(c) - chi.value(c, R) * y).is_zero()


def test_varsigma_two_forms_agree():
    K = unram_ring(5, 4, 20)
    rho = Character(5, unram=1)
    b = K.gen() + 2
    assert (varsigma(rho, b, 4) - varsigma_idempotent(rho, b, 4)).is_zero()
