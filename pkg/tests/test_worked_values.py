"""Small hand-computable values across the modules."""

from fractions import Fraction

import pytest
from sympy import Rational, factorial

from coleps.characters import Character, gauss_sum, gauss_sum_basis_change, idempotent_project, varsigma
from coleps.coleman import L_map, coleman_series, cyclo_family, pi_of_dirac
from coleps.extensions import lambda_twist_forward, lambda_twist_inverse, teichmuller_generator, unram_ring
from coleps.padic import PadicNumber, padic_exp, padic_log
from coleps.powerseries import TPoly, TruncSeries


def test_product_of_low_precision_numbers():
    a, b = PadicNumber.from_rational(5, 2, 4), PadicNumber.from_rational(5, 3, 4)
    c = a * b
    assert c.to_int() == 6 and c.N == 4
    assert c.digits()[:2] == [1, 1]


def test_exp_of_p_matches_partial_sums():
    p, N = 5, 12
    s = sum(Rational(p ** k, factorial(k)) for k in range(40))
    want = int(s.p * pow(int(s.q), -1, p ** N) % p ** N)
    assert padic_exp(PadicNumber.from_rational(p, p, N)).to_int() == want


def test_log_of_one_is_zero():
    assert padic_log(PadicNumber.one(7, 15)).is_zero()


@pytest.mark.parametrize("p,d", [(3, 1), (3, 2), (5, 3)])
def test_trace_of_one_is_degree(p, d):
    K = unram_ring(p, d, 10)
    one = K.one()
    tr = one
    for k in range(1, d):
        tr = tr + one.frobenius(k)
    assert (tr - d).is_zero()


def test_frobenius_raises_teichmuller_to_p():
    K = unram_ring(5, 2, 15)
    w = teichmuller_generator(K)
    assert (w.frobenius() - w ** 5).is_zero()
    assert not (w ** 8 - 1).is_zero() and (w ** 24 - 1).is_zero()


def test_twist_of_finite_level_roundtrips():
    K = unram_ring(3, 3, 12)
    a0 = K.gen() + 2
    x = lambda_twist_inverse(a0, 3)
    assert lambda_twist_forward(x) is x[0]
    assert (x[1].frobenius(1) - a0).is_zero()


def test_gamma_two_and_derivative_on_powers():
    K = unram_ring(3, 1, 20)
    X = TruncSeries(K, [0, 1], M=8)
    g = X.gamma(2)
    assert (g.coeff(0)).is_zero() and (g.coeff(1) - 2).is_zero() and (g.coeff(2) - 1).is_zero()
    assert all(g.coeff(k).is_zero() for k in range(3, 8))
    for a in (2, 4, 5):
        f = TPoly.monomial(K, a).to_series().truncate(8)
        assert f.D().agree(f * a) >= 20


def test_log_of_one_plus_X():
    K = unram_ring(5, 1, 20)
    M = 8
    L = TruncSeries(K, [1, 1], M=M).log()
    for k in range(1, M):
        want = K.scalar(Fraction((-1) ** (k + 1), k))
        assert L.coeff(k).agree(want) >= L.prec
    sq = TPoly.monomial(K, 3).to_series().truncate(M).log()
    assert sq.agree(L * 3) >= 18


def test_evaluation_at_roots_of_unity():
    p = 3
    K = unram_ring(p, 1, 15)
    R = K.level(2)
    # ((1+X)^2 - 1)/X = 2 + X evaluates to 1 + eps_1
    f = TruncSeries(K, [2, 1], exact=True)
    assert (f.eval_at_epsilon(1, R) - 1 - R.eps(1)).is_zero()
    # phi(1 + X) at eps_2 - 1 is eps_1
    g = TruncSeries(K, [1, 1], exact=True).phi()
    assert (g.eval_at_epsilon(2, R) - R.eps(1)).is_zero()


def test_L_of_constants_and_of_one_plus_X():
    p = 5
    K = unram_ring(p, 1, 20)
    c = TruncSeries(K, [3], M=12)
    want = padic_log(PadicNumber.from_rational(p, 3, 20)) * Fraction(p - 1, p)
    assert L_map(c).coeff(0).to_padic().agree(want) >= 18
    assert L_map(TruncSeries(K, [1, 1], M=12)).is_zero()
    g = coleman_series(cyclo_family(K, 2, a=2))
    want2 = padic_log(PadicNumber.from_rational(p, 2, 20)) * Fraction(p - 1, p)
    assert L_map(g.series(), 12).coeff(0).to_padic().agree(want2) >= 17


def test_pi_of_dirac_measures():
    K = unram_ring(3, 1, 12)
    for a in (1, 2, 4, 7):
        assert pi_of_dirac(K, 2, a).to_int() == a % 9
    K2 = unram_ring(3, 2, 12)
    c = K2.gen() + 1
    tr = (c + c.frobenius()).to_padic()
    assert pi_of_dirac(K2, 2, 5, c).agree(tr * 5) >= 2


@pytest.mark.parametrize("p", [3, 5, 7])
def test_trivial_idempotent_on_eps(p):
    R = unram_ring(p, 1, 15).level(1)
    y = idempotent_project(R.eps(), Character(p), 1)
    assert (y - R.one() * Fraction(-1, p - 1)).is_zero()


def test_idempotent_kills_other_levels():
    p = 5
    R = unram_ring(p, 1, 15).level(2)
    rho = Character(p, 0, 1)  # tame, conductor 1
    e = idempotent_project(R.eps(2), rho, 2)
    assert e.is_zero()
    y = idempotent_project(R.eps(1), rho, 2)
    assert (idempotent_project(y, rho, 2) - y).is_zero() and not y.is_zero()


def test_varsigma_for_sign_character():
    K = unram_ring(5, 2, 12)
    rho = Character(5, 2)  # rho(tau_p) = -1
    b = K.gen() + 3
    assert (varsigma(rho, b, 2) - (b - b.frobenius())).is_zero()
    assert (varsigma(Character(5), b, 2) - (b + b.frobenius())).is_zero()


def test_quadratic_gauss_sum_under_c_equal_two():
    p = 5
    R = unram_ring(p, 1, 15).level(1)
    rho = Character(p, 0, 2)
    lhs, rhs = gauss_sum_basis_change(rho, 1, R, 2)
    assert (lhs + gauss_sum(rho, 1, R)).is_zero()
    assert (lhs - rhs).is_zero()
    neg, _ = gauss_sum_basis_change(rho, 1, R, -1)
    assert (neg - rho.sign() * gauss_sum(rho, 1, R)).is_zero()
