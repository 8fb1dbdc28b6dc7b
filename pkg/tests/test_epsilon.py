import json
from fractions import Fraction

import pytest

from coleps.characters import Character, characters_of_conductor_dividing, gauss_sum
from coleps.epsilon import (EXCEPTIONAL, KummerH1Model, cohomology_dims, default_ring, eps_constant, eps_dR_scalar,
                            eps_report, euler_ratio, exceptional_qp1_compare, gamma_factor, sequence_det)
from coleps.padic import PadicNumber


def test_gamma_factors():
    assert [gamma_factor(r) for r in (1, 2, 3, 4)] == [1, 1, Fraction(1, 2), Fraction(1, 6)]
    assert gamma_factor(0) == 1
    assert gamma_factor(-2) == 2


@pytest.mark.parametrize("p,r", [(5, 2), (3, 3), (7, 2), (3, -1)])
def test_euler_ratio_trivial_character(p, r):
    # (1 - p^(r-1)) / (1 - p^-r) by hand
    want = (1 - Fraction(p) ** (r - 1)) / (1 - Fraction(p) ** (-r))
    assert euler_ratio(Character(p), None, r) == want


def test_euler_ratio_frozen():
    assert euler_ratio(Character(5), None, 2) == Fraction(-25, 6)


def test_euler_ratio_cases():
    assert euler_ratio(Character(5), None, 1) == EXCEPTIONAL
    assert euler_ratio(Character(5), None, 0) == EXCEPTIONAL
    assert euler_ratio(Character(5, tame=2), None, 1) == 1
    # rho eta(tau_p) = -1 stays rational
    assert euler_ratio(Character(5, unram=2), None, 2) == (1 + 5) / (1 + Fraction(1, 25))
    assert isinstance(euler_ratio(Character(5, unram=1), None, 2), PadicNumber)
    # eta cancels rho
    assert euler_ratio(Character(5, unram=2), Character(5, unram=2), 1) == EXCEPTIONAL


def test_eps_constant_is_inverse_gauss_sum():
    q = Character(5, tame=2)
    R = default_ring(q, 1)
    assert (eps_constant(q, None, 1, ring=R) * gauss_sum(q, 1, R) - 1).is_zero()
    assert (eps_dR_scalar(q, None, 1, ring=R) + gauss_sum(q, 1, R)).is_zero()


def test_unramified_eps_is_one():
    rep = eps_report(Character(5), None, 2)
    assert (rep.eps_constant - 1).is_zero()
    assert rep.euler_ratio == Fraction(-25, 6)


@pytest.mark.parametrize("p", [3, 5])
def test_functional_equation(p):
    for rho in characters_of_conductor_dividing(p, 2, unram_values=(0, 1)):
        if rho.conductor == 0:
            continue
        R = default_ring(rho, 2)
        for r in (1, 2, -1):
            a = eps_constant(rho, None, r, ring=R)
            b = eps_constant(rho.inverse(), None, 1 - r, ring=R)
            assert (a * b - rho.sign()).valuation() >= 18


def test_deligne_convention_inverts_unramified_factor():
    rho = Character(5, unram=1, tame=1)
    R = default_ring(rho, 1)
    a = eps_constant(rho, None, 1, ring=R)
    b = eps_constant(rho, None, 1, ring=R, convention="deligne")
    x = R.scalar(rho.unram_value_int(R.cap))
    assert (b - a * x * x).valuation() >= 18
    with pytest.raises(ValueError):
        eps_constant(rho, convention="other")


def test_dims_table():
    triv = Character(3)
    assert cohomology_dims(triv, None, 1) == {"h0": 0, "h1": 2, "h2": 1, "h1f": 1, "t": 1, "t_dual": 0,
                                              "dcris": 1, "dcris_dual": 1, "exceptional": True}
    assert cohomology_dims(triv, None, 0)["h0"] == 1
    d = cohomology_dims(Character(3, tame=1), None, 2)
    assert (d["h1"], d["h1f"], d["dcris"], d["exceptional"]) == (1, 1, 0, False)
    assert cohomology_dims(triv, None, -1)["h1f"] == 0
    # Euler characteristic h0 - h1 + h2 = -1 for a character of Q_p
    for r in (-1, 0, 1, 2):
        for ch in (triv, Character(3, tame=1), Character(3, unram=1)):
            dd = cohomology_dims(ch, None, r)
            assert dd["h0"] - dd["h1"] + dd["h2"] == -1


def test_report_serializes():
    rec = eps_report(Character(5, tame=2), None, 1).record()
    assert json.loads(json.dumps(rec))["exceptional"] is False
    assert eps_report(Character(5), None, 1).exceptional


@pytest.mark.parametrize("p", [3, 5, 7])
def test_exceptional_determinant(p):
    rep = exceptional_qp1_compare(p, 20)
    assert rep["digits"] >= 18
    assert rep["beta_p"].is_zero()
    assert rep["minus_v_p"].to_int() == -1 % p ** 20 or (rep["minus_v_p"] + 1).is_zero()


def test_exceptional_section_sign_matters():
    m = KummerH1Model(5, 24)
    c = PadicNumber.from_rational(5, Fraction(5, 4), 24)
    e1, im_p = m.exp_bk(1), m.kummer(5)
    x, y = (e1[0] * c, e1[1] * c), (-im_p[0], -im_p[1])
    wrong = sequence_det(x, y, (e1[0] * c, e1[1] * c), im_p)
    assert (wrong + 1).is_zero()
