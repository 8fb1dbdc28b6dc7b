"""Interpolation maps Psi_{M,n}, Xi_{M,n}, Theta_M, Sigma_{M,n} and the two-path descent check.

The lattice M = O_K e has phi(e) = c e with c = p^-r eta(tau_p)^-1, so on
K_n (x) M the operator phi (x) phi is x -> c phi(x).  Everything is computed
in one cyclotomic ring over an unramified base of degree D, with
D = lcm(d_K, degree needed for a_eta); K sits inside through an embedding.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .characters import Character, gauss_sum, units_mod, varsigma
from .epsilon import EXCEPTIONAL, euler_ratio, frob_value_int, is_trivial
from .extensions import (Elt, embedding, normal_basis, required_degree,
                         solve_a_eta, unram_ring)
from .powerseries import GroupRingMeasure, TPoly, TruncSeries


class DescentError(ValueError):
    """Exceptional parameters, or two routes that should agree do not."""


@dataclass
class LatticeM:
    """O_K e_{eta,r} with phi(e) = p^-r eta(tau_p)^-1 e, realised over a ring of degree D."""

    ring: object
    eta: Character
    r: int
    d_K: int
    a_eta: Elt

    @classmethod
    def build(cls, p, d_K=1, eta=None, r=1, cap=30):
        eta = Character(p) if eta is None else eta
        D = lcm(d_K, required_degree(p, eta.unram, 1))
        K = unram_ring(p, D, cap)
        a = solve_a_eta(K, eta.unram_value_int(cap))
        return cls(K, eta, r, d_K, a)

    @property
    def p(self):
        return self.ring.p

    def eta_value(self):
        return self.eta.unram_value_int(self.ring.cap)

    def frob_eigenvalue(self):
        """c = p^-r eta(tau_p)^-1 as a level-0 element."""
        K = self.ring
        return K.scalar(self.eta_value()).inverse() * Fraction(K.p) ** (-self.r)

    def check_eigen(self):
        """phi(a_eta) = eta(tau_p)^-1 a_eta, digits of agreement."""
        return self.a_eta.frobenius().agree(self.a_eta * self.ring.scalar(self.eta_value()).inverse())

    def base_field(self):
        return unram_ring(self.p, self.d_K, self.ring.cap)

    def embed(self, x):
        """Image of an element of the degree-d_K ring."""
        if x.ring.K is self.ring:
            return x
        return embedding(x.ring.K, self.ring)(x)


@dataclass
class DescentValue:
    """A composite-ring scalar attached to the formal basis t^weight * tag."""

    value: Elt
    weight: int
    tag: str

    def agree(self, other):
        if (self.weight, self.tag) != (other.weight, other.tag):
            raise DescentError("values with different formal bases are not comparable")
        return self.value.agree(other.value)

    def record(self):
        return {"weight": self.weight, "basis": self.tag, "value": self.value.record()}


def inv_one_minus_cphi(x, c):
    """(1 - c phi)^-1 x for a scalar c in Q_p and x in any level ring."""
    D = x.ring.d
    cD = c ** D
    if (cD - 1).is_zero():
        raise DescentError("1 - c phi is not invertible (exceptional case)")
    total = None
    term = x
    ck = x.ring.K.one()
    for i in range(D):
        part = term * ck
        total = part if total is None else total + part
        term = term.frobenius()
        ck = ck * c
    return total * (1 - cD).inverse()


def _scalar(M, i):
    """p^(i r) eta(tau_p)^i."""
    K = M.ring
    return K.scalar(M.eta_value()) ** i * Fraction(K.p) ** (i * M.r)


def psi_Mn(mu, M, n):
    """Psi_{M,n}(mu) as a value in the level-n ring (times e)."""
    if n < 1:
        raise ValueError("Psi_{M,n} needs n >= 1")
    R = M.ring.level(n)
    p = M.p
    total = R.zero()
    q = p ** mu.n
    for k in range(1, n + 1):
        inner = R.zero()
        step = p ** (n - k)
        for a in range(q):
            v = mu.value(a)
            if v.is_zero():
                continue
            inner = inner + (M.embed(v).frobenius(-k).lift(n)).shift(a * step)
        total = total + inner * _scalar(M, k)
    mass = M.embed(mu.augmentation())
    const = inv_one_minus_cphi(mass, M.frob_eigenvalue())
    total = total + const.lift(n)
    return DescentValue(total * Fraction(1, p ** n), -M.r, "e")


def xi_closed(f, M, n):
    """Closed sum p^-n [sum_k p^(kr) eta^k f^(phi^-k)(eps_k - 1) + (1 - c phi)^-1 f(0)].

    f is a TPoly, or a TruncSeries long enough to certify the evaluations.
    """
    R = M.ring.level(n)
    total = R.zero()
    for k in range(1, n + 1):
        total = total + f.frobenius_coeffs(-k).eval_at_epsilon(k, R) * _scalar(M, k)
    f0 = f.value_at_one() if isinstance(f, TPoly) else f.value_at_zero()
    const = inv_one_minus_cphi(f0, M.frob_eigenvalue())
    total = total + const.lift(n)
    return DescentValue(total * Fraction(1, M.p ** n), -M.r, "e")


def xi_solver(f, M, n):
    """Solve (1 - phi)F = f on H_M (x) e by the geometric series and evaluate p^-n (phi(x)phi)^-n F at eps_n - 1.

    F = sum_i (c phi)^i (X g) + b with f = f(0) + X g and (1 - c phi) b = f(0);
    the terms with i >= n vanish at eps_n - 1 after phi^-n.
    """
    p = M.p
    R = M.ring.level(n)
    c = M.frob_eigenvalue()
    s = f.to_series()
    f0 = s.coeff(0)
    Xg = s - TruncSeries(s.K, f0.c, f0.e, f0.prec, M=1, exact=True)
    deg = Xg.M
    width = deg * p ** n + 1
    term = TruncSeries(s.K, Xg.c, Xg.e, Xg.prec, M=width)
    total = R.zero()
    ci = s.K.one()
    for i in range(n):
        val = term.frobenius_coeffs(-n)
        val = TruncSeries(val.K, val.c, val.e, val.prec, M=val.M, exact=True)
        total = total + val.eval_at_epsilon(n, R) * ci
        term = term.phi_horner()
        ci = ci * c
    b = inv_one_minus_cphi(f0, c)
    total = total + b.frobenius(-n).lift(n)
    total = total * c.inverse() ** n * Fraction(1, p ** n)
    return DescentValue(total, -M.r, "e")


def xi_Mn(f, M, n, tol=None):
    """Xi_{M,n}(f (x) e) by both routes; raises if they disagree beyond tol digits."""
    a, b = xi_solver(f, M, n), xi_closed(f, M, n)
    digits = a.agree(b)
    if tol is not None and digits < tol:
        raise DescentError(f"Xi routes disagree: {digits} digits")
    return b, digits


def random_admissible(K, length, rng, p=None):
    """h - phi psi(h) for a random integral polynomial h in T (so psi of the result is 0)."""
    p = K.p
    mod = p ** (K.cap - 2)
    coeffs = [[rng.randrange(mod) for _ in range(K.d)] for _ in range(length)]
    h = TPoly(K, coeffs)
    return h - h.psi().phi()


def random_measure(K, n, rng, units_only=False):
    p = K.p
    mod = p ** (K.cap - 2)
    vals = {}
    for a in range(p ** n):
        if units_only and a % p == 0:
            continue
        c = TPoly(K, [[rng.randrange(mod) for _ in range(K.d)]]).coeff(0)
        vals[a] = c
    return GroupRingMeasure.from_values(K, n, vals, units_only)


def theta_M(lam, M):
    """sum_i tau_p^i (x) phi^-i(lambda) a_eta, as the list of tau_p^i-coefficients."""
    out = []
    for i in range(M.d_K):
        mu = GroupRingMeasure(M.ring, lam.n, _embed_poly(lam.poly, M))
        out.append(mu.frobenius(-i) * M.a_eta)
    return out


def _embed_poly(poly, M):
    if poly.K is M.ring:
        return poly
    emb = embedding(poly.K, M.ring)
    rows = [emb(poly.coeff(j)) for j in range(poly.length)]
    return TPoly.from_coeffs(M.ring, rows)


def twisted_sum(x, rho, d_K):
    """sum over g = tau_p^i sigma_c of rho(g) g(x), i < d_K, c in (Z/p^n)^x (n = level of x)."""
    R = x.ring
    p, n = R.p, R.n
    mod = p ** R.cap
    total = R.zero()
    for i in range(d_K):
        xi = x.frobenius(i) if i else x
        part = R.zero()
        for c in units_mod(p, n):
            y = xi.sigma(c)
            s = rho.exponents(c, n)
            if s:
                y = y.shift(s)
            part = part + y * pow(rho._teich(c, R.cap), rho.tame, mod)
        if i:
            part = part * rho.unram_value(R, i)
        total = total + part
    return total


def sigma_Mn(x, rho, M, n=None):
    """#G_n a_eta e_{rho*}(x): a_eta times sum_g rho(g) g(x)."""
    if isinstance(x, DescentValue):
        x = x.value
    if n is not None and x.ring.n != n:
        x = x.lift(n)
    return DescentValue(twisted_sum(x, rho, M.d_K) * M.a_eta, -M.r, "t_rho_eta")


def _grid_ring(p, d_K, eta, rho, r, cap):
    D = lcm(d_K, required_degree(p, eta.unram, 1))
    if rho.unram and (rho.unram * d_K) % (p - 1):
        raise DescentError("rho restricted to H must factor through Gal(K/Q_p)")
    return LatticeM(unram_ring(p, D, cap), eta, r, d_K,
                    solve_a_eta(unram_ring(p, D, cap), eta.unram_value_int(cap)))


def verify_descent_square(p, d_K, eta, r, rho, n, N=20, guard=10):
    """Both paths of the descent square on 1 (x) b (x) e.

    clockwise:      Phi_W (-1)^r eps_dR(rho eta, r) varsigma(rho, b) a_eta
    anticlockwise:  Sigma_{M,n}(Psi_{M,n}(b delta_1)), full sum over k
    """
    eta = Character(p, eta) if isinstance(eta, int) else eta
    if r < 1:
        raise DescentError("only r >= 1 is covered by the two-path check")
    if r == 1 and is_trivial(rho, eta):
        raise DescentError("W = Q_p(1) is the exceptional case")
    m = rho.conductor
    if n < max(1, m):
        raise DescentError("n must be at least max(1, a(rho))")
    M = _grid_ring(p, d_K, eta, rho, r, N + guard)
    R = M.ring.level(n)
    b = M.embed(normal_basis(unram_ring(p, d_K, N + guard)))
    # anticlockwise
    mu = GroupRingMeasure.from_values(M.ring, 1, {1: b})
    psi = psi_Mn(mu, M, n)
    rhs = sigma_Mn(psi, rho, M)
    # clockwise
    x = R.scalar(frob_value_int(rho, eta, R.cap))
    tau = gauss_sum(rho, m, R)
    lhs = (x * Fraction(p) ** (r - 1)) ** m * tau * varsigma(rho, b.lift(n), d_K) * M.a_eta
    phiW = euler_ratio(rho, eta, r, N + guard)
    if phiW == EXCEPTIONAL:
        raise DescentError("Euler factor vanishes")
    lhs = lhs * phiW
    lhs = DescentValue(lhs, -r, "t_rho_eta")
    digits = min(lhs.agree(rhs), N)
    return {"lhs": lhs, "rhs": rhs, "digits": digits, "euler_ratio": phiW,
            "params": {"p": p, "d_K": d_K, "eta": eta.unram, "r": r, "rho": list(rho.key()[:4]),
                       "n": n, "D": M.ring.d}}


def commutative_grid(primes=(3, 5), degrees=(1, 2), weights=(1, 2, 3), eta_orders=(1, 2)):
    """All grid points: rho of conductor dividing p^2, unramified part of order dividing d_K."""
    from .characters import characters_of_conductor_dividing
    for p in primes:
        for d_K in degrees:
            unrams = [u for u in range(p - 1) if (u * d_K) % (p - 1) == 0]
            for order in eta_orders:
                eta = Character(p, 0 if order == 1 else (p - 1) // 2)
                for r in weights:
                    for rho in characters_of_conductor_dividing(p, 2, unrams):
                        if r == 1 and is_trivial(rho, eta):
                            continue
                        a = rho.conductor
                        for n in sorted({max(1, a), a + 1}):
                            yield p, d_K, eta, r, rho, n


def sample_rng(seed=None):
    import os
    if seed is None:
        seed = int(os.environ.get("COLEPS_SEED", "0"))
    return random.Random(seed)


__all__ = ["LatticeM", "DescentValue", "DescentError", "psi_Mn", "xi_Mn", "xi_closed", "xi_solver",
           "theta_M", "sigma_Mn", "verify_descent_square", "commutative_grid",
           "random_admissible", "random_measure", "inv_one_minus_cphi"]
