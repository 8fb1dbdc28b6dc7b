"""Characters of H x Gamma at finite level, Gauss sums and idempotents.

A character is stored by exponents relative to fixed generators:
  unramified value  rho(tau_p) = omega(g)^unram        (a (p-1)-th root of unity)
  tame part         c -> omega(c)^tame
  wild part         c -> eps_w^(wild_exp * k(c)),  c = g^k(c) mod p^(w+1)
where g is the smallest primitive root modulo p^2 and omega is Teichmueller.
Values are realised inside a cyclotomic ring of sufficiently high level.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._arith import discrete_log, primitive_root, zeros, reduce_cyclotomic
from .padic import teichmuller_int


@dataclass(frozen=True)
class Character:
    p: int
    unram: int = 0
    tame: int = 0
    wild_level: int = 0
    wild_exp: int = 0
    r: int = 0

    def __post_init__(self):
        p = self.p
        w, j = self.wild_level, self.wild_exp
        if w < 0:
            raise ValueError("wild level must be >= 0")
        j = j % p ** w if w else 0
        while w and j % p == 0:
            w -= 1
            j //= p
        object.__setattr__(self, "wild_level", w)
        object.__setattr__(self, "wild_exp", j)
        object.__setattr__(self, "tame", self.tame % (p - 1))
        object.__setattr__(self, "unram", self.unram % (p - 1))

    @property
    def conductor(self):
        """Exponent a(rho) of the p-part of the conductor."""
        if self.tame == 0 and self.wild_level == 0:
            return 0
        return max(1, self.wild_level + 1)

    @property
    def generator(self):
        return primitive_root(self.p)

    def key(self):
        return (self.unram, self.tame, self.wild_level, self.wild_exp, self.r)

    def inverse(self):
        return Character(self.p, -self.unram, -self.tame, self.wild_level, -self.wild_exp, self.r)

    def times(self, other):
        w = max(self.wild_level, other.wild_level)
        j = self.wild_exp * self.p ** (w - self.wild_level) + other.wild_exp * self.p ** (w - other.wild_level)
        return Character(self.p, self.unram + other.unram, self.tame + other.tame, w, j, self.r)

    def cyclotomic_part(self):
        return Character(self.p, 0, self.tame, self.wild_level, self.wild_exp, self.r)

    def is_trivial(self):
        return self.unram == 0 and self.conductor == 0

    def sign(self):
        """rho(-1) = (-1)^tame; the wild part is trivial on mu_{p-1}."""
        return -1 if self.tame % 2 else 1

    def unram_order(self):
        from math import gcd
        return (self.p - 1) // gcd(self.p - 1, self.unram) if self.unram else 1

    # values

    def _teich(self, a, N):
        return teichmuller_int(a, self.p, N)

    def unram_value_int(self, N):
        """rho(tau_p) as an integer modulo p^N."""
        return pow(self._teich(self.generator, N), self.unram, self.p ** N)

    def exponents(self, c, level):
        """Exponent s with (wild part of rho)(c) = eps_level^s."""
        p, w = self.p, self.wild_level
        if c % p == 0:
            raise ValueError("character evaluated at a non-unit")
        if w and level < w:
            raise ValueError(f"ring level {level} too small for wild level {w}")
        shift = 0
        if w:
            mod = p ** (w + 1)
            k = discrete_log(c, self.generator, mod, (p - 1) * p ** w)
            shift = self.wild_exp * k * p ** (level - w)
        return shift

    def value(self, c, ring, h=0):
        """rho(sigma_c * tau_p^h) in the given ring (level >= wild level)."""
        N = ring.cap
        mod = self.p ** N
        coef = pow(self._teich(c, N), self.tame, mod)
        if h:
            coef = coef * pow(self.unram_value_int(N), h, mod) % mod
        shift = self.exponents(c, ring.n)
        return ring.one().shift(shift) * coef if shift else ring.scalar(coef)

    def unram_value(self, ring, h=1):
        return ring.scalar(pow(self.unram_value_int(ring.cap), h, self.p ** ring.cap))

    def kernel_conductor(self, n):
        """Smallest k with rho trivial on units = 1 mod p^k, by brute force on (Z/p^n)^x."""
        from .extensions import unram_ring
        p = self.p
        R = unram_ring(p, 1, 8).level(max(n, 1))
        for k in range(n + 1):
            if all((self.value(c, R) - 1).is_zero()
                   for c in units_mod(p, n) if k == 0 or c % p ** k == 1):
                return k
        raise ValueError("character does not factor through level n")

    def __str__(self):
        return f"rho(p={self.p}, unram={self.unram}, tame={self.tame}, wild={self.wild_level}:{self.wild_exp}, r={self.r})"


def units_mod(p, n):
    return [c for c in range(1, p ** n) if c % p]


def characters_of_conductor_dividing(p, k, unram_values=(0,), r=0):
    """All characters with a(rho) <= k, for the given unramified exponents."""
    out = []
    for u in unram_values:
        for t in range(p - 1):
            if k <= 1:
                out.append(Character(p, u, t, 0, 0, r))
                continue
            for j in range(p ** (k - 1)):
                out.append(Character(p, u, t, k - 1, j, r))
    seen, uniq = set(), []
    for ch in out:
        if ch.key() not in seen:
            seen.add(ch.key())
            uniq.append(ch)
    return uniq


def gauss_sum(rho, n, ring, basis=1):
    """tau(rho, eps_n^basis) = sum over c in (Z/p^n)^x of rho(c) eps_n^(c * basis).

    The sum is realised in `ring` (a cyclotomic level >= max(n, wild level)).
    A level-0 Gauss sum is 1 by convention.
    """
    if n == 0:
        return ring.one()
    a = rho.conductor
    if a > n:
        raise ValueError(f"level {n} too small for conductor exponent {a}")
    p, L = rho.p, ring.n
    if L < n:
        raise ValueError("ring level below Gauss sum level")
    N = ring.cap
    mod = p ** N
    q = p ** L
    acc = zeros((q, ring.d))
    step = p ** (L - n)
    for c in units_mod(p, n):
        coef = pow(teichmuller_int(c, p, N), rho.tame, mod)
        s = rho.exponents(c, L) + step * c * basis
        acc[s % q, 0] += coef
    return ring.from_ints(reduce_cyclotomic(acc, p, L))


def gamma_sum(x, rho, n, inverse=False):
    """sum over c in (Z/p^n)^x of rho(c)^(+-1) sigma_c(x), x in a ring of level >= n."""
    total = None
    ch = rho.inverse() if inverse else rho
    for c in units_mod(rho.p, n):
        term = ch.value(c, x.ring) * x.sigma(c)
        total = term if total is None else total + term
    return total


def idempotent_project(x, chi, n=None, d_H=1):
    """e_chi x = (1/#G) sum_g chi(g^-1) g(x), G = Gal(K_n/Q_p) restricted to (Gamma_n, H of order d_H)."""
    n = x.ring.n if n is None else n
    total = None
    inv = chi.inverse()
    for h in range(d_H):
        y = x.frobenius(h) if h else x
        part = gamma_sum(y, inv, n)
        if h:
            part = part * inv.unram_value(x.ring, h)
        total = part if total is None else total + part
    order = d_H * (chi.p - 1) * chi.p ** (n - 1)
    return total * Fraction(1, order)


def varsigma(rho, b, d_K):
    """sum_{i<d_K} rho(tau_p)^(-i) phi^(-i)(b)."""
    total = None
    for i in range(d_K):
        term = b.frobenius(-i) * rho.unram_value(b.ring, -i % (rho.p - 1))
        total = term if total is None else total + term
    return total


def varsigma_idempotent(rho, b, d_K):
    """d_K * e^H_{rho*} b = sum_i rho(tau_p^i) phi^i(b); agrees with varsigma."""
    total = None
    for i in range(d_K):
        term = b.frobenius(i) * rho.unram_value(b.ring, i)
        total = term if total is None else total + term
    return total


def gauss_sum_basis_change(rho, n, ring, c):
    """(tau(rho, sigma_c eps_n), rho(sigma_c)^(-1) tau(rho, eps_n))."""
    lhs = gauss_sum(rho, n, ring, basis=c)
    rhs = rho.inverse().value(c, ring) * gauss_sum(rho, n, ring)
    return lhs, rhs
