"""Unramified rings O_K, cyclotomic rings O_K[mu_{p^n}] and their elements.

An element of the level-n ring is an integer array of shape (m, d):
row i is the coefficient of x^i, column j that of y^j, where x = eps_n is a
primitive p^n-th root of unity (m = phi(p^n), or m = 1 at level 0) and y is
a root of the defining polynomial f of K.  Powers x^i y^j form a Z_p-basis of
the ring of integers, so coefficientwise precision is element precision.

Values are p^e * C with C reduced modulo p^(prec - e); prec is absolute.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm

import numpy as np

from ._arith import (det_mod, kmul, reduce_cyclotomic, reduce_monic,
                     solve_unit_system, vp_array, zeros)
from .padic import PadicNumber, PrecisionZeroDivisor, _split


class RingError(ValueError):
    """Elements from incompatible rings, or a failed descent."""


class InvariantError(ValueError):
    """Input violates a structural relation beyond the tracked precision."""


def _is_irreducible(coeffs, p):
    """coeffs = [c_0, ..., c_{d-1}] of a monic degree-d polynomial over F_p."""
    from sympy import Poly, symbols

    x = symbols("x")
    d = len(coeffs)
    expr = x ** d + sum(c * x ** i for i, c in enumerate(coeffs))
    return Poly(expr, x, modulus=p).is_irreducible


def defining_polynomial(p, d):
    """First monic irreducible of degree d, lex order on (c_0, ..., c_{d-1})."""
    for coeffs in product(range(p), repeat=d):
        if d == 1 or _is_irreducible(list(coeffs), p):
            return list(coeffs)
    raise AssertionError("no irreducible polynomial found")


class LocalRing:
    """Common arithmetic for the unramified ring (level 0) and its cyclotomic levels."""

    def __init__(self, K, n):
        self.K = K
        self.p = K.p
        self.d = K.d
        self.cap = K.cap
        self.n = n
        self.m = 1 if n == 0 else (self.p - 1) * self.p ** (n - 1)
        self.order = self.p ** n

    # construction

    def _make(self, c, e, prec):
        return Elt(self, c, e, prec)

    def from_ints(self, c, prec=None, e=0):
        prec = self.cap if prec is None else prec
        c = np.asarray(c, dtype=object).reshape(self.m, self.d)
        return Elt(self, c, e, prec)

    def zero(self, prec=None):
        return self.from_ints(zeros((self.m, self.d)), prec)

    def one(self, prec=None):
        c = zeros((self.m, self.d))
        c[0, 0] = 1
        return self.from_ints(c, prec)

    def scalar(self, x, prec=None):
        """Image of an int, Fraction or PadicNumber."""
        prec = self.cap if prec is None else prec
        if isinstance(x, PadicNumber):
            c = zeros((self.m, self.d))
            c[0, 0] = x.u
            return Elt(self, c, x.v, x.N)
        return self.one(prec) * x

    def gen(self):
        """The root y of the defining polynomial."""
        c = zeros((self.m, self.d))
        if self.d == 1:
            c[0, 0] = (-self.K.f[0]) % self.p ** self.cap
        else:
            c[0, 1] = 1
        return self.from_ints(c)

    def eps_power(self, k):
        """eps_n^k for an integer k."""
        if self.n == 0:
            return self.one()
        q = self.order
        c = zeros((q, self.d))
        c[k % q, 0] = 1
        return self.from_ints(reduce_cyclotomic(c, self.p, self.n))

    def eps(self, level=None):
        """eps_level = eps_n^(p^(n - level))."""
        level = self.n if level is None else level
        if level > self.n:
            raise RingError(f"level {level} above ring level {self.n}")
        return self.eps_power(self.p ** (self.n - level))

    def residue_element(self, digits):
        """Element with coefficients given by a residue vector over F_p (level 0 part)."""
        c = zeros((self.m, self.d))
        for j, a in enumerate(digits):
            c[0, j] = a
        return self.from_ints(c)

    def level(self, n):
        return self.K.level(n)

    def descriptor(self):
        return {"p": self.p, "d": self.d, "n": self.n, "f": list(self.K.f)}

    def __repr__(self):
        return f"LocalRing(p={self.p}, d={self.d}, n={self.n}, cap={self.cap})"

    # internal arithmetic helpers

    def _reduce(self, c):
        if c.shape[1] > self.d:
            c = reduce_monic(c, self.K.f, self.d)
        if self.n and c.shape[0] != self.m:
            c = reduce_cyclotomic(c, self.p, self.n)
        return c

    def _mulc(self, a, b):
        return self._reduce(kmul(a, b))


class UnramRing(LocalRing):
    """O_K for the unramified K of degree d over Q_p, with explicit Frobenius."""

    def __init__(self, p, d, cap):
        if p < 3:
            raise ValueError("p must be an odd prime")
        self.f = defining_polynomial(p, d)
        self.p, self.d, self.cap = p, d, cap
        self._levels = {}
        super().__init__(self, 0)
        self._levels[0] = self
        self._frob = self._frobenius_matrices()

    def level(self, n):
        if n not in self._levels:
            self._levels[n] = CycloRing(self, n)
        return self._levels[n]

    def _frobenius_matrices(self):
        """Matrices of phi^k on the basis y^j, k = 0..d-1 (columns = images)."""
        p, d = self.p, self.d
        ident = np.identity(d, dtype=object)
        if d == 1:
            return [ident]
        y = self.gen()
        # Newton lift of the root congruent to y^p
        r = y ** p
        fpoly = self.f + [1]
        for _ in range(self.cap.bit_length() + 2):
            val = self.zero()
            der = self.zero()
            power = self.one()
            for i, a in enumerate(fpoly):
                val = val + power * a
                if i + 1 < len(fpoly):
                    der = der + power * ((i + 1) * fpoly[i + 1])
                power = power * r
            r = r - val * der.inverse()
        images = [self.one()]
        for _ in range(1, d):
            images.append(images[-1] * r)
        mod = p ** self.cap
        F = zeros((d, d))
        for j, im in enumerate(images):
            col = im.ints(self.cap)[0]
            for i in range(d):
                F[i, j] = int(col[i]) % mod
        mats = [ident, F]
        for _ in range(2, d):
            mats.append(_matmod(F, mats[-1], mod))
        return mats

    def frob_matrix(self, k):
        return self._frob[k % self.d]

    def __repr__(self):
        return f"UnramRing(p={self.p}, d={self.d}, f={self.f}, cap={self.cap})"


class CycloRing(LocalRing):
    """O_K[mu_{p^n}] presented as O_K[x]/Phi_{p^n}(x), x = eps_n."""

    def __init__(self, K, n):
        if n < 1:
            raise ValueError("cyclotomic level must be >= 1")
        super().__init__(K, n)


def _matmod(a, b, mod):
    out = a.dot(b)
    for idx in np.ndindex(out.shape):
        out[idx] = int(out[idx]) % mod
    return out


@lru_cache(maxsize=None)
def unram_ring(p, d, cap):
    return UnramRing(p, d, cap)


def cyclo_ring(p, d, n, cap):
    return unram_ring(p, d, cap).level(n)


def normalize_block(c, e, prec, p, shape):
    """Reduce p^e * c modulo p^prec and pull the common p-power into e."""
    r = prec - e
    if r <= 0:
        return zeros(shape), prec, prec
    mod = p ** r
    c = np.array([int(t) % mod for t in c.flat], dtype=object).reshape(shape)
    w = vp_array(c, p, r)
    if w >= r:
        return zeros(shape), prec, prec
    if w:
        pw = p ** w
        c = np.array([int(t) // pw for t in c.flat], dtype=object).reshape(shape)
    return c, e + w, prec


class Elt:
    """Element p^e * C + O(p^prec) of a LocalRing."""

    __slots__ = ("ring", "c", "e", "prec")

    def __init__(self, ring, c, e, prec):
        self.ring = ring
        self.c, self.e, self.prec = normalize_block(c, e, prec, ring.p, (ring.m, ring.d))

    # basic queries

    @property
    def p(self):
        return self.ring.p

    def is_zero(self):
        return self.e >= self.prec

    def valuation(self):
        """Smallest p-adic valuation among coefficients (prec if zero)."""
        return self.e

    def ints(self, prec=None):
        """Integer coefficient array p^e * C, for integral elements."""
        if self.e < 0:
            raise RingError("element is not integral")
        pe = self.p ** self.e
        return np.array([int(t) * pe for t in self.c.flat], dtype=object).reshape(self.c.shape)

    def rationals(self):
        pe = Fraction(self.p) ** self.e
        return [[Fraction(int(t)) * pe for t in row] for row in self.c]

    def coeff(self, i=0, j=0):
        return PadicNumber(self.p, self.e, int(self.c[i, j]), self.prec)

    def coefficients(self):
        return [[self.coeff(i, j) for j in range(self.ring.d)] for i in range(self.ring.m)]

    def to_padic(self):
        """The Q_p value of an element that lies in Q_p."""
        rest = self.c.copy()
        rest[0, 0] = 0
        if any(rest.flat):
            raise RingError("element does not lie in Q_p")
        return self.coeff(0, 0)

    def record(self):
        return {"ring": self.ring.descriptor(),
                "coefficients": [[str(c) for c in row] for row in self.coefficients()]}

    def __str__(self):
        terms = []
        for i in range(self.ring.m):
            for j in range(self.ring.d):
                if self.c[i, j]:
                    mono = "*".join(s for s in (f"x^{i}" if i else "", f"y^{j}" if j else "") if s)
                    terms.append(f"({self.coeff(i, j)})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms) if terms else f"O({self.p}^{self.prec})"

    def __repr__(self):
        return f"Elt[{self.ring.n}]({self})"

    # coercion

    def _coerce(self, other):
        if isinstance(other, Elt):
            if other.ring is self.ring:
                return self, other
            if other.ring.K is not self.ring.K:
                raise RingError("elements of different unramified rings")
            if other.ring.n < self.ring.n:
                return self, other.lift(self.ring.n)
            return self.lift(other.ring.n), other
        if isinstance(other, (int, Fraction, PadicNumber)):
            return self, self.ring.scalar(other, self.prec + max(0, -self.e) + 8)
        raise TypeError(f"cannot combine with {type(other).__name__}")

    # ring operations

    def __add__(self, other):
        a, b = self._coerce(other)
        R = a.ring
        e = min(a.e, b.e)
        p = R.p
        c = a.c * p ** (a.e - e) + b.c * p ** (b.e - e)
        return Elt(R, c, e, min(a.prec, b.prec))

    __radd__ = __add__

    def __neg__(self):
        return Elt(self.ring, -self.c, self.e, self.prec)

    def __sub__(self, other):
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, x):
        """Multiply by an exact nonzero rational."""
        w, a, b = _split(x, self.p)
        r = max(self.prec - self.e, 1)
        mod = self.p ** r
        return Elt(self.ring, self.c * (a * pow(b, -1, mod) % mod), self.e + w, self.prec + w)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero(self.prec)
            if self.is_zero():
                w = _split(other, self.p)[0]
                return self.ring.zero(self.prec + w)
            return self._scale(other)
        a, b = self._coerce(other)
        R = a.ring
        prec = min(a.prec + b.e, b.prec + a.e)
        e = a.e + b.e
        if a.is_zero() or b.is_zero():
            return R.zero(prec)
        return Elt(R, R._mulc(a.c, b.c), e, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, PadicNumber):
            return self * other.inverse()
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = None
        base = self
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base * base
        return self.ring.one() if out is None else out

    def __eq__(self, other):
        try:
            return (self - other).is_zero()
        except (RingError, TypeError):
            return False

    __hash__ = None

    def agree(self, other):
        """Certified number of digits to which self and other agree."""
        return (self - other).valuation()

    def with_prec(self, prec):
        """Drop precision to prec (never raises it)."""
        prec = min(prec, self.prec)
        return Elt(self.ring, self.c, self.e, prec)

    # Galois structure

    def frobenius(self, k=1):
        """phi^k on the unramified coefficients; fixes eps_n."""
        R = self.ring
        k %= R.d
        if k == 0 or self.is_zero():
            return self
        F = R.K.frob_matrix(k)
        c = self.c.dot(F.T)
        return Elt(R, c, self.e, min(self.prec, R.cap + self.e))

    def sigma(self, a):
        """The element of Gal(K_n/K) sending eps_n to eps_n^a."""
        R = self.ring
        if R.n == 0:
            return self
        q, p = R.order, R.p
        if a % p == 0:
            raise RingError("sigma_a needs a unit a")
        a %= q
        if a == 1:
            return self
        c = zeros((q, R.d))
        for i in range(R.m):
            c[i * a % q] = self.c[i]
        return Elt(R, reduce_cyclotomic(c, p, R.n), self.e, self.prec)

    def shift(self, s):
        """Multiply by eps_n^s (cheap: a row rotation)."""
        R = self.ring
        if R.n == 0:
            return self
        q = R.order
        s %= q
        if s == 0:
            return self
        c = zeros((q, R.d))
        for i in range(R.m):
            c[(i + s) % q] = self.c[i]
        return Elt(R, reduce_cyclotomic(c, R.p, R.n), self.e, self.prec)

    def galois(self, a, k=0):
        """sigma_a composed with phi^k."""
        return self.sigma(a).frobenius(k)

    # moving between levels

    def lift(self, n):
        """Image in the level-n ring (n >= current level)."""
        R = self.ring
        if n == R.n:
            return self
        if n < R.n:
            raise RingError("use descend to go down")
        S = R.level(n)
        c = zeros((S.m, R.d))
        step = R.p ** (n - R.n)
        for i in range(R.m):
            c[i * step] = self.c[i]
        return Elt(S, c, self.e, self.prec)

    def descend(self, n=None, check=True):
        """Rewrite an element lying in a lower level ring."""
        R = self.ring
        n = R.n - 1 if n is None else n
        if n == R.n:
            return self
        out = self
        while out.ring.n > n:
            out = out._descend_one(check)
        return out

    def _descend_one(self, check):
        R = self.ring
        S = R.level(R.n - 1)
        step = R.p if R.n > 1 else R.m + 1
        keep = np.zeros(R.m, dtype=bool)
        keep[::step] = True
        if check and any(self.c[~keep].flat):
            raise RingError("element does not descend")
        c = self.c[::step][:S.m]
        return Elt(S, c, self.e, self.prec)

    def conjugates(self, level):
        """The Galois conjugates over the level-`level` ring (cyclotomic part)."""
        R = self.ring
        q = R.order
        step = R.p ** level
        return [self.sigma(a) for a in range(1, q, step) if a % R.p]

    def trace(self, level=0):
        """Tr_{K_n / K_level}, landing in the level-`level` ring."""
        R = self.ring
        if level >= R.n:
            return self
        if level == 0:
            p, n = R.p, R.n
            c = zeros((1, R.d))
            c[0] = self.c[0] * R.m
            step = p ** (n - 1)
            for i in range(step, R.m, step):
                c[0] = c[0] - self.c[i] * step
            return Elt(R.level(0), c, self.e, self.prec)
        total = None
        for x in self.conjugates(level):
            total = x if total is None else total + x
        return total.descend(level)

    def norm(self, level=0):
        """N_{K_n / K_level} through the tower."""
        out = self
        while out.ring.n > level:
            prod_ = None
            for x in out.conjugates(out.ring.n - 1):
                prod_ = x if prod_ is None else prod_ * x
            out = prod_.descend()
        return out

    def trace_qp(self):
        """Tr_{K_n/Q_p} as a PadicNumber."""
        t = self.trace(0)
        total = t
        for k in range(1, t.ring.d):
            total = total + t.frobenius(k)
        return total.to_padic()

    def norm_qp(self):
        t = self.norm(0)
        total = t
        for k in range(1, t.ring.d):
            total = total * t.frobenius(k)
        return total.to_padic()

    def inverse(self):
        R = self.ring
        if self.is_zero():
            raise PrecisionZeroDivisor("inverting an element that is zero to precision")
        if R.n == 0:
            return self._inverse_unram()
        others = None
        for x in self.conjugates(R.n - 1)[1:]:
            others = x if others is None else others * x
        if others is None:
            others = R.one(self.prec + 1)
        nrm = (self * others).descend()
        return others * nrm.inverse()

    def _inverse_unram(self):
        R = self.ring
        p, d = R.p, R.d
        r = self.prec - self.e
        mod = p ** r
        C = Elt(R, self.c, 0, r)
        cols = []
        b = R.one(r)
        for j in range(d):
            cols.append([int(t) for t in (C * b).ints()[0]])
            b = b * R.gen()
        mat = [[cols[j][i] for j in range(d)] for i in range(d)]
        rhs = [1] + [0] * (d - 1)
        sol = solve_unit_system(mat, rhs, mod, p)
        c = zeros((1, d))
        c[0] = sol
        return Elt(R, c, -self.e, r - self.e)

    # transcendental functions

    def log(self):
        """Iwasawa logarithm (log p = 0, kills roots of unity)."""
        R = self.ring
        p = R.p
        if self.is_zero():
            raise PrecisionZeroDivisor("log of zero")
        x = self
        scale = 1
        k = self.norm_qp().valuation() if R.n else 0
        if R.n and k:
            x = x ** R.m
            scale *= R.m
        x = Elt(R, x.c, 0, x.prec - x.e)
        q = p ** R.d
        x = x ** (q - 1)
        scale *= q - 1
        while not (x - 1).valuation() >= 1:
            x = x ** p
            scale *= p
        return _log_one_unit(x - 1) * Fraction(1, scale)

    def teichmuller(self):
        """omega(x mod p) by iterating x -> x^q."""
        R = self.ring
        if self.e != 0:
            raise PrecisionZeroDivisor("Teichmueller lift of 0")
        q = R.p ** R.d
        x = Elt(R, self.c, 0, R.cap)
        while True:
            y = x ** q
            if (y - x).is_zero():
                return y
            x = y


def _log_one_unit(z):
    """log(1 + z) for z with all coefficients divisible by p."""
    R = z.ring
    target = z.prec
    out = z
    power = z
    k = 1
    w = max(z.valuation(), 1)
    while True:
        k += 1
        # tail terms have valuation >= k*w - log_p k
        if k * w - _ilog(k, R.p) >= target:
            break
        power = power * z
        term = power * Fraction(1, k)
        out = out + term if k % 2 else out - term
    return out.with_prec(target)


def _ilog(k, p):
    e = 0
    while p ** (e + 1) <= k:
        e += 1
    return e


# embeddings and descent between unramified rings

class Embedding:
    """O_K -> O_L for unramified K of degree d inside L of degree D."""

    def __init__(self, K, L):
        if L.d % K.d or K.p != L.p:
            raise RingError("degree of K must divide degree of L")
        self.K, self.L = K, L
        self.matrix = self._root_images()

    def _root_images(self):
        K, L = self.K, self.L
        p = K.p
        d = K.d
        fpoly = K.f + [1]
        # residue root by brute force, then Newton
        root = None
        for digits in product(range(p), repeat=L.d):
            r = L.residue_element(list(digits)).with_prec(1)
            val = L.zero(1)
            power = L.one(1)
            for a in fpoly:
                val = val + power * a
                power = power * r
            if val.is_zero():
                root = L.residue_element(list(digits))
                break
        if root is None:
            raise RingError("defining polynomial has no root in the larger ring")
        for _ in range(L.cap.bit_length() + 2):
            val, der, power = L.zero(), L.zero(), L.one()
            for i, a in enumerate(fpoly):
                val = val + power * a
                if i + 1 < len(fpoly):
                    der = der + power * ((i + 1) * fpoly[i + 1])
                power = power * root
            root = root - val * der.inverse()
        mod = p ** L.cap
        E = zeros((L.d, d))
        power = L.one()
        for j in range(d):
            col = power.ints()[0]
            for i in range(L.d):
                E[i, j] = int(col[i]) % mod
            power = power * root
        return E

    def __call__(self, x):
        """Image of an element of any level of K in the same level of L."""
        S = self.L.level(x.ring.n)
        c = x.c.dot(self.matrix.T)
        return Elt(S, c, x.e, min(x.prec, self.L.cap + x.e))

    def restrict(self, y):
        """Inverse image of an element of L lying in the image of K."""
        K = self.K
        p = K.p
        r = y.prec - y.e
        mod = p ** r
        rows = _independent_rows(self.matrix, p, K.d)
        A = [[self.matrix[i, j] for j in range(K.d)] for i in rows]
        S = K.level(y.ring.n)
        c = zeros((y.ring.m, K.d))
        for t in range(y.ring.m):
            c[t] = solve_unit_system(A, [y.c[t, i] for i in rows], mod, p)
        x = Elt(S, c, y.e, y.prec)
        if not (self(x) - y).is_zero():
            raise RingError("element does not lie in the smaller ring")
        return x


def _independent_rows(E, p, d):
    for rows in _combinations(range(E.shape[0]), d):
        if det_mod([[E[i, j] for j in range(d)] for i in rows], p):
            return rows
    raise RingError("embedding matrix not of full rank mod p")


def _combinations(it, k):
    from itertools import combinations
    return combinations(it, k)


@lru_cache(maxsize=None)
def embedding(K, L):
    return Embedding(K, L)


# structured elements

def normal_basis(K):
    """First b (in the order b_0 + b_1 p + ... of residue digits) generating a normal basis."""
    p, d = K.p, K.d
    for t in range(1, p ** d):
        digits = [(t // p ** j) % p for j in range(d)]
        b = K.residue_element(digits)
        rows = [b.frobenius(i).ints()[0] for i in range(d)]
        if det_mod([[int(v) for v in row] for row in rows], p):
            return b
    raise AssertionError("no normal basis element found")


def primitive_residue(K):
    """Smallest residue vector generating F_q^x, as a level-0 element."""
    p, d = K.p, K.d
    q = p ** d
    factors = [f for f in range(2, q) if (q - 1) % f == 0 and all(f % g for g in range(2, f))]
    for t in range(1, q):
        digits = [(t // p ** j) % p for j in range(d)]
        a = K.residue_element(digits).with_prec(1)
        if all(not ((a ** ((q - 1) // f)) - 1).is_zero() for f in factors):
            return K.residue_element(digits)
    raise AssertionError("no primitive element")


def teichmuller_generator(K):
    return primitive_residue(K).teichmuller()


def solve_a_eta(K, eta_value):
    """Teichmueller a in O_K with phi(a) = eta_value^(-1) * a.

    eta_value is an element of Z_p (a root of unity of order dividing p - 1),
    given as int, PadicNumber or level-0 element.
    """
    eta = K.scalar(eta_value) if not isinstance(eta_value, Elt) else eta_value
    if (eta - 1).is_zero():
        return K.one()
    q = K.p ** K.d
    w = teichmuller_generator(K)
    target = eta.inverse()
    a = K.one()
    for _ in range(q - 1):
        if (a.frobenius() - target * a).is_zero():
            return a
        a = a * w
    raise RingError("no solution in this unramified ring; enlarge unramified degree")


def required_degree(p, eta_value_index, d_K=1):
    """Smallest D (multiple of d_K) whose ring contains a_eta.

    eta_value_index: exponent i with eta(tau_p) = omega(g)^i, g the primitive root.
    """
    order = (p - 1) // _gcd(p - 1, eta_value_index % (p - 1)) if eta_value_index % (p - 1) else 1
    # a^(p-1) = eta^(-1) has a solution in mu_{q-1} iff order * (p-1) divides q - 1
    D = d_K
    while (p ** D - 1) % (order * (p - 1)):
        D += d_K
    return D


def _gcd(a, b):
    from math import gcd
    return gcd(a, b)


def composite_degree(*degrees):
    return lcm(*degrees)


# group-ring twist of finite level

def lambda_twist_forward(x, check=True):
    """[a_0, ..., a_{d-1}] with a_i = phi^{-i}(a_0)  |->  a_0.

    x is a list of d measures (or ring elements) over O_K, indexed by tau_p^i.
    """
    d = len(x)
    if check:
        for i in range(1, d):
            if not _frob_neg_matches(x[0], x[i], i):
                raise InvariantError(f"component {i} is not phi^-{i} of component 0")
    return x[0]


def lambda_twist_inverse(a0, d):
    return [_frob_neg(a0, i) for i in range(d)]


def lambda_twist_project(x, d_small):
    """Push x along H'' -> H' (tau^i -> tau^(i mod d_small))."""
    out = [None] * d_small
    for i, a in enumerate(x):
        j = i % d_small
        out[j] = a if out[j] is None else out[j] + a
    return out


def _frob_neg(a, i):
    if hasattr(a, "frobenius"):
        return a.frobenius(-i)
    raise TypeError("component has no Frobenius action")


def _frob_neg_matches(a0, ai, i):
    diff = _frob_neg(a0, i) - ai
    return diff.is_zero()
