"""Power series over O_K with the phi, psi, gamma and D operators.

Two containers share one coefficient layout (rows = degree, columns = y^j):

* TruncSeries, in the variable X, known modulo X^M (or exactly, for
  polynomials).  The unknown tail is assumed to have valuation >= `tail`,
  which defaults to min(e, 0), i.e. integral series stay integral.
* TPoly, an exact polynomial in T = 1 + X.  phi, psi, D and integer gamma
  act monomially here, which makes every finite-level computation exact.

GroupRingMeasure is a measure on Z/p^n, stored through its Mahler transform
sum mu(a) T^a.
"""

from fractions import Fraction
from math import comb

import numpy as np

from ._arith import kmul, reduce_cyclotomic, reduce_monic, vp, zeros
from .extensions import Elt, PrecisionZeroDivisor, normalize_block
from .padic import PadicNumber


class TruncationError(ValueError):
    """Truncation too small for the requested precision."""


class _Block:
    """p^e * c + O(p^prec) for an integer array c of shape (rows, d)."""

    def _norm(self, c, e, prec):
        shape = (c.shape[0], self.K.d)
        self.c, self.e, self.prec = normalize_block(c, e, prec, self.K.p, shape)

    @property
    def p(self):
        return self.K.p

    def coeff(self, k):
        """The coefficient of degree k as a level-0 ring element."""
        if k >= self.c.shape[0]:
            return self.K.zero(self.prec)
        return Elt(self.K, self.c[k:k + 1], self.e, self.prec)

    def valuation(self):
        return self.e

    def is_zero(self):
        return self.e >= self.prec

    def _aligned(self, other, rows):
        """Both coefficient arrays padded to `rows`, at the common exponent."""
        e = min(self.e, other.e)
        p = self.p
        a = _pad(self.c[:rows], rows, self.K.d) * p ** (self.e - e)
        b = _pad(other.c[:rows], rows, self.K.d) * p ** (other.e - e)
        return a, b, e

    def _frob_ints(self, k):
        k %= self.K.d
        if k == 0:
            return self.c
        return self.c.dot(self.K.frob_matrix(k).T)

    def _scalar_ints(self, a):
        """(c * a reduced, e shift, prec) for a level-0 ring element a."""
        prod = kmul(self.c, a.c)
        if prod.shape[1] > self.K.d:
            prod = reduce_monic(prod, self.K.f, self.K.d)
        return prod


def _pad(c, rows, d):
    if c.shape[0] >= rows:
        return c[:rows].copy()
    out = zeros((rows, d))
    out[:c.shape[0]] = c
    return out


def _as_const(K, x, prec):
    if isinstance(x, Elt):
        if x.ring.n:
            raise ValueError("series coefficients live in the unramified ring")
        return x
    return K.scalar(x, prec)


class TruncSeries(_Block):
    """sum_{k<M} c_k X^k + O(X^M), or an exact polynomial when exact=True."""

    def __init__(self, K, c, e=0, prec=None, M=None, exact=False, offset=0, tail=None):
        self.K = K
        c = np.asarray(c, dtype=object)
        if c.ndim == 1:
            c = c.reshape(-1, 1)
        if c.shape[1] < K.d:
            c = np.concatenate([c, zeros((c.shape[0], K.d - c.shape[1]))], axis=1)
        prec = K.cap if prec is None else prec
        M = c.shape[0] if M is None else M
        c = _pad(c, M, K.d)
        self._norm(c, e, prec)
        self.M = M
        self.exact = exact
        self.offset = offset
        self.tail = min(self.e, 0) if tail is None else tail

    @classmethod
    def from_coeffs(cls, K, coeffs, M=None, exact=False, prec=None):
        """Build from a list of ints / Fractions / level-0 elements."""
        prec = K.cap if prec is None else prec
        elts = [_as_const(K, x, prec) for x in coeffs]
        e = min(x.e for x in elts) if elts else prec
        e = min(e, prec)
        p = K.p
        c = zeros((len(elts), K.d))
        pr = prec
        for k, x in enumerate(elts):
            if not x.is_zero():
                c[k] = x.c[0] * p ** (x.e - e)
            pr = min(pr, x.prec)
        return cls(K, c, e, pr, M=M, exact=exact)

    def _new(self, c, e, prec, M=None, exact=None, tail=None):
        return TruncSeries(self.K, c, e, prec, M=self.M if M is None else M,
                           exact=self.exact if exact is None else exact, offset=self.offset,
                           tail=tail)

    def __repr__(self):
        kind = "exact" if self.exact else f"O(X^{self.M})"
        return f"TruncSeries(M={self.M}, e={self.e}, prec={self.prec}, {kind})"

    def record(self):
        return {"ring": self.K.descriptor(), "m": self.offset, "M": self.M, "N": self.prec,
                "exact": self.exact,
                "coefficients": [[str(PadicNumber(self.p, self.e, int(t), self.prec)) for t in row]
                                 for row in self.c]}

    def truncate(self, M):
        """The series modulo X^M; an exact polynomial becomes known mod X^M."""
        if self.exact:
            return self._new(_pad(self.c[:M], M, self.K.d), self.e, self.prec, M=M, exact=False, tail=self.tail)
        M = min(M, self.M)
        return self._new(self.c[:M], self.e, self.prec, M=M, exact=False, tail=self.tail)

    def with_prec(self, prec):
        return self._new(self.c, self.e, min(prec, self.prec), tail=self.tail)

    # ring structure

    def _common_M(self, other):
        if self.exact and other.exact:
            return max(self.M, other.M), True
        if self.exact:
            return other.M, False
        if other.exact:
            return self.M, False
        return min(self.M, other.M), False

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, TPoly):
            return other.to_series()
        const = _as_const(self.K, other, self.prec + max(0, -self.e) + 8)
        return TruncSeries(self.K, const.c, const.e, const.prec, M=1, exact=True)

    def __add__(self, other):
        other = self._coerce(other)
        M, exact = self._common_M(other)
        a, b, e = self._aligned(other, M)
        return self._new(a + b, e, min(self.prec, other.prec), M=M, exact=exact,
                         tail=min(self.tail, other.tail))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.c, self.e, self.prec, tail=self.tail)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self._new(zeros(self.c.shape), self.prec, self.prec)
            f = Fraction(other)
            w = vp(f.numerator, self.p) - vp(f.denominator, self.p)
            u = f / Fraction(self.p) ** w
            mod = self.p ** max(self.prec - self.e, 1)
            scaled = self.c * (u.numerator * pow(u.denominator, -1, mod) % mod)
            return self._new(scaled, self.e + w, self.prec + w, tail=self.tail + w)
        if isinstance(other, (Elt, PadicNumber)):
            a = _as_const(self.K, other, self.prec)
            if a.is_zero() or self.is_zero():
                return self._new(zeros(self.c.shape), a.e + self.e, min(self.prec + a.e, a.prec + self.e))
            prod = self._scalar_ints(a)
            return self._new(prod, self.e + a.e, min(self.prec + a.e, a.prec + self.e),
                             tail=self.tail + a.e)
        other = self._coerce(other)
        M, exact = self._common_M(other)
        prec = min(self.prec + other.e, other.prec + self.e)
        if exact:
            M = self.M + other.M - 1
        if self.is_zero() or other.is_zero():
            return self._new(zeros((M, self.K.d)), self.e + other.e, prec, M=M, exact=exact)
        prod = kmul(self.c[:M], other.c[:M])
        if prod.shape[1] > self.K.d:
            prod = reduce_monic(prod, self.K.f, self.K.d)
        return self._new(prod[:M], self.e + other.e, prec, M=M, exact=exact,
                         tail=min(self.tail + other.e, other.tail + self.e))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = TruncSeries(self.K, [1], M=1, exact=True)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def agree(self, other, M=None):
        """Digits of agreement over the common truncation."""
        other = self._coerce(other)
        Mc, _ = self._common_M(other)
        M = Mc if M is None else min(M, Mc)
        return (self.truncate(M) - other.truncate(M)).valuation()

    def value_at_zero(self):
        return self.coeff(0)

    def inverse(self, M=None):
        """1/f modulo X^M for f with unit constant term (Newton iteration)."""
        M = self.M if M is None else M
        c0 = self.coeff(0)
        if c0.e != 0:
            raise PrecisionZeroDivisor("constant term is not a unit")
        f = self.truncate(M)
        inv = TruncSeries(self.K, c0.inverse().c, 0, c0.prec, M=1)
        k = 1
        while k < M:
            k = min(2 * k, M)
            inv = inv.truncate(k) if inv.M >= k else TruncSeries(self.K, inv.c, inv.e, inv.prec, M=k)
            fk = f.truncate(k)
            inv = (inv * (2 - fk * inv)).truncate(k)
        return inv

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, (Elt, PadicNumber)):
            return self * _as_const(self.K, other, self.prec).inverse()
        other = self._coerce(other)
        M, exact = self._common_M(other)
        if exact and any(other.c[1:].flat):
            raise TruncationError("the quotient of two polynomials is a series; truncate one side first")
        return self * other.inverse(M)

    # operators

    def frobenius_coeffs(self, k=1):
        e = self.e
        return self._new(self._frob_ints(k), e, min(self.prec, self.K.cap + e), tail=self.tail)

    def phi(self):
        """phi(f) = f^phi((1+X)^p - 1)."""
        if self.exact:
            return self.to_tpoly().phi().to_series()
        return self.phi_horner()

    def phi_horner(self):
        """phi by Horner substitution of (1+X)^p - 1, valid modulo X^M."""
        p = self.p
        g = self.frobenius_coeffs(1)
        M, d = self.M, self.K.d
        mod = p ** max(g.prec - g.e, 1)
        binom = [comb(p, i) for i in range(1, p + 1)]
        acc = zeros((M, d))
        for k in range(M - 1, -1, -1):
            new = zeros((M, d))
            for i, b in enumerate(binom, start=1):
                if i < M:
                    new[i:] += acc[:M - i] * b
            new[0] += g.c[k]
            acc = np.array([int(t) % mod for t in new.flat], dtype=object).reshape(M, d)
        return self._new(acc, g.e, g.prec, tail=self.tail)

    def gamma(self, c):
        """f((1+X)^c - 1) for c in Z_p^x (int, Fraction or PadicNumber)."""
        p = self.p
        if isinstance(c, PadicNumber):
            if c.v != 0:
                raise ValueError("gamma needs a unit")
            cint = c.to_int()
        else:
            c = Fraction(c)
            if vp(c.numerator, p) or vp(c.denominator, p):
                raise ValueError("gamma needs a unit")
            cint = None
        if self.exact and isinstance(c, Fraction) and c.denominator == 1 and c > 0:
            return self.to_tpoly().sigma(int(c)).to_series()
        M, d = self.M, self.K.d
        r = max(self.prec - self.e, 1)
        # binomials of an integer representative are exact mod p^(r + M)
        big = p ** (r + M)
        if cint is None:
            cint = int(c.numerator * pow(c.denominator, -1, big) % big)
        else:
            cint %= big
        mod = p ** r
        Z = zeros((M, 1))
        for k, b in enumerate(_binomials(cint, M - 1)):
            if k:
                Z[k, 0] = b % mod
        acc = zeros((M, d))
        for k in range(M - 1, -1, -1):
            prod = kmul(acc, Z)[:M] if any(acc.flat) else zeros((M, d))
            prod = _pad(prod, M, d)
            prod[0] += self.c[k]
            acc = np.array([int(t) % mod for t in prod.flat], dtype=object).reshape(M, d)
        return self._new(acc, self.e, self.prec, exact=False, tail=self.tail)

    def D(self):
        """(1 + X) d/dX."""
        M, d = self.M, self.K.d
        out = zeros((M, d))
        for k in range(M):
            if k + 1 < M:
                out[k] += self.c[k + 1] * (k + 1)
            out[k] += self.c[k] * k
        if self.exact:
            return self._new(out, self.e, self.prec, tail=self.tail)
        return self._new(out[:M - 1], self.e, self.prec, M=max(M - 1, 0), tail=self.tail)

    def psi(self):
        """Left inverse of phi, computed through the basis T^j = (1+X)^j.

        For a truncated input the unknown tail p^t O(X^M) moves coefficient k of
        the output by at most p^(t + floor(M/p) - k), so the certified output
        truncation is floor(M/p) - (prec - t) + 1.
        """
        out = self.to_tpoly(check=False).psi().to_series()
        if self.exact:
            return out
        keep = self.M // self.p - (self.prec - self.tail) + 1
        if keep <= 0:
            raise TruncationError(
                f"psi of a series known mod X^{self.M} certifies nothing at precision {self.prec}; "
                f"need M >= {self.p * (self.prec - self.tail)}")
        res = out.truncate(keep)
        res.tail = self.tail
        return res

    def log(self, M=None):
        return log_unit_series(self, M)

    # conversions and evaluation

    def to_tpoly(self, check=True):
        """Exact rewrite sum a_k (T-1)^k; for truncated input only the known part is used."""
        if check and not self.exact:
            raise TruncationError("only exact series convert to polynomials in T")
        M, d = self.M, self.K.d
        out = zeros((M, d))
        for k in range(M):
            row = self.c[k]
            if not any(row):
                continue
            for j in range(k + 1):
                b = comb(k, j)
                out[j] += row * (b if (k - j) % 2 == 0 else -b)
        return TPoly(self.K, out, self.e, self.prec)

    def eval_at_epsilon(self, k, ring, basis=1, prec=None):
        """sum c_i (eps_k^basis - 1)^i in `ring` (a cyclotomic level >= k)."""
        if k > ring.n:
            raise ValueError("ring level below evaluation level")
        if ring.K is not self.K:
            raise ValueError("ring over a different unramified base")
        cert = self.prec
        if not self.exact:
            phi_k = (self.p - 1) * self.p ** (k - 1) if k else 1
            cert = min(cert, self.tail + self.M // phi_k if k else self.tail + 10 ** 9)
            want = cert if prec is None else prec
            if k and want > self.tail + self.M // phi_k:
                need = (want - self.tail) * phi_k
                raise TruncationError(f"truncation M={self.M} too small; need M >= {need}")
            if k == 0:
                return self.coeff(0).lift(ring.n)
        step = basis * self.p ** (ring.n - k)
        acc = ring.zero(cert)
        for i in range(self.M - 1, -1, -1):
            acc = acc.shift(step) - acc if k else acc * 0
            acc = acc + Elt(ring.K, self.c[i:i + 1], self.e, self.prec).lift(ring.n)
        return acc.with_prec(cert)


def _binomials(x, kmax):
    out = [1]
    c = 1
    for k in range(1, kmax + 1):
        c = c * (x - k + 1) // k
        out.append(c)
    return out


def log_unit_series(g, M=None):
    """log g = log g(0) + integral of g'/g, for g with unit constant term.

    Output is known mod X^M with absolute precision reduced by max v_p(k), k < M.
    """
    K, p = g.K, g.p
    M = g.M if M is None else M
    g0 = g.coeff(0)
    if g0.e != 0:
        raise PrecisionZeroDivisor("log of a series whose constant term is not a unit")
    h = (g.truncate(M) * g0.inverse()).truncate(M)
    dh = _derivative(h)
    q = (dh * h.inverse(M)).truncate(M - 1) if M > 1 else dh
    loss = max((vp(k, p) for k in range(1, M)), default=0)
    d = K.d
    out = zeros((M, d))
    r = max(q.prec - q.e, 1) + loss
    mod = p ** r
    for k in range(1, M):
        w = vp(k, p)
        inv = pow(k // p ** w, -1, mod)
        out[k] = q.c[k - 1] * (inv * p ** (loss - w)) % mod if k - 1 < q.c.shape[0] else 0
    integral = TruncSeries(K, out, q.e - loss, q.prec - loss, M=M)
    c0 = g0.log()
    return integral + TruncSeries(K, c0.c, c0.e, c0.prec, M=1, exact=True)


def _derivative(f):
    M, d = f.M, f.K.d
    out = zeros((max(M - 1, 1), d))
    for k in range(1, M):
        out[k - 1] = f.c[k] * k
    return TruncSeries(f.K, out, f.e, f.prec, M=max(M - 1, 1), exact=f.exact)


def phi_series(f):
    return f.phi()


def psi_series(f):
    return f.psi()


def gamma_series(f, c):
    return f.gamma(c)


def D_series(f):
    return f.D()


def eval_at_epsilon(f, k, ring, basis=1, prec=None):
    return f.eval_at_epsilon(k, ring, basis, prec)


class TPoly(_Block):
    """Exact polynomial sum_j b_j T^j, T = 1 + X."""

    def __init__(self, K, c, e=0, prec=None):
        self.K = K
        c = np.asarray(c, dtype=object)
        if c.ndim == 1:
            c = c.reshape(-1, 1)
        if c.shape[1] < K.d:
            c = np.concatenate([c, zeros((c.shape[0], K.d - c.shape[1]))], axis=1)
        if c.shape[0] == 0:
            c = zeros((1, K.d))
        prec = K.cap if prec is None else prec
        self._norm(c, e, prec)

    @classmethod
    def monomial(cls, K, j, coef=1):
        c = zeros((j + 1, K.d))
        out = cls(K, c)
        return out + TPoly._const_at(K, j, coef)

    @staticmethod
    def _const_at(K, j, coef):
        a = _as_const(K, coef, K.cap)
        c = zeros((j + 1, K.d))
        c[j] = a.c[0]
        return TPoly(K, c, a.e, a.prec)

    @classmethod
    def geometric(cls, K, a):
        """1 + T + ... + T^(a-1) = ((1+X)^a - 1)/X for a >= 1."""
        c = zeros((a, K.d))
        c[:, 0] = 1
        return cls(K, c)

    @classmethod
    def from_coeffs(cls, K, coeffs, prec=None):
        prec = K.cap if prec is None else prec
        elts = [_as_const(K, x, prec) for x in coeffs]
        e = min([x.e for x in elts] + [prec])
        c = zeros((max(len(elts), 1), K.d))
        pr = prec
        for j, x in enumerate(elts):
            if not x.is_zero():
                c[j] = x.c[0] * K.p ** (x.e - e)
            pr = min(pr, x.prec)
        return cls(K, c, e, pr)

    def __repr__(self):
        return f"TPoly(deg<{self.c.shape[0]}, e={self.e}, prec={self.prec})"

    @property
    def length(self):
        return self.c.shape[0]

    def _new(self, c, e, prec):
        return TPoly(self.K, c, e, prec)

    def _coerce(self, other):
        if isinstance(other, TPoly):
            return other
        a = _as_const(self.K, other, self.prec + max(0, -self.e) + 8)
        return TPoly(self.K, a.c, a.e, a.prec)

    def __add__(self, other):
        other = self._coerce(other)
        rows = max(self.length, other.length)
        a, b, e = self._aligned(other, rows)
        return self._new(a + b, e, min(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.c, self.e, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self._new(zeros(self.c.shape), self.prec, self.prec)
            f = Fraction(other)
            w = vp(f.numerator, self.p) - vp(f.denominator, self.p)
            u = f / Fraction(self.p) ** w
            mod = self.p ** max(self.prec - self.e, 1)
            return self._new(self.c * (u.numerator * pow(u.denominator, -1, mod) % mod),
                             self.e + w, self.prec + w)
        if isinstance(other, (Elt, PadicNumber)):
            a = _as_const(self.K, other, self.prec)
            prec = min(self.prec + a.e, a.prec + self.e)
            if a.is_zero() or self.is_zero():
                return self._new(zeros(self.c.shape), a.e + self.e, prec)
            return self._new(self._scalar_ints(a), self.e + a.e, prec)
        other = self._coerce(other)
        prec = min(self.prec + other.e, other.prec + self.e)
        prod = kmul(self.c, other.c)
        if prod.shape[1] > self.K.d:
            prod = reduce_monic(prod, self.K.f, self.K.d)
        return self._new(prod, self.e + other.e, prec)

    __rmul__ = __mul__

    def agree(self, other):
        return (self - other).valuation()

    def frobenius_coeffs(self, k=1):
        return self._new(self._frob_ints(k), self.e, min(self.prec, self.K.cap + self.e))

    def phi(self):
        g = self.frobenius_coeffs(1)
        p = self.p
        out = zeros(((self.length - 1) * p + 1, self.K.d))
        out[::p] = g.c
        return self._new(out, g.e, g.prec)

    def psi(self):
        p = self.p
        kept = self.c[::p]
        g = TPoly(self.K, kept, self.e, self.prec)
        return g.frobenius_coeffs(-1)

    def D(self):
        j = np.arange(self.length, dtype=object).reshape(-1, 1)
        return self._new(self.c * j, self.e, self.prec)

    def sigma(self, a):
        """T -> T^a for a positive integer a."""
        if a <= 0:
            raise ValueError("sigma on polynomials needs a positive exponent")
        out = zeros(((self.length - 1) * a + 1, self.K.d))
        out[::a] = self.c
        return self._new(out, self.e, self.prec)

    def reduce_mod(self, n):
        """Reduce modulo T^(p^n) - 1."""
        q = self.p ** n
        out = zeros((q, self.K.d))
        for j in range(self.length):
            out[j % q] += self.c[j]
        return self._new(out, self.e, self.prec)

    def value_at_one(self):
        """f(X = 0), i.e. sum of T-coefficients."""
        s = self.c.sum(axis=0).reshape(1, self.K.d)
        return Elt(self.K, s, self.e, self.prec)

    def eval_at_epsilon(self, k, ring, basis=1):
        """T -> eps_k^basis inside `ring` (level >= k)."""
        if k > ring.n:
            raise ValueError("ring level below evaluation level")
        if k == 0:
            return self.value_at_one().lift(ring.n)
        q = ring.order
        step = self.p ** (ring.n - k)
        out = zeros((q, self.K.d))
        for j in range(self.length):
            out[(basis * j * step) % q] += self.c[j]
        return Elt(ring, reduce_cyclotomic(out, self.p, ring.n), self.e, self.prec)

    def to_series(self):
        """Exact rewrite in the variable X."""
        L, d = self.length, self.K.d
        out = zeros((L, d))
        for j in range(L):
            row = self.c[j]
            if not any(row):
                continue
            for k in range(j + 1):
                out[k] += row * comb(j, k)
        return TruncSeries(self.K, out, self.e, self.prec, M=L, exact=True)


class GroupRingMeasure:
    """A measure on Z/p^n with values in O_K (or K), via its Mahler transform."""

    def __init__(self, K, n, poly, units_only=False):
        self.K, self.n = K, n
        self.poly = poly.reduce_mod(n)
        self.units_only = units_only
        if units_only:
            for a in range(0, self.p ** n, self.p):
                if not self.value(a).is_zero():
                    raise ValueError("unit-supported measure has mass on p Z/p^n")

    @property
    def p(self):
        return self.K.p

    @classmethod
    def from_values(cls, K, n, values, units_only=False):
        """values: dict a -> coefficient (int, Fraction or level-0 element)."""
        q = K.p ** n
        coeffs = [values.get(a, 0) for a in range(q)]
        return cls(K, n, TPoly.from_coeffs(K, coeffs), units_only)

    @classmethod
    def dirac(cls, K, n, a, coef=1):
        return cls.from_values(K, n, {a % K.p ** n: coef}, units_only=bool(a % K.p))

    def value(self, a):
        return self.poly.coeff(a % self.p ** self.n)

    def values(self):
        return [self.value(a) for a in range(self.p ** self.n)]

    def mahler(self):
        return self.poly

    def augmentation(self):
        return self.poly.value_at_one()

    def translate(self, c):
        """delta_c * mu: the Gamma_n action, a -> c a."""
        return GroupRingMeasure(self.K, self.n, self.poly.sigma(c % self.p ** self.n), self.units_only)

    def frobenius(self, k=1):
        return GroupRingMeasure(self.K, self.n, self.poly.frobenius_coeffs(k), self.units_only)

    def __add__(self, other):
        return GroupRingMeasure(self.K, self.n, self.poly + other.poly, self.units_only and other.units_only)

    def __sub__(self, other):
        return GroupRingMeasure(self.K, self.n, self.poly - other.poly, self.units_only and other.units_only)

    def __neg__(self):
        return GroupRingMeasure(self.K, self.n, -self.poly, self.units_only)

    def __mul__(self, x):
        return GroupRingMeasure(self.K, self.n, self.poly * x, self.units_only)

    __rmul__ = __mul__

    def agree(self, other):
        return self.poly.agree(other.poly)

    def is_zero(self):
        return self.poly.is_zero()

    def moment(self):
        """sum mu(a) * a, with a in [0, p^n); meaningful modulo p^n."""
        total = self.K.zero()
        for a in range(1, self.p ** self.n):
            v = self.value(a)
            if not v.is_zero():
                total = total + v * a
        return total

    def record(self):
        return {"n": self.n, "ring": self.K.descriptor(), "units_only": self.units_only,
                "values": [[str(c) for c in v.coefficients()[0]] for v in self.values()]}


def mahler(mu):
    return mu.mahler()


def finite_mahler_inverse(poly, n, units_only=False):
    """The level-n measure whose transform is poly modulo T^(p^n) - 1."""
    return GroupRingMeasure(poly.K, n, poly, units_only)


def measure_from_components(K, comps, basis=1):
    """CRT: the measure whose transform takes the value comps[k] at T = eps_k^basis.

    comps[k] lies in the level-k ring over K (comps[0] in K).  Uses the
    idempotents e_{<=k} = p^-(n-k) sum_j T^(j p^k) of Q_p[T]/(T^(p^n) - 1).
    """
    n = len(comps) - 1
    p = K.p
    q = p ** n
    total = None
    for k, comp in enumerate(comps):
        if basis == -1 and k:
            comp = comp.sigma(-1)
        part = _tile_component(K, comp, k, n, p, q)
        total = part if total is None else total + part
    return GroupRingMeasure(K, n, total)


def _tile_component(K, comp, k, n, p, q):
    """Q_k (e_{<=k} - e_{<=k-1}) where Q_k lifts comp (degree < phi(p^k))."""
    if k == 0:
        Q = comp.c.copy()
        rows = 1
    else:
        rows = p ** k
        Q = _pad(comp.c, rows, K.d)
    tiled = zeros((q, K.d))
    for j in range(q):
        tiled[j] = Q[j % rows]
    out = TPoly(K, tiled, comp.e, comp.prec) * Fraction(1, p ** (n - k))
    if k == 0:
        return out
    small = p ** (k - 1)
    folded = zeros((small, K.d))
    for j in range(rows):
        folded[j % small] += Q[j]
    tiled2 = zeros((q, K.d))
    for j in range(q):
        tiled2[j] = folded[j % small]
    return out - TPoly(K, tiled2, comp.e, comp.prec) * Fraction(1, p ** (n - k + 1))
