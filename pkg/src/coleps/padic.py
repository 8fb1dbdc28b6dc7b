"""Elements of Q_p with tracked absolute precision.

A PadicNumber is p^v * u + O(p^N) with u a unit known modulo p^(N - v).
Zero at precision N is stored as u = 0, v = N.
"""

import re
from fractions import Fraction

from ._arith import vp


class PrecisionZeroDivisor(ZeroDivisionError):
    """Division by something indistinguishable from zero."""


class DomainError(ValueError):
    """Argument outside the domain of a p-adic function."""


def _split(x, p):
    """Write a nonzero rational as p^v * (a / b) with a, b prime to p."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, num, den


class PadicNumber:
    __slots__ = ("p", "v", "u", "N")

    def __init__(self, p, v, u, N):
        self.p = p
        self.N = N
        if u % p == 0 or v >= N:
            if u != 0 and v < N:
                w = vp(u, p)
                u //= p ** w
                v += w
            if u == 0 or v >= N:
                self.v, self.u = N, 0
                return
        self.v = v
        self.u = u % p ** (N - v)

    @classmethod
    def from_rational(cls, p, x, N):
        """Reduce an exact rational to absolute precision N."""
        if x == 0:
            return cls(p, N, 0, N)
        v, a, b = _split(x, p)
        if v >= N:
            return cls(p, N, 0, N)
        m = p ** (N - v)
        return cls(p, v, a * pow(b, -1, m) % m, N)

    @classmethod
    def zero(cls, p, N):
        return cls(p, N, 0, N)

    @classmethod
    def one(cls, p, N):
        return cls(p, 0, 1, N)

    def is_zero(self):
        return self.u == 0

    def valuation(self):
        return self.v

    def relprec(self):
        return self.N - self.v

    def lift(self):
        """Exact rational p^v * u (u taken in [0, p^(N-v)))."""
        return Fraction(self.u) * Fraction(self.p) ** self.v

    def to_int(self):
        """Representative in [0, p^N) for elements of Z_p."""
        if self.v < 0:
            raise DomainError("not integral")
        return self.u * self.p ** self.v % self.p ** self.N

    def key(self):
        return (self.p, self.v, self.u, self.N)

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError("different primes")
            return other
        if isinstance(other, (int, Fraction)):
            # exact scalars are known to any precision; match ours after scaling
            return PadicNumber.from_rational(self.p, other, self.N + abs(self.v) + 64)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = min(self.N, other.N)
        e = min(self.v, other.v)
        a = self.u * self.p ** (self.v - e) + other.u * self.p ** (other.v - e)
        return PadicNumber(self.p, e, a, N)

    __radd__ = __add__

    def __neg__(self):
        return PadicNumber(self.p, self.v, -self.u, self.N)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PadicNumber.zero(self.p, self.N)
            w, a, b = _split(other, self.p)
            m = self.p ** max(self.N - self.v, 1)
            return PadicNumber(self.p, self.v + w, self.u * a * pow(b, -1, m), self.N + w)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = min(self.N + other.v, other.N + self.v)
        return PadicNumber(self.p, self.v + other.v, self.u * other.u, N)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise PrecisionZeroDivisor(f"inverting O({self.p}^{self.N})")
        r = self.N - self.v
        return PadicNumber(self.p, -self.v, pow(self.u, -1, self.p ** r), r - self.v)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by exact zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = PadicNumber.one(self.p, self.N + k * abs(self.v) + 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def agree(self, other):
        """Number of digits to which two values agree (capped by precision)."""
        d = self - other
        return d.v

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PadicNumber)):
            try:
                return (self - other).is_zero()
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def residue(self):
        """Image in F_p of an integral element."""
        if self.v < 0:
            raise DomainError("not integral")
        return self.u % self.p if self.v == 0 else 0

    def digits(self):
        out, x = [], self.u
        for _ in range(self.N - self.v):
            out.append(x % self.p)
            x //= self.p
        return out

    def __str__(self):
        p = self.p
        tail = f"O({p}^{self.N})"
        if self.is_zero():
            return tail
        terms = []
        for i, a in enumerate(self.digits()):
            if a:
                terms.append(str(a) if i == 0 else f"{a}*{p}^{i}")
        body = "(" + " + ".join(terms) + ")"
        if self.v:
            body = f"{p}^{self.v} * {body}"
        return f"{body} + {tail}"

    def __repr__(self):
        return f"PadicNumber({self})"

    def log(self):
        return padic_log(self)

    def exp(self):
        return padic_exp(self)


_TERM = re.compile(r"^(\d+)(?:\*(\d+)\^(\d+))?$")
_FULL = re.compile(r"^\s*(?:(\d+)\^(-?\d+)\s*\*\s*)?(?:\((.*)\)\s*\+\s*)?O\((\d+)\^(-?\d+)\)\s*$")


def parse_padic(text):
    """Inverse of str() on PadicNumber."""
    m = _FULL.match(text)
    if not m:
        raise ValueError(f"not a canonical p-adic: {text!r}")
    pre_p, pre_v, body, p, N = m.groups()
    p, N = int(p), int(N)
    if body is None:
        return PadicNumber.zero(p, N)
    v = int(pre_v) if pre_v else 0
    if pre_p and int(pre_p) != p:
        raise ValueError("prime mismatch")
    u = 0
    for term in body.split("+"):
        t = _TERM.match(term.strip())
        if not t:
            raise ValueError(f"bad term {term!r}")
        a, q, i = t.groups()
        if q is not None and int(q) != p:
            raise ValueError("prime mismatch")
        u += int(a) * p ** (int(i) if i else 0)
    return PadicNumber(p, v, u, N)


def log_series_int(z, p, prec):
    """sum (-1)^(k+1) z^k / k modulo p^prec, for an integer z with p | z."""
    if z % p ** prec == 0:
        return 0
    w = vp(z, p)
    # v(z^k / k) >= k*w - log_p(k), so stop once that clears prec
    kmax = 1
    while (kmax + 1) * w - _log_floor(kmax + 1, p) < prec:
        kmax += 1
    extra = _log_floor(kmax, p)
    mod = p ** (prec + extra)
    out = p ** prec
    acc, zk = 0, 1
    for k in range(1, kmax + 1):
        zk = zk * z % mod
        vk = vp(k, p)
        term = (zk // p ** vk) * pow(k // p ** vk, -1, out)
        acc += term if k % 2 else -term
    return acc % out


def _log_floor(k, p):
    e = 0
    while p ** (e + 1) <= k:
        e += 1
    return e


def padic_log(x):
    """Iwasawa logarithm, log_p(p) = 0."""
    if x.is_zero():
        raise PrecisionZeroDivisor("log of zero")
    p = x.p
    r = x.N - x.v
    m = p ** (r + 1)
    w = pow(x.u, p - 1, m)
    # log(u) = log(u^(p-1)) / (p-1); u^(p-1) is a 1-unit known mod p^r
    val = log_series_int((w - 1) % m, p, r)
    val = val * pow(p - 1, -1, p ** r) % p ** r
    return PadicNumber(p, 0, val, r)


def padic_exp(x):
    """exp on pZ_p; raises DomainError outside the disc of convergence."""
    p, N = x.p, x.N
    if x.is_zero():
        return PadicNumber.one(p, N)
    if x.v < 1:
        raise DomainError(f"exp does not converge at valuation {x.v}")
    z = x.u * p ** x.v
    mod = p ** N
    # v(z^k / k!) >= k*(v - 1/(p-1)) grows linearly
    total, zk, fact, k = 1, 1, 1, 0
    while True:
        k += 1
        if k * (x.v * (p - 1) - 1) >= N * (p - 1):
            break
        zk *= z
        fact *= k
        vf = vp(fact, p)
        total += (zk // p ** vf) * pow(fact // p ** vf, -1, mod)
    return PadicNumber(p, 0, total % mod, N)


def teichmuller_int(a, p, N):
    """Teichmueller lift of a mod p in Z/p^N, via iterating x -> x^p."""
    if a % p == 0:
        raise DomainError("Teichmueller lift of 0")
    m = p ** N
    x = a % m
    while True:
        y = pow(x, p, m)
        if y == x:
            return x
        x = y


def teichmuller(a, p, N):
    return PadicNumber(p, 0, teichmuller_int(a, p, N), N)
