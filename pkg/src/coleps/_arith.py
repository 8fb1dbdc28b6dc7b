"""Integer helpers shared by the ring, series and measure code.

Everything here works on exact Python ints (numpy object arrays where a
vectorised layout helps).  Nothing in this file knows about precision.
"""

from functools import reduce
from math import gcd

import numpy as np


def vp(x, p):
    """p-adic valuation of a nonzero int."""
    if x == 0:
        raise ValueError("valuation of 0")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def vp_array(c, p, cap):
    """Smallest valuation among the entries of c, or cap if all vanish."""
    g = reduce(gcd, (int(t) for t in c.flat), 0)
    if g == 0:
        return cap
    return min(vp(g, p), cap)


def zeros(shape):
    out = np.empty(shape, dtype=object)
    out.fill(0)
    return out


def as_obj(a):
    a = np.asarray(a, dtype=object)
    return a


def kmul(a, b):
    """Product of two bivariate polynomials given as 2-d arrays.

    Rows index the first variable, columns the second.  Entries must be
    nonnegative.  Kronecker substitution turns this into one big-int product.
    """
    ra, ca = a.shape
    rb, cb = b.shape
    rows, cols = ra + rb - 1, ca + cb - 1
    ma = max(a.flat, default=0)
    mb = max(b.flat, default=0)
    if not ma or not mb:
        return zeros((rows, cols))
    terms = min(ra, rb) * min(ca, cb)
    bits = int(ma).bit_length() + int(mb).bit_length() + terms.bit_length() + 1
    slot = (bits + 7) // 8

    def pack(x):
        r, c = x.shape
        buf = zeros((r, cols))
        buf[:, :c] = x
        return int.from_bytes(b"".join(int(t).to_bytes(slot, "little") for t in buf.flat), "little")

    raw = (pack(a) * pack(b)).to_bytes(rows * cols * slot, "little")
    out = np.empty(rows * cols, dtype=object)
    for k in range(rows * cols):
        out[k] = int.from_bytes(raw[k * slot:(k + 1) * slot], "little")
    return out.reshape(rows, cols)


def reduce_monic(c, f, axis_len):
    """Reduce columns of c modulo the monic polynomial with low coefficients f.

    c has shape (rows, L) with L >= axis_len = deg f; returns (rows, deg f).
    """
    d = len(f)
    c = c.copy()
    for j in range(c.shape[1] - 1, d - 1, -1):
        top = c[:, j]
        if not np.any(top):
            continue
        for i, fi in enumerate(f):
            if fi:
                c[:, j - d + i] -= top * fi
    return c[:, :d]


def reduce_cyclotomic(c, p, n):
    """Reduce rows of c (powers of x) modulo Phi_{p^n}(x); n >= 1."""
    q = p ** n
    m = p ** (n - 1)
    rows = c.shape[0]
    if rows < q:
        pad = zeros((q - rows, c.shape[1]))
        c = np.concatenate([c, pad])
    elif rows > q:
        extra = (-rows) % q
        if extra:
            c = np.concatenate([c, zeros((extra, c.shape[1]))])
        c = c.reshape(-1, q, c.shape[1]).sum(axis=0)
    else:
        c = c.copy()
    top = c[(p - 1) * m:q]
    out = c[:(p - 1) * m]
    for j in range(p - 1):
        out[j * m:(j + 1) * m] -= top
    return out


def binomial_row(x, kmax, modulus=None):
    """[C(x, 0), ..., C(x, kmax)] for an integer x (possibly negative)."""
    out = [1]
    c = 1
    for k in range(1, kmax + 1):
        c = c * (x - k + 1) // k
        out.append(c if modulus is None else c % modulus)
    return out


def solve_unit_system(a, b, modulus, p):
    """Solve a x = b over Z/modulus where det(a) is a unit mod p.

    a is a list of rows, b a list; returns x as a list of ints.
    """
    n = len(a)
    m = [list(map(int, row)) + [int(v)] for row, v in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular modulo p")
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], -1, modulus)
        m[col] = [(t * inv) % modulus for t in m[col]]
        for r in range(n):
            if r != col and m[r][col] % modulus:
                f = m[r][col]
                m[r] = [(s - f * t) % modulus for s, t in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def det_mod(a, p):
    """Determinant over F_p of a small square matrix."""
    n = len(a)
    m = [[int(t) % p for t in row] for row in a]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col] % p
        inv = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            f = m[r][col] * inv % p
            if f:
                m[r] = [(s - f * t) % p for s, t in zip(m[r], m[col])]
    return det % p


def primitive_root(p):
    """Smallest positive primitive root modulo p^2 (hence modulo every p^n)."""
    phi = p * (p - 1)
    factors = _prime_factors(phi)
    for g in range(2, p * p):
        if g % p and all(pow(g, phi // f, p * p) != 1 for f in factors):
            return g
    raise ValueError("no primitive root")


def _prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def discrete_log(c, g, modulus, order):
    """Brute-force discrete log of c to base g modulo modulus."""
    c %= modulus
    x = 1
    for k in range(order):
        if x == c:
            return k
        x = x * g % modulus
    raise ValueError(f"{c} is not a power of {g} modulo {modulus}")
