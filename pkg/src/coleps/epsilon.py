"""Character-level epsilon data for W = L(rho eta)(r).

Gamma factors, epsilon constants, the de Rham scalar, the Euler-factor
ratio, cohomology dimension tables, and the determinant comparison for
Q_p(1) in Kummer coordinates (valuation, Iwasawa log).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .characters import Character, gauss_sum
from .extensions import unram_ring
from .padic import PadicNumber, padic_log

EXCEPTIONAL = "exceptional-zero"
CONVENTIONS = ("arithmetic", "deligne")


def gamma_star(j):
    """Leading coefficient of Gamma at the integer j."""
    if j <= 0:
        return Fraction((-1) ** (-j), factorial(-j))
    return Fraction(factorial(j - 1))


def gamma_factor(r):
    """Gamma_L(W) = Gamma*(r)^-1 for the one-dimensional W with Hodge-Tate weight r."""
    return 1 / gamma_star(r)


def combined(rho, eta=None):
    """rho * eta as one character (eta unramified)."""
    return rho if eta is None else rho.times(eta)


def is_trivial(rho, eta=None):
    return combined(rho, eta).is_trivial()


def frob_value_int(rho, eta, N):
    """rho eta(tau_p) as an integer mod p^N (a (p-1)-th root of unity)."""
    return combined(rho, eta).unram_value_int(N)


def _as_fraction(x, p, N):
    """Return +-1 as Fraction when x is congruent to it mod p^N, else None."""
    mod = p ** N
    if x % mod == 1:
        return Fraction(1)
    if x % mod == mod - 1:
        return Fraction(-1)
    return None


def euler_ratio(rho, eta=None, r=1, N=20):
    """det(1 - phi | D_cris(W*(1))) / det(1 - phi | D_cris(W)).

    Returns 1 when a(rho) != 0, EXCEPTIONAL when numerator or denominator
    vanishes, a Fraction when rho eta(tau_p) = +-1, and a PadicNumber otherwise.
    """
    if rho.conductor != 0:
        return Fraction(1)
    p = rho.p
    xint = frob_value_int(rho, eta, N + abs(r) + 4)
    x = _as_fraction(xint, p, N + abs(r) + 4)
    if x is not None:
        num = 1 - Fraction(p) ** (r - 1) * x
        den = 1 - Fraction(p) ** (-r) / x
        if num == 0 or den == 0:
            return EXCEPTIONAL
        return num / den
    xp = PadicNumber(p, 0, xint, N + abs(r) + 4)
    num = 1 - xp * Fraction(p) ** (r - 1)
    den = 1 - xp.inverse() * Fraction(p) ** (-r)
    return num / den


def det_one_minus_phi_cris(rho, eta=None, r=1, N=20):
    """det(1 - phi | D_cris(W)) with phi(e) = p^-r rho eta(tau_p^-1) e; 1 if D_cris = 0."""
    if rho.conductor != 0:
        return Fraction(1)
    p = rho.p
    xint = frob_value_int(rho, eta, N + abs(r) + 4)
    x = _as_fraction(xint, p, N + abs(r) + 4)
    if x is not None:
        return 1 - Fraction(p) ** (-r) / x
    return 1 - PadicNumber(p, 0, xint, N + abs(r) + 4).inverse() * Fraction(p) ** (-r)


def default_ring(rho, n=None, N=20, guard=6):
    n = rho.conductor if n is None else n
    return unram_ring(rho.p, 1, N + guard).level(max(n, 1))


def eps_constant(rho, eta=None, r=1, n=None, ring=None, basis=1, convention="arithmetic"):
    """((rho eta(tau_p) p^(r-1))^n tau(rho, eps_n))^-1, and 1 at n = 0.

    The Deligne convention replaces the rho eta(tau_p)^n factor by its inverse.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    n = rho.conductor if n is None else n
    ring = default_ring(rho, n) if ring is None else ring
    if n == 0:
        return ring.one()
    p = rho.p
    x = ring.scalar(frob_value_int(rho, eta, ring.cap))
    if convention == "deligne":
        x = x.inverse()
    tau = gauss_sum(rho, n, ring, basis)
    return ((x * Fraction(p) ** (r - 1)) ** n * tau).inverse()


def eps_dR_scalar(rho, eta=None, r=1, ring=None, basis=1):
    """(-1)^r (rho eta(tau_p) p^(r-1))^a tau(rho, eps_a), a = a(rho); attached to t^r."""
    a = rho.conductor
    ring = default_ring(rho, a) if ring is None else ring
    x = ring.scalar(frob_value_int(rho, eta, ring.cap))
    tau = gauss_sum(rho, a, ring, basis)
    return (x * Fraction(rho.p) ** (r - 1)) ** a * tau * (-1) ** r


def cohomology_dims(rho, eta=None, r=1):
    """Dimensions over L of the local invariants of W = L(rho eta)(r)."""
    triv = is_trivial(rho, eta)
    h0 = int(r == 0 and triv)
    h2 = int(r == 1 and triv)
    h1 = 2 if (r in (0, 1) and triv) else 1
    if r >= 2 or (r == 1 and not triv):
        h1f = h1
    elif r == 1 or r == 0:
        h1f = 1
    else:
        h1f = 0
    cris = int(rho.conductor == 0)
    return {"h0": h0, "h1": h1, "h2": h2, "h1f": h1f,
            "t": int(r > 0), "t_dual": int(r <= 0),
            "dcris": cris, "dcris_dual": cris,
            "exceptional": bool(r in (0, 1) and triv)}


@dataclass
class EpsilonReport:
    character: Character
    eta: Character
    r: int
    level: int
    gamma: Fraction
    eps_constant: object
    euler_ratio: object
    dims: dict
    gauss_sum: object = None
    extra: dict = field(default_factory=dict)

    @property
    def exceptional(self):
        return self.dims["exceptional"]

    def record(self):
        def ser(x):
            if hasattr(x, "record"):
                return x.record()
            return str(x)

        return {"character": list(self.character.key()[:4]), "eta": self.eta.unram,
                "r": self.r, "level": self.level, "gamma": str(self.gamma),
                "eps_constant": ser(self.eps_constant), "euler_ratio": ser(self.euler_ratio),
                "gauss_sum": ser(self.gauss_sum) if self.gauss_sum is not None else None,
                "dims": self.dims, "exceptional": self.exceptional}


def eps_report(rho, eta=None, r=1, n=None, N=20, convention="arithmetic"):
    eta = Character(rho.p) if eta is None else eta
    n = rho.conductor if n is None else n
    ring = default_ring(rho, n, N)
    tau = gauss_sum(rho, n, ring) if n else None
    return EpsilonReport(rho, eta, r, n, gamma_factor(r),
                         eps_constant(rho, eta, r, n, ring, convention=convention),
                         euler_ratio(rho, eta, r, N), cohomology_dims(rho, eta, r), tau)


# the exceptional representation Q_p(1)

class KummerH1Model:
    """H^1(Q_p, Q_p(1)) = (Q_p^x)^ (x) Q_p in coordinates (valuation, log_p)."""

    def __init__(self, p, N):
        self.p, self.N = p, N

    def kummer(self, x):
        """Class of a nonzero rational x."""
        a = PadicNumber.from_rational(self.p, x, self.N + 4)
        return (PadicNumber.from_rational(self.p, a.v, self.N), padic_log(a * Fraction(self.p) ** (-a.v)))

    def exp_bk(self, x=1):
        """Kummer class of the 1-unit with log = x, written through 1 + p."""
        v, ell = self.kummer(1 + self.p)
        s = ell.inverse() * x
        return (v * s, ell * s)

    def valuation_map(self, c):
        return c[0]

    def beta(self, c):
        """Bockstein, identified with log_p on Kummer classes."""
        return c[1]


def _det2(x, y):
    return x[0] * y[1] - x[1] * y[0]


def _scale(c, s):
    return (c[0] * s, c[1] * s)


def sequence_det(x, y, incl, section):
    """Image of x ^ y under det H^1 = det(A) (x) det(B) for 0 -> A -> H^1 -> B -> 0.

    incl = image of 1 in A, section = a lift of 1 in B.
    """
    return _det2(x, y) / _det2(incl, section)


def exceptional_qp1_compare(p, N=20):
    """Both trivialisations of det H^1(Q_p, Q_p(1)) on c exp(1) ^ -im(p), c = (1 - 1/p)^-1."""
    model = KummerH1Model(p, N + 4)
    c = PadicNumber.from_rational(p, Fraction(p, p - 1), N + 4)
    e1 = model.exp_bk(1)
    im_p = model.kummer(p)
    x = _scale(e1, c)
    y = _scale(im_p, -1)
    # route A: incl = c exp(1), quotient -v, section -im(p)
    detA = sequence_det(x, y, _scale(e1, c), _scale(im_p, -1))
    # route B: incl = c im(p), quotient beta = log_p, section exp(1)
    detB = sequence_det(x, y, _scale(im_p, c), e1)
    ratio = detA / detB
    return {"route_a": detA, "route_b": detB, "ratio": ratio,
            "digits": min((ratio - 1).valuation(), N),
            "beta_p": model.beta(im_p), "beta_1p": model.beta(model.kummer(1 + p)),
            "minus_v_p": -model.valuation_map(im_p)}
