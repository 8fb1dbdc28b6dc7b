"""Coleman power series, the map L = (1 - phi/p) log and the Coleman map.

A unit system is a norm-compatible tower u_0, ..., u_nmax with u_k in the
level-k ring.  Its Coleman series g (w.r.t. the basis eps^basis) satisfies
(phi^-k g)(eps_k^basis - 1) = u_k, i.e. g(eps_k^basis) = phi^k(u_k) in the
variable T = 1 + X.

Col(u) is the measure whose Mahler transform is L(g): its transform takes the
value phi^k(log u_k) - phi^k(log u_{k-1}) / p at T = eps_k^basis (with
u_0 replaced by g(0)), and (1 - phi/p) log g(0) at T = 1.  Those values pin
the level-n measure down by CRT, so no power series is needed for Col itself.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .extensions import embedding, teichmuller_generator, unram_ring
from .padic import PadicNumber
from .powerseries import GroupRingMeasure, TPoly, log_unit_series, measure_from_components

SIGNS = ("eps", "minus-eps-inverse")


class ColemanError(ValueError):
    """A unit system or Coleman series failed one of its defining checks."""


class UnitSystem:
    def __init__(self, K, units, basis=1, name="custom", params=None, closed=None, check=True):
        self.K = K
        self.units = list(units)
        self.basis = basis
        self.name = name
        self.params = dict(params or {})
        self.closed = closed
        if check:
            self.check_norms()

    @property
    def nmax(self):
        return len(self.units) - 1

    def __getitem__(self, k):
        return self.units[k]

    def norm_defects(self):
        """Digits of agreement of N(u_{k+1}) with u_k, per k."""
        return [self.units[k + 1].norm(k).agree(self.units[k]) for k in range(self.nmax)]

    def check_norms(self, tol=None):
        tol = self.K.cap - 6 if tol is None else tol
        for k, dig in enumerate(self.norm_defects()):
            if dig < tol:
                raise ColemanError(f"norm compatibility fails between levels {k + 1} and {k} ({dig} digits)")

    def galois(self, c):
        """sigma_c applied level by level."""
        return UnitSystem(self.K, [u.sigma(c) for u in self.units], self.basis,
                          f"sigma_{c}({self.name})", check=False)

    def __mul__(self, other):
        if other.basis != self.basis:
            raise ColemanError("unit systems use different bases")
        units = [a * b for a, b in zip(self.units, other.units)]
        return UnitSystem(self.K, units, self.basis, f"{self.name}*{other.name}", check=False)

    def norm_down(self, K):
        """N_{K'/K} of a system over K' containing K."""
        Kp = self.K
        emb = embedding(K, Kp)
        step = K.d
        out = []
        for u in self.units:
            prod = u
            for i in range(1, Kp.d // K.d):
                prod = prod * u.frobenius(i * step)
            out.append(emb.restrict(prod))
        return UnitSystem(K, out, self.basis, f"N({self.name})", check=False)


def eps_tower(K, nmax, basis=1):
    units = [K.one()] + [K.level(k).eps_power(basis) for k in range(1, nmax + 1)]
    g = TPoly.monomial(K, 1)
    return UnitSystem(K, units, basis, "eps-tower", {}, closed=g)


def cyclo_family(K, nmax, a=2, basis=1):
    """u_k = (eps_k^a - 1) / (eps_k - 1) in the given basis, g = 1 + T + ... + T^(a-1)."""
    if a % K.p == 0 or a < 1:
        raise ValueError("cyclotomic family needs a positive a prime to p")
    units = [K.one()]
    for k in range(1, nmax + 1):
        R = K.level(k)
        u = R.zero()
        for j in range(a):
            u = u + R.eps_power(basis * j)
        units.append(u)
    return UnitSystem(K, units, basis, "cyclo", {"a": a}, closed=TPoly.geometric(K, a))


def gamma0_family(K, nmax, kappa=None):
    """u = (1 - eps^-1)^(gamma_0 - 1): u_k = (1 - eps_k^-kappa)/(1 - eps_k^-1), basis eps^-1."""
    kappa = K.p + 1 if kappa is None else kappa
    out = cyclo_family(K, nmax, kappa, basis=-1)
    out.name, out.params = "gamma0", {"kappa": kappa}
    return out


def teich_family(K, nmax, omega=None):
    """u_k = phi^-k(omega) eps_k - 1 for a Teichmueller omega not = 1 mod p; g = omega T - 1."""
    omega = teichmuller_generator(K) if omega is None else omega
    if (omega - 1).valuation() > 0:
        raise ValueError("omega must differ from 1 modulo p")
    units = []
    for k in range(1, nmax + 1):
        R = K.level(k)
        units.append(omega.frobenius(-k).lift(k) * R.eps_power(1) - 1)
    units.insert(0, units[0].norm(0))
    g = TPoly.monomial(K, 1, omega) - 1
    return UnitSystem(K, units, 1, "teich", {}, closed=g)


FAMILIES = {
    "eps-tower": eps_tower,
    "cyclo": cyclo_family,
    "gamma0": gamma0_family,
    "teich": teich_family,
}


def family(name, K, nmax, **params):
    try:
        build = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    params = {k: v for k, v in params.items() if v is not None}
    return build(K, nmax, **params)


@dataclass
class ColemanSeries:
    poly: TPoly
    basis: int
    provenance: str
    certified: dict = field(default_factory=dict)
    offset: int = 0

    @property
    def K(self):
        return self.poly.K

    def series(self):
        return self.poly.to_series()

    def value_at_zero(self):
        return self.poly.value_at_one()

    def evaluate(self, k):
        """(phi^-k g)(eps_k^basis - 1)."""
        return self.poly.frobenius_coeffs(-k).eval_at_epsilon(k, self.K.level(max(k, 1)), self.basis)

    def record(self):
        return {"provenance": self.provenance, "basis": "eps" if self.basis == 1 else "eps^-1",
                "T_coefficients": [str(self.poly.coeff(j)) for j in range(self.poly.length)],
                "X_series": self.series().record(),
                "certified_digits": {str(k): v for k, v in self.certified.items()}}


def certify(g, us, tol=None):
    """Agreement digits of the defining property at every stored level >= 1,
    and of phi(g(0)) = g(0) * phi(N u_1) at level 0."""
    out = {}
    for k in range(1, us.nmax + 1):
        out[k] = g.evaluate(k).agree(us[k])
    if us.nmax:
        g0 = g.value_at_zero()
        out[0] = g0.frobenius().agree(g0 * us[1].norm(0).frobenius())
    g.certified = out
    if tol is not None:
        bad = {k: v for k, v in out.items() if v < tol}
        if bad:
            raise ColemanError(f"defining property fails at levels {sorted(bad)}: {bad}")
    return out


def solve_coleman(us):
    """Lagrange/CRT interpolant g in T of degree < p^n - 1 with g(eps_k^basis) = phi^k(u_k), k = 1..n.

    Among polynomials those constraints fix g up to multiples of
    (T^(p^n) - 1)/(T - 1); the degree bound picks one representative.  When the
    true Coleman series is a polynomial of smaller degree, this is it.
    """
    K, n = us.K, us.nmax
    if n < 1:
        raise ColemanError("the solver needs at least one cyclotomic level")
    comps = [K.zero()] + [us[k].frobenius(k) for k in range(1, n + 1)]
    P = measure_from_components(K, comps, us.basis).poly
    q = K.p ** n
    top = P.coeff(q - 1)
    return P - TPoly.geometric(K, q) * top


def coleman_series(us, method="auto", tol=None):
    """Closed form for built-in families (method 'closed'), else the solver."""
    if method == "auto":
        method = "closed" if us.closed is not None else "solver"
    if method == "closed":
        if us.closed is None:
            raise ColemanError(f"no closed form for {us.name}")
        g = ColemanSeries(us.closed, us.basis, f"closed:{us.name}")
    elif method == "solver":
        g = ColemanSeries(solve_coleman(us), us.basis, f"solver:{us.name}")
    else:
        raise ValueError(f"unknown method {method!r}")
    certify(g, us, tol)
    return g


def L_map(g, M=None, check=True):
    """(1/p) log(g^p / phi(g)) as a series known mod X^M."""
    if isinstance(g, ColemanSeries):
        if g.offset:
            raise ColemanError("L_map of an X^m-offset series is not supported")
        g = g.series()
    if g.offset:
        raise ColemanError("L_map of an X^m-offset series is not supported")
    p = g.p
    M = M if M is not None else (g.M if not g.exact else max(g.M, 2 * p))
    ratio = (g ** p).truncate(M) / g.phi().truncate(M)
    out = log_unit_series(ratio.truncate(M), M) * Fraction(1, p)
    if check and not out.is_zero() and out.e < 0:
        raise ColemanError(f"L(g) is not integral (valuation {out.e})")
    return out


def col_components(us, n=None, g0=None, basis=None):
    """Values of the Mahler transform of Col(u) at T = eps_k^basis, k = 0..n."""
    n = us.nmax if n is None else n
    if n > us.nmax:
        raise ColemanError(f"unit system stored only to level {us.nmax}")
    basis = us.basis if basis is None else basis
    if g0 is None:
        g0 = coleman_series(us).value_at_zero()
    p = us.K.p
    logs = [g0.log()] + [us[k].log() for k in range(1, n + 1)]
    comps = [logs[0] - logs[0].frobenius() * Fraction(1, p)]
    for k in range(1, n + 1):
        prev = logs[k - 1].lift(k)
        comps.append((logs[k] - prev * Fraction(1, p)).frobenius(k))
    return comps


def col_map(us, n=None, sign=None, g0=None):
    """The level-n Coleman measure.

    sign=None uses the system's own basis.  'eps' demands basis eps;
    'minus-eps-inverse' demands basis eps^-1 and negates, which is the
    sign-corrected map used in the exact sequence with eps^-1.
    """
    basis, factor = us.basis, 1
    if sign == "eps":
        if us.basis != 1:
            raise ColemanError("sign 'eps' needs a unit system in the eps basis")
    elif sign == "minus-eps-inverse":
        if us.basis != -1:
            raise ColemanError("sign 'minus-eps-inverse' needs a unit system in the eps^-1 basis")
        factor = -1
    elif sign is not None:
        raise ValueError(f"sign must be one of {SIGNS}")
    comps = col_components(us, n, g0, basis)
    mu = measure_from_components(us.K, comps, basis)
    mu = mu * factor if factor != 1 else mu
    return GroupRingMeasure(mu.K, mu.n, mu.poly, units_only=False)


def integrality_digits(mu):
    """Smallest valuation among measure values (>= 0 means integral)."""
    return mu.poly.valuation()


def unit_support_digits(mu):
    """Digits to which mu vanishes on p Z / p^n (psi = 0 on the transform)."""
    p = mu.p
    worst = mu.poly.prec
    for a in range(0, p ** mu.n, p):
        worst = min(worst, mu.value(a).valuation())
    return worst


def pi_map(mu):
    """Tr_{K/Q_p} sum mu(a) a with a in [0, p^n); known modulo p^n."""
    m = mu.moment()
    tr = m
    for k in range(1, m.ring.d):
        tr = tr + m.frobenius(k)
    val = tr.to_padic()
    return PadicNumber(val.p, val.v, val.u, min(val.N, mu.n + mu.poly.valuation()))


def pi_of_col_series(g, M=None):
    """Tr((D L(g))(0)), the series-side value of pi(Col(u)); it is 0 for Coleman series."""
    L = L_map(g, M if M is not None else 2 * g.K.p)
    c = L.D().coeff(0)
    tr = c
    for k in range(1, c.ring.d):
        tr = tr + c.frobenius(k)
    return tr.to_padic()


def pi_of_dirac(K, n, a, c=1):
    return pi_map(GroupRingMeasure.dirac(K, n, a, c))


def trace_measure(mu, K):
    """Tr_{K'/K} of every value of a measure over K' containing K."""
    Kp = mu.K
    emb = embedding(K, Kp)
    vals = {}
    for a in range(mu.p ** mu.n):
        v = mu.value(a)
        if v.is_zero():
            continue
        tot = v
        for i in range(1, Kp.d // K.d):
            tot = tot + v.frobenius(i * K.d)
        vals[a] = emb.restrict(tot)
    return GroupRingMeasure.from_values(K, mu.n, vals)


def check_trace_compat(us_big, K, n=None):
    """(digits, lhs, rhs) for Tr_{K'/K} Col_{K'}(u') against Col_K(N u')."""
    n = us_big.nmax if n is None else n
    lhs = trace_measure(col_map(us_big, n), K)
    normed = us_big.norm_down(K)
    rhs = col_map(normed, n, g0=coleman_series(normed, "solver").value_at_zero())
    return lhs.agree(rhs), lhs, rhs


def gamma0_augmentation(p, kappa, N=20, guard=10, nmax=1, sign=None):
    """(augmentation of Col over eps^-1 for (1 - eps^-1)^(gamma_0 - 1), (1 - 1/p) log kappa)."""
    K = unram_ring(p, 1, N + guard)
    us = gamma0_family(K, nmax, kappa)
    g0 = us.closed.value_at_one()
    mu = col_map(us, nmax, sign=sign, g0=g0)
    aug = mu.augmentation().to_padic()
    direct = K.scalar(kappa).to_padic().log() * Fraction(p - 1, p)
    return aug, direct


def gamma0_augmentation_check(p, kappa, N=20, guard=10):
    """Digits for the augmentation value and for the sign flip of the corrected convention."""
    aug, direct = gamma0_augmentation(p, kappa, N, guard)
    flipped, _ = gamma0_augmentation(p, kappa, N, guard, sign="minus-eps-inverse")
    return {"value": aug, "expected": direct,
            "digits": min((aug - direct).valuation(), N),
            "flip_digits": min((flipped + direct).valuation(), N)}

