"""Verification suites shared by the CLI and the acceptance tests.

Every suite is a generator of flat records
{suite, params, lhs, rhs, agree_digits, tol, pass}; digits are capped at N.
"""

import time

from .characters import Character, characters_of_conductor_dividing, gauss_sum, gauss_sum_basis_change
from .coleman import (FAMILIES, L_map, check_trace_compat, col_map, coleman_series, cyclo_family,
                      family, gamma0_augmentation_check, pi_of_col_series, teich_family, unit_support_digits)
from .descent import (DescentError, LatticeM, commutative_grid, random_admissible, sample_rng,
                      verify_descent_square, xi_closed, xi_solver)
from .epsilon import exceptional_qp1_compare
from .extensions import unram_ring
from .powerseries import TruncSeries

GUARD = 10

# acceptance tolerance as digits lost from N
LOSS = {"descent": 5, "augmentation": 3, "coleman": 4, "trace": 4, "gauss": None,
        "exceptional": 2, "operators": None, "integrality": 4, "xi": 5}

# names used by older command lines
ALIASES = {"commutative": "descent", "lemma": "augmentation"}

SUITES = ("descent", "augmentation", "coleman", "trace", "gauss", "exceptional",
          "operators", "integrality", "xi")


def text(x):
    if x is None:
        return None
    if hasattr(x, "tag") and hasattr(x, "value"):
        x = x.value
    return str(x)


def record(suite, params, lhs, rhs, digits, tol):
    return {"suite": suite, "params": params, "lhs": text(lhs), "rhs": text(rhs),
            "agree_digits": digits, "tol": tol, "pass": digits >= tol}


def _tol(suite, N):
    return N - LOSS[suite]


# criterion-by-criterion suites

def suite_descent(primes=(3, 5), degrees=(1, 2), N=20, **_):
    tol = _tol("descent", N)
    for p, d_K, eta, r, rho, n in commutative_grid(primes, degrees):
        rep = verify_descent_square(p, d_K, eta, r, rho, n, N, GUARD)
        yield record("descent", rep["params"], rep["lhs"], rep["rhs"], rep["digits"], tol)


def gamma0_kappas(p):
    from ._arith import primitive_root
    return [1 + p, (1 + p) ** 2, primitive_root(p) * (1 + p)]


def suite_augmentation(primes=(3, 5, 7), N=20, **_):
    tol = _tol("augmentation", N)
    for p in primes:
        for kappa in gamma0_kappas(p):
            rep = gamma0_augmentation_check(p, kappa, N, GUARD)
            params = {"p": p, "kappa": kappa}
            yield record("augmentation", params, rep["value"], rep["expected"], rep["digits"], tol)
            yield record("augmentation", dict(params, sign="minus-eps-inverse"), -rep["value"],
                         rep["expected"], rep["flip_digits"], tol)


def suite_coleman(primes=(3, 5), degrees=(1, 2), N=20, nmax=3, **_):
    """Defining property of closed forms and solver output, every family, levels <= nmax."""
    tol = _tol("coleman", N)
    for p in primes:
        for d in degrees:
            K = unram_ring(p, d, N + GUARD)
            for name in FAMILIES:
                us = family(name, K, nmax)
                for method in ("closed", "solver"):
                    g = coleman_series(us, method)
                    for k in range(1, nmax + 1):
                        dig = min(g.certified[k], N)
                        yield record("coleman", {"p": p, "d": d, "family": name, "method": method,
                                                 "level": k}, g.evaluate(k), us[k], dig, tol)


def suite_trace(primes=(3, 5), N=20, nmax=2, **_):
    """Tr o Col = Col o N for d' = 2 over d = 1."""
    tol = _tol("trace", N)
    for p in primes:
        K, Kp = unram_ring(p, 1, N + GUARD), unram_ring(p, 2, N + GUARD)
        for name, build in (("cyclo", cyclo_family), ("teich", teich_family)):
            dig, lhs, rhs = check_trace_compat(build(Kp, nmax), K)
            yield record("trace", {"p": p, "family": name, "n": nmax},
                         lhs.record()["values"], rhs.record()["values"], min(dig, N), tol)


def suite_gauss(primes=(3, 5, 7), N=20, **_):
    """Exact identities: digits must reach the full working precision."""
    for p in primes:
        cap = N + GUARD
        for n in (1, 2):
            R = unram_ring(p, 1, cap).level(n)
            for rho in characters_of_conductor_dividing(p, n):
                if rho.conductor != n:
                    continue
                key = list(rho.key()[:4])
                lhs = gauss_sum(rho, n, R) * gauss_sum(rho.inverse(), n, R)
                rhs = R.one() * (rho.sign() * p ** n)
                yield record("gauss", {"p": p, "n": n, "rho": key, "identity": "product"},
                             lhs, rhs, lhs.agree(rhs), cap)
                for c in (2, -1):
                    lhs, rhs = gauss_sum_basis_change(rho, n, R, c)
                    yield record("gauss", {"p": p, "n": n, "rho": key, "identity": f"basis-change c={c}"},
                                 lhs, rhs, lhs.agree(rhs), cap)
        R = unram_ring(p, 1, cap).level(1)
        tau = gauss_sum(Character(p), 1, R)
        yield record("gauss", {"p": p, "n": 1, "rho": [0, 0, 0, 0], "identity": "trivial"},
                     tau, -R.one(), tau.agree(-R.one()), cap)


def suite_exceptional(primes=(3, 5, 7), N=20, **_):
    tol = _tol("exceptional", N)
    for p in primes:
        rep = exceptional_qp1_compare(p, N)
        yield record("exceptional", {"p": p}, rep["ratio"], 1, rep["digits"], tol)


def random_series(K, M, rng, prec=20):
    """A random integral series known mod X^M to prec digits."""
    mod = K.p ** prec
    rows = [[rng.randrange(mod) for _ in range(K.d)] for _ in range(M)]
    return TruncSeries(K, rows, 0, prec, M=M)


def operator_checks(f, g, kappa):
    """(name, lhs, rhs) for the four operator identities."""
    p = f.p
    pf = f.phi()
    return [("psi-phi", pf.psi(), f),
            ("projection", (pf * g).psi(), f * g.psi()),
            ("D-phi", pf.D(), f.D().phi() * p),
            ("D-gamma", f.gamma(kappa).D(), f.D().gamma(kappa) * kappa)]


def _tracked(a, b):
    """Digits both sides are known to, over their common truncation."""
    return min(a.prec, b.prec)


def suite_operators(primes=(3, 5), count=100, M=None, prec=20, rng=None, degrees=(1,), **_):
    rng = sample_rng() if rng is None else rng
    for p in primes:
        for d in degrees:
            K = unram_ring(p, d, prec + GUARD)
            Mt = M or p * (prec + 4)
            for i in range(count):
                f, g = random_series(K, Mt, rng, prec), random_series(K, Mt, rng, prec)
                kappa = rng.choice([c for c in range(2, p * p) if c % p])
                for name, lhs, rhs in operator_checks(f, g, kappa):
                    need = _tracked(lhs, rhs)
                    yield record("operators", {"p": p, "d": d, "sample": i, "identity": name,
                                               "M": min(lhs.M, rhs.M), "kappa": kappa},
                                 None, None, lhs.agree(rhs), need)


def suite_integrality(primes=(3, 5), degrees=(1, 2), N=20, nmax=2, **_):
    """L(g) integral, Col(eps tower) = 0, pi o Col = 0, Col supported on units."""
    tol = _tol("integrality", N)
    for p in primes:
        for d in degrees:
            K = unram_ring(p, d, N + GUARD)
            for name in FAMILIES:
                us = family(name, K, nmax)
                g = coleman_series(us)
                base = {"p": p, "d": d, "family": name}
                L = L_map(g, 4 * p, check=False)
                val = L.valuation()
                yield record("integrality", dict(base, check="L-integral"), val, 0,
                             N if val >= 0 else val, tol)
                pi = pi_of_col_series(g)
                yield record("integrality", dict(base, check="pi-col"), pi, 0,
                             min(pi.valuation(), N), tol)
                mu = col_map(us, nmax)
                yield record("integrality", dict(base, check="unit-support"), None, None,
                             min(unit_support_digits(mu), N), tol)
                if name == "eps-tower":
                    yield record("integrality", dict(base, check="col-iota-eps"), None, 0,
                                 min(mu.poly.valuation(), N), tol)


def xi_points(primes=(3, 5), degrees=(1, 2)):
    for p in primes:
        for d in degrees:
            for order in (1, 2):
                eta = Character(p, 0 if order == 1 else (p - 1) // 2)
                for r in (1, 2, 3):
                    for n in (1, 2):
                        yield p, d, eta, r, n


def suite_xi(primes=(3, 5), degrees=(1, 2), N=20, count=50, rng=None, length=6, **_):
    tol = _tol("xi", N)
    rng = sample_rng() if rng is None else rng
    for p, d, eta, r, n in xi_points(primes, degrees):
        try:
            M = LatticeM.build(p, d, eta, r, N + GUARD)
        except DescentError:
            continue
        for i in range(count):
            f = random_admissible(M.ring, length, rng)
            a, b = xi_solver(f, M, n), xi_closed(f, M, n)
            yield record("xi", {"p": p, "d": d, "eta": eta.unram, "r": r, "n": n, "sample": i},
                         a, b, min(a.agree(b), N), tol)


RUNNERS = {
    "descent": suite_descent,
    "augmentation": suite_augmentation,
    "coleman": suite_coleman,
    "trace": suite_trace,
    "gauss": suite_gauss,
    "exceptional": suite_exceptional,
    "operators": suite_operators,
    "integrality": suite_integrality,
    "xi": suite_xi,
}


def run_suite(name, **kw):
    return RUNNERS[ALIASES.get(name, name)](**kw)


def summarize(records, elapsed=None):
    """Counts per suite and the minimum agreement digits."""
    out = {"summary": True, "total": 0, "passed": 0, "failed": 0, "suites": {}}
    for rec in records:
        s = out["suites"].setdefault(rec["suite"], {"total": 0, "failed": 0, "min_digits": None})
        s["total"] += 1
        out["total"] += 1
        md = s["min_digits"]
        s["min_digits"] = rec["agree_digits"] if md is None else min(md, rec["agree_digits"])
        if rec["pass"]:
            out["passed"] += 1
        else:
            s["failed"] += 1
            out["failed"] += 1
    if elapsed is not None:
        out["elapsed_s"] = round(elapsed, 3)
    return out


def run_all(suites, **kw):
    """All records of the chosen suites followed by the summary."""
    t = time.perf_counter()
    recs = []
    for name in suites:
        recs.extend(run_suite(name, **kw))
    return recs, summarize(recs, time.perf_counter() - t)


__all__ = ["SUITES", "RUNNERS", "run_suite", "run_all", "summarize", "record", "random_series",
           "operator_checks", "gamma0_kappas", "xi_points"]
