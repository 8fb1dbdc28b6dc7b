"""Command-line front end: `coleps <command> [options]`, JSON lines on stdout or --out."""

import json
import sys
import time
from dataclasses import dataclass, field

import click

from . import verify
from .characters import Character, gauss_sum
from .coleman import SIGNS, FAMILIES, ColemanError, col_map, coleman_series, family, integrality_digits, unit_support_digits
from .epsilon import CONVENTIONS, cohomology_dims, eps_report
from .extensions import unram_ring

GUARD = verify.GUARD


class ConfigError(click.UsageError):
    """Invalid run configuration (exit code 2)."""


@dataclass
class RunConfig:
    primes: tuple = (3,)
    degrees: tuple = (1,)
    N: int = 20
    M: int = None
    nmax: int = 2
    suites: tuple = ()
    sign: str = "eps"
    convention: str = "arithmetic"
    out: str = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.N < 8:
            raise ConfigError(f"precision N must be >= 8 (got {self.N})")
        if self.nmax < 0:
            raise ConfigError("nmax must be >= 0")
        for p in self.primes:
            if p < 3 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
                raise ConfigError(f"p must be an odd prime (got {p})")
        for d in self.degrees:
            if d < 1:
                raise ConfigError("degree must be >= 1")
        need = max(p ** self.nmax + p for p in self.primes)
        if self.M is None:
            self.M = need
        elif self.M < need:
            raise ConfigError(f"truncation M must be >= p^nmax + p = {need} (got {self.M})")
        if self.sign not in SIGNS:
            raise ConfigError(f"sign must be one of {SIGNS}")
        if self.convention not in CONVENTIONS:
            raise ConfigError(f"eps convention must be one of {CONVENTIONS}")


def parse_char(p, text, r=0):
    """'unram:tame:wild_level:wild_exp' (missing trailing fields are 0)."""
    if not text:
        return Character(p, r=r)
    try:
        parts = [int(x) for x in text.replace(",", ":").split(":")]
    except ValueError:
        raise ConfigError(f"bad character spec {text!r}; use unram:tame:wild_level:wild_exp") from None
    if len(parts) > 4:
        raise ConfigError(f"bad character spec {text!r}")
    parts += [0] * (4 - len(parts))
    return Character(p, *parts, r=r)


class Writer:
    def __init__(self, path):
        self.fh = open(path, "w") if path else sys.stdout

    def emit(self, rec):
        self.fh.write(json.dumps(rec, sort_keys=True, default=str) + "\n")
        self.fh.flush()

    def close(self):
        if self.fh is not sys.stdout:
            self.fh.close()


def common(f):
    opts = [
        click.option("--p", "primes", type=int, multiple=True, help="prime(s); repeatable"),
        click.option("--deg", "degrees", type=int, multiple=True, help="unramified degree(s); repeatable"),
        click.option("--prec", "N", type=int, default=20, show_default=True, help="p-adic precision N"),
        click.option("--xtrunc", "M", type=int, default=None, help="X-adic truncation M"),
        click.option("--nmax", type=int, default=2, show_default=True, help="top cyclotomic level"),
        click.option("--sign", type=click.Choice(SIGNS), default="eps", show_default=True),
        click.option("--eps-convention", "convention", type=click.Choice(CONVENTIONS), default="arithmetic",
                     show_default=True),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="write JSON lines here"),
    ]
    for o in reversed(opts):
        f = o(f)
    return f


def make_config(primes, degrees, N, M, nmax, sign, convention, out, default_primes=(3,), **extra):
    return RunConfig(tuple(primes) or default_primes, tuple(degrees) or (1,), N, M, nmax,
                     sign=sign, convention=convention, out=out, extra=extra)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Coleman maps, local epsilon constants and descent checks over p-adic fields."""


@main.command()
@common
@click.option("--family", "fam", type=click.Choice(sorted(FAMILIES)), default="eps-tower", show_default=True)
@click.option("--a", "a", type=int, default=None, help="exponent for the cyclo family")
@click.option("--kappa", type=int, default=None, help="kappa(gamma_0) for the gamma0 family")
@click.option("--method", type=click.Choice(["auto", "closed", "solver"]), default="auto", show_default=True)
def coleman(fam, a, kappa, method, **kw):
    """Coleman series of a built-in unit system, with its certificate."""
    cfg = make_config(**kw)
    out = Writer(cfg.out)
    ok = True
    for p in cfg.primes:
        for d in cfg.degrees:
            K = unram_ring(p, d, cfg.N + GUARD)
            us = family(fam, K, cfg.nmax, a=a if fam == "cyclo" else None,
                        kappa=kappa if fam == "gamma0" else None)
            g = coleman_series(us, method)
            digits = {k: min(v, cfg.N) for k, v in g.certified.items()}
            good = all(v >= cfg.N - 4 for v in digits.values())
            ok &= good
            rec = {"command": "coleman", "params": {"p": p, "d": d, "family": fam, "nmax": cfg.nmax,
                                                    **us.params},
                   "series": g.record(), "certificate": {str(k): v for k, v in sorted(digits.items())},
                   "pass": good}
            out.emit(rec)
    out.close()
    sys.exit(0 if ok else 1)


@main.command()
@common
@click.option("--family", "fam", type=click.Choice(sorted(FAMILIES)), default="cyclo", show_default=True)
@click.option("--a", "a", type=int, default=None)
@click.option("--kappa", type=int, default=None)
@click.option("--level", type=int, default=None, help="level n of the measure (default nmax)")
def colmap(fam, a, kappa, level, **kw):
    """The Coleman measure Col(u) at level n."""
    cfg = make_config(**kw)
    out = Writer(cfg.out)
    n = cfg.nmax if level is None else level
    if n > cfg.nmax or n < 1:
        raise ConfigError("level must lie in 1..nmax")
    for p in cfg.primes:
        for d in cfg.degrees:
            K = unram_ring(p, d, cfg.N + GUARD)
            basis = -1 if cfg.sign == "minus-eps-inverse" else 1
            params = {"a": a} if fam == "cyclo" else {"kappa": kappa} if fam == "gamma0" else {}
            if fam in ("eps-tower", "cyclo"):
                params["basis"] = basis
            us = family(fam, K, cfg.nmax, **params)
            try:
                mu = col_map(us, n, sign=cfg.sign)
            except ColemanError as err:
                raise ConfigError(str(err)) from None
            out.emit({"command": "colmap", "params": {"p": p, "d": d, "family": fam, "n": n, "sign": cfg.sign,
                                                      **us.params},
                      "measure": mu.record(), "augmentation": str(mu.augmentation()),
                      "min_valuation": integrality_digits(mu),
                      "unit_support_digits": min(unit_support_digits(mu), cfg.N)})
    out.close()


@main.command()
@common
@click.option("--char", "char", default="", help="unram:tame:wild_level:wild_exp")
@click.option("--level", type=int, default=None, help="n in tau(rho, eps_n); default a(rho)")
def gauss(char, level, **kw):
    """Gauss sum tau(rho, eps_n) and the product identity."""
    cfg = make_config(**kw)
    out = Writer(cfg.out)
    ok = True
    for p in cfg.primes:
        rho = parse_char(p, char)
        n = rho.conductor if level is None else level
        if n < rho.conductor:
            raise ConfigError(f"level {n} below conductor exponent {rho.conductor}")
        R = unram_ring(p, 1, cfg.N + GUARD).level(max(n, 1))
        tau = gauss_sum(rho, n, R)
        rec = {"command": "gauss", "params": {"p": p, "rho": str(rho), "n": n}, "tau": str(tau)}
        if n and n == rho.conductor:
            prod = tau * gauss_sum(rho.inverse(), n, R)
            good = (prod - rho.sign() * p ** n).is_zero()
            rec.update(product=str(prod), expected=rho.sign() * p ** n, **{"pass": good})
            ok &= good
        out.emit(rec)
    out.close()
    sys.exit(0 if ok else 1)


@main.command()
@common
@click.option("--char", "char", default="", help="unram:tame:wild_level:wild_exp")
@click.option("--eta", type=int, default=0, help="exponent of the unramified twist eta")
@click.option("--r", "r", type=int, default=1, show_default=True, help="Tate twist r")
@click.option("--level", type=int, default=None)
def eps(char, eta, r, level, **kw):
    """Epsilon report for W = L(rho eta)(r)."""
    cfg = make_config(**kw)
    out = Writer(cfg.out)
    for p in cfg.primes:
        rho = parse_char(p, char)
        rep = eps_report(rho, Character(p, eta), r, level, cfg.N, cfg.convention)
        out.emit({"command": "eps", "params": {"p": p, "convention": cfg.convention}, "report": rep.record()})
    out.close()


@main.command()
@common
@click.option("--char", "char", default="")
@click.option("--eta", type=int, default=0)
@click.option("--r", "r", type=int, default=1, show_default=True)
def dims(char, eta, r, **kw):
    """Dimensions of local cohomology and D_cris for W = L(rho eta)(r)."""
    cfg = make_config(**kw)
    out = Writer(cfg.out)
    for p in cfg.primes:
        rho = parse_char(p, char)
        out.emit({"command": "dims", "params": {"p": p, "rho": str(rho), "eta": eta, "r": r},
                  "dims": cohomology_dims(rho, Character(p, eta), r)})
    out.close()


SUITE_DEFAULT_PRIMES = {"augmentation": (3, 5, 7), "gauss": (3, 5, 7), "exceptional": (3, 5, 7)}


@main.command("verify")
@common
@click.option("--suite", "suites", type=click.Choice(verify.SUITES + tuple(verify.ALIASES) + ("all",)), multiple=True,
              default=("all",), show_default=True)
@click.option("--samples", type=int, default=None, help="random inputs per point (operators, xi)")
def verify_cmd(suites, samples, **kw):
    """Run verification suites; exit 0 iff every check passes."""
    explicit_primes = bool(kw["primes"])
    cfg = make_config(**kw, default_primes=(3, 5))
    names = verify.SUITES if "all" in suites else tuple(dict.fromkeys(verify.ALIASES.get(s, s) for s in suites))
    out = Writer(cfg.out)
    t = time.perf_counter()
    recs = []
    for name in names:
        primes = cfg.primes if explicit_primes else SUITE_DEFAULT_PRIMES.get(name, cfg.primes)
        opts = {"primes": primes, "degrees": cfg.degrees, "N": cfg.N}
        if name in ("coleman", "trace", "integrality"):
            opts["nmax"] = max(cfg.nmax, 1)
        if name == "operators":
            opts.update(prec=cfg.N, count=samples or 100)
            if kw["M"] is not None:
                opts["M"] = cfg.M
        if name == "xi":
            opts["count"] = samples or 50
        for rec in verify.run_suite(name, **opts):
            recs.append(rec)
            out.emit(rec)
    summary = verify.summarize(recs)
    summary["elapsed_s"] = round(time.perf_counter() - t, 3)
    out.emit(summary)
    out.close()
    sys.exit(0 if summary["failed"] == 0 else 1)


if __name__ == "__main__":
    main()
