import json

import pytest
from click.testing import CliRunner

from coleps import verify
from coleps.cli import main


def run(*args):
    res = CliRunner().invoke(main, list(args))
    lines = [json.loads(s) for s in res.output.splitlines() if s.startswith("{")]
    return res.exit_code, lines, res.output


def test_coleman_eps_tower():
    code, (rec,), _ = run("coleman", "--family", "eps-tower")
    assert code == 0 and rec["pass"]
    coeffs = rec["series"]["X_series"]["coefficients"]
    assert len(coeffs) == 2 and coeffs[0] == coeffs[1] == ["(1) + O(3^30)"]


def test_coleman_gamma0_kappa6():
    code, (rec,), _ = run("coleman", "--family", "gamma0", "--kappa", "6", "--p", "5")
    assert code == 0 and rec["params"]["kappa"] == 6
    assert len(rec["series"]["T_coefficients"]) == 6


def test_coleman_cyclo_three_levels():
    code, (rec,), _ = run("coleman", "--family", "cyclo", "--a", "2", "--p", "5", "--nmax", "3")
    assert code == 0
    assert set(rec["certificate"]) == {"0", "1", "2", "3"}
    assert min(rec["certificate"].values()) >= 16


def test_colmap_minus_eps_inverse():
    code, (rec,), _ = run("colmap", "--family", "gamma0", "--p", "5", "--level", "1", "--sign", "minus-eps-inverse")
    assert code == 0 and rec["unit_support_digits"] >= 16
    code, _, out = run("colmap", "--family", "gamma0", "--p", "5", "--sign", "eps")
    assert code == 2


def test_gauss_command():
    code, (rec,), _ = run("gauss", "--p", "7", "--char", "0:1:1:3")
    assert code == 0 and rec["pass"] and rec["expected"] == -49


def test_eps_examples():
    _, (rec,), _ = run("eps", "--p", "5", "--r", "1")
    assert rec["report"]["exceptional"] is True
    _, (rec,), _ = run("eps", "--p", "5", "--char", "0:2", "--r", "1")
    assert rec["report"]["level"] == 1 and rec["report"]["gauss_sum"] is not None
    _, (rec,), _ = run("eps", "--p", "5", "--r", "2")
    assert rec["report"]["euler_ratio"] == "-25/6"
    assert rec["report"]["eps_constant"]["coefficients"][0][0].startswith("(1)")


def test_dims_command():
    _, (rec,), _ = run("dims", "--p", "3", "--r", "0")
    assert rec["dims"]["h0"] == 1 and rec["dims"]["exceptional"]


def test_verify_gauss_and_exceptional():
    code, recs, _ = run("verify", "--suite", "gauss", "--p", "5")
    assert code == 0 and recs[-1]["summary"] and recs[-1]["failed"] == 0
    code, recs, _ = run("verify", "--suite", "exceptional", "--p", "5", "--prec", "20")
    assert code == 0 and recs[0]["agree_digits"] >= 18


@pytest.mark.parametrize("args", [("--prec", "5"), ("--p", "3", "--nmax", "3", "--xtrunc", "10"), ("--p", "4")])
def test_config_errors_exit_2(args):
    code, _, _ = run("verify", "--suite", "exceptional", *args)
    assert code == 2


def test_bad_character_exit_2():
    assert run("gauss", "--p", "5", "--char", "a:b")[0] == 2


def test_failure_exit_1(monkeypatch):
    def broken(**_):
        yield verify.record("exceptional", {}, 1, 2, 0, 18)
    monkeypatch.setitem(verify.RUNNERS, "exceptional", broken)
    code, recs, _ = run("verify", "--suite", "exceptional", "--p", "5")
    assert code == 1 and recs[-1]["failed"] == 1


def test_output_is_deterministic(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.jsonl"
        code, _, _ = run("verify", "--suite", "augmentation", "--suite", "xi", "--p", "3", "--samples", "3",
                         "--out", str(path))
        assert code == 0
        recs = [json.loads(s) for s in path.read_text().splitlines()]
        recs[-1].pop("elapsed_s")
        outs.append(recs)
    assert outs[0] == outs[1]
