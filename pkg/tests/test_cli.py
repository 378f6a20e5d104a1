"""CLI contract: exit codes, JSON output shape, determinism."""

import json

import pytest

from cusplab.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_gauss(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gauss", "--qmax", "13")
    assert code == 0
    assert "gauss" in out and "PASS" in out


def test_verify_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--suite", "classify", "--qmax", "5", "--json")
    code2, out2, _ = run(capsys, "verify", "--suite", "classify", "--qmax", "5", "--json")
    assert code1 == code2 == 0
    d1, d2 = json.loads(out1), json.loads(out2)
    for d in (d1, d2):
        d["reports"][0].pop("wall_time")
    assert d1 == d2
    r = d1["reports"][0]
    assert r["suite"] == "classify" and r["failures"] == [] and r["cases"] > 0


def test_jordan_examples(capsys):
    code, out, _ = run(capsys, "jordan", "--n", "2", "--q", "3", "--chi", "+1")
    assert code == 0
    assert "-i" in out and "-1" in out
    code, out, _ = run(capsys, "jordan", "--n", "1", "--q", "5", "--chi", "-1", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["eps1_on_norms"] == "+1"
    assert set(d) == {
        "N",
        "q",
        "chi_m1",
        "eps1_on_norms",
        "tau_beta",
        "reducibility_points",
        "eps_product",
    }
    assert d["tau_beta"] in ("1", "i", "-1", "-i")


def test_jordan_json_roundtrip(capsys):
    code, out, _ = run(capsys, "jordan", "--n", "2", "--q", "7", "--chi", "-1", "--json")
    assert code == 0
    d = json.loads(out)
    assert json.loads(json.dumps(d)) == d


def test_hecke_cases(capsys):
    code, out, _ = run(
        capsys, "hecke", "--case", "gl2n-b1", "--q", "3", "--n", "2", "--delta", "quadratic"
    )
    assert code == 0
    assert "PASS" in out and "i" in out
    code, out, _ = run(
        capsys, "hecke", "--case", "gl2n-b1", "--q", "3", "--n", "2", "--delta", "trivial"
    )
    assert code == 0
    assert "no reducibility at 1" in out
    code, out, _ = run(capsys, "hecke", "--case", "gl1-b0", "--q", "5", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["reduction_pass"] is True
    code, out, _ = run(capsys, "hecke", "--case", "gl2n-b0", "--q", "7", "--chi", "-1")
    assert code == 0


def test_gauss_command(capsys):
    code, out, _ = run(capsys, "gauss", "--q", "7", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["xi"] == "i" and d["abs_squared"] == "7"


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "--q", "5", "--n", "2", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["orbit_count"] == 8 and d["cuspidal_count"] == 16
    assert len(d["representatives"]) == 8


def test_exit_code_usage(capsys):
    assert main(["jordan", "--n", "2"]) == 2  # missing --q
    assert main(["verify", "--suite", "nonsense"]) == 2
    assert main(["jordan", "--n", "0", "--q", "3"]) == 2
    assert main(["gauss", "--q", "4"]) == 2


def test_exit_code_budget(capsys):
    code = main(
        ["hecke", "--case", "gl2n-b1", "--q", "7", "--n", "3", "--budget", "100"]
    )
    assert code == 3
