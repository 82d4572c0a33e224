import json

import pytest

from darboux_ladder.cli import main

CHARLIER = ["--family", "charlier", "--param", "mu=1"]
HAHN = ["--family", "hahn", "--param", "alpha=0", "--param", "beta=0", "--param", "N=3"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_charlier(capsys):
    code, out, _ = run(capsys, "verify", *CHARLIER, "--n-max", "12")
    assert code == 0
    assert out.rstrip().endswith("status: pass")


def test_verify_hahn_skips_degenerate_cell(capsys):
    code, out, _ = run(capsys, "verify", *HAHN, "--n-max", "6", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    checks = {c["name"]: c for c in report["checks"]}
    assert checks["factorization"]["skipped"] == 1
    assert checks["roundtrip"]["skipped"] == 1
    assert [c["name"] for c in report["checks"]] == [
        "factorization",
        "split_system",
        "swap",
        "eigenvalue_shift",
        "riccati",
        "commutation",
        "gauge",
        "ladder",
        "roundtrip",
        "lowering_law",
        "pairing",
        "chain",
        "reference",
    ]
    assert "elapsed_ms" not in report


def test_verify_strict_fails_on_degenerate_cell(capsys):
    code, _, _ = run(capsys, "verify", *HAHN, "--n-max", "2", "--strict")
    assert code == 1


def test_verify_kravchuk_and_custom(capsys):
    code, _, _ = run(capsys, "verify", "--family", "kravchuk", "--param", "p=1/2", "--param", "N=8", "--n-max", "10")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--family", "custom", "--sigma", "0,1,0", "--tau=-1,1", "--n-max", "4", "--json")
    assert code == 0
    assert json.loads(out)["params"] == {"s0": "0", "s1": "1", "s2": "0", "t0": "-1", "t1": "1"}


COLLIDING = ["--family", "custom", "--sigma", "1,0,0", "--tau=-1,0"]


def test_verify_repeated_eigenvalue_skips(capsys):
    code, out, _ = run(capsys, "verify", *COLLIDING, "--n-max", "5", "--json")
    assert code == 0
    checks = {c["name"]: c for c in json.loads(out)["checks"]}
    assert all(c["failed"] == 0 for c in checks.values())
    ladder = {o["cell"]: o["status"] for o in checks["ladder"]["outcomes"]}
    assert ladder == {"n=0": "pass", "n=1": "skip", "n=2": "skip", "n=3": "pass", "n=4": "pass"}
    assert checks["gauge"]["skipped"] == 1

    code, _, _ = run(capsys, "verify", *COLLIDING, "--n-max", "5", "--strict")
    assert code == 1


def test_generate_repeated_eigenvalue_exits_2(capsys):
    code, out, err = run(capsys, "generate", *COLLIDING, "--n-max", "3")
    assert code == 2
    assert out == ""
    assert "coincides with lambda(0)" in err


def test_verify_single_branch_skips_paired_checks(capsys):
    code, out, _ = run(capsys, "verify", *CHARLIER, "--n-max", "3", "--branch", "1", "--strict", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["branches"] == [1]
    checks = {c["name"]: c for c in report["checks"]}
    assert checks["ladder"]["passed"] == 3
    assert checks["factorization"]["passed"] == 4
    for name in ("roundtrip", "pairing", "lowering_law"):
        assert checks[name]["passed"] == 0
        assert checks[name]["skipped"] == 3
        assert {o["detail"] for o in checks[name]["outcomes"]} == {"needs branch 2"}


def test_verify_meixner_reports_misprint(capsys):
    code, out, _ = run(capsys, "verify", "--family", "meixner", "--param", "gamma=1/2", "--param", "mu=1/3", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["reference"]["discrepancies"] == ["g1"]


@pytest.mark.parametrize("fault", ["f", "g", "lambda"])
def test_verify_fault_injection_fails(capsys, fault):
    code, out, _ = run(capsys, "verify", *CHARLIER, "--n-max", "3", "--inject-fault", fault)
    assert code == 1
    assert "status: fail" in out


def test_verify_deterministic(capsys):
    _, first, _ = run(capsys, "verify", *HAHN, "--n-max", "5", "--json")
    _, second, _ = run(capsys, "verify", *HAHN, "--n-max", "5", "--json")
    assert first == second


def test_verify_timing(capsys):
    _, out, _ = run(capsys, "verify", *CHARLIER, "--n-max", "2", "--json", "--timing")
    assert "elapsed_ms" in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--family", "charlier", "--param", "mu=0"],
        ["verify", "--family", "charlier", "--param", "mu=0.5"],
        ["verify", "--family", "charlier", "--param", "mu=1", "--param", "mu=2"],
        ["verify", "--family", "charlier"],
        ["verify", "--family", "custom", "--sigma", "0,1,0"],
        ["verify", "--family", "charlier", "--param", "mu=1", "--n-max", "-1"],
        ["ladder", *CHARLIER, "--n", "0", "--direction", "down"],
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_factorize_charlier(capsys):
    code, out, _ = run(capsys, "factorize", *CHARLIER, "--n", "2", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["f"] == [2, -1]
    assert record["g"] == [-1]
    assert record["mu"] == "3"
    assert (record["phi"], record["psi"]) == ("-1", "2")
    assert sorted(record["checks"]) == ["commutation", "factorization", "riccati", "swap"]
    assert all(record["checks"].values())
    assert record["notes"] == []


def test_factorize_hahn(capsys):
    code, out, _ = run(capsys, "factorize", *HAHN, "--n", "1", "--json")
    assert code == 0
    record = json.loads(out)
    assert (record["phi"], record["psi"], record["mu"]) == ("-2", "2", "5")
    assert record["f"] == [1, -3, 1]


def test_factorize_both_branches_text(capsys):
    code, out, _ = run(capsys, "factorize", *CHARLIER, "--n", "2", "--branch", "both")
    assert code == 0
    assert "branch=1" in out and "branch=2" in out
    assert "f   = -x + 2" in out


def test_factorize_meixner_note(capsys):
    argv = ["--family", "meixner", "--param", "gamma=1/2", "--param", "mu=1/3"]
    code, out, _ = run(capsys, "factorize", *argv, "--n", "2", "--json")
    assert code == 0
    notes = json.loads(out)["notes"]
    assert len(notes) == 1
    assert notes[0].startswith("g1:")
    assert "known misprint" in notes[0]


def test_factorize_degenerate(capsys):
    code, out, _ = run(capsys, "factorize", *HAHN, "--n", "0", "--branch", "2", "--json")
    assert code == 0
    assert json.loads(out) == []
    code, _, err = run(capsys, "factorize", *HAHN, "--n", "0", "--branch", "2", "--strict")
    assert code == 1
    assert "degenerate" in err


def test_ladder(capsys):
    code, out, _ = run(capsys, "ladder", *CHARLIER, "--n", "2", "--direction", "up", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 2, "direction": "up", "c": "-1", "target": [-1, 8, -6, 1]}


def test_ladder_truncation_exits_1(capsys):
    code, _, err = run(capsys, "ladder", *HAHN, "--n", "3", "--direction", "down")
    assert code == 1
    assert "annihilates" in err


def test_generate_json(capsys):
    code, out, _ = run(capsys, "generate", *HAHN, "--n-max", "2", "--json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["coefficients"] for r in rows] == [[1], [-1, 1], ["1/3", -2, 1]]
    assert [r["c"] for r in rows] == [None, "-1", "-3"]


def test_generate_csv_with_points(capsys):
    code, out, _ = run(capsys, "generate", *HAHN, "--n-max", "2", "--points", "0..2", "--csv")
    assert code == 0
    assert out.splitlines() == [
        "n,c,coefficients,p(0),p(1),p(2)",
        "0,,1,1,1,1",
        "1,-1,-1 1,-1,0,1",
        "2,-3,1/3 -2 1,1/3,-2/3,1/3",
        "rho,,,1,2,4",
    ]
