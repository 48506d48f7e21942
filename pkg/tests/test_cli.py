import json
import os
import subprocess
import sys

import pytest

from symclass.cli import main, parse_complex


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, json.loads(out.out), out.err


def run_process(*argv, stdin=None, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run(
        [sys.executable, "-m", "symclass", *argv], input=stdin, capture_output=True, text=True, env=full_env
    )


@pytest.mark.parametrize(
    "argv,d,n_star",
    [
        (["--name", "ghz", "--n", "8"], 2, 2),
        (["--name", "w", "--n", "7"], 7, 2),
        (["--name", "x", "--n", "6", "--z", "0.89089871814"], 5, 3),
        (["--name", "separable0", "--n", "5"], 1, 1),
    ],
)
def test_classify_examples(capsys, argv, d, n_star):
    code, rep, _ = run(capsys, "classify", *argv)
    assert code == 0
    assert rep["d"] == d and rep["n_star"] == n_star
    assert len(rep["decomposition"]["points"]) == d
    assert all(rep["bounds"].values())
    assert rep["rank_profile"] == rep["rank_profile"][::-1]


def test_classify_report_keys(capsys):
    _, rep, _ = run(capsys, "classify", "--name", "dicke", "--n", "4", "--k", "2")
    assert list(rep) == [
        "input", "n", "d", "n_star", "decomposition", "rank_profile", "bounds",
        "majorana_configuration", "tolerances", "timings",
    ]
    assert rep["input"] == {"name": "dicke", "n": 4, "k": 2}
    assert sum(rep["majorana_configuration"]) == 4


def test_classify_state_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"n": 3, "dicke": [[0.5, 0], [0, 0], [0, 0], [0.5, 0]]}))
    code, rep, _ = run(capsys, "classify", "--state", str(path))
    assert code == 0 and rep["d"] == 2


def test_classify_stdin():
    proc = run_process("classify", "--state", "-", "--no-timings", stdin='{"name": "w", "n": 4}')
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["d"] == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["classify"],
        ["classify", "--name", "ghz"],
        ["classify", "--name", "x", "--n", "3"],
        ["classify", "--state", "/nonexistent.json"],
        ["classify", "--name", "ghz", "--n", "4", "--tol-rank", "2"],
        ["classify", "--name", "ghz", "--n", "4", "--max-full", "40"],
        ["hamiltonian", "--name", "ghz", "--n", "4", "--paper", "ghz", "--J", "2", "--Jz", "3"],
        ["hamiltonian", "--name", "ghz", "--n", "4", "--n-local", "2", "--lambda-sym", "-1"],
    ],
)
def test_input_errors_exit_one(capsys, argv):
    code, payload, err = run(capsys, *argv)
    assert code == 1
    assert payload["error"] == "input" and payload["exit_code"] == 1
    assert err.startswith("symclass: input:")


def test_malformed_and_zero_state(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    zero = tmp_path / "zero.json"
    zero.write_text('{"n": 2, "dicke": [[0,0],[0,0],[0,0]]}')
    code, p1, _ = run(capsys, "classify", "--state", str(bad))
    assert code == 1 and "malformed" in p1["message"]
    code, p2, _ = run(capsys, "classify", "--state", str(zero))
    assert code == 1 and p1["message"] != p2["message"]


def test_argparse_errors_exit_one():
    proc = run_process("classify", "--name", "nope", "--n", "3")
    assert proc.returncode == 1
    proc = run_process("frobnicate")
    assert proc.returncode == 1


def test_ill_conditioned_exit_two(capsys):
    code, payload, _ = run(capsys, "classify", "--name", "w", "--n", "6", "--max-cond", "1.5")
    assert code == 2
    assert payload["error"] == "ill-conditioned" and payload["condition_number"] > 1.5


def test_no_kernel_exit_three(capsys):
    code, payload, err = run(capsys, "hamiltonian", "--name", "x", "--n", "6", "--n-local", "2")
    assert code == 3
    assert payload["n_star"] == 3 and "n*=3" in payload["message"] and "n*=3" in err


def test_hamiltonian_explicit_ghz_terms(capsys):
    code, out, _ = run(capsys, "hamiltonian", "--name", "ghz", "--n", "6", "--paper", "ghz", "--J", "1", "--Jz", "3")
    assert code == 0
    expected = []
    for i in range(6):
        bond = tuple(sorted((i, (i + 1) % 6)))
        expected += [(bond, "XX", 1.0), (bond, "YY", 1.0), (bond, "ZZ", -2.0)]
    got = [(tuple(t["sites"]), t["paulis"], t["coeff"][0]) for t in out["terms"]]
    assert got == sorted(expected)
    assert all(t["coeff"][1] == 0 for t in out["terms"])
    assert out["verification"]["ground_overlap"] >= 1 - 1e-10


def test_hamiltonian_explicit_defaults_to_family_state(capsys):
    code, out, _ = run(capsys, "hamiltonian", "--paper", "x", "--n", "6")
    assert code == 0 and out["input"]["name"] == "x"
    assert out["verification"]["ground_overlap"] >= 1 - 1e-10


def test_hamiltonian_constructive_w(capsys):
    code, out, _ = run(capsys, "hamiltonian", "--name", "w", "--n", "6", "--n-local", "2")
    assert code == 0
    assert out["boundary"] == "periodic" and out["kind"] == "constructive"
    assert out["verification"]["residual"] <= 1e-10


@pytest.mark.parametrize("suite,seed", [("slocc", "7"), ("nesting", "3"), ("bounds", "0"), ("oracle", "0")])
def test_verify_small(capsys, suite, seed):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--seed", seed, "--count", "3")
    assert code == 0
    assert out["suite"] == suite and out["failed"] == 0 and out["seed"] == int(seed)


def test_verify_default_seed_is_suite_default(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "nesting", "--count", "1")
    assert out["seed"] == 3


def test_verify_failure_exit_four(capsys):
    # an absurd residual threshold makes every certification fail
    code, out, _ = run(capsys, "verify", "--suite", "nesting", "--count", "1", "--tol-resid", "1e-30")
    assert code == 4 and out["failed"] > 0 and out["failures"][0]["seed"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--name", "x", "--n", "7"],
        ["hamiltonian", "--name", "ghz", "--n", "5", "--n-local", "2"],
        ["verify", "--suite", "slocc", "--seed", "7", "--count", "2"],
    ],
)
def test_byte_identical_output(argv):
    first = run_process(*argv, "--no-timings")
    second = run_process(*argv, "--no-timings")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert "timings" not in json.loads(first.stdout)


def test_pretty_output(capsys):
    main(["classify", "--name", "ghz", "--n", "3", "--pretty"])
    assert "\n  " in capsys.readouterr().out


def test_env_max_full(monkeypatch, capsys):
    monkeypatch.setenv("SYMCLASS_MAX_FULL", "8")
    code, out, _ = run(capsys, "hamiltonian", "--name", "ghz", "--n", "9", "--n-local", "2")
    assert code == 0 and out["verification"]["residual_kind"] == "local_bound"
    monkeypatch.setenv("SYMCLASS_MAX_FULL", "many")
    code, _, _ = run(capsys, "classify", "--name", "ghz", "--n", "3")
    assert code == 1


def test_parse_complex_forms():
    assert parse_complex("0.5") == 0.5
    assert parse_complex("0.5,0.1") == 0.5 + 0.1j
    assert parse_complex("[0.5, 0.1]") == 0.5 + 0.1j
    assert parse_complex("0.5+0.1j") == 0.5 + 0.1j
