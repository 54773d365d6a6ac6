import json

import pytest

from algebra.errors import InternalInvariantError
from qkschur import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in ("QKSCHUR_CACHE_DIR", "QKSCHUR_MAX_RANK", "QKSCHUR_JOBS"):
        monkeypatch.delenv(key, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["schubert", "--n", "3", "--w", "3,2,1"], "x1^2*x2"),
        (["qschubert", "--n", "3", "--w", "3,2,1"], "x1^2*x2 + q1*x1"),
        (["qschur", "--n", "3", "--lambda", "2", "--m", "1"], "x1^2 - q1"),
        (["lambda-of", "--n", "5", "--w", "1,5,4,3,2"], "[3,2,2,1,1,1]"),
        (["kschur", "--n", "3", "--lambda", "2,1"], "h2*h1"),
        (["phi", "--n", "3", "--w", "3,2,1"], "h1 / sR1*sR2"),
    ],
)
def test_text_output(capsys, argv, expected):
    code, out = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == expected


def test_phi_of_a_polynomial_matches_phi_of_w(capsys):
    _, by_w = run(capsys, "phi", "--n", "3", "--w", "3,2,1")
    _, by_poly = run(capsys, "phi", "--n", "3", "--poly", "x1^2*x2 + q1*x1")
    assert by_w == by_poly


def test_d_element_json(capsys):
    code, out = run(capsys, "d-element", "--n", "5", "--i", "2", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)["d"][0]
    assert d["tableau_word"] == [4, 3, 0, 4, 1, 0]
    assert d["partition"] == [2, 2, 2]
    assert d["window"] == [-2, -1, 5, 6, 7]


def test_d_element_lists_every_index(capsys):
    code, out = run(capsys, "d-element", "--n", "4")
    assert code == EXIT_OK
    assert [line.split()[0] for line in out.splitlines()] == ["d_1", "d_2", "d_3"]


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "--n", "3", "--only", "theorem", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["pass"] is True
    assert [check["check"] for check in report["reports"]] == ["theorem"]


def test_verify_text(capsys):
    code, out = run(capsys, "verify", "--n", "3", "--only", "cyclic", "--only", "kostant")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "OK (2/2 checks passed at n=3)"


def test_toda_check(capsys):
    code, out = run(capsys, "toda-check", "--n", "3")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "OK"


def test_cache_dir_option(capsys, tmp_path):
    code, _ = run(capsys, "kschur", "--n", "3", "--lambda", "2,1", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    assert (tmp_path / "kschur-n3-d3.json").exists()


@pytest.mark.parametrize(
    "argv",
    [
        ["qschubert", "--n", "9", "--w", "1,2,3,4,5,6,7,8,9"],
        ["qschubert", "--n", "3", "--w", "2,2,1"],
        ["qschubert", "--n", "3", "--w", "2,1"],
        ["qschubert", "--n", "3"],
        ["qschubert", "--w", "2,1,3"],
        ["qschubert", "--n", "1", "--w", "1"],
        ["phi", "--n", "3"],
        ["kschur", "--n", "3", "--lambda", "3"],
        ["verify", "--n", "3", "--only", "nope"],
        ["verify", "--n", "3", "--jobs", "0"],
        ["no-such-command", "--n", "3"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""


def test_allow_large(capsys):
    code, out = run(capsys, "schubert", "--n", "8", "--w", "8,7,6,5,4,3,2,1", "--allow-large")
    assert code == EXIT_OK
    assert out == "x1^7*x2^6*x3^5*x4^4*x5^3*x6^2*x7"


def test_max_rank_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("QKSCHUR_MAX_RANK", "3")
    code, _ = run(capsys, "schubert", "--n", "4", "--w", "1,2,3,4")
    assert code == EXIT_USAGE
    monkeypatch.setenv("QKSCHUR_MAX_RANK", "many")
    code, _ = run(capsys, "schubert", "--n", "3", "--w", "1,2,3")
    assert code == EXIT_USAGE


def test_kschur_json_carries_schur_expansion(capsys):
    code, out = run(capsys, "kschur", "--n", "3", "--lambda", "2,1", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["polynomial"] == "h2*h1"
    assert payload["schur"] == {"[3]": 1, "[2,1]": 1}


def test_internal_invariant_exits_3(capsys, monkeypatch):
    def broken(n):
        raise InternalInvariantError("Lax matrix lost its shape")

    monkeypatch.setattr("checks.kostant.verify_kostant", broken)
    code, _ = run(capsys, "verify", "--n", "3", "--only", "kostant")
    assert code == EXIT_INTERNAL


@pytest.mark.parametrize(
    "poly",
    ["__import__('os').system('true')", "x1.__class__", "lambda: 0", "x1; x2", "q9*x1"],
)
def test_poly_outside_the_alphabet_is_a_usage_error(capsys, poly):
    code, out = run(capsys, "phi", "--n", "3", "--poly", poly)
    assert code == EXIT_USAGE
    assert out == ""


def test_unusable_cache_dir_falls_back_to_memory(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    code, out = run(capsys, "kschur", "--n", "3", "--lambda", "2,1", "--cache-dir", str(blocker / "cache"))
    assert code == EXIT_OK
    assert out == "h2*h1"
