import io
import json
import subprocess
import sys

import pytest

from nullsatz.cli import infer_nvars, run


def call(argv, capsys):
    out = io.StringIO()
    code = run(argv, out)
    err = capsys.readouterr().err
    return code, out.getvalue(), err


def test_demo_sqrt2(capsys):
    code, out, _ = call(["demo", "sqrt2"], capsys)
    assert code == 0 and json.loads(out)["strict"] is True


def test_check_dual_numbers(capsys):
    code, out, _ = call(["check", "--algebra", "dual_numbers(5)", "--ideal", "x^2"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["equal"]
    assert sorted(rep["pipeline"]) == sorted(rep["oracle"]) == ["eps", "x"]


def test_malformed_polynomial(capsys):
    code, _, err = call(["radical", "--algebra", "F_3", "--ideal", "x + * 2"], capsys)
    diag = json.loads(err)
    assert code == 2 and diag["offset"] == 4 and diag["error"] == "ParseError"


@pytest.mark.parametrize("argv,code,where", [
    (["radical", "--algebra", "nope", "--ideal", "x"], 2, "findim.preset"),
    (["radical", "--algebra", "M2(Q)", "--ideal", "x"], 3, "nullsatz.rad_pipeline"),
    (["radical", "--algebra", "F_3", "--ideal", "x^2", "--nvars", "2"], 3, "nullsatz.rad_pipeline"),
    (["radical", "--algebra", "F_5", "--ideal", "x^2 - 2", "--dmax", "1"], 3, "nullsatz.rad_pipeline"),
    (["radical", "--algebra", "F_3"], 2, "cli.parse_args"),
    ([], 2, "cli.parse_args"),
])
def test_error_paths(argv, code, where, capsys):
    got, _, err = call(argv, capsys)
    assert got == code
    assert json.loads(err)["where"] == where


def test_ideal_and_algebra_files(tmp_path, capsys):
    from nullsatz.findim import preset

    alg = tmp_path / "alg.json"
    alg.write_text(json.dumps(preset("upper_triangular:2(5)").to_json()))
    gens = tmp_path / "gens.txt"
    gens.write_text("# generators\ne12*x - e22\nx^2\n")
    cert = tmp_path / "cert.json"
    code, out, _ = call(["radical", "--algebra", str(alg), "--ideal", str(gens),
                         "--certificate", str(cert)], capsys)
    assert code == 0
    assert sorted(json.loads(out)["radical"]) == ["e11*x", "e12", "e22"]
    assert json.loads(cert.read_text())["certificate"]


def test_oracle_and_info(capsys):
    code, out, _ = call(["oracle", "--algebra", "M2(3)", "--ideal", "x^2"], capsys)
    assert code == 0 and len(json.loads(out)["radical"]) == 4
    code, out, _ = call(["algebra-info", "--algebra", "group:C2(5)"], capsys)
    info = json.loads(out)
    assert code == 0 and len(info["factors"]) == 2 and info["xi"]["identity_holds"]
    code, out, _ = call(["algebra-info", "--algebra", "dual_numbers(3)", "--pretty"], capsys)
    assert code == 0 and "radical:" in out


def test_infer_nvars():
    assert infer_nvars("x^2") == 1
    assert infer_nvars("x*y") == 2
    assert infer_nvars("x3 + 1") == 3
    assert infer_nvars("e12*x") == 1


def test_deterministic_bytes():
    argv = [sys.executable, "-m", "nullsatz.cli", "radical", "--algebra", "M2(2)",
            "--ideal", "x^2 + x + 1", "--seed", "7"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
