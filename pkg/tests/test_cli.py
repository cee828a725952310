import json
import subprocess
import sys

import pytest

from asmdpp.cli import main
from asmdpp.exactalg import MPoly, parse


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out


def report(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out.out)


def test_asm_zfun_golden(capsys):
    code, rep = report(capsys, "asm", "zfun", "--n", "3")
    assert code == 0 and rep["equal"]
    assert set(rep) >= {"command", "inputs", "expected", "got", "equal", "runtime_ms"}
    got = MPoly.from_json(rep["got"]["n=3"])
    assert got == parse("1 + z*y + z*x*y + y + z*y^2 + z^2*y^2 + z^2*y^3")


def test_report_round_trips_through_parser(capsys):
    _, rep = report(capsys, "dpp", "zfun", "--n", "4", "--refined", "zw")
    p = MPoly.from_json(rep["got"]["n=4"])
    assert str(parse(str(p))) == str(p)


def test_enum(capsys):
    code, rep = report(capsys, "dpp", "enum", "--n", "3")
    assert code == 0 and rep["got"]["count"] == 7 and len(rep["objects"]) == 7


def test_verify_asm_dpp_refined(capsys):
    code, rep = report(capsys, "verify", "asm-dpp", "--n-max", "4", "--refined", "zw")
    assert code == 0 and rep["equal"] and sorted(rep["got"]) == ["n=1", "n=2", "n=3", "n=4"]


def test_lambda_det_all_ones(tmp_path, capsys):
    f = tmp_path / "ones.json"
    f.write_text(json.dumps([[1, 1, 1], ["1", 1, 1], [1, 1, "1"]]))
    code, rep = report(capsys, "lambda-det", "--input", str(f), "--lambda", "lambda")
    assert code == 0
    lam = MPoly.var("lambda")
    assert MPoly.from_json(rep["got"]["value"]) == (1 + lam) ** 3


def test_lambda_det_bad_input(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("[[1, 2], [3]]")
    code, out = run(capsys, "lambda-det", "--input", str(f))
    assert code == 2 and "ConfigError" in out.err


def test_verify_ik_is_deterministic(capsys):
    _, r1 = report(capsys, "verify", "ik", "--n", "2", "--seed", "5", "--samples", "4")
    _, r2 = report(capsys, "verify", "ik", "--n", "2", "--seed", "5", "--samples", "4")
    assert r1["equal"] and r1["got"] == r2["got"] and r1["parameters"] == r2["parameters"]


def test_verify_genfun(capsys):
    code, rep = report(capsys, "verify", "genfun", "--order", "3")
    assert code == 0 and len(rep["got"]) == 7


@pytest.mark.parametrize("part", ["commute", "spectral", "addition", "det"])
def test_verify_lorentz(capsys, part):
    code, rep = report(capsys, "verify", "lorentz", part, "--order", "6")
    assert code == 0 and rep["equal"]


def test_verify_sandwich_csv(capsys):
    code, out = run(capsys, "--format", "csv", "verify", "sandwich", "--n", "2")
    lines = out.out.strip().splitlines()
    assert code == 0 and lines[0].startswith("command,case")
    assert len(lines) == 6


def test_variety(capsys):
    code, rep = report(capsys, "variety", "--p", "3", "--q", "5/2")
    assert code == 0 and rep["got"] == rep["expected"]


def test_bad_rational(capsys):
    code, _ = run(capsys, "variety", "--p", "x", "--q", "2")
    assert code == 2


def test_bad_threads(capsys, monkeypatch):
    monkeypatch.setenv("ASMDPP_THREADS", "many")
    code, _ = run(capsys, "verify", "asm-dpp", "--n-max", "2")
    assert code == 2


def test_threads_do_not_change_the_report(capsys, monkeypatch):
    _, r1 = report(capsys, "verify", "asm-dpp", "--n-max", "4")
    monkeypatch.setenv("ASMDPP_THREADS", "3")
    _, r3 = report(capsys, "verify", "asm-dpp", "--n-max", "4")
    assert r1["got"] == r3["got"]


def test_mismatch_exit_code(capsys, monkeypatch):
    import asmdpp.lorentzian as lz
    real = lz.variety_intersection

    def broken(p, q):
        r = real(p, q)
        r["phi"] += 1
        return r

    monkeypatch.setattr(lz, "variety_intersection", broken)
    code, rep = report(capsys, "variety", "--p", "2", "--q", "3")
    assert code == 1 and rep["equal"] is False


def test_output_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["--output", str(out), "variety", "--p", "2", "--q", "2"]) == 0
    assert json.loads(out.read_text())["equal"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "asmdpp", "variety", "--p", "2", "--q", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["got"]["psi"] == "5/2"
