import io
import json
import shutil
import subprocess
import sys

import pytest

from affine_c import cli
from affine_c.coproduct import phi0_delta_closed
from affine_c.golden import FILES, checksum_drift, dumps, golden_dir, load_tables
from affine_c.nilcoxeter import pieri, pp_generator
from affine_c.schubert import affine_stanley, dual_kschur
from affine_c.weyl import from_word, is_reduced


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def test_documented_examples():
    assert run("pp", "--n", "2", "--r", "2") == (0, "A_01 + A_10 + A_12 + 2 A_20 + A_21\n", "")
    assert run("qfun", "--n", "2", "--word", "")[1] == "1\n"
    assert run("lee", "--n", "2", "--word", "0210")[1] == "(3,1)\n"


def test_text_outputs():
    assert run("rho", "--n", "3", "--i", "5")[1] == "23210\n"
    assert run("pfun", "--n", "2", "--word", "010210")[1] == "P_51 + P_42 + P_321\n"
    assert run("qfun", "--n", "2", "--word", "0210")[1] == "M_31 + 2 M_22 + 2 M_211 + 2 M_1111\n"
    assert run("pieri", "--n", "2", "--i", "1", "--word", "10")[1] == "pp[010] + pp[210]\n"
    assert run("zee", "--n", "2", "--length", "1")[1] == "1: 0(1) 1(1) 2(1)\n"


def test_json_is_sorted_and_routed():
    out = run("pp", "--n", "3", "--r", "2", "--format", "json")[1]
    data = json.loads(out)
    assert out == json.dumps(data, sort_keys=True, indent=2) + "\n"
    assert {from_word(3, t["word"]): t["coeff"] for t in data["terms"]} == dict(pp_generator(3, 2))

    w = from_word(3, "103210")
    data = run_json("qfun", "--n", "3", "--word", "103210")
    assert data["basis"] == "M"
    assert {t["partition"]: t["coeff"] for t in data["terms"]} == {
        "".join(map(str, lam)): c for lam, c in affine_stanley(3, w).coeffs.items()}

    data = run_json("pfun", "--n", "3", "--word", "2103210")
    assert {t["partition"]: t["coeff"] for t in data["terms"]} == {
        "".join(map(str, lam)): c for lam, c in dual_kschur(3, from_word(3, "2103210")).items()}

    data = run_json("pieri", "--n", "2", "--i", "2", "--word", "010")
    assert {from_word(2, t["word"]): t["coeff"] for t in data["terms"]} == pieri(2, 2, from_word(2, "010"))

    w = from_word(2, "210")
    data = run_json("coproduct", "--n", "2", "--word", "210")
    got = {(from_word(2, t["left"]), from_word(2, t["right"])): t["coeff"] for t in data["terms"]}
    assert got == phi0_delta_closed(2, w)

    assert run_json("lee", "--n", "2", "--word", "0210") == {"partition": [3, 1]}
    assert run_json("rho", "--n", "2", "--i", "4") == {"length": 4, "word": "1210"}
    assert run_json("ppw", "--n", "2", "--word", "10") == run_json("pp", "--n", "2", "--r", "2")


def test_exit_codes():
    assert run("bogus")[0] == 2
    assert run("pp", "--n", "2")[0] == 2
    assert run("pp", "--n", "1", "--r", "1")[0] == 2
    code, _, err = run("pp", "--n", "2", "--r", "9")
    assert code == 1 and "error" in err
    assert run("lee", "--n", "2", "--word", "20")[0] == 1
    assert run("qfun", "--n", "2", "--word", "7")[0] == 1
    assert run("ppw", "--n", "2", "--word", "0210210", "--cap", "5")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "affine_c", "lee", "--n", "2", "--word", "0210"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "(3,1)\n"


# -- golden data -------------------------------------------------------------

def test_golden_round_trip_and_checksums():
    base = golden_dir()
    assert checksum_drift() == []
    for name in FILES.values():
        text = (base / name).read_text()
        assert dumps(json.loads(text)) == text


def test_golden_words_are_valid():
    for kind in FILES:
        for t in load_tables(kind):
            words = t.rows.values() if kind == "pp" else [t.rows]
            for group in words:
                for w in group:
                    assert is_reduced(t.n, w)
                    assert all(0 <= int(ch) <= t.n for ch in w)


@pytest.mark.parametrize("suite", ["appendix-a", "appendix-b", "appendix-c"])
def test_verify_passes(suite):
    code, out, _ = run("verify", suite)
    assert code == 0
    assert "FAIL" not in out


def test_verify_json_report():
    data = run_json("verify", "appendix-a")
    assert data["ok"] and data["failed"] == 0 and data["passed"] == 14


def test_corrupted_entry_gives_one_failure(tmp_path):
    for name in list(FILES.values()) + ["MANIFEST.json"]:
        shutil.copy(golden_dir() / name, tmp_path / name)
    path = tmp_path / FILES["qfun"]
    data = json.loads(path.read_text())
    data["tables"][3]["rows"]["0210"][2] += 1
    path.write_text(dumps(data))
    code, out, _ = run("verify", "appendix-b", "--golden-dir", str(tmp_path))
    assert code == 1
    assert sum(line.startswith("FAIL") for line in out.splitlines()) == 1
    assert "WARN" in out


def test_golden_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("AFFINE_C_GOLDEN_DIR", str(tmp_path))
    code, _, err = run("verify", "appendix-a")
    assert code == 1 and "missing golden file" in err
