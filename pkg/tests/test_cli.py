import json
import math
import subprocess
import sys

import pytest

from pogp import gf
from pogp.cli import dumps, main
from pogp.series import Series


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def last_column(out):
    return [line.split()[-1] for line in out.strip().splitlines()[1:]]


class TestCount:
    def test_multi(self, capsys):
        code, out, _ = run(capsys, "count", "-p", "1-1'2'", "-k", "2", "-n", "2")
        assert code == 0 and last_column(out) == ["4"]

    def test_unary(self, capsys):
        code, out, _ = run(capsys, "count", "-p", "12", "-k", "1", "-n", "5")
        assert code == 0 and last_column(out) == ["1"]

    def test_shuffle(self, capsys):
        code, out, _ = run(capsys, "count", "-p", "1'-2-1''", "--order", "shuffle", "-k", "2", "-n", "3")
        assert code == 0 and last_column(out) == ["7"]

    def test_quasi(self, capsys):
        code, out, _ = run(capsys, "count", "-p", "12", "-k", "2", "-n", "2", "--quasi", "--format", "json")
        assert code == 0 and json.loads(out)["count"] == "1"

    def test_shuffle_needs_flag(self, capsys):
        code, _, err = run(capsys, "count", "-p", "1'-2-1''", "-k", "2", "-n", "3")
        assert code == 1 and "shuffle" in err

    def test_explicit(self, capsys):
        code, out, _ = run(
            capsys, "count", "-p", "1'-1-1''", "--order", "explicit", "--relations", "1'<1,1''<1", "-k", "2", "-n", "3"
        )
        assert code == 0 and last_column(out) == ["7"]


class TestSeries:
    def test_gf(self, capsys):
        code, out, _ = run(capsys, "series", "-p", "12", "-k", "2", "-N", "4", "--engine", "gf", "--format", "csv")
        assert code == 0
        assert out.strip().splitlines() == ["n,coefficient", "0,1", "1,2", "2,3", "3,4", "4,5"]

    def test_shuffle_gf(self, capsys):
        code, out, _ = run(capsys, "series", "-p", "1'-2-1''", "--order", "shuffle", "-k", "2", "-N", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["engine"] == "gf" and payload["coefficients"] == ["1", "2", "4", "7"]

    def test_empty_alphabet(self, capsys):
        code, out, _ = run(capsys, "series", "-p", "12", "-k", "0", "-N", "2")
        assert code == 0 and last_column(out) == ["1", "0", "0"]

    def test_fallback_to_oracle(self, capsys):
        code, out, err = run(capsys, "series", "-p", "132", "-k", "3", "-N", "4", "--format", "json")
        assert code == 0 and "falling back" in err
        payload = json.loads(out)
        assert payload["engine"] == "oracle"
        assert payload["coefficients"] == ["1", "3", "9", "26", "75"]


class TestExpand:
    def test_five(self, capsys):
        code, out, _ = run(capsys, "expand", "-p", "1'2'-3-1''", "--order", "shuffle")
        assert code == 0
        assert [line.strip() for line in out.strip().splitlines()[1:]] == ["12-3-1", "12-3-2", "12-4-3", "13-4-2", "23-4-1"]


class TestEquiv:
    def test_equivalent(self, capsys):
        code, _, _ = run(capsys, "equiv", "-p", "12-1'2'", "-q", "1'2'-12", "-K", "3", "-N", "6")
        assert code == 0

    def test_counterexample(self, capsys):
        code, out, err = run(capsys, "equiv", "-p", "12", "-q", "11", "-K", "2", "-N", "3", "--format", "json")
        assert code == 2
        assert json.loads(out)["counterexample"] == {"k": "1", "n": "2", "p_count": "1", "q_count": "0"}
        assert "k=1 n=2" in err


class TestMnd:
    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "mnd", "-p", "21", "-k", "2", "-n", "2", "--format", "json")
        assert code == 0 and json.loads(out)["histogram"] == {"0": "3", "1": "1"}

    def test_gf(self, capsys):
        code, out, _ = run(capsys, "mnd", "-p", "123", "-k", "3", "-n", "6", "--gf", "--format", "json")
        code2, out2, _ = run(capsys, "mnd", "-p", "123", "-k", "3", "-n", "6", "--format", "json")
        assert code == code2 == 0
        assert json.loads(out)["histogram"] == json.loads(out2)["histogram"]

    def test_gf_needs_formula(self, capsys):
        code, _, _ = run(capsys, "mnd", "-p", "132", "-k", "3", "-n", "3", "--gf")
        assert code == 1


class TestVerify:
    def test_default_budgets(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0 and "FAIL" not in out

    def test_only_eq1(self, capsys):
        code, out, _ = run(capsys, "verify", "--only", "eq1", "-K", "5", "-N", "12")
        assert code == 0 and "pass" in out

    def test_corrupted_registry(self, capsys, monkeypatch):
        def broken(k, N):
            return gf._known_12(k, N) + Series.monomial(1, 3, N)

        monkeypatch.setitem(gf.KNOWN, "21", broken)
        code, out, err = run(capsys, "verify", "--only", "registry", "--format", "json")
        assert code == 2
        failing = [c for c in json.loads(out)["checks"] if c["passed"] is False]
        assert failing[0]["mismatch"]["formula"] == "registry 21"
        assert failing[0]["mismatch"]["n"] == "3"
        assert "registry 21" in err


class TestExitCodes:
    def test_usage(self, capsys):
        assert run(capsys, "count", "-p", "12")[0] == 1
        assert run(capsys, "nonsense")[0] == 1
        assert run(capsys, "count", "-p", "12", "-k", "-1", "-n", "2")[0] == 1

    def test_budget_flag(self, capsys):
        assert run(capsys, "count", "-p", "1234", "-k", "4", "-n", "9", "--cap", "100")[0] == 3

    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("POGP_ENUM_CAP", "100")
        assert run(capsys, "mnd", "-p", "12", "-k", "4", "-n", "6")[0] == 3

    def test_bad_env(self, capsys, monkeypatch):
        monkeypatch.setenv("POGP_ENUM_CAP", "lots")
        assert run(capsys, "count", "-p", "12", "-k", "2", "-n", "2")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "-p", "1-1'2'", "-k", "3", "-n", "4"],
        ["series", "-p", "212", "-k", "3", "-N", "10"],
        ["expand", "-p", "1'2'-1''2''"],
        ["equiv", "-p", "12", "-q", "21"],
        ["mnd", "-p", "12", "-k", "3", "-n", "5", "--gf"],
        ["verify", "--only", "quasi"],
    ],
)
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    text = out.rstrip("\n")
    assert dumps(json.loads(text)) == text


def test_big_counts_are_strings(capsys):
    code, out, _ = run(capsys, "series", "-p", "12", "-k", "9", "-N", "40", "--format", "json")
    coeffs = json.loads(out)["coefficients"]
    assert coeffs[-1] == str(math.comb(48, 8))


def test_table_never_truncates(capsys):
    code, out, _ = run(capsys, "series", "-p", "123", "-k", "9", "-N", "30")
    lines = out.rstrip("\n").splitlines()
    assert len({len(line) for line in lines}) == 1
    assert lines[-1].split()[-1] == str(gf.gf_known("123", 9, 30).as_ints()[-1])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pogp", "count", "-p", "12", "-k", "2", "-n", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.split()[-1] == "4"
