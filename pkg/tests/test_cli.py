import csv
import io
import json
import subprocess
import sys

import pytest

from qbern.cli import TABLE_COLUMNS, run
from qbern.exactq import Q, QRat, bracket
from qbern.qexp import QExpPoly
from qbern.render import bracket_factors, rational_poly_from_dict
from qbern.xpoly import XPoly


def _roundtrip(text):
    return json.dumps(json.loads(text), separators=(",", ":"), ensure_ascii=False)


class TestCompute:
    def test_latex_b1(self):
        code, out = run(["compute", "--n", "1", "--what", "bpoly", "--format", "latex"])
        assert code == 0
        assert out.strip() == r"X - \frac{1}{q + 1}"

    def test_beta0_json(self):
        code, out = run(["compute", "--n", "0", "--what", "beta"])
        assert code == 0
        assert QExpPoly.from_json(out) == QExpPoly.const(1)

    def test_limit(self):
        code, out = run(["compute", "--n", "2", "--what", "limit"])
        assert code == 0
        d = json.loads(out)
        assert d["coefficients"] == ["1/6", "-1/1", "1/1"]
        assert rational_poly_from_dict(d) == XPoly([QRat(1) / 6, -1, 1])

    @pytest.mark.parametrize("what", ["bpoly", "fpoly", "bnumber", "eta", "beta", "classical", "limit"])
    def test_json_round_trip(self, what):
        code, out = run(["compute", "--n", "4", "--what", what])
        assert code == 0
        assert _roundtrip(out) + "\n" == out
        d = json.loads(out)
        if what in ("bpoly", "fpoly"):
            assert XPoly.from_dict(d).to_json() + "\n" == out
        elif what in ("eta", "beta"):
            assert QExpPoly.from_dict(d).to_json() + "\n" == out
        elif what == "bnumber":
            assert QRat.from_dict(d).to_json() + "\n" == out

    def test_other_formats(self):
        code, out = run(["compute", "--n", "1", "--format", "plain"])
        assert (code, out) == (0, "X - 1/(q + 1)\n")
        code, out = run(["compute", "--n", "1", "--format", "csv"])
        assert code == 0 and list(csv.reader(io.StringIO(out)))[1] == ["1", "bpoly", "X - 1/(q + 1)"]

    def test_bracket_notation(self):
        code, out = run(["compute", "--n", "3", "--what", "bnumber", "--format", "latex",
                         "--bracket-notation"])
        assert out.strip() == r"-\frac{q^{2} - q}{[3]_q [4]_q}"

    def test_cap(self, monkeypatch):
        assert run(["compute", "--n", "13"])[0] == 2
        assert run(["compute", "--n", "-1"])[0] == 2
        assert run(["compute", "--n", "13", "--what", "bnumber", "--max-n-cap", "13"])[0] == 0
        monkeypatch.setenv("QBERN_MAX_N", "13")
        assert run(["compute", "--n", "13", "--what", "bnumber"])[0] == 0
        monkeypatch.setenv("QBERN_MAX_N", "x")
        assert run(["compute", "--n", "1"])[0] == 2

    def test_usage(self):
        assert run(["compute", "--n", "1", "--what", "nothing"])[0] == 2
        assert run(["compute"])[0] == 2
        assert run([])[0] == 2

    def test_deterministic(self):
        assert run(["compute", "--n", "5"]) == run(["compute", "--n", "5"])


class TestTable:
    def test_single_row(self):
        code, out = run(["table", "--max-n", "0"])
        rows = json.loads(out)
        assert code == 0 and len(rows) == 1
        r = rows[0]
        assert QRat.from_dict(r["bnumber"]) == 1 == QRat.from_dict(r["beta_number"])
        assert XPoly.from_dict(r["bpoly"]) == XPoly.const(1)
        assert r["limit"]["coefficients"] == ["1/1"]

    def test_number_column(self):
        code, out = run(["table", "--max-n", "3"])
        row = json.loads(out)[3]
        expected = -Q * (Q - 1) / (bracket(3) * bracket(4))
        assert QRat.from_dict(row["bnumber"]) == expected == QRat.from_dict(row["beta_number"])

    def test_latex(self):
        code, out = run(["table", "--max-n", "2", "--format", "latex"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith(r"\begin{tabular}") and lines[-1] == r"\end{tabular}"
        assert r"$X - \frac{1}{q + 1}$" in out
        assert (r"$X^{2} - \frac{2 q + 1}{q^{2} + q + 1} X + "
                r"\frac{q}{q^{3} + 2 q^{2} + 2 q + 1}$") in out

    def test_csv_columns(self):
        code, out = run(["table", "--max-n", "2", "--format", "csv"])
        rows = list(csv.reader(io.StringIO(out)))
        assert tuple(rows[0]) == TABLE_COLUMNS
        assert rows[2] == ["1", "X - 1/(q + 1)", "-1/(q + 1)", "-1/(q + 1)", "X - 1/2"]

    def test_plain(self):
        code, out = run(["table", "--max-n", "1", "--format", "plain"])
        assert code == 0 and "limit q -> 1 = X - 1/2" in out


class TestVerifyCommand:
    def test_full(self):
        code, out = run(["verify", "--max-n", "8", "--max-N", "6"])
        assert code == 0
        summary = json.loads(out.splitlines()[-1])
        assert summary["failed"] == 0 and summary["passed"] == summary["total"]

    def test_cor2_sweep(self):
        code, out = run(["verify", "--tags", "COR2", "--max-n", "12"])
        lines = out.splitlines()
        assert code == 0 and len(lines) == 14
        assert all(json.loads(l)["identity"] == "COR2" for l in lines[:-1])

    def test_bogus(self):
        assert run(["verify", "--tags", "BOGUS"])[0] == 2

    def test_deterministic_modulo_elapsed(self):
        a = run(["verify", "--max-n", "3", "--max-N", "2"])[1].splitlines()
        b = run(["verify", "--max-n", "3", "--max-N", "2"])[1].splitlines()
        assert a[:-1] == b[:-1]

    @pytest.mark.parametrize("fmt", ["plain", "csv", "latex"])
    def test_formats(self, fmt):
        code, out = run(["verify", "--max-n", "1", "--max-N", "1", "--format", fmt])
        assert code == 0 and out


class TestNumcheck:
    @pytest.mark.parametrize("q", ["0.5", "2", "1/3", "3"])
    def test_ok(self, q):
        code, out = run(["numcheck", "--q", q])
        assert code == 0
        assert json.loads(out.splitlines()[-1])["all_within_tolerance"] is True

    @pytest.mark.parametrize("q", ["1", "0", "-2", "abc"])
    def test_excluded(self, q):
        assert run(["numcheck", "--q", q])[0] == 2

    def test_unreachable_tolerance(self):
        # at q0 = 1/2 every term is a power of two and the float sums are exact
        code, out = run(["numcheck", "--q", "1/3", "--tolerance", "1e-30"])
        assert code == 1
        assert json.loads(out.splitlines()[-1])["all_within_tolerance"] is False

    def test_truncation_too_short(self):
        assert run(["numcheck", "--q", "0.5", "--truncation", "10"])[0] == 2


def test_bracket_factors():
    assert bracket_factors((1, 1)) == [2]
    den = (bracket(3) * bracket(4)).int_parts()[0]
    assert bracket_factors(den) == [3, 4]
    assert bracket_factors((1, 0, 1)) is None


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qbern", "compute", "--n", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coefficients"] == [{"num": ["1/1"], "den": ["1/1"]}]
