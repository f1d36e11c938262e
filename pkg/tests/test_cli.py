"""Command-line interface: golden outputs, round-trips, exit codes."""

import json
from fractions import Fraction as F

from hlcbs.cli import main
from hlcbs.exact import PiExtValue, UniPoly
from hlcbs.closedform import zeta_exact
from hlcbs.polyfam import q_poly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestZetaCommand:
    def test_exact_golden(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--k", "4", "--a", "2", "--exact")
        assert code == 0
        assert out.strip() == "17/6 + 74/243*sqrt3*pi"

    def test_exact_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--k", "3", "--a", "7/2", "--exact")
        assert code == 0
        assert PiExtValue.parse(out.strip()) == zeta_exact(3, F(7, 2))

    def test_numeric_json(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--k", "0", "--a", "1", "--numeric", "--json")
        assert code == 0
        record = json.loads(out)
        assert record["mode"] == "numeric"
        assert record["value"].startswith("0.6045997880780726")
        assert "error_bound" in record

    def test_structured(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--k", "1", "--a", "5/4", "--structured", "--json")
        assert code == 0
        record = json.loads(out)
        assert record["rational_part"] == "1"
        assert record["q_part"] == "1"

    def test_domain_error_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "zeta", "--k", "0", "--a", "5/4", "--exact")
        assert code == 1
        assert "error:" in err


class TestPolyCommand:
    def test_q_golden(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "q", "3")
        assert code == 0
        assert out.strip() == "8*x^3 + 60*x^2 + 36*x + 1"

    def test_round_trip(self, capsys):
        _, out, _ = run_cli(capsys, "poly", "q", "3")
        assert UniPoly.parse(out.strip()) == q_poly(3)

    def test_pa_and_eulerian(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "pa", "1")
        assert code == 0
        assert out.strip() == "(-2*a + 2)*x + (2*a + 1)"
        code, out, _ = run_cli(capsys, "poly", "eulerian", "2")
        assert code == 0
        assert out.strip() == "(y)*x + (y^2)"

    def test_polybernoulli_needs_k(self, capsys):
        code, _, err = run_cli(capsys, "poly", "polybernoulli", "4")
        assert code == 1
        code, out, _ = run_cli(capsys, "poly", "polybernoulli", "4", "--k=-4")
        assert code == 0
        assert out.strip() == "6902"

    def test_alpha(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "alpha", "3", "--a", "1")
        assert code == 0
        assert out.strip() == "10"


class TestEvalCommand:
    def test_phi(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "phi", "--s", "1", "--a", "1", "--z", "0.3")
        assert code == 0
        assert out.strip().startswith("0.191642813438939351")

    def test_pfq(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "pfq", "--upper", "1,1/2", "--lower", "1", "--z", "1/4")
        assert code == 0
        assert out.strip().startswith("1.154700538379251529")

    def test_beta(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "beta", "--z", "1/4", "--alpha", "1/2", "--beta", "1/2")
        assert code == 0
        assert out.strip().startswith("1.047197551196597746")

    def test_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "eval", "phi", "--s", "1", "--a=-1/2", "--z", "0.3")
        assert code == 1
        assert "error:" in err


class TestTableCommand:
    def test_poly_bernoulli_reproduces_reference_grid(self, capsys):
        code, out, _ = run_cli(capsys, "table", "polybernoulli", "--n", "4", "--k", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split("\t") == ["k\\n", "0", "1", "2", "3", "4"]
        grid = [line.split("\t")[1:] for line in lines[1:]]
        assert grid == [
            ["1", "1", "1", "1", "1"],
            ["1", "2", "4", "8", "16"],
            ["1", "4", "14", "46", "146"],
            ["1", "8", "46", "230", "1066"],
            ["1", "16", "146", "1066", "6902"],
        ]

    def test_poly_bernoulli_json_lines(self, capsys):
        code, out, _ = run_cli(capsys, "table", "polybernoulli", "--n", "2", "--k", "1", "--json")
        assert code == 0
        rows = [json.loads(line) for line in out.strip().splitlines()]
        assert rows == [{"k": 0, "values": ["1", "1", "1"]}, {"k": 1, "values": ["1", "2", "4"]}]

    def test_polys_table(self, capsys):
        code, out, _ = run_cli(capsys, "table", "polys", "--n", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[1].split("\t") == ["-1", "0", "0", "1"]
        assert lines[-1].split("\t")[3] == "8*x^3 + 60*x^2 + 36*x + 1"


class TestVerifyCommand:
    def test_single_check_json(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "bm1", "--json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload) == 1
        assert payload[0]["check_id"] == "bm1"
        assert payload[0]["passed"] is True
        assert payload[0]["max_abs_deviation"] == "exact"
        assert set(payload[0]) == {"check_id", "passed", "max_abs_deviation", "comparisons", "elapsed_ms"}

    def test_unknown_check_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "verify", "definitely_not_a_check")
        assert code == 1
        assert "unknown check" in err

    def test_subset_text_mode(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "bm1", "ptoE", "p0_is_q")
        assert code == 0
        assert "3/3 checks passed" in out
