"""Sequence file format and CLI contract tests: round-trips, exit codes,
JSON schema stability, CSV output."""

import json

import pytest
from click.testing import CliRunner

from zerosum import (
    Params,
    SequenceFileError,
    SignSeq,
    format_sequence,
    parse_sequence,
)
from zerosum.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


class TestSequenceFile:
    def test_values_round_trip(self):
        seq = SignSeq.from_values(Params(1, 2, 6), [-1, -1, 2, 2, -1, -1])
        text = format_sequence(seq, "values")
        assert text.splitlines()[0] == "# zerosum v1 r=1 s=2 n=6"
        assert parse_sequence(text) == seq

    def test_bits_round_trip(self):
        seq = SignSeq.from_values(Params(2, 3, 5), [-2, 3, 3, -2, 3])
        text = format_sequence(seq, "bits")
        assert text == "# zerosum v1 r=2 s=3 n=5\nb:01101\n"
        assert parse_sequence(text) == seq

    def test_empty_sequence_round_trip(self):
        seq = SignSeq(Params(1, 2, 3), 0, 0)
        text = format_sequence(seq)
        assert parse_sequence(text).n == 0

    def test_multiline_values_body(self):
        text = "# zerosum v1 r=1 s=1 n=4\n1 -1\n1 -1\n"
        assert parse_sequence(text).values() == (1, -1, 1, -1)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "# zerosum v2 r=1 s=1 n=2\n1 -1\n",
            "# zerosum v1 r=1 s=1 n=3\n1 -1\n",
            "# zerosum v1 r=1 s=1 n=2\n1 -2\n",
            "# zerosum v1 r=1 s=1 n=2\nb:011\n",
            "# zerosum v1 r=2 s=4 n=1\n4\n",
        ],
    )
    def test_malformed_files(self, text):
        with pytest.raises(SequenceFileError):
            parse_sequence(text)


class TestBoundCommand:
    def test_exact(self, runner):
        result = runner.invoke(cli, ["bound", "--r", "1", "--s", "2", "--k", "6"])
        assert result.exit_code == 0
        assert "N(1,2,6) = 10" in result.output

    def test_pm1(self, runner):
        result = runner.invoke(cli, ["bound", "--r", "1", "--s", "1", "--k", "6"])
        assert result.exit_code == 0
        assert "= 9" in result.output

    def test_smallsum(self, runner):
        result = runner.invoke(
            cli, ["bound", "--r", "1", "--s", "1", "--k", "6", "--t", "2"]
        )
        assert result.exit_code == 0
        assert "n >= 6" in result.output

    def test_pm1_q_bound(self, runner):
        result = runner.invoke(
            cli, ["bound", "--r", "1", "--s", "1", "--k", "4", "--q", "2"]
        )
        assert result.exit_code == 0
        assert "n >= 7" in result.output

    def test_sufficient_q_bound(self, runner):
        result = runner.invoke(
            cli, ["bound", "--r", "1", "--s", "2", "--k", "6", "--q", "0"]
        )
        assert result.exit_code == 0
        assert "n >= 11" in result.output

    def test_smallsum_requires_pm1(self, runner):
        result = runner.invoke(
            cli, ["bound", "--r", "1", "--s", "2", "--k", "6", "--t", "2"]
        )
        assert result.exit_code == 2

    def test_invalid_params_exit_2(self, runner):
        result = runner.invoke(cli, ["bound", "--r", "2", "--s", "4", "--k", "6"])
        assert result.exit_code == 2
        assert "gcd" in result.output

    def test_json_is_integer_only(self, runner):
        result = runner.invoke(
            cli, ["bound", "--r", "1", "--s", "2", "--k", "6", "--json"]
        )
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["command"] == "bound"
        assert report["indexing"] == "0-based"
        assert report["result"]["value"] == 10

        def no_floats(node):
            if isinstance(node, float):
                raise AssertionError(f"float in report: {node}")
            if isinstance(node, dict):
                for v in node.values():
                    no_floats(v)
            if isinstance(node, list):
                for v in node:
                    no_floats(v)

        no_floats(report)


class TestConstructVerifyPipeline:
    def test_block_extremal_round_trip(self, runner, tmp_path):
        out = tmp_path / "s.txt"
        result = runner.invoke(
            cli,
            ["construct", "--kind", "block-extremal", "--r", "1", "--s", "2",
             "--k", "6", "--out", str(out)],
        )
        assert result.exit_code == 0
        assert "n=9" in result.output
        assert out.read_text().splitlines()[1] == "-1 -1 -1 2 2 2 -1 -1 -1"
        verify = runner.invoke(
            cli, ["verify", "--mode", "block", "--k", "6", "--in", str(out)]
        )
        assert verify.exit_code == 0
        assert "minAbsWeight=3" in verify.output

    def test_bits_encoding(self, runner, tmp_path):
        out = tmp_path / "s.txt"
        runner.invoke(
            cli,
            ["construct", "--kind", "ap-mod-k1", "--r", "1", "--s", "1",
             "--k", "8", "--out", str(out), "--bits"],
        )
        assert out.read_text() == "# zerosum v1 r=1 s=1 n=12\nb:000111111000\n"
        verify = runner.invoke(
            cli, ["verify", "--mode", "ap", "--k", "8", "--in", str(out)]
        )
        assert verify.exit_code == 0

    def test_ap_two_p(self, runner, tmp_path):
        out = tmp_path / "s.txt"
        result = runner.invoke(
            cli, ["construct", "--kind", "ap-two-p", "--p", "3", "--out", str(out)]
        )
        assert result.exit_code == 0
        assert "n=8" in result.output
        verify = runner.invoke(
            cli, ["verify", "--mode", "ap", "--k", "6", "--in", str(out)]
        )
        assert verify.exit_code == 0

    def test_good_shift_defaults_to_min_alpha(self, runner, tmp_path):
        out = tmp_path / "s.txt"
        result = runner.invoke(
            cli,
            ["construct", "--kind", "ap-good-shift", "--r", "1", "--s", "2",
             "--k", "12", "--out", str(out)],
        )
        assert result.exit_code == 0
        assert "n=18" in result.output

    def test_degenerate_warns_but_succeeds(self, runner, tmp_path):
        out = tmp_path / "s.txt"
        result = runner.invoke(
            cli, ["construct", "--kind", "ap-mod-k", "--k", "6", "--out", str(out)]
        )
        assert result.exit_code == 0
        assert "degenerate" in result.output
        assert "n=0" in result.output

    def test_pm1_kinds_reject_other_letters(self, runner, tmp_path):
        out = tmp_path / "s.txt"
        result = runner.invoke(
            cli,
            ["construct", "--kind", "ap-mod-k1", "--r", "1", "--s", "2",
             "--k", "8", "--out", str(out)],
        )
        assert result.exit_code == 2
        assert "r = s = 1" in result.output

    def test_infeasible_inputs_exit_2(self, runner, tmp_path):
        out = tmp_path / "s.txt"
        result = runner.invoke(
            cli, ["construct", "--kind", "ap-two-p", "--p", "4", "--out", str(out)]
        )
        assert result.exit_code == 2
        assert "odd prime" in result.output

    def test_verify_witness_exit_1(self, runner, tmp_path):
        path = tmp_path / "alt.txt"
        path.write_text("# zerosum v1 r=1 s=1 n=4\n1 -1 1 -1\n")
        result = runner.invoke(
            cli, ["verify", "--mode", "block", "--k", "2", "--in", str(path)]
        )
        assert result.exit_code == 1
        assert "start=0" in result.output

    def test_verify_malformed_exit_2(self, runner, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("not a sequence file\n")
        result = runner.invoke(
            cli, ["verify", "--mode", "block", "--k", "2", "--in", str(path)]
        )
        assert result.exit_code == 2

    def test_verify_smallsum_mode(self, runner, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("# zerosum v1 r=1 s=1 n=9\n1 1 1 1 1 1 1 1 1\n")
        clean = runner.invoke(
            cli, ["verify", "--mode", "smallsum", "--k", "4", "--t", "2",
                  "--in", str(path)]
        )
        assert clean.exit_code == 0
        missing_t = runner.invoke(
            cli, ["verify", "--mode", "smallsum", "--k", "4", "--in", str(path)]
        )
        assert missing_t.exit_code == 2

    def test_verify_json_report(self, runner, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("# zerosum v1 r=1 s=2 n=9\n-1 -1 -1 2 2 2 -1 -1 -1\n")
        result = runner.invoke(
            cli, ["verify", "--mode", "block", "--k", "6", "--in", str(path), "--json"]
        )
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["result"]["minAbsWeight"] == 3
        assert report["result"]["scannedCount"] == 4
        assert report["result"]["witness"] is None


class TestOracleCommand:
    def test_block_threshold(self, runner):
        result = runner.invoke(
            cli,
            ["oracle", "--target", "block-threshold", "--r", "1", "--s", "2",
             "--k", "6", "--cap", "18", "--threads", "1"],
        )
        assert result.exit_code == 0
        assert "derivedThreshold=10 (exact)" in result.output

    def test_ap_threshold(self, runner):
        result = runner.invoke(
            cli,
            ["oracle", "--target", "ap-threshold", "--r", "1", "--s", "1",
             "--k", "6", "--cap", "10", "--threads", "1", "--json"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)["result"]
        assert payload["derivedThreshold"] == 9
        assert payload["maxAvoidingN"] == 8
        assert payload["mode"] == "ap"

    def test_two_k(self, runner):
        result = runner.invoke(cli, ["oracle", "--target", "two-k", "--k", "6"])
        assert result.exit_code == 0
        assert "verified" in result.output

    def test_pow2(self, runner):
        result = runner.invoke(cli, ["oracle", "--target", "pow2", "--v", "3"])
        assert result.exit_code == 0
        assert "2 of 256" in result.output

    def test_residue_lemma_default_factors(self, runner):
        result = runner.invoke(cli, ["oracle", "--target", "residue-lemma", "--k", "30"])
        assert result.exit_code == 0

    def test_budget_env_refusal(self, runner):
        result = runner.invoke(
            cli,
            ["oracle", "--target", "block-threshold", "--r", "1", "--s", "1",
             "--k", "6", "--cap", "16", "--threads", "1"],
            env={"ZEROSUM_BUDGET": "5"},
        )
        assert result.exit_code == 2
        assert "budget" in result.output

    def test_threshold_json_keys(self, runner):
        result = runner.invoke(
            cli,
            ["oracle", "--target", "block-threshold", "--r", "1", "--s", "2",
             "--k", "6", "--cap", "12", "--threads", "1", "--json"],
        )
        assert result.exit_code == 0
        report = json.loads(result.output)
        payload = report["result"]
        assert payload["derivedThreshold"] == 10
        assert payload["maxAvoidingN"] == 9
        assert payload["witnesses"] == ["b:000111000"]
        assert payload["exhaustive"] is True


class TestShiftCommand:
    def test_min_shift(self, runner):
        result = runner.invoke(cli, ["shift", "--r", "1", "--s", "1", "--k", "100"])
        assert result.exit_code == 0
        assert "alpha=1" in result.output

    def test_min_shift_parity_case(self, runner):
        result = runner.invoke(cli, ["shift", "--r", "1", "--s", "2", "--k", "21"])
        assert result.exit_code == 0
        assert "alpha=2" in result.output

    def test_prime_shift(self, runner):
        result = runner.invoke(
            cli, ["shift", "--r", "1", "--s", "2", "--k", "24", "--prime"]
        )
        assert result.exit_code == 0
        assert "alpha=5" in result.output

    def test_search_failure_exit_1(self, runner):
        result = runner.invoke(
            cli, ["shift", "--r", "1", "--s", "2", "--k", "21", "--max-alpha", "1"]
        )
        assert result.exit_code == 1
        assert "[1, 1]" in result.output


class TestTableCommand:
    def test_ap_lb_table(self, runner, tmp_path):
        out = tmp_path / "t.csv"
        result = runner.invoke(
            cli,
            ["table", "--r", "1", "--s", "1", "--k-min", "6", "--k-max", "12",
             "--what", "ap-lb", "--out", str(out)],
        )
        assert result.exit_code == 0
        assert out.read_bytes() == b"k,value\n6,0\n8,12\n10,14\n12,16\n"

    def test_n_table_skips_non_divisible_k(self, runner, tmp_path):
        out = tmp_path / "t.csv"
        result = runner.invoke(
            cli,
            ["table", "--r", "1", "--s", "2", "--k-min", "3", "--k-max", "9",
             "--what", "N", "--out", str(out)],
        )
        assert result.exit_code == 0
        assert out.read_text() == "k,value\n3,3\n6,10\n9,16\n"

    def test_shift_table(self, runner, tmp_path):
        out = tmp_path / "t.csv"
        result = runner.invoke(
            cli,
            ["table", "--r", "1", "--s", "2", "--k-min", "18", "--k-max", "24",
             "--what", "shift", "--out", str(out)],
        )
        assert result.exit_code == 0
        assert out.read_text() == "k,value\n18,1\n21,2\n24,1\n"
