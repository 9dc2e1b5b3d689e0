"""Unit tests for CLI commands."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from ghurwitz import __version__
from ghurwitz.cli import main

WINDOW = ["--rows", "1:4", "--cols", "1:4"]
SMALL_SUITE = [
    "--count", "2", "--degree", "3", "--window", "6", "--cap-window", "8", "--samples", "100",
]


@pytest.fixture
def runner():
    """Create CLI runner."""
    return CliRunner()


def _inputs(*paths: Path) -> list[str]:
    args: list[str] = []
    for path in paths:
        args += ["--input", str(path)]
    return args


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_help_lists_commands(runner):
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    for command in ("build", "check-tnn", "check-s", "equivalence", "quasi-stability", "sector"):
        assert command in result.output


# -- build -------------------------------------------------------------------------


class TestBuild:
    """Tests for the build command."""

    def test_padded_window_to_stdout(self, runner, spec_files):
        args = ["build", *_inputs(spec_files["p_counter"], spec_files["q_counter"]),
                "--kind", "hurwitz_type", "--pad", *WINDOW]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["entries"][0] == ["3", "4", "1", "0"]
        assert data["entries"][3] == ["0", "2", "1", "0"]
        assert data["kind"] == "hurwitz_type"
        assert data["padded"] is True

    def test_unpadded_window_lacks_coefficients(self, runner, spec_files):
        args = ["build", *_inputs(spec_files["p_counter"], spec_files["q_counter"]),
                "--kind", "hurwitz_type", *WINDOW]
        result = runner.invoke(main, args)
        assert result.exit_code == 3

    def test_rows_required(self, runner, spec_files):
        args = ["build", *_inputs(spec_files["p_counter"], spec_files["q_counter"]),
                "--kind", "hurwitz_type", "--pad"]
        result = runner.invoke(main, args)
        assert result.exit_code == 2

    def test_out_file(self, runner, spec_files, tmp_path):
        out = tmp_path / "window.json"
        args = ["build", *_inputs(spec_files["exp"]), "--kind", "toeplitz",
                "--rows", "1:3", "--cols", "1:3", "--out", str(out)]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["entries"][0] == ["1", "1", "1/2"]

    def test_stored_window_round_trip(self, runner, spec_files, tmp_path):
        out = tmp_path / "window.json"
        runner.invoke(main, ["build", *_inputs(spec_files["p_counter"], spec_files["q_counter"]),
                             "--kind", "hurwitz_type", "--pad", *WINDOW, "--out", str(out)])
        result = runner.invoke(main, ["check-tnn", *_inputs(out)])
        assert result.exit_code == 1


# -- check-tnn ---------------------------------------------------------------------


class TestCheckTnn:
    """Tests for the check-tnn command."""

    def test_counterexample(self, runner, spec_files, tmp_path):
        out = tmp_path / "verdict.json"
        args = ["check-tnn", *_inputs(spec_files["p_counter"], spec_files["q_counter"]),
                "--kind", "hurwitz_type", "--pad", *WINDOW, "--out", str(out)]
        result = runner.invoke(main, args)
        assert result.exit_code == 1
        assert "NEGATIVE minor" in result.output
        data = json.loads(out.read_text(encoding="utf-8"))
        assert set(data) == {"verdict", "matrix", "config"}
        assert data["verdict"]["rows"] == [1, 2]
        assert data["verdict"]["value"] == "-5"
        assert data["config"]["command"] == "check-tnn"

    def test_interlacing_pair(self, runner, spec_files):
        args = ["check-tnn", *_inputs(spec_files["p_interlacing"], spec_files["q_interlacing"]),
                "--kind", "hurwitz_type", "--pad", *WINDOW]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        assert "NONNEGATIVE" in result.output

    def test_malformed_spec(self, runner, spec_files):
        args = ["check-tnn", *_inputs(spec_files["malformed"]), "--kind", "toeplitz", *WINDOW]
        result = runner.invoke(main, args)
        assert result.exit_code == 2

    def test_missing_file(self, runner, spec_files):
        args = ["check-tnn", *_inputs(spec_files["dir"] / "absent.json"),
                "--kind", "toeplitz", *WINDOW]
        result = runner.invoke(main, args)
        assert result.exit_code == 2
        assert "File not found" in result.output

    def test_bad_thread_count(self, runner, spec_files):
        args = ["check-tnn", *_inputs(spec_files["p_counter"], spec_files["q_counter"]),
                "--kind", "hurwitz_type", "--pad", *WINDOW]
        result = runner.invoke(main, args, env={"GHURWITZ_THREADS": "abc"})
        assert result.exit_code == 2


# -- check-s -----------------------------------------------------------------------


class TestCheckS:
    """Tests for the check-s command."""

    def test_s_function(self, runner, spec_files, tmp_path):
        out = tmp_path / "s.json"
        args = ["check-s", *_inputs(spec_files["poly_p"], spec_files["poly_q"]),
                "--samples", "200", "--out", str(out)]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["s_verdict"]["is_s_function"] is True
        assert data["sampler"]["pass"] is True

    def test_reversed_ratio(self, runner, spec_files):
        args = ["check-s", *_inputs(spec_files["poly_q"], spec_files["poly_p"]), "--samples", "200"]
        result = runner.invoke(main, args)
        assert result.exit_code == 1

    def test_approx_mode_uses_the_sampler(self, runner, spec_files):
        args = ["check-s", *_inputs(spec_files["poly_p"], spec_files["poly_q"]),
                "--mode", "approx", "--samples", "200"]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        assert "Sampler pass" in result.output

    def test_needs_two_inputs(self, runner, spec_files):
        result = runner.invoke(main, ["check-s", *_inputs(spec_files["poly_p"])])
        assert result.exit_code == 2

    def test_exponential_is_not_an_s_function(self, runner, spec_files, tmp_path):
        out = tmp_path / "exp.json"
        args = ["check-s", *_inputs(spec_files["one"], spec_files["exp"]), "--out", str(out)]
        result = runner.invoke(main, args)
        assert result.exit_code == 1
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["s_verdict"]["is_s_function"] is False
        assert data["exponential_exhibit"] is not None

    def test_mixed_inputs(self, runner, spec_files):
        result = runner.invoke(main, ["check-s", *_inputs(spec_files["poly_p"], spec_files["exp"])])
        assert result.exit_code == 2


# -- suites ------------------------------------------------------------------------


@pytest.mark.slow
class TestSuites:
    """Tests for the property suite commands."""

    def test_equivalence(self, runner, tmp_path):
        out = tmp_path / "equivalence.json"
        markdown = tmp_path / "equivalence.md"
        html = tmp_path / "equivalence.html"
        args = ["equivalence", *SMALL_SUITE, "--out", str(out),
                "--markdown", str(markdown), "--html", str(html)]
        result = runner.invoke(main, args)
        assert result.exit_code in (0, 3)
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["suite"] == "equivalence"
        assert data["summary"]["fail"] == 0
        assert data["config"]["grid"] == ["0", "1/2", "1", "2"]
        assert "# ghurwitz equivalence suite" in markdown.read_text(encoding="utf-8")
        assert "<title>ghurwitz equivalence suite</title>" in html.read_text(encoding="utf-8")

    def test_equivalence_same_seed_same_bytes(self, runner, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        runner.invoke(main, ["equivalence", *SMALL_SUITE, "--out", str(first)])
        runner.invoke(main, ["equivalence", *SMALL_SUITE, "--out", str(second)],
                      env={"GHURWITZ_THREADS": "2"})
        assert first.read_bytes() == second.read_bytes()

    def test_bad_grid(self, runner, tmp_path):
        args = ["equivalence", *SMALL_SUITE, "--grid", "1,-1", "--out", str(tmp_path / "x.json")]
        result = runner.invoke(main, args)
        assert result.exit_code == 2

    def test_quasi_stability(self, runner, tmp_path):
        out = tmp_path / "quasi.json"
        result = runner.invoke(main, ["quasi-stability", *SMALL_SUITE, "--out", str(out)])
        assert result.exit_code in (0, 3)
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["suite"] == "quasi-stability"
        assert data["summary"]["fail"] == 0

    def test_sector(self, runner, tmp_path):
        out = tmp_path / "sector.json"
        result = runner.invoke(main, ["sector", *SMALL_SUITE, "--M", "3", "--out", str(out)])
        assert result.exit_code in (0, 3)
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["config"]["M"] == 3

    def test_sector_needs_m_at_least_two(self, runner, tmp_path):
        result = runner.invoke(main, ["sector", *SMALL_SUITE, "--M", "1",
                                      "--out", str(tmp_path / "sector.json")])
        assert result.exit_code == 2
