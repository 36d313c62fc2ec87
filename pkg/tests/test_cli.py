"""Command-line interface: outputs, exit codes, JSON payloads."""

import json
import shutil
import subprocess
from textwrap import dedent

from telescope.cli import main

CONV = "(-1)^k * binom(n,k) * catalan(k) * catalan(n-k)"


def write_corpus(tmp_path, body, name="c.toml"):
    path = tmp_path / name
    path.write_text(dedent(body), encoding="utf-8")
    return str(path)


GOOD = """\
    version = 1

    [[identity]]
    name = "binomial-row"
    summand = "binom(n,k)"
    claimed_value = "2^n"
    claimed_recurrence = { order = 1, coeffs = ["1", "-2"] }
    check_range = [0, 20]
    """


class TestWatsonCommand:
    def test_watson_value(self, capsys):
        assert main(["watson", "--a", "-2", "--b", "-2", "--c", "1/2"]) == 0
        assert capsys.readouterr().out == "2/3\n"

    def test_watson_reduced(self, capsys):
        assert main(["watson", "--a", "-3", "--b", "-3", "--c", "1/2",
                     "--reduce", "w01"]) == 0
        assert capsys.readouterr().out == "9/20\n"

    def test_denominator_pole_is_exact_zero(self, capsys):
        assert main(["watson", "--a", "-1", "--b", "-1", "--c", "3/2"]) == 0
        assert capsys.readouterr().out == "0\n"

    def test_numerator_pole_is_a_failure(self, capsys):
        assert main(["watson", "--a", "0", "--b", "-1", "--c", "1"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_off_lattice_parameters_are_usage_errors(self, capsys):
        assert main(["watson", "--a", "-1/2", "--b", "-1", "--c", "1/2"]) == 2
        assert main(["watson", "--a", "1/3", "--b", "-1", "--c", "1/2"]) == 2


class TestEval3f2Command:
    def test_values(self, capsys):
        assert main(["eval3f2", "--upper", "-2,-3,1/2",
                     "--lower", "-3/2,2"]) == 0
        assert capsys.readouterr().out == "1\n"
        assert main(["eval3f2", "--upper", "-2,-2,1/2",
                     "--lower", "-3/2,1"]) == 0
        assert capsys.readouterr().out == "2/3\n"

    def test_nonterminating_fails(self, capsys):
        assert main(["eval3f2", "--upper", "1/2,2,3", "--lower", "1,1"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_wrong_parameter_count(self, capsys):
        assert main(["eval3f2", "--upper", "-2,-3", "--lower", "-3/2,2"]) == 2
        assert "upper" in capsys.readouterr().err


class TestProveCommand:
    def test_text_output(self, capsys):
        assert main(["prove", "--summand", "binom(n,k)",
                     "--lower", "0", "--upper", "n"]) == 0
        out = capsys.readouterr().out
        assert "recurrence (order 1):" in out
        assert "f(n-1)" in out
        assert "certificate R(n,k):" in out
        assert "verified:" in out and "pass" in out

    def test_json_output(self, capsys):
        assert main(["prove", "--summand", CONV,
                     "--lower", "0", "--upper", "n", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["order"] == 2
        assert payload["coeffs"] == ["n^2 + 2*n", "0",
                                     "-16*n^2 + 32*n - 16"]
        assert payload["verified"] is True
        assert isinstance(payload["certificate"], str)

    def test_order_cap_failure(self, capsys):
        assert main(["prove", "--summand", CONV,
                     "--lower", "0", "--upper", "n", "--max-order", "1"]) == 1
        assert "no recurrence" in capsys.readouterr().err

    def test_grammar_error(self, capsys):
        assert main(["prove", "--summand", "k^^2",
                     "--lower", "0", "--upper", "n"]) == 2
        assert "position" in capsys.readouterr().err


class TestVerifyCommand:
    def test_passing_corpus(self, tmp_path, capsys):
        assert main(["verify", "--corpus", write_corpus(tmp_path, GOOD)]) == 0
        assert "overall: PASS (1/1)" in capsys.readouterr().out

    def test_failing_corpus(self, tmp_path, capsys):
        bad = write_corpus(tmp_path, GOOD.replace('"2^n"', '"2^n + 1"'))
        assert main(["verify", "--corpus", bad]) == 1
        assert "overall: FAIL" in capsys.readouterr().out

    def test_report_file(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert main(["verify", "--corpus", write_corpus(tmp_path, GOOD),
                     "--report", str(out)]) == 0
        capsys.readouterr()
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert payload["overall"] == "pass"
        assert payload["entries"][0]["name"] == "binomial-row"

    def test_range_override(self, tmp_path, capsys):
        assert main(["verify", "--corpus", write_corpus(tmp_path, GOOD),
                     "--range", "0..8"]) == 0
        capsys.readouterr()

    def test_bad_range_is_usage_error(self, tmp_path, capsys):
        assert main(["verify", "--corpus", write_corpus(tmp_path, GOOD),
                     "--range", "0-8"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_corpus_file(self, capsys):
        assert main(["verify", "--corpus", "/nonexistent/corpus.toml"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bundled_default(self, capsys):
        assert main(["verify", "--range", "0..8"]) == 0
        assert "overall: PASS (7/7)" in capsys.readouterr().out

    def test_parallel_jobs(self, capsys):
        assert main(["verify", "--range", "0..8", "--jobs", "2"]) == 0
        assert "overall: PASS (7/7)" in capsys.readouterr().out


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        assert main(["conjure"]) == 2
        capsys.readouterr()

    def test_no_arguments(self, capsys):
        assert main([]) == 2
        capsys.readouterr()

    def test_help_exits_cleanly(self, capsys):
        assert main(["--help"]) == 0
        assert "prove" in capsys.readouterr().out


class TestConsoleScript:
    def test_installed_entry_point(self):
        exe = shutil.which("telescope")
        assert exe is not None, "console script not installed"
        proc = subprocess.run(
            [exe, "watson", "--a", "-2", "--b", "-2", "--c", "1/2"],
            capture_output=True, text=True, timeout=60)
        assert proc.returncode == 0
        assert proc.stdout == "2/3\n"
