"""Tests for the command-line surface and sweep configuration."""

import json

import pytest

from src.cli.config import ParamRange, build_config, parse_config_text
from src.cli.main import main
from src.cli.report import parse_json
from src.core.errors import InputError
from src.theorems.verdict import TheoremId


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------


class TestParamRange:
    def test_stepped(self):
        assert ParamRange.parse("3..9/2").values() == (3, 5, 7, 9)

    def test_filters(self):
        assert ParamRange.parse("2..10", "odd").values() == (3, 5, 7, 9)
        assert ParamRange.parse("2..10", "even").values() == (2, 4, 6, 8, 10)
        assert ParamRange.parse("2..12", "prime").values() == (2, 3, 5, 7, 11)

    def test_single_and_list(self):
        assert ParamRange.parse("7").values() == (7,)
        assert ParamRange.parse("5,3,11").values() == (5, 3, 11)

    def test_describe(self):
        assert ParamRange.parse("3..9/2").describe() == "3..9/2"
        assert ParamRange.parse("2..10", "odd").describe() == "odd:2..10"

    @pytest.mark.parametrize("text", ["a..b", "9..3", "1..5/0", ""])
    def test_invalid(self, text):
        with pytest.raises(InputError):
            ParamRange.parse(text)


class TestBuildConfig:
    def test_grid(self):
        config = build_config({"theorem": "t5", "k-odd": "3..7", "n": "2..3"})
        grid = config.grid()
        assert grid.theorem_id is TheoremId.T5
        assert grid.axes == {"k": (3, 5, 7), "n": (2, 3)}
        assert config.output_format == "json"

    def test_budgets_and_flags(self):
        config = build_config(
            {"theorem": "T2", "k": "2", "n": "3", "budget-factor": "1e6",
             "workers": "3", "strict": "yes"}
        )
        assert config.budgets.factor_cap == 10**6
        assert config.workers == 3
        assert config.strict

    @pytest.mark.parametrize(
        "settings",
        [
            {"k": "2", "n": "3"},
            {"theorem": "t9", "k": "2", "n": "3"},
            {"theorem": "t5", "k": "3", "k-odd": "3..5", "n": "2"},
            {"theorem": "t5", "k-fancy": "3", "n": "2"},
            {"theorem": "t2", "k": "2", "n-even": "2..4"},
            {"theorem": "t2", "k": "2", "n": "3", "format": "xml"},
            {"theorem": "t2", "k": "2", "n": "3", "strict": "maybe"},
        ],
    )
    def test_rejected(self, settings):
        with pytest.raises(InputError):
            build_config(settings)

    def test_unknown_keys(self):
        with pytest.raises(InputError, match="workerz"):
            build_config({"theorem": "t2", "k": "2", "n": "3", "workerz": "4"})

    @pytest.mark.parametrize(
        "settings",
        [
            {"theorem": "t2", "k": "0..2", "n": "3"},
            {"theorem": "t5", "k": "-1,3", "n": "2"},
            {"theorem": "t6", "q": "5", "n": "2", "e": "0"},
            {"theorem": "t41", "x": "1", "k": "2", "n": "0..3"},
            {"theorem": "t42", "l": "3", "e": "-1..1", "n": "2"},
        ],
    )
    def test_values_below_domain(self, settings):
        with pytest.raises(InputError, match="must be >="):
            build_config(settings)

    def test_e_may_be_zero_for_twice_prime_power(self):
        config = build_config({"theorem": "t42", "l": "3", "e": "0..1", "n": "2"})
        assert config.grid().axes["e"] == (0, 1)

    def test_scientific_notation_is_exact(self):
        config = build_config(
            {"theorem": "t2", "k": "2", "n": "3", "budget-factor": "1.5e17"}
        )
        assert config.budgets.factor_cap == 150000000000000000

    @pytest.mark.parametrize("value", ["2.5", "1e-3", "nan", "four"])
    def test_non_integer_settings(self, value):
        with pytest.raises(InputError):
            build_config({"theorem": "t2", "k": "2", "n": "3", "workers": value})

    def test_config_text(self):
        text = "# sweep\ntheorem = t5\nk-odd = 3..9  # odd bases\n\nn-range = 2..4\n"
        assert parse_config_text(text) == {"theorem": "t5", "k-odd": "3..9", "n-range": "2..4"}

    def test_config_text_errors(self):
        with pytest.raises(InputError):
            parse_config_text("theorem t5")
        with pytest.raises(InputError):
            parse_config_text("theorem =")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


class TestClassnum:
    def test_text(self, capsys):
        code, out, _ = _run(capsys, "classnum", "-23")
        assert code == 0
        assert "h(-23) = 3" in out

    def test_not_squarefree(self, capsys):
        code, out, _ = _run(capsys, "classnum", "-99")
        assert code == 0
        assert "-99 = 3^2 * -11" in out
        assert "h(-11) = 1" in out

    def test_json(self, capsys):
        code, out, _ = _run(capsys, "classnum", "-5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["h"] == "2"
        assert doc["D"] == "-20"
        assert len(doc["forms"]) == 2

    def test_positive_rejected(self, capsys):
        code, _, err = _run(capsys, "classnum", "5")
        assert code == 2
        assert "negative" in err


class TestSquarefree:
    def test_decomposition(self, capsys):
        code, out, _ = _run(capsys, "squarefree", "-2829123")
        assert code == 0
        assert out.strip() == "-2829123 = 123^2 * -187"


class TestVerify:
    def test_single_point(self, capsys):
        code, out, _ = _run(capsys, "verify", "t6", "--q", "5", "--n", "2", "--e", "2")
        assert code == 0
        assert "case (2.2)" in out
        assert "t6: 1 points (pass 1)" in out

    def test_json(self, capsys):
        code, out, _ = _run(capsys, "verify", "t5", "--k", "29", "--n", "4", "--format", "json")
        assert code == 0
        doc, verdicts = parse_json(out)
        assert verdicts[0].d == -187
        assert doc["config"]["ranges"] == {"k": "29", "n": "4"}

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "reports" / "t2.csv"
        code, out, _ = _run(
            capsys, "verify", "t2", "--k", "2..3", "--n-odd", "1..3", "--format", "csv",
            "--out", str(target),
        )
        assert code == 0
        assert out.strip() == "t2: 4 points (pass 4)"
        assert target.read_text().splitlines()[0].startswith("k,n,theorem,status")

    def test_contradiction_is_usage_error(self, capsys):
        code, _, err = _run(capsys, "verify", "t2", "--k", "2", "--n-even", "2..4")
        assert code == 2
        assert "contradicts" in err

    def test_out_of_domain_range_is_usage_error(self, capsys):
        code, out, err = _run(capsys, "verify", "t2", "--k=0..2", "--n", "3")
        assert code == 2
        assert out == ""
        assert "k must be >= 2" in err

    def test_skipped_strict(self, capsys):
        argv = ["verify", "t2", "--k", "2", "--n", "3", "--budget-factor", "10"]
        assert _run(capsys, *argv)[0] == 0
        assert _run(capsys, *argv, "--strict")[0] == 1


class TestSweepCommand:
    def test_config_file(self, capsys, tmp_path):
        path = tmp_path / "t5.conf"
        path.write_text("theorem = t5\nk-odd = 3..5\nn = 2..3\nformat = json\n")
        code, out, _ = _run(capsys, "sweep", "--config", str(path))
        assert code == 0
        _, verdicts = parse_json(out)
        assert len(verdicts) == 4

    def test_flags_override_file(self, capsys, tmp_path):
        path = tmp_path / "t5.conf"
        path.write_text("theorem = t5\nk-odd = 3..99\nn = 2..3\n")
        code, out, _ = _run(capsys, "sweep", "--config", str(path), "--k", "3", "--format", "csv")
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_bad_config(self, capsys, tmp_path):
        path = tmp_path / "bad.conf"
        path.write_text("theorem t5\n")
        code, _, err = _run(capsys, "sweep", "--config", str(path))
        assert code == 2
        assert "config line 1" in err

    def test_misspelled_key(self, capsys, tmp_path):
        path = tmp_path / "typo.conf"
        path.write_text("theorem = t2\nk = 2\nn = 3\nworkerz = 4\nformatt = csv\n")
        code, out, err = _run(capsys, "sweep", "--config", str(path))
        assert code == 2
        assert out == ""
        assert "formatt" in err and "workerz" in err

    def test_missing_config(self, capsys, tmp_path):
        code, _, _ = _run(capsys, "sweep", "--config", str(tmp_path / "none.conf"))
        assert code == 2


class TestOtherCommands:
    def test_dioph(self, capsys):
        code, out, _ = _run(capsys, "dioph", "x2+1=2kz", "--k", "13", "--bound", "20")
        assert code == 0
        assert out.strip() == "x2+1=2kz: [(5, 1), (239, 4)]"

    def test_dioph_json(self, capsys):
        code, out, _ = _run(capsys, "dioph", "2x2+1=3y", "--format", "json")
        assert code == 0
        assert json.loads(out)["solutions"] == [["1", "1"], ["2", "2"], ["11", "5"]]

    def test_lemma32_needs_arguments(self, capsys):
        assert _run(capsys, "dioph", "lemma32")[0] == 2

    def test_bs_classify(self, capsys):
        code, out, _ = _run(
            capsys, "bs-classify", "--gamma-sq", "4", "--d1", "13", "--d2", "3", "--p", "2",
            "--y-max", "20", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["in_E"] is True
        assert doc["solutions"] == [["1", "2"], ["71", "14"]]

    def test_bs_classify_invalid(self, capsys):
        code, _, _ = _run(
            capsys, "bs-classify", "--gamma-sq", "3", "--d1", "1", "--d2", "2", "--p", "5"
        )
        assert code == 2

    def test_paper_examples(self, capsys):
        code, out, _ = _run(capsys, "paper-examples")
        assert code == 0
        assert "[MISMATCH]" not in out

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "quadclass" in capsys.readouterr().out
