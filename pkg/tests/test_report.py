"""Tests for JSON, CSV and text rendering of sweep reports."""

from src.cli.config import build_config
from src.cli.report import (
    COLUMNS,
    format_verdict,
    parse_json,
    render,
    render_csv,
    render_json,
    summary_line,
    verdicts_to_frame,
)
from src.theorems.engines import verify_thm5
from src.theorems.sweep import sweep


def _make_report(**settings):
    config = build_config({"theorem": "t2", "k": "2", "n": "2..3", **settings})
    return config, sweep(config.grid(), config.budgets)


class TestJson:
    def test_byte_identical(self):
        config, first = _make_report()
        _, second = _make_report()
        assert render_json(config.to_dict(), first) == render_json(config.to_dict(), second)

    def test_sections(self):
        config, report = _make_report()
        doc, verdicts = parse_json(render_json(config.to_dict(), report))
        assert set(doc) == {"meta", "config", "verdicts", "summary"}
        assert doc["meta"]["tool"] == "quadclass"
        assert verdicts == report.verdicts

    def test_integers_are_strings(self):
        config, report = _make_report()
        doc, _ = parse_json(render_json(config.to_dict(), report))
        passed = doc["verdicts"][1]
        assert passed["d"] == "-31"
        assert passed["params"] == {"k": "2", "n": "3"}
        assert doc["config"]["budgets"]["factor_cap"] == str(10**12)


class TestCsv:
    def test_header_and_rows(self):
        _, report = _make_report()
        lines = render_csv(report).splitlines()
        assert lines[0] == ",".join(["k", "n", *[c for c in COLUMNS if c != "params"]])
        assert len(lines) == 3
        assert lines[2].startswith("2,3,t2,pass,odd n,-31,1,-31,3,3,")

    def test_frame(self):
        _, report = _make_report()
        frame = verdicts_to_frame(report.verdicts)
        assert list(frame.columns[:2]) == ["k", "n"]
        assert list(frame["status"]) == ["not-applicable", "pass"]
        assert frame.loc[1, "params"] == "k=2, n=3"


class TestText:
    def test_summary_line(self):
        _, report = _make_report()
        assert summary_line(report) == "t2: 2 points (pass 1, not-applicable 1)"

    def test_render_text(self):
        config, report = _make_report()
        text = render("text", config.to_dict(), report)
        assert text.endswith(summary_line(report) + "\n")
        assert "invariant decomposition: holds (1 checked)" in text

    def test_format_verdict(self):
        line = format_verdict(verify_thm5(29, 4))
        assert line.startswith("t5 k=29, n=4  pass  case possible-exception")
        assert "d=-187 a=123" in line
        assert "n does not divide h" in line
