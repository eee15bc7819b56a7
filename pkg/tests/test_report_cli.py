import json

import pytest
from click.testing import CliRunner

from richlab.cli import main
from richlab.report import Report, Series, render_csv, render_json, render_text


@pytest.fixture
def sample_report():
    rep = Report("sample", params={"alpha": 1})
    rep.add_fact("letters", "01")
    rep.add_series(Series("C", [0, 1, 2], [1, 2, 3], horizon=100))
    rep.add_series(Series("slack", [1, 2], [0, 0], horizon=100, reliable=True))
    rep.check("zero slack", True)
    rep.check_equal("letters", "01", "01")
    return rep


def test_report_passed_flag(sample_report):
    assert sample_report.passed
    sample_report.check("expected failure", False, "details")
    assert not sample_report.passed


def test_series_length_mismatch_rejected():
    with pytest.raises(ValueError):
        Series("bad", [1, 2, 3], [1])


def test_render_text(sample_report):
    text = render_text(sample_report)
    assert "# sample" in text
    assert "letters" in text
    assert "[PASS] zero slack" in text
    assert "2/2 checks passed" in text
    assert "C@100" in text


def test_render_json_is_deterministic(sample_report):
    one = render_json(sample_report)
    two = render_json(sample_report)
    assert one == two
    payload = json.loads(one)
    assert payload["title"] == "sample"
    assert payload["checks"][0]["passed"] is True
    assert payload["series"][0]["values"] == [1, 2, 3]


def test_render_csv(tmp_path, sample_report):
    paths = render_csv(sample_report, tmp_path)
    names = {p.name for p in paths}
    assert names == {"facts.csv", "series_n.csv", "checks.csv"}
    table = (tmp_path / "series_n.csv").read_text().splitlines()
    assert table[0].split(",")[0] == "n"
    assert "C" in table[0] and "slack" in table[0]


def test_render_figures(tmp_path, sample_report):
    from richlab.figures import render_figures

    paths = render_figures(sample_report, tmp_path)
    assert len(paths) == 1
    assert paths[0].suffix == ".png"
    assert paths[0].stat().st_size > 0


def test_cli_gen():
    runner = CliRunner()
    res = runner.invoke(main, ["gen", "--word", "tm(2,2)", "--length", "20"])
    assert res.exit_code == 0
    assert res.output.strip() == "01101001100101101001"


def test_cli_gen_wide_alphabet_uses_spaces():
    runner = CliRunner()
    res = runner.invoke(main, ["gen", "--word", "tm(11,11)", "--length", "12"])
    assert res.exit_code == 0
    assert res.output.strip() == "0 1 2 3 4 5 6 7 8 9 10 1"


def test_cli_gen_bad_expression():
    runner = CliRunner()
    res = runner.invoke(main, ["gen", "--word", "nope()", "--length", "5"])
    assert res.exit_code != 0
    assert "nope" in res.output


def test_cli_analyze_text():
    runner = CliRunner()
    res = runner.invoke(
        main,
        ["analyze", "--word", "S(tm(2,2))", "--group", "R", "--horizon", "5000", "--n-max", "20"],
    )
    assert res.exit_code == 0
    assert "slack" in res.output
    assert "[PASS]" in res.output


def test_cli_analyze_group_needs_matching_modulus():
    runner = CliRunner()
    res = runner.invoke(
        main,
        ["analyze", "--word", "tm(3,4)", "--group", "E", "--horizon", "1000"],
    )
    assert res.exit_code != 0


def test_cli_run_unknown_experiment_lists_catalog():
    runner = CliRunner()
    res = runner.invoke(main, ["run", "nothing"])
    assert res.exit_code != 0
    assert "example-3-1" in res.output


def test_cli_run_rejects_bad_params():
    runner = CliRunner()
    res = runner.invoke(main, ["run", "pd-transfer", "--param", "bogus=1"])
    assert res.exit_code != 0
    res = runner.invoke(main, ["run", "pd-transfer", "--param", "noequals"])
    assert res.exit_code != 0


def test_cli_run_csv_requires_out():
    runner = CliRunner()
    res = runner.invoke(main, ["run", "pd-transfer", "--format", "csv"])
    assert res.exit_code != 0
    assert "--out" in res.output


def test_cli_run_json_deterministic(tmp_path):
    runner = CliRunner()
    args = [
        "run",
        "pd-transfer",
        "--param",
        "n_max=10",
        "--horizon",
        "3000",
        "--format",
        "json",
        "--no-plot",
    ]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == 0
    assert first.output == second.output
    payload = json.loads(first.output)
    assert payload["params"]["experiment"] == "pd-transfer"


def test_cli_run_writes_files_and_figures(tmp_path):
    runner = CliRunner()
    out = tmp_path / "bundle"
    res = runner.invoke(
        main,
        [
            "run",
            "pd-transfer",
            "--param",
            "n_max=10",
            "--horizon",
            "3000",
            "--format",
            "csv",
            "--out",
            str(out),
        ],
    )
    assert res.exit_code == 0
    assert (out / "series_n.csv").exists()
    assert (out / "checks.csv").exists()
    assert list(out.glob("*.png"))


def test_cli_run_exit_code_tracks_failures():
    runner = CliRunner()
    res = runner.invoke(main, ["run", "example-3-1", "--no-plot"])
    assert res.exit_code == 1
    assert "[FAIL]" in res.output


def test_cli_respects_prefix_cap(monkeypatch):
    monkeypatch.setenv("RICHLAB_MAX_PREFIX", "1000")
    runner = CliRunner()
    res = runner.invoke(main, ["gen", "--word", "tm(2,2)", "--length", "2000"])
    assert res.exit_code != 0
