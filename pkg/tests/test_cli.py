import json

import pytest

from ordmixed.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFitCommand:
    def test_builtin_fixture_text_output(self, capsys):
        code, out, err = run_cli(
            capsys, "fit", "--link", "po", "--random-effects", "none"
        )
        assert code == 0 and err == ""
        assert "c1" in out and "-2.171" in out
        assert "sigma" not in out

    def test_random_effect_column_layout(self, capsys):
        code, out, _ = run_cli(
            capsys, "fit", "--link", "po", "--random-effects", "one"
        )
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip().startswith("sigma")]
        assert len(lines) == 1
        # estimate, se, p, and both interval bounds on the row
        assert len(lines[0].split()) == 6

    def test_data_file_with_schema(self, tmp_path, capsys):
        path = tmp_path / "toy.csv"
        path.write_text(
            "g,y1,y2,y3\n"
            + "\n".join(f"{1 + i % 2},{2 + i % 3},{3},{5 - i % 3}" for i in range(8))
            + "\n"
        )
        code, out, err = run_cli(
            capsys, "fit", "--data", str(path), "--schema", "g:2",
            "--categories", "3", "--link", "acl",
        )
        assert code == 0, err
        assert "g2" in out

    def test_json_format_parses(self, capsys):
        code, out, _ = run_cli(
            capsys, "fit", "--link", "acl", "--random-effects", "none",
            "--format", "json",
        )
        payload = json.loads(out)
        assert payload["model"]["link"] == "acl"
        assert payload["converged"] is True


class TestGofCommand:
    def test_panel_includes_chi2_C_aic(self, capsys):
        code, out, _ = run_cli(
            capsys, "gof", "--link", "po", "--random-effects", "none",
            "--format", "json",
        )
        payload = json.loads(out)
        assert payload["gof"]["chi2"]["df"] == 86
        assert payload["gof"]["C"]["df"] == 8
        assert payload["gof"]["chi2"]["statistic"] == pytest.approx(146.1, abs=0.5)
        assert payload["gof"]["aic"] == pytest.approx(384.1, abs=1.0)


class TestSimulateCommand:
    def test_deterministic_output(self, capsys):
        argv = [
            "simulate", "--link", "po", "--sigma", "0.6",
            "--replications", "3", "--seed", "11",
            "--fit", "po:none", "--fit", "po:one",
            "--order", "8", "--format", "json",
        ]
        code1, out1, _ = run_cli(capsys, *argv)
        code2, out2, _ = run_cli(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2
        payload = json.loads(out1)
        assert set(payload["models"]) == {"po:none", "po:univariate"}

    def test_default_fit_list_is_both_variants(self, capsys):
        code, out, _ = run_cli(
            capsys, "simulate", "--link", "crl", "--replications", "2",
            "--seed", "4", "--order", "6", "--format", "json",
        )
        payload = json.loads(out)
        assert set(payload["models"]) == {"crl:none", "crl:univariate"}

    def test_order_env_override(self, capsys, monkeypatch):
        argv = [
            "simulate", "--link", "po", "--replications", "2", "--seed", "4",
            "--fit", "po:one", "--format", "json",
        ]
        monkeypatch.setenv("ORDMIXED_ORDER", "6")
        code, low, _ = run_cli(capsys, *argv)
        assert code == 0
        monkeypatch.setenv("ORDMIXED_ORDER", "30")
        code, high, _ = run_cli(capsys, *argv)
        assert code == 0
        # different quadrature orders shift the fitted values slightly
        assert low != high


class TestReproduceCommand:
    def test_table2_deltas_are_small(self, capsys):
        code, out, err = run_cli(
            capsys, "reproduce", "table2", "--format", "json"
        )
        assert code == 0, err
        payload = json.loads(out)
        assert payload["preset"] == "table2"
        rows = {r["name"]: r for r in payload["rows"]}
        row = rows["none.c1.estimate"]
        assert row["published"] == -2.171
        assert abs(row["delta"]) < 0.01
        assert abs(rows["univariate.sigma.estimate"]["delta"]) < 0.03
        # abbreviated published names map onto the fitted covariate names
        assert rows["none.f4.estimate"]["computed"] is not None
        assert abs(rows["none.f4.estimate"]["delta"]) < 0.01
        assert all(r["computed"] is not None for r in payload["rows"])

    def test_unknown_preset_fails_cleanly(self, capsys):
        code, out, err = run_cli(capsys, "reproduce", "table99")
        assert code == 1
        assert err.startswith("error: ValueError:")
        assert "\n" not in err.strip()


class TestErrors:
    def test_unknown_fixture(self, capsys):
        code, out, err = run_cli(capsys, "fit", "--link", "po", "--fixture", "kiwi")
        assert code == 1
        assert err.startswith("error: ValueError:")

    def test_missing_data_file(self, capsys):
        code, out, err = run_cli(
            capsys, "fit", "--link", "po", "--data", "/nope/missing.csv"
        )
        assert code == 1
        assert err.startswith("error: DatasetParseError:")

    def test_bad_flag_single_line(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["fit", "--link", "nope"])
        assert exc.value.code == 2
        err = capsys.readouterr().err
        assert err.startswith("error: ArgumentError:")
        assert len(err.strip().splitlines()) == 1
