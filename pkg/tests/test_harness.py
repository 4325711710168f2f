"""Harness tests: scenario files, sweeps, exhibit tables, exports, CLI."""

import json

import pytest

from phcsim.harness import (ReferenceCell, ScenarioError, check_table, export,
                            import_table, load_scenario, parse_scenario,
                            render, reproduce, run_sweep)
from phcsim.harness import targets
from phcsim.harness.cli import analyze_classes, main
from phcsim.harness.export import render_csv, render_json
from phcsim.harness.runner import ResultTable, TableRow
from phcsim.harness.scenario import consult_profile
from phcsim.model import build_configuration, simulate


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


# -- scenario files -----------------------------------------------------

class TestScenarioParsing:
    def test_minimal_file_defaults(self, tmp_path):
        path = write_json(tmp_path / "s.json", {"configuration": 1})
        spec = parse_scenario(path)
        assert spec.config_id == 1
        assert spec.n_replications == 100
        assert (spec.horizon_days, spec.warmup_days) == (365, 180)
        assert spec.base_seed == 20260822
        assert spec.scenario_count() == 1
        assert spec.points() == [()]

    def test_cartesian_count(self):
        spec = load_scenario({"sweep": {"consult_mean": [0.87, 2.5, 5],
                                        "opd_iat": [3, 6, 9]}})
        assert spec.scenario_count() == 9
        assert len(spec.points()) == 9

    def test_config3_maternal_override_rejected(self):
        with pytest.raises(ScenarioError, match="overrides"):
            load_scenario({"configuration": 3,
                           "overrides": {"childbirth_interarrival_mean": 1440}})

    def test_unknown_top_key(self):
        with pytest.raises(ScenarioError, match="reps"):
            load_scenario({"reps": 5})

    def test_unknown_override_path(self):
        with pytest.raises(ScenarioError, match="overrides.not_real"):
            load_scenario({"overrides": {"not_real": 1}})

    def test_unknown_axis(self):
        with pytest.raises(ScenarioError, match="sweep.bogus"):
            load_scenario({"sweep": {"bogus": [1, 2]}})

    def test_non_numeric_axis_values(self):
        with pytest.raises(ScenarioError, match="sweep.opd_iat"):
            load_scenario({"sweep": {"opd_iat": [3, "six"]}})

    def test_sweep_cap(self):
        values = list(range(1, 10))
        with pytest.raises(ScenarioError, match="exceed the cap"):
            load_scenario({"sweep": {"opd_iat": values,
                                     "consult_mean": values},
                           "sweep_cap": 80})

    def test_warmup_before_horizon(self):
        with pytest.raises(ScenarioError, match="warmup_days"):
            load_scenario({"horizon_days": 10, "warmup_days": 10})

    def test_intervention_flags(self):
        spec = load_scenario({"configuration": 4,
                              "interventions": {"extra_doctor": True}})
        assert spec.base_configuration().n_doctors == 3

    def test_bad_intervention_flag(self):
        with pytest.raises(ScenarioError, match="interventions.bogus"):
            load_scenario({"interventions": {"bogus": True}})

    def test_not_json(self, tmp_path):
        path = tmp_path / "s.json"
        path.write_text("{nope")
        with pytest.raises(ScenarioError, match="not valid JSON"):
            parse_scenario(str(path))


class TestAxisAliases:
    def test_consult_profile_shapes(self):
        short = consult_profile(0.87)
        assert (short.mu, short.lower_bound) == (0.87, 0.5)
        long = consult_profile(5.0)
        assert (long.mu, long.lower_bound) == (5.0, 2.0)

    def test_load_alias(self):
        spec = load_scenario({"sweep": {"opd_daily_load": [120]}})
        cfg = spec.configuration_at((120.0,))
        assert cfg.opd_interarrival_mean == pytest.approx(3.0)

    def test_emergency_multiplier(self):
        spec = load_scenario({"configuration": 1,
                              "sweep": {"emergency_load_multiplier": [2]}})
        cfg = spec.configuration_at((2.0,))
        assert cfg.ipd_interarrival_mean == pytest.approx(1440.0)
        assert cfg.childbirth_interarrival_mean == pytest.approx(720.0)
        assert cfg.anc_interarrival_mean == pytest.approx(720.0)

    def test_childbirth_load_alias(self):
        spec = load_scenario({"sweep": {"childbirth_daily_load": [2]}})
        cfg = spec.configuration_at((2.0,))
        assert cfg.childbirth_interarrival_mean == pytest.approx(720.0)

    def test_plain_field_axis(self):
        spec = load_scenario({"sweep": {"n_labour_beds": [1, 2]}})
        assert spec.configuration_at((2.0,)).n_labour_beds == 2.0


# -- sweeps -------------------------------------------------------------

class TestRunSweep:
    def test_degenerate_sweep_matches_simulate(self):
        spec = load_scenario({"configuration": 3, "replications": 2,
                              "horizon_days": 30, "warmup_days": 10})
        table = run_sweep(spec, n_workers=1)
        direct = simulate(build_configuration(3), n_replications=2,
                          horizon_days=30, warmup_days=10,
                          base_seed=spec.base_seed, n_workers=1)
        assert len(table.rows) == 1
        assert table.rows[0].mean == direct.mean
        assert table.rows[0].sd == direct.sd
        assert not table.partial

    def test_failures_isolated(self):
        spec = load_scenario({"configuration": 2, "replications": 2,
                              "horizon_days": 20, "warmup_days": 5,
                              "sweep": {"p_lab_referral": [0.4, 7.0]}})
        table = run_sweep(spec, n_workers=1)
        good = table.row_by_key((0.4,))
        bad = table.row_by_key((7.0,))
        assert good.error is None and good.mean
        assert bad.error is not None and not bad.mean
        assert table.partial

    def test_common_random_numbers(self):
        # the swept axis must not disturb streams it cannot reach
        spec = load_scenario({"configuration": 2, "replications": 2,
                              "horizon_days": 30, "warmup_days": 10,
                              "sweep": {"opd_iat": [6, 9]}})
        table = run_sweep(spec, n_workers=1)
        a = table.row_by_key((6.0,))
        b = table.row_by_key((9.0,))
        for untouched in ("labour_bed_utilization", "inpatient_bed_utilization",
                          "childbirth_referral_fraction",
                          "staff_nurse_utilization"):
            assert a.mean[untouched] == b.mean[untouched]
        assert a.mean["doctor_utilization"] != b.mean["doctor_utilization"]


# -- reference cells ----------------------------------------------------

class TestTargets:
    def test_table6_coverage(self):
        outcomes = {column for _, column in targets.TABLE6}
        assert len(outcomes) == 14
        # two maternal cells are not applicable in setup 3
        assert (3, "labour_bed_utilization") not in targets.TABLE6
        assert (3, "childbirth_referral_fraction") not in targets.TABLE6
        assert len(targets.TABLE6) == 14 * 4 - 2

    def test_band_cell(self):
        cell = targets.TABLE6[(4, "doctor_utilization")]
        assert cell.binding
        assert cell.passes(1.142 + 0.049)
        assert not cell.passes(1.142 + 0.051)
        assert cell.passes(None) is False
        absolute, percent = cell.deviation(1.122)
        assert absolute == pytest.approx(-0.02)
        assert percent == pytest.approx(-1.7513, abs=1e-3)

    def test_exact_cell(self):
        cell = targets.TABLE5[(1, "additive_estimate")]
        assert cell.decimals == 4
        assert cell.passes(0.11554999)
        assert not cell.passes(0.1156)

    def test_report_only_cell(self):
        cell = targets.TABLE6[(1, "lab_waiting_time")]
        assert not cell.binding
        assert cell.passes(99.0) is None


# -- exhibit reproduction (tiny budgets) --------------------------------

@pytest.fixture(scope="module")
def tiny_table5():
    return reproduce("table5", reps=2, horizon_days=30, warmup_days=10,
                     n_workers=1)


class TestReproduce:
    def test_unknown_exhibit(self):
        with pytest.raises(ValueError, match="unknown exhibit"):
            reproduce("table9")

    def test_table5_structure(self, tiny_table5):
        assert [row.key for row in tiny_table5.rows] == [
            (1,), (2,), (3,), (4,)]
        row = tiny_table5.rows[0]
        assert row.mean["additive_estimate"] == pytest.approx(0.1155,
                                                              abs=5e-5)
        assert 0.0 <= row.mean["p_value"] <= 1.0
        assert row.targets["additive_estimate"].exhibit == "table5"

    def test_check_report_flags_exact_cells(self, tiny_table5):
        report = check_table(tiny_table5, "table5")
        exact = [r for r in report.results if r.decimals is not None]
        assert len(exact) == 4
        assert all(r.passed for r in exact)
        # the 2-rep simulated column is noise; its band cells may fail,
        # but every cell must carry its exhibit coordinate
        for r in report.results:
            assert r.exhibit == "table5"
            assert r.row in targets.SETUP_LABELS.values()

    def test_determinism_byte_identical(self):
        a = reproduce("fig4", reps=2, horizon_days=25, warmup_days=5,
                      n_workers=1)
        b = reproduce("fig4", reps=2, horizon_days=25, warmup_days=5,
                      n_workers=1)
        assert render_json(a) == render_json(b)
        assert render_csv(a) == render_csv(b)

    def test_fig3_target_join(self):
        table = reproduce("fig3", reps=1, horizon_days=20, warmup_days=5,
                          n_workers=1)
        tagged = [row for row in table.rows if row.targets]
        assert len(tagged) == 1
        assert tagged[0].key == (2.0, 0.87)
        cell = tagged[0].targets["childbirth_referral_fraction"]
        assert (cell.value, cell.tolerance) == (0.27, 0.05)

    def test_fast_profile_widens_bands(self, tiny_table5):
        strict = check_table(tiny_table5, "table5", fast=False)
        wide = check_table(tiny_table5, "table5", fast=True)
        tol = {(r.row, r.column): r.tolerance for r in strict.results
               if r.tolerance is not None}
        for r in wide.results:
            if r.tolerance is not None:
                assert r.tolerance == pytest.approx(
                    2.0 * tol[(r.row, r.column)])


# -- exports ------------------------------------------------------------

def small_table():
    rows = [
        TableRow(key=(1,), mean={"a_metric": 0.1234567, "b_metric": None},
                 sd={"a_metric": 0.001}, n_replications=2, base_seed=7,
                 targets={"a_metric": ReferenceCell(
                     exhibit="table6", row="setup-1", column="a_metric",
                     value=0.125, tolerance=0.01)}),
        TableRow(key=(4,), mean={"a_metric": 2.0, "b_metric": 3.0},
                 sd={"a_metric": 0.2, "b_metric": 0.3},
                 n_replications=2, base_seed=7),
    ]
    return ResultTable(title="t", axes=("setup",),
                       outcomes=("a_metric", "b_metric"), rows=rows,
                       orient="outcomes_as_rows")


class TestExport:
    def test_json_round_trip_identity(self, tmp_path):
        table = small_table()
        path = export(table, fmt="json", out=str(tmp_path / "t.json"))
        assert import_table(path) == table

    def test_csv_outcome_rows_layout(self):
        lines = render_csv(small_table()).splitlines()
        assert lines[0] == ("outcome,setup-1,setup-1 target,"
                            "setup-1 deviation,benchmark,benchmark target,"
                            "benchmark deviation")
        assert lines[1] == ("a_metric,0.123457 (0.001),0.125,-0.0015433,"
                            "2 (0.2),,")
        assert lines[2] == "b_metric,NA,,,3 (0.3),,"

    def test_csv_six_significant_digits(self):
        text = render_csv(small_table())
        assert "0.123457" in text
        assert "0.1234567" not in text

    def test_empty_table_header_only(self):
        empty = ResultTable(title="e", axes=("x",), outcomes=("m",))
        assert render_csv(empty) == "x,m\n"

    def test_grid_layout_has_axis_columns(self):
        table = ResultTable(title="g", axes=("load",), outcomes=("m",),
                            rows=[TableRow(key=(50.0,), mean={"m": 1.5},
                                           sd={}, n_replications=1,
                                           base_seed=1)])
        assert render_csv(table) == "load,m\n50,1.5\n"

    def test_error_rows_marked(self):
        table = ResultTable(title="g", axes=("x",), outcomes=("m", "n"),
                            rows=[TableRow(key=(1.0,), error="boom")],
                            partial=True)
        text = render_csv(table)
        assert "ERROR: boom" in text

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="unknown format"):
            render(small_table(), "xml")

    def test_export_requires_path(self):
        with pytest.raises(ValueError, match="output path"):
            export(small_table(), fmt="csv")


# -- standalone analytics -----------------------------------------------

def walkin_classes():
    return {
        "servers": 2,
        "classes": [
            {"name": "walk-in", "arrival_rate_per_min": 0.25,
             "service_mean_min": 0.87, "service_scv": 0.0583,
             "window_share": 1.0},
            {"name": "admitted", "arrival_rate_per_min": 1.0 / 2880,
             "service_mean_min": 20.0, "window_share": 0.3504},
            {"name": "delivery", "arrival_rate_per_min": 1.0 / 1440,
             "service_mean_min": 45.0, "window_share": 0.35413},
        ],
        "sample": {"mean": 0.122, "sd": 0.0043, "n": 100},
    }


class TestAnalyzeClasses:
    def test_matches_reference_estimates(self):
        result = analyze_classes(walkin_classes())
        assert result["additive_utilization"] == pytest.approx(0.1155,
                                                               abs=5e-5)
        assert result["setup_augmented_utilization"] == pytest.approx(
            0.1129, abs=5e-4)
        assert result["single_class_utilization"] == pytest.approx(0.10875)
        assert result["p_value"] == pytest.approx(0.131, abs=0.005)
        assert result["threshold_check"] in (True, False)

    def test_sample_optional(self):
        data = walkin_classes()
        del data["sample"]
        result = analyze_classes(data)
        assert "p_value" not in result
        assert "dominant_mg1_wait" in result

    def test_missing_fields_reported(self):
        with pytest.raises(ValueError, match="classes\\[0\\]"):
            analyze_classes({"classes": [{"name": "x"}]})

    def test_needs_classes_list(self):
        with pytest.raises(ValueError, match="classes"):
            analyze_classes({"servers": 2})


# -- command line -------------------------------------------------------

class TestCli:
    def test_simulate_exports_and_traces(self, tmp_path):
        scenario = write_json(tmp_path / "s.json", {
            "configuration": 3, "replications": 2,
            "horizon_days": 20, "warmup_days": 5})
        out = tmp_path / "run.csv"
        trace = tmp_path / "events.csv"
        rc = main(["simulate", scenario, "--out", str(out),
                   "--trace", str(trace)])
        assert rc == 0
        assert out.read_text().startswith("outcome,")
        lines = trace.read_text().splitlines()
        assert lines[0] == "time,patient,class,resource,event"
        assert any(",doctor,seize" in line for line in lines[1:])

    def test_simulate_rejects_sweep_scenario(self, tmp_path, capsys):
        scenario = write_json(tmp_path / "s.json", {
            "configuration": 3, "replications": 1, "horizon_days": 10,
            "warmup_days": 2, "sweep": {"opd_iat": [6, 9]}})
        rc = main(["simulate", scenario])
        assert rc == 2
        assert "sweep" in capsys.readouterr().err

    def test_sweep_to_json(self, tmp_path):
        scenario = write_json(tmp_path / "s.json", {
            "configuration": 3, "replications": 2, "horizon_days": 20,
            "warmup_days": 5, "sweep": {"opd_iat": [6, 9]}})
        out = tmp_path / "grid.json"
        rc = main(["sweep", scenario, "--format", "json",
                   "--out", str(out)])
        assert rc == 0
        table = import_table(str(out))
        assert [row.key for row in table.rows] == [(6.0,), (9.0,)]

    def test_analytics_verb(self, tmp_path, capsys):
        classes = write_json(tmp_path / "c.json", walkin_classes())
        rc = main(["analytics", classes])
        assert rc == 0
        text = capsys.readouterr().out
        assert "additive_utilization,0.1155" in text

    def test_scenario_error_exit_code(self, tmp_path, capsys):
        scenario = write_json(tmp_path / "s.json", {"configuration": 9})
        rc = main(["simulate", scenario])
        assert rc == 2
        assert "error" in capsys.readouterr().err
