"""Domain model tests: configurations, pathways, flows and accounting."""

import math

import pytest

from phcsim.model import (InterventionFlags, apply_interventions,
                          build_configuration, run_replication, simulate,
                          validation_mode)
from phcsim.model.config import OPD_CLOSE, OPD_OPEN
from phcsim.model.simulate import OutcomeReport


def minute_of_day(t):
    return t % 1440.0


# -- configuration building ---------------------------------------------

class TestBuildConfiguration:
    def test_setup_one_defaults(self):
        cfg = build_configuration(1)
        assert cfg.opd_interarrival_mean == 4
        assert cfg.n_doctors == 2
        assert cfg.n_inpatient_beds == 6
        assert cfg.n_labour_beds == 1
        assert cfg.ipd_interarrival_mean == 2880
        assert cfg.childbirth_interarrival_mean == 1440
        assert cfg.anc_interarrival_mean == 1440

    def test_setup_two_and_three(self):
        two = build_configuration(2)
        assert two.opd_interarrival_mean == 9
        assert two.n_doctors == 1
        assert two.childbirth_interarrival_mean == 2880
        three = build_configuration(3)
        assert three.childbirth_interarrival_mean is None
        assert three.anc_interarrival_mean is None
        assert not three.childbirth_enabled
        assert not three.anc_enabled

    def test_benchmark_consult(self):
        cfg = build_configuration(4)
        assert cfg.opd_interarrival_mean == 3
        assert cfg.n_doctors == 2
        consult = cfg.doctor_opd_consult
        assert consult.mean_before_truncation == 5
        assert consult.lower_bound == 2

    def test_override_applies(self):
        cfg = build_configuration(1, n_labour_beds=2, p_lab_referral=0.5)
        assert cfg.n_labour_beds == 2
        assert cfg.p_lab_referral == 0.5

    def test_unknown_field_rejected(self):
        with pytest.raises(ValueError):
            build_configuration(1, not_a_field=3)

    def test_bad_probability_rejected(self):
        with pytest.raises(ValueError):
            build_configuration(1, p_lab_referral=1.5)

    def test_maternal_overrides_rejected_for_three(self):
        with pytest.raises(ValueError):
            build_configuration(3, childbirth_interarrival_mean=1440)

    def test_bad_id_rejected(self):
        with pytest.raises(ValueError):
            build_configuration(7)


class TestInterventions:
    def test_extra_doctor(self):
        cfg = apply_interventions(build_configuration(4),
                                  InterventionFlags(extra_doctor=True))
        assert cfg.n_doctors == 3

    def test_bed_conversion(self):
        cfg = apply_interventions(build_configuration(1),
                                  InterventionFlags(extra_labour_beds=1))
        assert cfg.n_labour_beds == 2
        assert cfg.n_inpatient_beds == 5

    def test_conversion_cannot_exceed_stock(self):
        with pytest.raises(ValueError):
            apply_interventions(build_configuration(1),
                                InterventionFlags(extra_labour_beds=7))

    def test_mix_normalization(self):
        flags = InterventionFlags(childbirth_intervention_mix=True)
        assert flags.childbirth_intervention_mix == (0.5, 0.3, 0.2)
        assert InterventionFlags(nurse_assists_ncd_fraction=True
                                 ).nurse_assists_ncd_fraction == 0.30

    def test_mix_must_sum_to_one(self):
        with pytest.raises(ValueError):
            InterventionFlags(childbirth_intervention_mix=(0.5, 0.3, 0.3))

    def test_validation_mode(self):
        cfg = validation_mode(build_configuration(1))
        assert not cfg.follow_ups_enabled
        assert not cfg.admin_enabled


# -- short-run behavioural checks ---------------------------------------

HORIZON = 150

@pytest.fixture(scope="module")
def traced_run():
    """Config 1, 150 days with no warm-up, full trace and stamps."""
    cfg = build_configuration(1)
    return run_replication(cfg, replication=3, horizon_days=HORIZON,
                           warmup_days=0, keep_trace=True,
                           record_stamps=True, keep_facility=True)


def records_of(result, cls):
    return [p for p in result.facility.patients if p.patient_class == cls]


class TestArrivalPatterns:
    def test_daytime_classes_arrive_in_window(self, traced_run):
        for cls in ("outpatient", "anc"):
            for p in records_of(traced_run, cls):
                m = minute_of_day(p.arrival_time)
                assert OPD_OPEN <= m < OPD_CLOSE, (cls, p.arrival_time)

    def test_emergencies_arrive_around_the_clock(self, traced_run):
        night = [p for p in records_of(traced_run, "inpatient")
                 + records_of(traced_run, "childbirth")
                 if not (OPD_OPEN <= minute_of_day(p.arrival_time) < OPD_CLOSE)]
        assert night, "expected some off-window emergencies"

    def test_first_visit_rate(self, traced_run):
        firsts = [p for p in records_of(traced_run, "outpatient")
                  if p.visit_index == 1]
        per_day = len(firsts) / float(HORIZON)
        assert per_day == pytest.approx(90.0, rel=0.10)

    def test_followup_share(self, traced_run):
        firsts = [p for p in records_of(traced_run, "outpatient")
                  if p.visit_index == 1]
        mean_planned = sum(p.total_visits for p in firsts) / len(firsts)
        assert mean_planned == pytest.approx(1.3, abs=0.05)

    def test_followup_gaps_and_cap(self, traced_run):
        by_id = {}
        for p in records_of(traced_run, "outpatient"):
            by_id.setdefault(p.patient_id, []).append(p)
        saw_revisit = False
        for visits in by_id.values():
            visits.sort(key=lambda p: p.visit_index)
            assert len(visits) <= 3
            for a, b in zip(visits, visits[1:]):
                saw_revisit = True
                gap = b.arrival_time - a.arrival_time
                days = gap / 1440.0
                # revisits land at the same time of day a whole day count later
                assert abs(days - round(days)) < 1e-9
                assert 3 <= round(days) <= 8
        assert saw_revisit

    def test_anc_revisit_schedule(self, traced_run):
        by_id = {}
        for p in records_of(traced_run, "anc"):
            by_id.setdefault(p.patient_id, []).append(p)
        gaps = []
        for visits in by_id.values():
            visits.sort(key=lambda p: p.visit_index)
            assert len(visits) <= 4
            assert [p.visit_index for p in visits] == list(
                range(1, len(visits) + 1))
            for a, b in zip(visits, visits[1:]):
                days = (b.arrival_time - a.arrival_time) / 1440.0
                assert abs(days - round(days)) < 1e-9
                assert 42 <= round(days) <= 70
                gaps.append(round(days))
        assert gaps, "the horizon should include at least one second visit"


class TestFlowAndRouting:
    def test_flow_conservation_per_class(self, traced_run):
        fac = traced_run.facility
        for cls in ("outpatient", "inpatient", "childbirth", "anc"):
            got = traced_run.counts[cls]
            records = [p for p in records_of(traced_run, cls) if p.measured]
            completed = sum(1 for p in records if p.disposition == "completed")
            referred = sum(1 for p in records
                           if p.disposition == "referred_out")
            open_ = sum(1 for p in records if p.disposition is None)
            assert got["arrived"] == len(records)
            assert got["completed"] == completed
            assert got["referred"] == referred
            assert got["arrived"] == completed + referred + open_
        assert fac.in_system == sum(
            1 for p in fac.patients if p.measured and p.disposition is None)

    def test_referral_only_for_childbirth(self, traced_run):
        for p in traced_run.facility.patients:
            if p.disposition == "referred_out":
                assert p.patient_class == "childbirth"

    def test_admitted_wait_under_threshold(self, traced_run):
        for p in records_of(traced_run, "childbirth"):
            stamps = {(res, ev): t for t, res, ev in p.stamps}
            queued = stamps.get(("labour_bed", "queue"))
            started = stamps.get(("labour_bed", "start"))
            if p.disposition == "referred_out":
                assert started is None
            elif started is not None:
                assert started - queued <= 120.0 + 1e-9

    def test_referred_reneged_at_threshold(self, traced_run):
        waits = {}
        for t, kind, where, what in traced_run.trace:
            if where == "labour_bed" and kind == "queue":
                waits[what] = t
            elif where == "labour_bed" and kind == "renege":
                assert t - waits[what] == pytest.approx(120.0)

    def test_class_resource_separation(self, traced_run):
        for t, kind, where, what in traced_run.trace:
            if kind not in ("queue", "seize", "release", "renege"):
                continue
            cls = what.split("-")[0].split("/")[0]
            if where in ("inpatient_bed", "labour_bed"):
                assert cls in ("inpatient", "childbirth")
            if where == "pharmacist":
                assert cls in ("outpatient", "anc")
            if where == "ncd_nurse":
                assert cls == "outpatient"

    def test_inpatient_doctor_only_for_window_arrivals(self, traced_run):
        arrivals = {p.label: p.arrival_time
                    for p in records_of(traced_run, "inpatient")}
        for t, kind, where, what in traced_run.trace:
            if where == "doctor" and kind == "seize" and what in arrivals:
                m = minute_of_day(arrivals[what])
                assert OPD_OPEN <= m < OPD_CLOSE

    def test_busy_time_matches_event_log(self, traced_run):
        fac = traced_run.facility
        end = fac.sim.now
        for res in (fac.doctor, fac.pharmacist, fac.lab, fac.ncd_nurse):
            holding = {}
            total = 0.0
            seized = 0
            for t, kind, where, what in traced_run.trace:
                if where != res.name:
                    continue
                if kind == "seize":
                    holding[what] = t
                    seized += 1
                elif kind == "release":
                    total += t - holding.pop(what)
            total += sum(end - t for t in holding.values())
            assert res.busy_minutes(end) == pytest.approx(total, abs=1e-6)
            assert seized == res.granted_count


class TestAdminAccounting:
    def test_blocks_booked_daily(self):
        cfg = build_configuration(3, opd_interarrival_mean=None,
                                  ipd_interarrival_mean=None)
        res = run_replication(cfg, horizon_days=3, warmup_days=0,
                              keep_facility=True)
        fac = res.facility
        assert fac.staff_nurse.admin_minutes == pytest.approx(3 * 180.0)
        assert 0.0 < fac.doctor.admin_minutes < 3 * 300.0
        assert 0.0 < fac.ncd_nurse.admin_minutes < 3 * 300.0
        # with no patients, utilization is pure admin over scheduled time
        assert res.outcomes["doctor_utilization"] == pytest.approx(
            fac.doctor.admin_minutes / (3 * 360.0), abs=1e-12)

    def test_redirect_to_staff_nurse(self):
        flags = InterventionFlags(nurse_takes_doctor_admin=True,
                                  nurse_takes_ncd_admin=True)
        cfg = apply_interventions(
            build_configuration(3, opd_interarrival_mean=None,
                                ipd_interarrival_mean=None), flags)
        res = run_replication(cfg, horizon_days=3, warmup_days=0,
                              keep_facility=True)
        fac = res.facility
        assert fac.doctor.admin_minutes == 0.0
        assert fac.ncd_nurse.admin_minutes == 0.0
        assert fac.staff_nurse.admin_minutes > 3 * 180.0

    def test_zero_demand_no_admin_is_all_zero(self):
        cfg = build_configuration(3, opd_interarrival_mean=None,
                                  ipd_interarrival_mean=None,
                                  admin_enabled=False)
        out = run_replication(cfg, horizon_days=5, warmup_days=0).outcomes
        for name, value in out.items():
            if name in ("labour_bed_utilization",
                        "childbirth_referral_fraction"):
                assert value is None
            else:
                assert value == 0.0


class TestReplication:
    def test_same_seed_reproduces(self):
        cfg = build_configuration(2)
        a = run_replication(cfg, replication=5, horizon_days=30,
                            warmup_days=10)
        b = run_replication(cfg, replication=5, horizon_days=30,
                            warmup_days=10)
        assert a.outcomes == b.outcomes
        assert a.counts == b.counts

    def test_replications_differ(self):
        cfg = build_configuration(2)
        a = run_replication(cfg, replication=1, horizon_days=30,
                            warmup_days=10)
        b = run_replication(cfg, replication=2, horizon_days=30,
                            warmup_days=10)
        assert a.outcomes != b.outcomes

    def test_warmup_validbasis(self):
        with pytest.raises(ValueError):
            run_replication(build_configuration(1), horizon_days=10,
                            warmup_days=10)

    def test_simulate_aggregates(self):
        cfg = build_configuration(3)
        report = simulate(cfg, n_replications=3, horizon_days=30,
                          warmup_days=10, n_workers=1)
        assert report.n_replications == 3
        assert len(report.per_replication) == 3
        assert len(report.counts) == 3
        vals = [r["doctor_utilization"] for r in report.per_replication]
        m = sum(vals) / 3
        assert report.mean["doctor_utilization"] == pytest.approx(m)
        var = sum((v - m) ** 2 for v in vals) / 2
        assert report.sd["doctor_utilization"] == pytest.approx(
            math.sqrt(var))
        assert report.mean["labour_bed_utilization"] is None

    def test_parallel_matches_serial(self):
        cfg = build_configuration(3)
        serial = simulate(cfg, n_replications=2, horizon_days=20,
                          warmup_days=5, n_workers=1)
        parallel = simulate(cfg, n_replications=2, horizon_days=20,
                            warmup_days=5, n_workers=2)
        assert serial.per_replication == parallel.per_replication

    def test_report_validation(self):
        with pytest.raises(ValueError):
            OutcomeReport(config_id=1, n_replications=1, horizon_days=1,
                          warmup_days=0, base_seed=0,
                          mean={"childbirth_referral_fraction": 1.4}, sd={})


class TestCrossRunMonotonicity:
    def test_doctor_load_response(self):
        # same seeds, heavier walk-in load: the doctor can only get busier
        light = build_configuration(2)
        heavy = build_configuration(2, opd_interarrival_mean=4.5)
        a = simulate(light, n_replications=3, horizon_days=60,
                     warmup_days=20, n_workers=1)
        b = simulate(heavy, n_replications=3, horizon_days=60,
                     warmup_days=20, n_workers=1)
        assert (b.mean["doctor_utilization"]
                > a.mean["doctor_utilization"])

    def test_referral_drops_with_second_bed(self):
        one = build_configuration(1)
        two = apply_interventions(one, InterventionFlags(extra_labour_beds=1))
        a = simulate(one, n_replications=3, horizon_days=120,
                     warmup_days=30, n_workers=1)
        b = simulate(two, n_replications=3, horizon_days=120,
                     warmup_days=30, n_workers=1)
        assert (b.mean["childbirth_referral_fraction"]
                < a.mean["childbirth_referral_fraction"])
