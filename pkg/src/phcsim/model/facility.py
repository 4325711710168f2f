"""One health centre wired onto an event kernel.

The facility owns the staff and bed resources, the named random streams,
the per-class flow counters, and the warm-up boundary. Utilization reads
divide audited busy time (service plus booked admin) by scheduled time:
the daily window for daytime staff, the whole day for the duty nurse and
the beds.
"""

from ..kernel.resources import Resource
from .config import MINUTES_PER_DAY
from .patients import (ANC, CHILDBIRTH, COMPLETED, INPATIENT, OUTPATIENT,
                       PATIENT_CLASSES, REFERRED_OUT, PatientRecord)
from . import pathways

#: canonical outcome ordering used by reports and exports
OUTCOME_NAMES = (
    "doctor_utilization",
    "ncd_nurse_utilization",
    "staff_nurse_utilization",
    "pharmacist_utilization",
    "lab_utilization",
    "inpatient_bed_utilization",
    "labour_bed_utilization",
    "opd_queue_length",
    "opd_waiting_time",
    "pharmacy_queue_length",
    "pharmacy_waiting_time",
    "lab_queue_length",
    "lab_waiting_time",
    "childbirth_referral_fraction",
)

_STREAMS = (
    "arr_opd", "arr_ipd", "arr_cb", "arr_anc",
    "svc_consult", "svc_ncd", "svc_pharm", "svc_lab",
    "svc_doc_ipd", "svc_nurse_ipd", "svc_doc_cb", "svc_nurse_cb",
    "svc_bed_ipd", "svc_bed_labour", "svc_bed_post", "svc_anc",
    "delay_report", "coin_age", "coin_lab", "coin_poc", "coin_followup",
    "gap_followup", "gap_anc", "admin_doc", "admin_ncd", "coin_cb_mix",
    "coin_assist",
)


class Facility:
    """Resources, streams and accounting for one replication."""

    def __init__(self, sim, config, record_stamps=False):
        self.sim = sim
        self.config = config
        self.record_stamps = record_stamps

        self.doctor = Resource(sim, "doctor", config.n_doctors)
        self.ncd_nurse = Resource(sim, "ncd_nurse", 1)
        # four nurses rotate through shifts; exactly one is on duty
        self.staff_nurse = Resource(sim, "staff_nurse", 1)
        self.pharmacist = Resource(sim, "pharmacist", 1)
        self.lab = Resource(sim, "lab", 1)
        self.inpatient_beds = Resource(sim, "inpatient_bed",
                                       config.n_inpatient_beds)
        self.labour_beds = Resource(sim, "labour_bed", config.n_labour_beds)

        for name in _STREAMS:
            setattr(self, name, sim.stream(name))

        self.measuring = False
        self.measure_start = None
        self.counts = {cls: {"arrived": 0, "completed": 0, "referred": 0}
                       for cls in PATIENT_CLASSES}
        self.in_system = 0
        self._ids = dict.fromkeys(PATIENT_CLASSES, 0)
        self.patients = [] if record_stamps else None

    # -- setup ----------------------------------------------------------

    def start(self):
        """Spawn arrival sources and, when enabled, the admin bookkeeper."""
        for cls in PATIENT_CLASSES:
            pathways.spawn_arrivals(self, cls)
        if self.config.admin_enabled:
            self.sim.spawn(pathways.admin_driver(self), label="admin")

    def begin_measurement(self):
        """End the warm-up: wipe statistics, keep system state."""
        now = self.sim.now
        for res in (self.doctor, self.ncd_nurse, self.staff_nurse,
                    self.pharmacist, self.lab, self.inpatient_beds,
                    self.labour_beds):
            res.reset_stats(now)
        for cls in PATIENT_CLASSES:
            self.counts[cls] = {"arrived": 0, "completed": 0, "referred": 0}
        self.in_system = 0
        self.measuring = True
        self.measure_start = now

    # -- patient intake -------------------------------------------------

    def _new_id(self, cls):
        self._ids[cls] += 1
        return self._ids[cls]

    def _launch(self, record, gen_fn):
        if self.record_stamps:
            record.stamps = []
            self.patients.append(record)
        self.sim.spawn(gen_fn(self, record), label=record.label)

    def new_outpatient(self, t):
        u = self.coin_followup.uniform01()
        cfg = self.config
        if u < cfg.p_followup_three_visits:
            total = 3
        elif u < cfg.p_followup_three_visits + cfg.p_followup_two_visits:
            total = 2
        else:
            total = 1
        if not cfg.follow_ups_enabled:
            total = 1
        age = self.coin_age.uniform01() < cfg.p_age_30_plus
        p = PatientRecord(self._new_id(OUTPATIENT), OUTPATIENT, t,
                          age_30_plus=age, total_visits=total)
        self._launch(p, pathways.outpatient_visit)

    def start_outpatient_visit(self, patient_id, visit_index, total, age):
        p = PatientRecord(patient_id, OUTPATIENT, self.sim.now,
                          age_30_plus=age, visit_index=visit_index,
                          total_visits=total)
        self._launch(p, pathways.outpatient_visit)

    def new_inpatient(self, t):
        p = PatientRecord(self._new_id(INPATIENT), INPATIENT, t)
        self._launch(p, pathways.inpatient_visit)

    def new_childbirth(self, t):
        p = PatientRecord(self._new_id(CHILDBIRTH), CHILDBIRTH, t)
        self._launch(p, pathways.childbirth_visit)

    def new_anc(self, t):
        p = PatientRecord(self._new_id(ANC), ANC, t,
                          total_visits=self.config.anc_max_visits)
        self._launch(p, pathways.anc_visit)

    def start_anc_visit(self, patient_id, visit_index):
        p = PatientRecord(patient_id, ANC, self.sim.now,
                          visit_index=visit_index,
                          total_visits=self.config.anc_max_visits)
        self._launch(p, pathways.anc_visit)

    # -- flow accounting ------------------------------------------------

    def arrive(self, p):
        p.measured = self.measuring
        if p.measured:
            self.counts[p.patient_class]["arrived"] += 1
            self.in_system += 1

    def complete(self, p):
        p.disposition = COMPLETED
        if p.measured:
            self.counts[p.patient_class]["completed"] += 1
            self.in_system -= 1

    def refer(self, p):
        p.disposition = REFERRED_OUT
        if p.measured:
            self.counts[p.patient_class]["referred"] += 1
            self.in_system -= 1

    # -- outcomes -------------------------------------------------------

    def outcomes(self, measured_days):
        """The standard per-replication outcome dictionary."""
        now = self.sim.now
        cfg = self.config
        window = cfg.opd_window_minutes * measured_days
        full = MINUTES_PER_DAY * measured_days
        out = {
            "doctor_utilization":
                self.doctor.utilization(now, window * cfg.n_doctors),
            "ncd_nurse_utilization": self.ncd_nurse.utilization(now, window),
            "staff_nurse_utilization": self.staff_nurse.utilization(now, full),
            "pharmacist_utilization": self.pharmacist.utilization(now, window),
            "lab_utilization": self.lab.utilization(now, window),
            "inpatient_bed_utilization":
                self.inpatient_beds.utilization(
                    now, full * cfg.n_inpatient_beds)
                if cfg.n_inpatient_beds else None,
            "labour_bed_utilization":
                self.labour_beds.utilization(now, full * cfg.n_labour_beds)
                if cfg.childbirth_enabled and cfg.n_labour_beds else None,
            "opd_queue_length": self.doctor.mean_queue_length(now),
            "opd_waiting_time": self.doctor.wait_times.mean,
            "pharmacy_queue_length": self.pharmacist.mean_queue_length(now),
            "pharmacy_waiting_time": self.pharmacist.wait_times.mean,
            "lab_queue_length": self.lab.mean_queue_length(now),
            "lab_waiting_time": self.lab.wait_times.mean,
        }
        cb = self.counts[CHILDBIRTH]
        if cfg.childbirth_enabled and cb["arrived"] > 0:
            out["childbirth_referral_fraction"] = (
                cb["referred"] / cb["arrived"])
        else:
            out["childbirth_referral_fraction"] = None
        return out
