"""Per-visit patient records.

A record covers one visit episode. Repeat visits (outpatient follow-ups,
antenatal revisits) get a fresh record carrying the same patient id and an
incremented visit index, so episode-level flow accounting stays simple.
"""

OUTPATIENT = "outpatient"
INPATIENT = "inpatient"
CHILDBIRTH = "childbirth"
ANC = "anc"

PATIENT_CLASSES = (OUTPATIENT, INPATIENT, CHILDBIRTH, ANC)

COMPLETED = "completed"
REFERRED_OUT = "referred_out"


class PatientRecord:
    """One visit: identity, routing flags and optional service stamps."""

    __slots__ = ("patient_id", "patient_class", "age_30_plus", "visit_index",
                 "total_visits", "arrival_time", "disposition", "measured",
                 "label", "stamps")

    def __init__(self, patient_id, patient_class, arrival_time,
                 age_30_plus=False, visit_index=1, total_visits=1):
        if patient_class not in PATIENT_CLASSES:
            raise ValueError("unknown patient class %r" % (patient_class,))
        if visit_index < 1 or visit_index > total_visits:
            raise ValueError("visit index out of range")
        self.patient_id = patient_id
        self.patient_class = patient_class
        self.age_30_plus = age_30_plus
        self.visit_index = visit_index
        self.total_visits = total_visits
        self.arrival_time = arrival_time
        self.disposition = None     # COMPLETED or REFERRED_OUT once decided
        self.measured = False       # inside the measured span at arrival?
        if visit_index == 1:
            self.label = "%s-%d" % (patient_class, patient_id)
        else:
            self.label = "%s-%d.%d" % (patient_class, patient_id, visit_index)
        self.stamps = None          # [(time, resource name, event)] when kept

    def __repr__(self):
        return "PatientRecord(%s, t=%.1f, %s)" % (
            self.label, self.arrival_time, self.disposition or "in system")
