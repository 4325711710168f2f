"""Facility configurations, service-time tables and intervention toggles.

Four standard setups are provided. Setups 1-3 describe observed facilities
of decreasing demand; setup 4 is an idealized benchmark with
guideline-derived demand and a longer consult. Interarrival means are in
minutes; outpatient and antenatal means are clocked against the daily
service window, inpatient and childbirth means against the full day.

Several probabilities the source data never published are set here to
calibrated defaults (age mix, lab referral share, point-of-care share,
admin workloads, antenatal exam length). Each is an explicit field, so
overriding them is one argument away.
"""

import dataclasses
from dataclasses import dataclass, field

from ..kernel.distributions import TruncatedNormal, Triangular, Uniform

MINUTES_PER_DAY = 1440.0
OPD_OPEN = 480.0    # 08:00
OPD_CLOSE = 840.0   # 14:00
OPD_WINDOW_MINUTES = OPD_CLOSE - OPD_OPEN


@dataclass(frozen=True)
class InterventionFlags:
    """Operational what-if toggles layered onto a base configuration.

    childbirth_intervention_mix gives the probabilities that a delivery
    needs (none, one-third, full) doctor involvement; passing True selects
    the default (0.5, 0.3, 0.2) split. nurse_assists_ncd_fraction is the
    share of routine checks the staff nurse absorbs; passing True selects
    the 0.30 default, which reproduces the observed workload drop.
    """

    nurse_takes_doctor_admin: bool = False
    childbirth_intervention_mix: tuple = None
    extra_doctor: bool = False
    extra_labour_beds: int = 0
    inpatient_bed_count_override: int = None
    nurse_takes_ncd_admin: bool = False
    nurse_assists_ncd_fraction: float = None

    def __post_init__(self):
        mix = self.childbirth_intervention_mix
        if mix is True:
            object.__setattr__(self, "childbirth_intervention_mix", (0.5, 0.3, 0.2))
            mix = (0.5, 0.3, 0.2)
        if mix is not None:
            if len(mix) != 3 or any(p < 0 for p in mix):
                raise ValueError("intervention mix needs three nonnegative shares")
            if abs(sum(mix) - 1.0) > 1e-9:
                raise ValueError("intervention mix shares must sum to 1")
        if self.nurse_assists_ncd_fraction is True:
            object.__setattr__(self, "nurse_assists_ncd_fraction", 0.30)
        frac = self.nurse_assists_ncd_fraction
        if frac is not None and not 0.0 <= frac <= 1.0:
            raise ValueError("assist fraction must lie in [0, 1]")
        if self.extra_labour_beds < 0:
            raise ValueError("extra labour beds must be nonnegative")
        if (self.inpatient_bed_count_override is not None
                and self.inpatient_bed_count_override < 0):
            raise ValueError("bed count override must be nonnegative")


@dataclass(frozen=True)
class PhcConfiguration:
    """Everything a replication needs to build and run one facility."""

    config_id: int
    # interarrival means (minutes); None disables the class
    opd_interarrival_mean: float
    ipd_interarrival_mean: float
    childbirth_interarrival_mean: float
    anc_interarrival_mean: float
    # staffing and beds
    n_doctors: int
    n_staff_nurses: int = 4          # one on duty per 8 h shift
    n_inpatient_beds: int = 6
    n_labour_beds: int = 1
    # service times
    doctor_opd_consult: object = field(default_factory=lambda: TruncatedNormal(0.87, 0.21, 0.5))
    ncd_check: object = field(default_factory=lambda: Uniform(2.0, 5.0))
    pharmacy_service: object = field(default_factory=lambda: TruncatedNormal(2.08, 0.72, 0.667))
    lab_service: object = field(default_factory=lambda: TruncatedNormal(3.45, 0.82, 2.0))
    doctor_inpatient: object = field(default_factory=lambda: Uniform(10.0, 30.0))
    nurse_inpatient: object = field(default_factory=lambda: Uniform(30.0, 60.0))
    doctor_childbirth: object = field(default_factory=lambda: Uniform(30.0, 60.0))
    nurse_childbirth: object = field(default_factory=lambda: Uniform(120.0, 240.0))
    inpatient_bed_stay: object = field(default_factory=lambda: Triangular(60.0, 180.0, 360.0))
    labour_bed_stay: object = field(default_factory=lambda: Uniform(300.0, 600.0))
    postdelivery_bed_stay: object = field(default_factory=lambda: Uniform(240.0, 1440.0))
    anc_nurse_service: object = field(default_factory=lambda: Uniform(60.0, 100.0))
    lab_report_delay: object = field(default_factory=lambda: Uniform(5.0, 10.0))
    # routing probabilities
    p_age_30_plus: float = 0.67
    p_lab_referral: float = 0.44
    p_lab_point_of_care: float = 0.8
    p_followup_two_visits: float = 0.20
    p_followup_three_visits: float = 0.05
    followup_gap_days: tuple = (3, 8)
    anc_visit_gap_days: tuple = (42, 70)
    anc_max_visits: int = 4
    # administrative work
    doctor_admin_total: object = field(default_factory=lambda: TruncatedNormal(87.0, 20.0, 0.0))
    ncd_admin_total: object = field(default_factory=lambda: TruncatedNormal(70.0, 20.0, 0.0))
    nurse_admin_per_shift: float = 60.0
    # rules
    referral_threshold: float = 120.0
    opd_window: tuple = (OPD_OPEN, OPD_CLOSE)
    inpatient_refer_when_full: bool = False
    # mode switches: the analytical-validation mode turns both off
    follow_ups_enabled: bool = True
    admin_enabled: bool = True
    interventions: InterventionFlags = field(default_factory=InterventionFlags)

    def __post_init__(self):
        if self.config_id not in (1, 2, 3, 4):
            raise ValueError("config_id must be 1, 2, 3 or 4")
        for name in ("p_age_30_plus", "p_lab_referral", "p_lab_point_of_care",
                     "p_followup_two_visits", "p_followup_three_visits"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError("%s must lie in [0, 1]" % name)
        if self.p_followup_two_visits + self.p_followup_three_visits > 1.0:
            raise ValueError("follow-up shares exceed 1")
        if self.n_doctors < 1 or self.n_staff_nurses < 1:
            raise ValueError("staffing must be positive")
        if self.n_inpatient_beds < 0 or self.n_labour_beds < 0:
            raise ValueError("bed counts must be nonnegative")
        if (self.childbirth_interarrival_mean is None) != (self.anc_interarrival_mean is None):
            # maternal services come and go together in the standard setups
            pass
        lo, hi = self.opd_window
        if not 0 <= lo < hi <= MINUTES_PER_DAY:
            raise ValueError("service window must fit inside one day")

    @property
    def childbirth_enabled(self):
        return self.childbirth_interarrival_mean is not None

    @property
    def anc_enabled(self):
        return self.anc_interarrival_mean is not None

    @property
    def opd_window_minutes(self):
        return self.opd_window[1] - self.opd_window[0]

    def in_window(self, time):
        minute = time % MINUTES_PER_DAY
        return self.opd_window[0] <= minute < self.opd_window[1]

    def replace(self, **overrides):
        return dataclasses.replace(self, **overrides)


_BASE = {
    1: dict(opd_interarrival_mean=4.0, ipd_interarrival_mean=2880.0,
            childbirth_interarrival_mean=1440.0, anc_interarrival_mean=1440.0,
            n_doctors=2),
    2: dict(opd_interarrival_mean=9.0, ipd_interarrival_mean=2880.0,
            childbirth_interarrival_mean=2880.0, anc_interarrival_mean=2880.0,
            n_doctors=1),
    3: dict(opd_interarrival_mean=9.0, ipd_interarrival_mean=2880.0,
            childbirth_interarrival_mean=None, anc_interarrival_mean=None,
            n_doctors=1),
    4: dict(opd_interarrival_mean=3.0, ipd_interarrival_mean=2880.0,
            childbirth_interarrival_mean=1440.0, anc_interarrival_mean=1440.0,
            n_doctors=2),
}

_FIELD_NAMES = {f.name for f in dataclasses.fields(PhcConfiguration)}


def build_configuration(config_id, **overrides):
    """Standard setup by id with field-level overrides applied."""
    if config_id not in _BASE:
        raise ValueError("config_id must be 1, 2, 3 or 4")
    params = dict(_BASE[config_id])
    params["config_id"] = config_id
    if config_id == 4:
        params["doctor_opd_consult"] = TruncatedNormal(5.0, 1.0, 2.0)
    unknown = set(overrides) - _FIELD_NAMES
    if unknown:
        raise ValueError("unknown configuration fields: %s" % ", ".join(sorted(unknown)))
    if config_id == 3:
        for name in ("childbirth_interarrival_mean", "anc_interarrival_mean"):
            if overrides.get(name) is not None and name in overrides:
                raise ValueError("maternal services are unavailable in setup 3")
    params.update(overrides)
    return PhcConfiguration(**params)


def apply_interventions(config, flags):
    """Return a configuration with the intervention toggles in effect.

    Bed conversions move existing inpatient beds to labour duty, so the
    request is rejected if it asks for more beds than the facility owns.
    """
    n_doctors = config.n_doctors + (1 if flags.extra_doctor else 0)
    n_inpatient = config.n_inpatient_beds
    if flags.inpatient_bed_count_override is not None:
        n_inpatient = flags.inpatient_bed_count_override
    n_labour = config.n_labour_beds + flags.extra_labour_beds
    if flags.extra_labour_beds:
        if flags.extra_labour_beds > n_inpatient:
            raise ValueError("cannot convert more beds than the facility has")
        n_inpatient -= flags.extra_labour_beds
    return config.replace(
        interventions=flags,
        n_doctors=n_doctors,
        n_inpatient_beds=n_inpatient,
        n_labour_beds=n_labour,
    )


def validation_mode(config):
    """Strip revisits and admin work, leaving arrival and service laws alone."""
    return config.replace(follow_ups_enabled=False, admin_enabled=False)
