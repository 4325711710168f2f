"""Patient pathways over the shared facility resources.

Each pathway is a generator driven by the event kernel. Daytime classes
(outpatient, antenatal) arrive only while the service window is open;
emergencies (inpatient, childbirth) arrive around the clock. Within a
pathway the patient seizes one resource at a time, except for deliveries,
where nurse and doctor attendance run as side processes concurrent with
the labour-bed stay.
"""

from ..kernel.engine import acquire, acquire_or_renege, hold, release
from ..kernel.resources import ROUTINE, URGENT
from .config import MINUTES_PER_DAY


def _serve(fac, p, resource, tier, duration):
    """Queue for a resource, hold it for ``duration``, then release it."""
    if fac.record_stamps:
        p.stamps.append((fac.sim.now, resource.name, "queue"))
    yield acquire(resource, tier)
    if fac.record_stamps:
        p.stamps.append((fac.sim.now, resource.name, "start"))
    if duration > 0.0:
        yield hold(duration)
    yield release(resource)
    if fac.record_stamps:
        p.stamps.append((fac.sim.now, resource.name, "end"))


def _attend(fac, p, resource, duration):
    # bedside staff attendance, run concurrently with the bed stay
    yield from _serve(fac, p, resource, URGENT, duration)


def outpatient_visit(fac, p):
    """Walk-in visit: optional routine check, consult, lab loop, pharmacy."""
    cfg = fac.config
    fac.arrive(p)
    if cfg.follow_ups_enabled and p.visit_index < p.total_visits:
        gap = fac.gap_followup.integers(*cfg.followup_gap_days)
        # next visit lands the same time of day, a few days out
        fac.sim.schedule_call(p.arrival_time + gap * MINUTES_PER_DAY,
                              fac.start_outpatient_visit, p.patient_id,
                              p.visit_index + 1, p.total_visits, p.age_30_plus)
    if p.age_30_plus:
        nurse = fac.ncd_nurse
        assist = cfg.interventions.nurse_assists_ncd_fraction
        if assist is not None and fac.coin_assist.uniform01() < assist:
            nurse = fac.staff_nurse
        yield from _serve(fac, p, nurse, ROUTINE,
                          cfg.ncd_check.sample(fac.svc_ncd))
    to_lab = fac.coin_lab.uniform01() < cfg.p_lab_referral
    if to_lab:
        # the first doctor contact is a routing glance, booked as 0 min
        yield from _serve(fac, p, fac.doctor, ROUTINE, 0.0)
        yield from _serve(fac, p, fac.lab, ROUTINE,
                          cfg.lab_service.sample(fac.svc_lab))
        if fac.coin_poc.uniform01() < cfg.p_lab_point_of_care:
            yield hold(cfg.lab_report_delay.sample(fac.delay_report))
            yield from _serve(fac, p, fac.doctor, ROUTINE,
                              cfg.doctor_opd_consult.sample(fac.svc_consult))
        # slower results return as a booked revisit, which the follow-up
        # shares already account for
    else:
        yield from _serve(fac, p, fac.doctor, ROUTINE,
                          cfg.doctor_opd_consult.sample(fac.svc_consult))
    yield from _serve(fac, p, fac.pharmacist, ROUTINE,
                      cfg.pharmacy_service.sample(fac.svc_pharm))
    fac.complete(p)


def inpatient_visit(fac, p):
    """Admission: doctor while the window is open, nurse, then a bed."""
    cfg = fac.config
    fac.arrive(p)
    if cfg.in_window(fac.sim.now):
        yield from _serve(fac, p, fac.doctor, URGENT,
                          cfg.doctor_inpatient.sample(fac.svc_doc_ipd))
    yield from _serve(fac, p, fac.staff_nurse, URGENT,
                      cfg.nurse_inpatient.sample(fac.svc_nurse_ipd))
    stay = cfg.inpatient_bed_stay.sample(fac.svc_bed_ipd)
    if cfg.inpatient_refer_when_full:
        got = yield acquire_or_renege(fac.inpatient_beds, ROUTINE, 0.0)
        if not got:
            fac.refer(p)
            return
        yield hold(stay)
        yield release(fac.inpatient_beds)
    else:
        yield from _serve(fac, p, fac.inpatient_beds, ROUTINE, stay)
    fac.complete(p)


def childbirth_visit(fac, p):
    """Delivery: labour bed within the threshold or referral elsewhere."""
    cfg = fac.config
    fac.arrive(p)
    if fac.record_stamps:
        p.stamps.append((fac.sim.now, fac.labour_beds.name, "queue"))
    got = yield acquire_or_renege(fac.labour_beds, URGENT,
                                  cfg.referral_threshold)
    if not got:
        fac.refer(p)
        return
    if fac.record_stamps:
        p.stamps.append((fac.sim.now, fac.labour_beds.name, "start"))
    admitted = fac.sim.now
    fac.sim.spawn(_attend(fac, p, fac.staff_nurse,
                          cfg.nurse_childbirth.sample(fac.svc_nurse_cb)),
                  label=p.label + "/nurse")
    if cfg.in_window(admitted):
        share = 1.0
        mix = cfg.interventions.childbirth_intervention_mix
        if mix is not None:
            u = fac.coin_cb_mix.uniform01()
            if u < mix[0]:
                share = 0.0
            elif u < mix[0] + mix[1]:
                share = 1.0 / 3.0
        if share > 0.0:
            fac.sim.spawn(
                _attend(fac, p, fac.doctor,
                        share * cfg.doctor_childbirth.sample(fac.svc_doc_cb)),
                label=p.label + "/doctor")
    yield hold(cfg.labour_bed_stay.sample(fac.svc_bed_labour))
    yield release(fac.labour_beds)
    if fac.record_stamps:
        p.stamps.append((fac.sim.now, fac.labour_beds.name, "end"))
    yield from _serve(fac, p, fac.inpatient_beds, ROUTINE,
                      cfg.postdelivery_bed_stay.sample(fac.svc_bed_post))
    fac.complete(p)


def anc_visit(fac, p):
    """Antenatal check: nurse exam, lab work, pharmacy. Up to four visits."""
    cfg = fac.config
    fac.arrive(p)
    if p.visit_index < cfg.anc_max_visits:
        gap = fac.gap_anc.integers(*cfg.anc_visit_gap_days)
        # the next check is booked on arrival, same time of day
        fac.sim.schedule_call(p.arrival_time + gap * MINUTES_PER_DAY,
                              fac.start_anc_visit, p.patient_id,
                              p.visit_index + 1)
    yield from _serve(fac, p, fac.staff_nurse, ROUTINE,
                      cfg.anc_nurse_service.sample(fac.svc_anc))
    yield from _serve(fac, p, fac.lab, ROUTINE,
                      cfg.lab_service.sample(fac.svc_lab))
    yield from _serve(fac, p, fac.pharmacist, ROUTINE,
                      cfg.pharmacy_service.sample(fac.svc_pharm))
    fac.complete(p)


# -- arrival sources ----------------------------------------------------

def _window_source(fac, mean, stream, start_visit):
    """Exponential gaps clocked against open-window time only.

    The cumulative window clock w maps to calendar time by folding it into
    successive daily windows, so a gap that crosses a closing time simply
    spills into the next morning.
    """
    window = fac.config.opd_window_minutes
    open_at = fac.config.opd_window[0]
    w = 0.0
    while True:
        w += stream.standard_exponential() * mean
        day, offset = divmod(w, window)
        t = day * MINUTES_PER_DAY + open_at + offset
        yield hold(t - fac.sim.now)
        start_visit(t)


def _open_source(fac, mean, stream, start_visit):
    """Memoryless arrivals around the clock."""
    while True:
        yield hold(stream.standard_exponential() * mean)
        start_visit(fac.sim.now)


def spawn_arrivals(fac, patient_class):
    """Start the arrival source for one patient class, if enabled."""
    cfg = fac.config
    mean = {
        "outpatient": cfg.opd_interarrival_mean,
        "inpatient": cfg.ipd_interarrival_mean,
        "childbirth": cfg.childbirth_interarrival_mean,
        "anc": cfg.anc_interarrival_mean,
    }[patient_class]
    if mean is None or not mean > 0.0 or mean == float("inf"):
        return None
    if patient_class == "outpatient":
        gen = _window_source(fac, mean, fac.arr_opd, fac.new_outpatient)
    elif patient_class == "anc":
        gen = _window_source(fac, mean, fac.arr_anc, fac.new_anc)
    elif patient_class == "inpatient":
        gen = _open_source(fac, mean, fac.arr_ipd, fac.new_inpatient)
    else:
        gen = _open_source(fac, mean, fac.arr_cb, fac.new_childbirth)
    return fac.sim.spawn(gen, label="src/" + patient_class)


# -- administrative work ------------------------------------------------

def admin_driver(fac):
    """Book the day's administrative blocks against the right ledgers.

    Desk work is fitted into idle slivers in practice, so it is booked as
    audited time rather than simulated as queue-blocking service: shift
    paperwork for the duty nurse at each shift start, and the daily totals
    for doctor and check-up nurse at window close. Reassignment toggles
    move a ledger to the staff nurse wholesale.
    """
    cfg = fac.config
    flags = cfg.interventions
    close_at = cfg.opd_window[1]
    shift_len = MINUTES_PER_DAY / 3.0
    moments = sorted([(0.0, "shift"), (shift_len, "shift"),
                      (2.0 * shift_len, "shift"), (close_at, "close")])
    day_start = 0.0
    while True:
        for offset, kind in moments:
            t = day_start + offset
            if t > fac.sim.now:
                yield hold(t - fac.sim.now)
            if kind == "close":
                doc_total = cfg.doctor_admin_total.sample(fac.admin_doc)
                ncd_total = cfg.ncd_admin_total.sample(fac.admin_ncd)
                doc_ledger = (fac.staff_nurse if flags.nurse_takes_doctor_admin
                              else fac.doctor)
                ncd_ledger = (fac.staff_nurse if flags.nurse_takes_ncd_admin
                              else fac.ncd_nurse)
                doc_ledger.log_admin_block(doc_total)
                ncd_ledger.log_admin_block(ncd_total)
            else:
                fac.staff_nurse.log_admin_block(cfg.nurse_admin_per_shift)
        day_start += MINUTES_PER_DAY
