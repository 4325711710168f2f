"""Replication running and cross-replication aggregation.

A replication builds one kernel, one facility and its arrival sources,
discards a warm-up span, then reads outcomes over the measured span.
Replications are independent: replication r reseeds every named stream
from (base_seed, r), so batches are reproducible no matter how the work
is spread over processes.
"""

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..kernel.engine import Simulation
from .config import MINUTES_PER_DAY
from .facility import Facility, OUTCOME_NAMES
from .patients import PATIENT_CLASSES

DEFAULT_SEED = 20260822


@dataclass
class ReplicationResult:
    """Outcomes and flow counts from a single replication."""

    replication: int
    outcomes: dict
    counts: dict
    trace: list = None
    facility: object = None


@dataclass
class OutcomeReport:
    """Cross-replication summary in the standard outcome order."""

    config_id: int
    n_replications: int
    horizon_days: float
    warmup_days: float
    base_seed: int
    mean: dict
    sd: dict
    per_replication: list = field(default_factory=list, repr=False)
    counts: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        frac = self.mean.get("childbirth_referral_fraction")
        if frac is not None and not 0.0 <= frac <= 1.0:
            raise ValueError("referral fraction outside [0, 1]")
        for name, value in self.mean.items():
            if name.endswith("utilization") and value is not None and value < 0:
                raise ValueError("%s cannot be negative" % name)

    def row(self, name):
        """(mean, sd) for one outcome; (None, None) when not applicable."""
        return self.mean.get(name), self.sd.get(name)


def run_replication(config, replication=0, base_seed=DEFAULT_SEED,
                    horizon_days=365, warmup_days=180, keep_trace=False,
                    record_stamps=False, keep_facility=False):
    """Run one replication and return its outcomes and counters."""
    if warmup_days >= horizon_days:
        raise ValueError("warm-up must end before the horizon")
    sim = Simulation(seed=base_seed, replication=replication,
                     keep_trace=keep_trace)
    fac = Facility(sim, config, record_stamps=record_stamps)
    # booked before start() so the stats reset wins any same-instant tie
    sim.schedule_call(warmup_days * MINUTES_PER_DAY, fac.begin_measurement)
    fac.start()
    sim.run(until=horizon_days * MINUTES_PER_DAY)
    measured_days = horizon_days - warmup_days
    return ReplicationResult(
        replication=replication,
        outcomes=fac.outcomes(measured_days),
        counts={cls: dict(fac.counts[cls]) for cls in PATIENT_CLASSES},
        trace=sim.trace if keep_trace else None,
        facility=fac if keep_facility else None,
    )


def _replicate(args):
    config, replication, base_seed, horizon_days, warmup_days = args
    result = run_replication(config, replication, base_seed,
                             horizon_days, warmup_days)
    return result.outcomes, result.counts


def _aggregate(values):
    """Mean and sample SD, ignoring not-applicable entries."""
    usable = [v for v in values if v is not None]
    if not usable:
        return None, None
    n = len(usable)
    m = sum(usable) / n
    if n < 2:
        return m, 0.0
    var = sum((v - m) ** 2 for v in usable) / (n - 1)
    return m, math.sqrt(var)


def simulate(config, n_replications=100, horizon_days=365, warmup_days=180,
             base_seed=DEFAULT_SEED, n_workers=None):
    """Run independent replications and summarize them per outcome.

    ``n_workers`` caps the process pool; 0 or 1 forces in-process running,
    the default uses the available cores.
    """
    if n_replications < 1:
        raise ValueError("need at least one replication")
    jobs = [(config, r, base_seed, horizon_days, warmup_days)
            for r in range(n_replications)]
    if n_workers is None:
        n_workers = min(os.cpu_count() or 1, 8, n_replications)
    if n_workers > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(_replicate, jobs, chunksize=1))
    else:
        results = [_replicate(job) for job in jobs]

    per_rep = [outcomes for outcomes, _ in results]
    counts = [c for _, c in results]
    mean, sd = {}, {}
    for name in OUTCOME_NAMES:
        mean[name], sd[name] = _aggregate([rep[name] for rep in per_rep])
    report = OutcomeReport(
        config_id=config.config_id,
        n_replications=n_replications,
        horizon_days=horizon_days,
        warmup_days=warmup_days,
        base_seed=base_seed,
        mean=mean,
        sd=sd,
        per_replication=per_rep,
        counts=counts,
    )
    return report
