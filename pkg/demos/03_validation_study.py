"""
Checking the closed forms against the simulator
===============================================

The estimates in demo 02 ignore revisits and paperwork, so the check
runs the simulator in the same stripped mode: measured doctor
utilization across replications against the additive estimate, with a
one-sample location test per setup.

A reduced budget keeps this demo under a minute; the full study (100
replications of a year each) lives in `phcsim reproduce table5`.
"""

from phcsim.analytics import doctor_rho_a, one_sample_t_summary
from phcsim.model import build_configuration, simulate, validation_mode

REPLICATIONS = 10
ALPHA = 0.05

print("setup   analytic   simulated (sd)      t      p     verdict")
for setup in (1, 2, 3, 4):
    cfg = build_configuration(setup)
    rho_a = doctor_rho_a(cfg)
    # validation_mode strips revisits and admin blocks but leaves every
    # arrival and service law in place
    report = simulate(validation_mode(cfg), n_replications=REPLICATIONS,
                      horizon_days=185, warmup_days=60)
    rho_hat = report.mean["doctor_utilization"]
    sd = report.sd["doctor_utilization"]
    t, p = one_sample_t_summary(rho_hat, sd, REPLICATIONS, rho_a)
    verdict = "rejected" if p < ALPHA else "not rejected"
    print("  %d     %.4f     %.4f (%.4f)  %+6.2f  %.3f  %s"
          % (setup, rho_a, rho_hat, sd, t, p, verdict))

# Two things worth reading off the table. First, setups 1-3 sit within
# a fraction of a percent of their closed forms, but the verdicts at
# this reduced budget are twitchy: setup 2 carries a small structural
# surplus (night deliveries clock at full rate where the estimate
# prices only their daytime share) and ten replications can tip its
# test either way. The full budget (`phcsim reproduce table5`)
# reproduces the published verdict pattern. Second, the benchmark
# rejects for a structural reason that no budget fixes: the estimate
# prices one timed consult per walk-in, but stripped of revisits the
# model never delivers the consults that lab-referred patients would
# have received on a later visit, about 9% of the walk-in work. At low
# load that loss hides inside the emergency surplus; at benchmark load
# it dominates, and the simulated value lands about 7% under the
# estimate (see README, documented deviations).
