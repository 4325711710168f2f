"""
Doctor-pool utilization without running anything
================================================

The analytics layer prices the doctor pool's load from arrival rates and
service means alone. Three estimates of increasing refinement exist; this
script prints all of them for the four standard setups, plus the
diagnostics that say when the cheapest one is safe to use.
"""

from phcsim.analytics import (
    UtilizationSample,
    additive_job_classes,
    approximation_report,
    class_utilization,
    doctor_domination,
    doctor_rho_1,
    doctor_rho_a,
    doctor_rho_ap,
    mg1_wait,
)
from phcsim.model import build_configuration

# Per-setup view of the three estimates. rho_1 prices only walk-in
# consults; rho_ap folds the rare ward and delivery visits into the
# consult stream as setup time; rho_a adds each class's own load.
print("setup   rho_1    rho_ap   rho_a    dominant share")
for setup in (1, 2, 3, 4):
    cfg = build_configuration(setup)
    print("  %d    %.4f   %.4f   %.4f   %.3f"
          % (setup, doctor_rho_1(cfg), doctor_rho_ap(cfg),
             doctor_rho_a(cfg), doctor_domination(cfg)))

# The benchmark setup runs its two doctors close to saturation, which is
# why its estimates sit near 0.84 while the field setups idle near 0.1.

# How each class contributes to the additive total for setup 1.
print("\nsetup-1 additive decomposition:")
for spec in additive_job_classes(build_configuration(1)):
    print("  %-11s rate %.6f/min  mean %5.2f min  load %.5f"
          % (spec.name, spec.arrival_rate, spec.service_mean,
             class_utilization(spec)))

# Diagnostics against a measured utilization sample: a location test of
# the sample mean against rho_a, the dominance threshold that justifies
# using rho_1 alone, and the interval the dominant share must fall in.
sample = UtilizationSample(rho_hat=0.122, s_hat=0.0043, n=100)
report = approximation_report(build_configuration(1), sample)
print("\nsetup-1 verdicts for a measured sample (mean 0.122, sd 0.0043):")
print("  t = %.3f, p = %.3f" % (report.t_statistic, report.p_value))
print("  single-class shortcut justified: %s" % report.theorem_c1_holds)
print("  dominant share %.3f inside (%.3f, %.3f): %s"
      % (report.d_1, report.theorem_c2_interval[0],
         report.theorem_c2_interval[1], report.theorem_c2_holds))

# With the consult stream treated as the only customer of an M/G/1
# station, the same inputs give a queueing delay.
consult = additive_job_classes(build_configuration(1))[0]
wait = mg1_wait(consult.arrival_rate / consult.servers,
                consult.service_mean, consult.service_variance)
print("\nsetup-1 consult queue, M/G/1 view: %.3f min of expected wait"
      % wait)
