"""Closed-form queueing approximations for shared multi-class servers.

The toolkit answers one recurring question: when several job classes share
a server pool but one class carries most of the load, how well do
single-class summaries approximate the pool's true utilization?

Three estimates of increasing refinement are provided. The additive total
sums per-class utilizations. The dominant-class share treats the busiest
class alone. The setup-augmented estimate inflates the dominant class's
service time by folding each rare class in as a setup interruption, turning
the pool into an equivalent single-class system with a longer effective
service time. Two threshold checks decide when the cruder estimates are
statistically indistinguishable from measured utilization, using the
half-width of a replication-based confidence interval.
"""

import math
from dataclasses import dataclass

from scipy import stats as _scipy_stats


def normal_k_alpha(alpha=0.05):
    """Two-sided standard-normal interval multiplier (1.96 at alpha=0.05)."""
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    return float(_scipy_stats.norm.ppf(1.0 - alpha / 2.0))


def student_k_alpha(alpha, n):
    """Two-sided Student-t multiplier with n-1 degrees of freedom."""
    if n < 2:
        raise ValueError("need at least two replications")
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    return float(_scipy_stats.t.ppf(1.0 - alpha / 2.0, n - 1))


@dataclass(frozen=True)
class JobClassSpec:
    """One job class offered to a server pool.

    arrival_rate is per minute, service_mean in minutes, service_variance
    in squared minutes (only needed for waiting-time formulas), servers is
    the pool size the class is served by.
    """

    arrival_rate: float
    service_mean: float
    service_variance: float = None
    servers: int = 1
    name: str = ""

    def __post_init__(self):
        if self.arrival_rate < 0:
            raise ValueError("arrival rate must be nonnegative")
        if self.service_mean <= 0:
            raise ValueError("service mean must be positive")
        if self.service_variance is not None and self.service_variance < 0:
            raise ValueError("service variance must be nonnegative")
        if self.servers < 1:
            raise ValueError("server count must be a positive integer")


@dataclass(frozen=True)
class UtilizationSample:
    """Cross-replication summary of a measured utilization.

    rho_hat is the mean of per-replication utilizations, s_hat their sample
    SD, n the replication count, k_alpha the interval multiplier (two-sided
    normal at 5% unless overridden).
    """

    rho_hat: float
    s_hat: float
    n: int
    k_alpha: float = 1.959963984540054

    def __post_init__(self):
        if self.s_hat < 0:
            raise ValueError("sample SD must be nonnegative")
        if self.n < 2:
            raise ValueError("need at least two replications")
        if self.k_alpha <= 0:
            raise ValueError("interval multiplier must be positive")

    @property
    def half_width_ratio(self):
        """k_alpha * s_hat / rho_hat, the relative interval half-width."""
        if self.rho_hat == 0:
            raise ValueError("relative half-width undefined at zero utilization")
        return self.k_alpha * self.s_hat / self.rho_hat


@dataclass(frozen=True)
class ApproximationReport:
    """All approximation quantities for one scenario, plus the test verdicts."""

    rho_a: float
    rho_1: float
    rho_ap: float
    d_1: float
    theorem_c1_holds: bool
    theorem_c2_interval: tuple
    theorem_c2_holds: bool
    t_statistic: float
    p_value: float

    def __post_init__(self):
        if not 0.0 <= self.d_1 <= 1.0:
            raise ValueError("dominant share must lie in [0, 1]")
        lo, hi = self.theorem_c2_interval
        if lo > hi:
            raise ValueError("interval bounds out of order")


def class_utilization(spec):
    """Offered load of one class on its pool: rate * mean service / servers."""
    return spec.arrival_rate * spec.service_mean / spec.servers


def additive_utilization(classes):
    """Total pool utilization as the sum of per-class offered loads."""
    return sum(class_utilization(c) for c in classes)


def domination_factor(classes, index):
    """Share of the additive total carried by one class."""
    total = additive_utilization(classes)
    if total <= 0:
        raise ValueError("domination undefined when every class is idle")
    return class_utilization(classes[index]) / total


def theorem_c1_check(d_1, sample):
    """Is the dominant class alone enough to explain measured utilization?

    Holds when the dominant share exceeds 1 - k_alpha * s_hat / rho_hat,
    i.e. when the neglected classes fit inside the sampling interval's
    relative half-width.
    """
    if sample.rho_hat == 0:
        raise ValueError("check undefined at zero measured utilization")
    return d_1 > 1.0 - sample.half_width_ratio


def effective_service_time(dominant_mean, setups):
    """Dominant-class service mean inflated by rare-class interruptions.

    Each setup is a (mean_minutes, jobs_between) pair: a task of the given
    mean occurring once every ``jobs_between`` dominant jobs. Folding the
    classes in one at a time or all at once gives the same mean, so the
    incorporation order is irrelevant here.
    """
    if dominant_mean <= 0:
        raise ValueError("dominant service mean must be positive")
    total = dominant_mean
    for setup_mean, jobs_between in setups:
        if setup_mean < 0:
            raise ValueError("setup mean must be nonnegative")
        if jobs_between <= 0:
            raise ValueError("jobs-between-setups must be positive")
        total += setup_mean / jobs_between
    return total


def _setups_from_classes(classes, dominant_index):
    """Express every non-dominant class as a setup on the dominant one.

    A class with rate r and mean m interrupts once every 1/(r * m1)
    dominant service times, so it contributes m * r * m1 to the effective
    service time.
    """
    m1 = classes[dominant_index].service_mean
    setups = []
    for i, c in enumerate(classes):
        if i == dominant_index or c.arrival_rate == 0:
            continue
        setups.append((c.service_mean, 1.0 / (c.arrival_rate * m1)))
    return setups


def rho_ap(classes, dominant_index=0):
    """Pool utilization from the setup-augmented dominant class."""
    dom = classes[dominant_index]
    effective = effective_service_time(
        dom.service_mean, _setups_from_classes(classes, dominant_index))
    return dom.arrival_rate * effective / dom.servers


def theorem_c2_interval(rho_1, rho_ap_value, r):
    """Acceptance band for the dominant share under the setup estimate.

    Returns ((1-r)*rho_1/rho_ap, min((1+r)*rho_1/rho_ap, 1)). A zero
    half-width ratio r collapses the band to a single point, which is
    returned as a degenerate (x, x) interval; a band that is empty after
    the upper clamp is an error.
    """
    if rho_ap_value <= 0:
        raise ValueError("setup-augmented utilization must be positive")
    if r < 0:
        raise ValueError("half-width ratio must be nonnegative")
    ratio = rho_1 / rho_ap_value
    lo = (1.0 - r) * ratio
    hi = min((1.0 + r) * ratio, 1.0)
    if lo > hi:
        raise ValueError("empty acceptance band: lower end %.6f above upper %.6f"
                         % (lo, hi))
    return (lo, hi)


def interval_contains(interval, value):
    lo, hi = interval
    return lo <= value <= hi


def mg1_wait(arrival_rate, service_mean, service_variance):
    """Mean queueing delay for Poisson arrivals at a single general server.

    Wq = lambda * (var + mean^2) / (2 * (1 - rho)); requires rho < 1.
    """
    if service_mean <= 0:
        raise ValueError("service mean must be positive")
    if service_variance < 0:
        raise ValueError("service variance must be nonnegative")
    rho = arrival_rate * service_mean
    if rho >= 1.0:
        raise ValueError("no steady state: offered load %.3f >= 1" % rho)
    second_moment = service_variance + service_mean ** 2
    return arrival_rate * second_moment / (2.0 * (1.0 - rho))


def kingman_wait(arrival_rate, arrival_scv, service_mean, service_scv):
    """Two-moment heavy-traffic wait estimate for a single general server.

    Wq ~= (ca2 + cs2)/2 * rho/(1-rho) * service_mean. With Poisson arrivals
    and the class's true service SCV this coincides with the exact formula.
    """
    if arrival_scv < 0 or service_scv < 0:
        raise ValueError("squared coefficients of variation must be nonnegative")
    if service_mean <= 0:
        raise ValueError("service mean must be positive")
    rho = arrival_rate * service_mean
    if rho >= 1.0:
        raise ValueError("no steady state: offered load %.3f >= 1" % rho)
    return (arrival_scv + service_scv) / 2.0 * rho / (1.0 - rho) * service_mean


def one_sample_t(sample_values, mu0, scale="sd"):
    """Two-sided one-sample location test, returning (statistic, p).

    scale="sd" standardizes the mean difference by the sample SD alone and
    uses a normal reference; scale="sem" is the classic Student-t with the
    standard error of the mean.
    """
    values = list(sample_values)
    n = len(values)
    if n < 2:
        raise ValueError("need at least two observations")
    mean = sum(values) / n
    var = sum((x - mean) ** 2 for x in values) / (n - 1)
    if var == 0:
        raise ValueError("zero-variance sample: test undefined")
    return one_sample_t_summary(mean, math.sqrt(var), n, mu0, scale)


def one_sample_t_summary(mean, sd, n, mu0, scale="sd"):
    """Same test from summary statistics instead of raw values."""
    if n < 2:
        raise ValueError("need at least two observations")
    if sd <= 0:
        raise ValueError("zero-variance sample: test undefined")
    if scale == "sd":
        t = (mean - mu0) / sd
        p = 2.0 * _scipy_stats.norm.sf(abs(t))
    elif scale == "sem":
        t = (mean - mu0) / (sd / math.sqrt(n))
        p = 2.0 * _scipy_stats.t.sf(abs(t), n - 1)
    else:
        raise ValueError("scale must be 'sd' or 'sem'")
    return (float(t), float(p))
