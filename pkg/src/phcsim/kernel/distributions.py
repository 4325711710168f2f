"""Service- and interarrival-time distributions.

All times are minutes. Lower-bounded normals sample the conditional
(truncated) shape; clamping would put a probability atom at the bound.
Near the body of the parent normal that is plain rejection; when the bound
sits deep in the upper tail, rejection almost never accepts, so sampling
switches to an exponential-proposal scheme whose acceptance rate stays
above three quarters at any bound. Each distribution exposes its analytic
mean (and variance where closed-form) so tests can check empirical moments
against exact values.
"""

import math


class DistributionError(ValueError):
    """Invalid distribution parameters."""


def _phi(x):
    return math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)


def _hazard(alpha):
    # phi(alpha) / P(N >= alpha); the survival is computed directly from
    # erfc so nothing cancels, and past its floating-point floor the
    # asymptotic Mills-ratio series takes over
    if alpha < 30.0:
        return _phi(alpha) / (0.5 * math.erfc(alpha / math.sqrt(2.0)))
    a2 = alpha * alpha
    return alpha / (1.0 - 1.0 / a2 + 3.0 / (a2 * a2) - 15.0 / (a2 * a2 * a2))


class Exponential:
    """Exponential with the given mean (minutes)."""

    __slots__ = ("mean_value",)

    def __init__(self, mean):
        if mean <= 0:
            raise DistributionError(f"exponential mean must be positive, got {mean}")
        self.mean_value = float(mean)

    def sample(self, stream):
        return self.mean_value * stream.standard_exponential()

    @property
    def mean(self):
        return self.mean_value

    @property
    def variance(self):
        return self.mean_value * self.mean_value

    def __repr__(self):
        return f"Exponential(mean={self.mean_value})"


class TruncatedNormal:
    """Normal(mean, sd) conditioned on being >= lower_bound.

    ``mean`` and ``sd`` are the parameters of the parent normal, not the
    moments of the truncated law; use ``.mean``/``.variance`` for those.
    """

    __slots__ = ("mu", "sd", "lower_bound")

    def __init__(self, mean, sd, lower_bound=0.0):
        if sd <= 0:
            raise DistributionError(f"normal sd must be positive, got {sd}")
        if lower_bound < 0:
            raise DistributionError("lower_bound must be >= 0 for service times")
        self.mu = float(mean)
        self.sd = float(sd)
        self.lower_bound = float(lower_bound)

    def sample(self, stream):
        mu, sd, lo = self.mu, self.sd, self.lower_bound
        alpha = (lo - mu) / sd
        if alpha < 2.0:
            # the bound cuts at most the lower ~98% away; plain rejection
            # is cheap here and keeps historical draw sequences intact
            while True:
                x = mu + sd * stream.standard_normal()
                if x >= lo:
                    return x
        # deep upper tail: shifted-exponential proposal (Robert's method)
        lam = 0.5 * (alpha + math.sqrt(alpha * alpha + 4.0))
        while True:
            z = alpha + stream.standard_exponential() / lam
            gap = z - lam
            if stream.uniform01() <= math.exp(-0.5 * gap * gap):
                return mu + sd * z

    @property
    def mean(self):
        alpha = (self.lower_bound - self.mu) / self.sd
        return self.mu + self.sd * _hazard(alpha)

    @property
    def variance(self):
        alpha = (self.lower_bound - self.mu) / self.sd
        h = _hazard(alpha)
        return self.sd * self.sd * (1.0 + alpha * h - h * h)

    @property
    def mean_before_truncation(self):
        """Parent-normal mean, the figure quoted in planning tables."""
        return self.mu

    @property
    def variance_before_truncation(self):
        return self.sd * self.sd

    def __repr__(self):
        return f"TruncatedNormal({self.mu}, {self.sd}, >={self.lower_bound})"


class Uniform:
    __slots__ = ("low", "high")

    def __init__(self, low, high):
        if low > high:
            raise DistributionError(f"uniform needs low <= high, got ({low}, {high})")
        if low < 0:
            raise DistributionError("uniform low must be >= 0 for durations")
        self.low = float(low)
        self.high = float(high)

    def sample(self, stream):
        return self.low + (self.high - self.low) * stream.uniform01()

    @property
    def mean(self):
        return 0.5 * (self.low + self.high)

    @property
    def variance(self):
        d = self.high - self.low
        return d * d / 12.0

    def __repr__(self):
        return f"Uniform({self.low}, {self.high})"


class Triangular:
    __slots__ = ("low", "mode", "high")

    def __init__(self, low, mode, high):
        if not (low <= mode <= high):
            raise DistributionError(
                f"triangular needs low <= mode <= high, got ({low}, {mode}, {high})"
            )
        if low < 0:
            raise DistributionError("triangular low must be >= 0 for durations")
        self.low = float(low)
        self.mode = float(mode)
        self.high = float(high)

    def sample(self, stream):
        # inverse-CDF on one uniform draw
        u = stream.uniform01()
        a, c, b = self.low, self.mode, self.high
        if b == a:
            return a
        fc = (c - a) / (b - a)
        if u < fc:
            return a + math.sqrt(u * (b - a) * (c - a))
        return b - math.sqrt((1.0 - u) * (b - a) * (b - c))

    @property
    def mean(self):
        return (self.low + self.mode + self.high) / 3.0

    @property
    def variance(self):
        a, c, b = self.low, self.mode, self.high
        return (a * a + b * b + c * c - a * b - a * c - b * c) / 18.0

    def __repr__(self):
        return f"Triangular({self.low}, {self.mode}, {self.high})"


class Constant:
    __slots__ = ("value",)

    def __init__(self, value):
        if value < 0:
            raise DistributionError("constant duration must be >= 0")
        self.value = float(value)

    def sample(self, stream):
        return self.value

    @property
    def mean(self):
        return self.value

    @property
    def variance(self):
        return 0.0

    def __repr__(self):
        return f"Constant({self.value})"
