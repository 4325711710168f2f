"""Statistics accumulators with warm-up reset.

Warm-up is discarded by resetting accumulators in place at the warm-up
instant, which is exact for these estimators and avoids storing histories.
"""

import math


class TimeWeightedAccumulator:
    """Integral of a piecewise-constant signal over time.

    Tracks sum(value * dt) since the last reset; the time-weighted mean over
    [reset_time, now] is integral / (now - reset_time).
    """

    __slots__ = ("value", "integral", "last_time", "reset_time")

    def __init__(self, time=0.0, value=0.0):
        self.value = value
        self.integral = 0.0
        self.last_time = time
        self.reset_time = time

    def add(self, now, delta):
        self.integral += self.value * (now - self.last_time)
        self.value += delta
        self.last_time = now

    def set(self, now, new_value):
        self.integral += self.value * (now - self.last_time)
        self.value = new_value
        self.last_time = now

    def reset(self, now):
        """Forget history; the current value keeps accruing from ``now``."""
        self.integral += self.value * (now - self.last_time)  # flush, then drop
        self.integral = 0.0
        self.last_time = now
        self.reset_time = now

    def total(self, now):
        """Integral from the last reset through ``now``."""
        return self.integral + self.value * (now - self.last_time)

    def mean(self, now):
        span = now - self.reset_time
        if span <= 0:
            return 0.0
        return self.total(now) / span


class TallyAccumulator:
    """Sample count/mean/SD over discrete observations."""

    __slots__ = ("n", "_sum", "_sumsq")

    def __init__(self):
        self.n = 0
        self._sum = 0.0
        self._sumsq = 0.0

    def add(self, x):
        self.n += 1
        self._sum += x
        self._sumsq += x * x

    def reset(self, now=None):
        self.n = 0
        self._sum = 0.0
        self._sumsq = 0.0

    @property
    def mean(self):
        return self._sum / self.n if self.n else 0.0

    @property
    def sd(self):
        if self.n < 2:
            return 0.0
        m = self._sum / self.n
        var = (self._sumsq - self.n * m * m) / (self.n - 1)
        return math.sqrt(var) if var > 0 else 0.0

    @property
    def total(self):
        return self._sum
