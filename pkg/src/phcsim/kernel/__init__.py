"""Discrete-event simulation kernel: calendar, streams, distributions,
resources, accumulators and the process driver."""

from .calendar import EventCalendar, SchedulingInPastError
from .distributions import (
    Constant,
    DistributionError,
    Exponential,
    TruncatedNormal,
    Triangular,
    Uniform,
)
from .engine import (
    Process,
    Simulation,
    acquire,
    acquire_or_renege,
    hold,
    release,
)
from .resources import ROUTINE, URGENT, Resource
from .stats import TallyAccumulator, TimeWeightedAccumulator
from .streams import RandomStream, StreamSet

__all__ = [
    "EventCalendar",
    "SchedulingInPastError",
    "Constant",
    "DistributionError",
    "Exponential",
    "TruncatedNormal",
    "Triangular",
    "Uniform",
    "Process",
    "Simulation",
    "acquire",
    "acquire_or_renege",
    "hold",
    "release",
    "ROUTINE",
    "URGENT",
    "Resource",
    "TallyAccumulator",
    "TimeWeightedAccumulator",
    "RandomStream",
    "StreamSet",
]
