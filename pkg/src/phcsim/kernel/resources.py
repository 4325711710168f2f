"""Capacity-constrained resources with two service tiers.

A resource holds a fixed number of identical servers. Requests arrive at
either the urgent tier or the routine tier; within a tier service order is
FIFO, and no routine request starts service while an urgent request is
waiting. Requests may carry a patience limit: if not granted within the
limit the request is withdrawn and the requester is told it failed.

Busy time is accounted as a time-weighted integral of the holder count, so
utilization over a span equals the summed service durations of everyone who
held a server plus any off-calendar work logged with ``log_admin_block``.
"""

from collections import deque

from .stats import TallyAccumulator, TimeWeightedAccumulator

URGENT = 0
ROUTINE = 1


class _Waiter:
    __slots__ = ("proc", "enqueued_at", "granted", "cancelled")

    def __init__(self, proc, enqueued_at):
        self.proc = proc
        self.enqueued_at = enqueued_at
        self.granted = False
        self.cancelled = False


class Resource:
    """A pool of ``capacity`` interchangeable servers with tiered FIFO queues."""

    __slots__ = (
        "sim", "name", "capacity", "holders",
        "_queues", "busy", "queue_length", "wait_times",
        "admin_minutes", "granted_count", "released_count", "reneged_count",
    )

    def __init__(self, sim, name, capacity):
        if capacity < 1:
            raise ValueError("capacity must be a positive integer")
        self.sim = sim
        self.name = name
        self.capacity = capacity
        self.holders = 0
        self._queues = (deque(), deque())  # index by tier
        now = sim.now
        self.busy = TimeWeightedAccumulator(now)
        self.queue_length = TimeWeightedAccumulator(now)
        self.wait_times = TallyAccumulator()
        self.admin_minutes = 0.0
        self.granted_count = 0
        self.released_count = 0
        self.reneged_count = 0
        sim._register_resource(self)

    # -- accounting -----------------------------------------------------

    def reset_stats(self, now):
        self.busy.reset(now)
        self.queue_length.reset(now)
        self.wait_times.reset()
        self.admin_minutes = 0.0
        self.granted_count = self.holders  # current holds count as granted
        self.released_count = 0
        self.reneged_count = 0

    def log_admin_block(self, minutes):
        """Book off-calendar work against this resource's schedule."""
        if minutes < 0:
            raise ValueError("admin block must be nonnegative")
        self.admin_minutes += minutes
        self.sim._trace(self.sim.now, "admin", self.name, minutes)

    def busy_minutes(self, now):
        return self.busy.total(now)

    def utilization(self, now, scheduled_minutes):
        """(busy integral + admin blocks) / scheduled minutes."""
        if scheduled_minutes <= 0:
            raise ValueError("scheduled time must be positive")
        return (self.busy.total(now) + self.admin_minutes) / scheduled_minutes

    def mean_queue_length(self, now):
        return self.queue_length.mean(now)

    # -- request path (driven by the engine) ----------------------------

    def _waiting(self):
        q0, q1 = self._queues
        return any(not w.cancelled and not w.granted for w in q0) or \
            any(not w.cancelled and not w.granted for w in q1)

    def _request(self, proc, tier):
        """Try to seize a server now. Returns True on grant, else queues."""
        if self in proc.holding:
            raise RuntimeError(
                "%s already holds %s" % (proc.label, self.name))
        now = self.sim.now
        if self.holders < self.capacity and not self._waiting():
            self._grant(proc, now, 0.0)
            return True
        w = _Waiter(proc, now)
        self._queues[tier].append(w)
        self.queue_length.add(now, 1)
        self.sim._trace(now, "queue", self.name, proc.label)
        return w

    def _grant(self, proc, now, waited):
        self.holders += 1
        self.busy.add(now, 1)
        self.wait_times.add(waited)
        self.granted_count += 1
        proc.holding[self] = now
        self.sim._trace(now, "seize", self.name, proc.label)

    def _release(self, proc):
        if self not in proc.holding:
            raise RuntimeError(
                "%s releasing %s it does not hold" % (proc.label, self.name))
        now = self.sim.now
        del proc.holding[self]
        self.holders -= 1
        self.busy.add(now, -1)
        self.released_count += 1
        self.sim._trace(now, "release", self.name, proc.label)
        self._dispatch(now)

    def _dispatch(self, now):
        """Hand freed servers to queued waiters, urgent tier first."""
        while self.holders < self.capacity:
            w = self._pop_next()
            if w is None:
                return
            w.granted = True
            self.queue_length.add(now, -1)
            self._grant(w.proc, now, now - w.enqueued_at)
            # resume through the calendar so the releasing process finishes
            # its step before the waiter runs
            self.sim._schedule_resume(w.proc, True)

    def _pop_next(self):
        for q in self._queues:
            while q:
                if q[0].cancelled or q[0].granted:
                    q.popleft()
                    continue
                return q.popleft()
        return None

    def _timeout(self, waiter):
        """Patience expired: withdraw the request if still queued."""
        if waiter.granted or waiter.cancelled:
            return
        waiter.cancelled = True
        now = self.sim.now
        self.queue_length.add(now, -1)
        self.reneged_count += 1
        self.sim._trace(now, "renege", self.name, waiter.proc.label)
        self.sim._step(waiter.proc, False)
