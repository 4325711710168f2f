"""Event calendar: a time-ordered queue with deterministic tie-breaking.

Events at equal times are dispatched in insertion order, so a model that
schedules deterministically replays identically regardless of heap internals.
"""

import heapq


class SchedulingInPastError(Exception):
    """Raised when an event is scheduled before the current clock."""


class EventCalendar:
    """Min-heap of (time, sequence, action) triples.

    ``action`` is opaque to the calendar; the engine decides what popping one
    means. ``sequence`` is a monotone insertion counter, which makes the heap
    ordering total and stable for equal times.
    """

    __slots__ = ("_heap", "_seq", "now")

    def __init__(self):
        self._heap = []
        self._seq = 0
        self.now = 0.0

    def __len__(self):
        return len(self._heap)

    def schedule(self, time, action):
        """Insert ``action`` at ``time``. Scheduling in the past is an error."""
        if time < self.now:
            raise SchedulingInPastError(
                f"schedule at t={time} but clock is already at t={self.now}"
            )
        heapq.heappush(self._heap, (time, self._seq, action))
        self._seq += 1

    def next_event(self):
        """Pop the earliest event, advance the clock, return (time, action).

        Returns None when the calendar is empty (end of simulation).
        """
        if not self._heap:
            return None
        time, _, action = heapq.heappop(self._heap)
        self.now = time
        return time, action

    def peek_time(self):
        """Time of the earliest pending event, or None if empty."""
        return self._heap[0][0] if self._heap else None
