"""Process-interaction simulation engine.

Processes are generator functions that yield command tuples built by
``hold``, ``acquire``, ``acquire_or_renege`` and ``release``. The engine
drives each generator until it parks (waiting on time or on a resource) and
resumes it when the wait ends. ``acquire_or_renege`` resumes with True when
the resource was seized and False when patience ran out; the other commands
resume with whatever the wait produced (held time elapsing yields True from
acquire as well, processes are free to ignore it).

Determinism: every resumption goes through the event calendar, which breaks
time ties by insertion order, so a (seed, replication) pair fixes the whole
trajectory.
"""

from .calendar import EventCalendar
from .resources import ROUTINE, URGENT, Resource
from .streams import StreamSet

_HOLD = 0
_ACQUIRE = 1
_ACQUIRE_RENEGE = 2
_RELEASE = 3


def hold(duration):
    """Park the calling process for ``duration`` minutes."""
    return (_HOLD, duration)


def acquire(resource, tier=ROUTINE):
    """Seize one server, waiting in the tier's FIFO queue as long as needed."""
    return (_ACQUIRE, resource, tier)


def acquire_or_renege(resource, tier, patience):
    """Seize one server or give up after ``patience`` minutes; yields bool."""
    return (_ACQUIRE_RENEGE, resource, tier, patience)


def release(resource):
    """Free a previously seized server."""
    return (_RELEASE, resource)


class Process:
    __slots__ = ("gen", "label", "holding")

    def __init__(self, gen, label):
        self.gen = gen
        self.label = label
        self.holding = {}


class Simulation:
    """Event calendar + named random streams + resources + process driver."""

    def __init__(self, seed=0, replication=0, keep_trace=False):
        self.calendar = EventCalendar()
        self.streams = StreamSet(seed, replication)
        self.resources = []
        self.trace = [] if keep_trace else None
        self._spawned = 0

    @property
    def now(self):
        return self.calendar.now

    def stream(self, name):
        return self.streams.stream(name)

    def _register_resource(self, resource):
        self.resources.append(resource)

    def _trace(self, time, kind, where, what):
        if self.trace is not None:
            self.trace.append((time, kind, where, what))

    # -- scheduling -----------------------------------------------------

    def schedule_call(self, time, fn, *args):
        """Run ``fn(*args)`` at ``time``."""
        self.calendar.schedule(time, (fn, args))

    def spawn(self, gen, label=None, at=None):
        """Start a new process now (or at a future time)."""
        self._spawned += 1
        proc = Process(gen, label if label is not None else "p%d" % self._spawned)
        start = self.now if at is None else at
        self.calendar.schedule(start, (self._step, (proc, None)))
        return proc

    def _schedule_resume(self, proc, value):
        self.calendar.schedule(self.now, (self._step, (proc, value)))

    # -- the drive loop -------------------------------------------------

    def _step(self, proc, send_value):
        gen = proc.gen
        while True:
            try:
                cmd = gen.send(send_value)
            except StopIteration:
                for res in list(proc.holding):
                    res._release(proc)
                return
            tag = cmd[0]
            if tag == _HOLD:
                self.calendar.schedule(self.now + cmd[1], (self._step, (proc, True)))
                return
            if tag == _ACQUIRE:
                got = cmd[1]._request(proc, cmd[2])
                if got is True:
                    send_value = True
                    continue
                return  # queued; dispatch resumes us later
            if tag == _ACQUIRE_RENEGE:
                got = cmd[1]._request(proc, cmd[2])
                if got is True:
                    send_value = True
                    continue
                self.schedule_call(self.now + cmd[3], cmd[1]._timeout, got)
                return
            if tag == _RELEASE:
                cmd[1]._release(proc)
                send_value = True
                continue
            raise ValueError("unknown process command %r" % (cmd,))

    def run(self, until=None):
        """Execute events; with ``until`` stop just before that instant.

        Events stamped exactly at ``until`` are left unexecuted and the clock
        is moved to ``until`` so closing reads of the accumulators cover the
        full span.
        """
        cal = self.calendar
        while True:
            t = cal.peek_time()
            if t is None or (until is not None and t >= until):
                break
            _, (fn, args) = cal.next_event()
            fn(*args)
        if until is not None and until > cal.now:
            cal.now = until
