import pytest

from phcsim.kernel import EventCalendar, SchedulingInPastError


def test_events_come_back_in_time_order():
    cal = EventCalendar()
    fired = []
    cal.schedule(5.0, "c")
    cal.schedule(1.0, "a")
    cal.schedule(3.0, "b")
    while True:
        ev = cal.next_event()
        if ev is None:
            break
        fired.append(ev)
    assert fired == [(1.0, "a"), (3.0, "b"), (5.0, "c")]


def test_ties_break_by_insertion_order():
    cal = EventCalendar()
    cal.schedule(2.0, "first")
    cal.schedule(2.0, "second")
    cal.schedule(2.0, "third")
    got = [cal.next_event()[1] for _ in range(3)]
    assert got == ["first", "second", "third"]


def test_clock_advances_to_popped_event():
    cal = EventCalendar()
    cal.schedule(7.5, None)
    assert cal.now == 0.0
    cal.next_event()
    assert cal.now == 7.5


def test_scheduling_in_the_past_is_an_error():
    cal = EventCalendar()
    cal.schedule(4.0, None)
    cal.next_event()
    with pytest.raises(SchedulingInPastError):
        cal.schedule(3.9, None)
    # scheduling exactly at the current instant is allowed
    cal.schedule(4.0, None)


def test_peek_does_not_advance():
    cal = EventCalendar()
    assert cal.peek_time() is None
    cal.schedule(1.0, None)
    assert cal.peek_time() == 1.0
    assert cal.now == 0.0
    cal.next_event()
    assert cal.peek_time() is None
    assert cal.next_event() is None
