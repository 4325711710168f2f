"""Structural properties of the closed-form layer."""

import math

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from phcsim.analytics import (
    JobClassSpec,
    additive_utilization,
    class_utilization,
    domination_factor,
    mg1_wait,
    one_sample_t_summary,
    rho_ap,
    theorem_c2_interval,
)

rates = st.floats(min_value=0.0001, max_value=0.5)
means = st.floats(min_value=0.1, max_value=60.0)


@given(rate=rates, mean=means, parts=st.integers(min_value=2, max_value=6))
def test_partitioning_a_class_preserves_the_total(rate, mean, parts):
    whole = JobClassSpec(rate, mean, servers=2)
    split = [JobClassSpec(rate / parts, mean, servers=2) for _ in range(parts)]
    assert math.isclose(
        additive_utilization(split), class_utilization(whole), rel_tol=1e-9)


@given(
    classes=st.lists(st.tuples(rates, means), min_size=1, max_size=5),
    servers=st.integers(min_value=1, max_value=3),
)
def test_ordering_of_the_three_estimates(classes, servers):
    # dominant share <= setup-augmented; and when the dominant class alone
    # would not overload one server, the setup estimate stays below the
    # additive total over the same raw classes
    specs = [JobClassSpec(r, m, servers=servers) for r, m in classes]
    dominant = max(range(len(specs)), key=lambda i: class_utilization(specs[i]))
    rho_1 = class_utilization(specs[dominant])
    rho_setup = rho_ap(specs, dominant)
    assert rho_setup >= rho_1 - 1e-12
    if specs[dominant].arrival_rate * specs[dominant].service_mean <= 1.0:
        assert rho_setup <= additive_utilization(specs) + 1e-12


@given(
    classes=st.lists(st.tuples(rates, means), min_size=1, max_size=5),
    factor=st.floats(min_value=0.1, max_value=10.0),
)
def test_scale_invariance(classes, factor):
    # speeding all arrivals up and all services down by one factor changes
    # no dimensionless quantity
    specs = [JobClassSpec(r, m, servers=2) for r, m in classes]
    scaled = [JobClassSpec(r * factor, m / factor, servers=2) for r, m in classes]
    assert math.isclose(
        additive_utilization(specs), additive_utilization(scaled), rel_tol=1e-9)
    assert math.isclose(rho_ap(specs, 0), rho_ap(scaled, 0), rel_tol=1e-9)
    assume(additive_utilization(specs) > 0)
    assert math.isclose(
        domination_factor(specs, 0), domination_factor(scaled, 0), rel_tol=1e-9)
    band = theorem_c2_interval(
        class_utilization(specs[0]), rho_ap(specs, 0), 0.05)
    band_scaled = theorem_c2_interval(
        class_utilization(scaled[0]), rho_ap(scaled, 0), 0.05)
    assert math.isclose(band[0], band_scaled[0], rel_tol=1e-9)
    assert math.isclose(band[1], band_scaled[1], rel_tol=1e-9)


@given(
    mean=st.floats(min_value=-5, max_value=5),
    sd=st.floats(min_value=0.01, max_value=3),
    n=st.integers(min_value=2, max_value=200),
    mu0=st.floats(min_value=-5, max_value=5),
)
def test_location_test_antisymmetry_and_range(mean, sd, n, mu0):
    t, p = one_sample_t_summary(mean, sd, n, mu0)
    t_flipped, p_flipped = one_sample_t_summary(-mean, sd, n, -mu0)
    assert math.isclose(t, -t_flipped, rel_tol=1e-9, abs_tol=1e-12)
    assert math.isclose(p, p_flipped, rel_tol=1e-9, abs_tol=1e-12)
    assert 0.0 <= p <= 1.0


@given(
    lam=st.floats(min_value=0.01, max_value=0.9),
    mean=st.floats(min_value=0.1, max_value=1.0),
    var_lo=st.floats(min_value=0.0, max_value=1.0),
    var_extra=st.floats(min_value=0.001, max_value=2.0),
)
@settings(max_examples=50)
def test_mean_wait_grows_with_service_variance(lam, mean, var_lo, var_extra):
    assume(lam * mean < 0.999)
    low = mg1_wait(lam, mean, var_lo)
    high = mg1_wait(lam, mean, var_lo + var_extra)
    assert low >= 0.0
    assert high > low
