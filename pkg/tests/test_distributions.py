import numpy as np
import pytest

from phcsim.kernel import (
    Constant,
    DistributionError,
    Exponential,
    StreamSet,
    TruncatedNormal,
    Triangular,
    Uniform,
)

# Lower-truncated normal moments, cross-checked against an independent
# implementation (scipy.stats.truncnorm) and frozen here.
TRUNC_CASES = [
    ((0.87, 0.21, 0.5), 0.8884643, 0.0369273),
    ((2.08, 0.72, 0.667), 2.1229388, 0.4558837),
    ((3.45, 0.82, 2.0), 3.5212506, 0.5640100),
    ((5.0, 1.0, 2.0), 5.0044378, 0.9866668),
]


@pytest.mark.parametrize("args,mean,var", TRUNC_CASES)
def test_truncated_normal_analytic_moments(args, mean, var):
    d = TruncatedNormal(*args)
    assert d.mean == pytest.approx(mean, abs=1e-6)
    assert d.variance == pytest.approx(var, abs=1e-6)


def test_truncated_normal_sampling_matches_its_moments():
    d = TruncatedNormal(0.87, 0.21, 0.5)
    s = StreamSet(2024, 0).stream("svc")
    x = np.array([d.sample(s) for _ in range(200000)])
    assert x.min() >= 0.5
    assert x.mean() == pytest.approx(d.mean, abs=0.002)
    assert x.std(ddof=1) == pytest.approx(d.variance ** 0.5, abs=0.002)


def test_exponential_mean():
    d = Exponential(12.0)
    s = StreamSet(1, 0).stream("iat")
    x = np.array([d.sample(s) for _ in range(200000)])
    assert d.mean == 12.0
    assert d.variance == 144.0
    assert x.mean() == pytest.approx(12.0, rel=0.01)


def test_uniform_and_triangular_moments():
    u = Uniform(300.0, 600.0)
    assert u.mean == 450.0
    assert u.variance == pytest.approx(300.0 ** 2 / 12.0)
    t = Triangular(60.0, 180.0, 360.0)
    assert t.mean == pytest.approx((60 + 180 + 360) / 3.0)
    s = StreamSet(5, 0).stream("d")
    xs = np.array([t.sample(s) for _ in range(100000)])
    assert xs.min() >= 60.0 and xs.max() <= 360.0
    assert xs.mean() == pytest.approx(t.mean, rel=0.01)


def test_constant_is_constant():
    c = Constant(180.0)
    s = StreamSet(9, 0).stream("x")
    assert c.sample(s) == 180.0
    assert c.mean == 180.0
    assert c.variance == 0.0


def test_invalid_parameters_are_rejected():
    with pytest.raises(DistributionError):
        Exponential(0.0)
    with pytest.raises(DistributionError):
        Exponential(-1.0)
    with pytest.raises(DistributionError):
        TruncatedNormal(0.87, 0.0, 0.5)
    with pytest.raises(DistributionError):
        TruncatedNormal(0.87, -0.2, 0.5)
    with pytest.raises(DistributionError):
        Uniform(10.0, 5.0)
    with pytest.raises(DistributionError):
        Uniform(-1.0, 5.0)
    with pytest.raises(DistributionError):
        Triangular(60.0, 30.0, 100.0)
    with pytest.raises(DistributionError):
        Constant(-3.0)
