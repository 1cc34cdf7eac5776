import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regcorr import (DegeneratePartitionError, ParameterError, QuadParams, UnitNormal, beta,
                     max_beta_derivative, zeta)
from regcorr.partition import beta_derivative

P1 = QuadParams.from_degrees(2.0, 70.0, 1.0)
P2 = QuadParams.from_degrees(2.0, 70.0, 2.0)


def test_quadparams_derived():
    p = QuadParams.from_degrees(2.5, 70.0, 1.0)
    assert p.gamma0 == math.cos(math.radians(70.0))
    assert p.q0 == math.pi * 2.5 * p.gamma0
    assert p.theta_deg == pytest.approx(70.0)


@pytest.mark.parametrize("kw", [dict(rho=0.0), dict(rho=2, theta=0.0), dict(rho=2, theta=2.0),
                                dict(rho=2, a=-1.0)])
def test_quadparams_rejects_bad_values(kw):
    with pytest.raises(ParameterError):
        QuadParams(**kw)


def test_large_a_warns():
    with pytest.warns(UserWarning, match="a <= 2"):
        QuadParams.from_degrees(2.0, 70.0, 3.0)


def test_q0_requirement():
    with pytest.raises(ParameterError):
        QuadParams.from_degrees(0.5, 70.0, 1.0).require_q0_above_one()


def test_unit_normal_canonicalizes():
    n = UnitNormal((-0.6, 0.0, 0.8))
    assert n.gamma == (0.6, 0.0, 0.8)
    with pytest.raises(ValueError):
        UnitNormal((1.0, 1.0, 0.0))
    m = UnitNormal.from_vector([1, -1, 1])
    assert m.gamma == pytest.approx((1 / math.sqrt(3),) * 3)


def test_beta_examples():
    assert beta(1.0, P1) == 1.0
    assert beta(P1.gamma0, P1) == 0.0
    assert beta(0.0, P1) == 0.0
    nk = math.cos(P1.theta / 2)
    assert beta(nk, P1) == pytest.approx(math.exp(-1 / 3), rel=1e-14)
    assert beta(nk, P1) == pytest.approx(0.71653131057378925043, rel=1e-14)


def test_beta_continuous_at_support_edge():
    eps = np.logspace(-2, -8, 7)
    assert np.all(np.diff(beta(P1.gamma0 + eps, P1)) <= 0)
    assert beta(P1.gamma0 + 1e-8, P1) < 1e-300


def test_beta_decreases_with_a():
    nk = np.linspace(P1.gamma0 + 0.01, 0.999, 50)
    assert np.all(beta(nk, P2) < beta(nk, P1))


def test_beta_derivative_matches_finite_difference():
    nk = np.linspace(0.4, 0.99, 30)
    h = 1e-6
    fd = (beta(nk + h, P1) - beta(nk - h, P1)) / (2 * h)
    np.testing.assert_allclose(beta_derivative(nk, P1), fd, rtol=1e-6)
    # limit at nk = 1 is 2a/theta^2
    assert beta_derivative(1.0, P1) == pytest.approx(2 / P1.theta**2, rel=1e-12)


def test_zeta_examples():
    np.testing.assert_array_equal(zeta(UnitNormal((0, 0, 1)), P1), [0, 0, 1])
    np.testing.assert_allclose(zeta(UnitNormal.from_vector([1, 1, 1]), P1), [1 / 3] * 3,
                               rtol=1e-15)
    g1 = math.cos(math.radians(70.0))
    rest = math.sqrt((1 - g1 * g1) / 2)
    assert zeta(np.array([g1, rest, rest]), P1)[0] == 0.0


def test_zeta_degenerate():
    # cos(theta) above 1/sqrt(3): the diagonal normal has no active patch
    p = QuadParams.from_degrees(2.0, 50.0, 1.0)
    with pytest.raises(DegeneratePartitionError):
        zeta(UnitNormal.from_vector([1, 1, 1]), p)


unit = st.tuples(*[st.floats(-1, 1)] * 3).filter(lambda v: np.linalg.norm(v) > 1e-3)


@settings(max_examples=300, deadline=None)
@given(unit)
def test_zeta_partition_of_unity(v):
    n = UnitNormal.from_vector(v)
    for p in (P1, P2):
        z = zeta(n, p)
        assert abs(z.sum() - 1) <= 1e-14
        assert np.all((z >= 0) & (z <= 1))
        assert np.all(z[np.array(n.gamma) <= p.gamma0] == 0)
        assert max(n.gamma) >= 1 / math.sqrt(3) - 1e-15


@pytest.mark.parametrize("a, expected", [(1.0, 2.3), (2.0, 2.7)])
def test_max_beta_derivative(a, expected):
    assert max_beta_derivative(QuadParams.from_degrees(2.0, 70.0, a)) == pytest.approx(expected,
                                                                                       abs=0.1)


def test_max_beta_derivative_grows_with_a():
    with pytest.warns(UserWarning):
        p3 = QuadParams.from_degrees(2.0, 70.0, 3.0)
    vals = [max_beta_derivative(P1), max_beta_derivative(P2), max_beta_derivative(p3)]
    assert vals[0] <= vals[1] < vals[2]


def test_max_beta_derivative_beats_dense_sampling():
    nk = np.linspace(P1.gamma0, 1.0, 2_000_001)[1:]
    assert max_beta_derivative(P1) >= np.abs(beta_derivative(nk, P1)).max() - 1e-9
