"""Smoke tests for the jtongues python module."""

import math

import pytest

import jtongues as jt


def test_vector_field_and_reflect():
    assert jt.vector_field(jt.State(0.0, 0.0), jt.Params(0.0, 0.0, 1.0)) == pytest.approx(1.0)
    assert jt.vector_field(jt.State(math.pi, 0.0), jt.Params(1.0, 0.0, 1.0)) == pytest.approx(
        0.0, abs=1e-15
    )
    s = jt.reflect(jt.State(1.0, 2.0))
    assert (s.x, s.t) == (-1.0, -2.0)


def test_integration_and_variations():
    p = jt.Params(0.0, 0.0, 1.0)
    traj = jt.integrate(p, math.pi / 2, 0.0, 2 * math.pi)
    assert traj.x_end == pytest.approx(math.pi / 2, abs=1e-10)
    assert traj.x(math.pi) == pytest.approx(math.pi / 2, abs=1e-8)

    tv = jt.integrate_with_variations(jt.Params(1.5, 1.0, 0.5), 0.0, 0.0, math.pi)
    assert len(tv.u_a) == len(tv.t_grid)
    assert tv.u_a[-1] != 0.0


def test_rotation_numbers():
    r = jt.rotation_number(jt.Params(2.0, 0.0, 1.0))
    assert r.rho == pytest.approx(math.sqrt(3.0), abs=1e-6)
    assert r.map_class == jt.MapClass.Elliptic

    locked = jt.rotation_number(jt.Params(0.5, 0.5, 1.0))
    assert locked.rho == 0.0
    assert locked.map_class == jt.MapClass.Hyperbolic

    direct = jt.rotation_number(jt.Params(0.5, 0.5, 1.0), jt.RotationMethod.direct)
    assert abs(direct.rho) <= direct.error_bound


def test_mobius_fit():
    m = jt.fit_mobius(jt.Params(0.0, 0.0, 1.0))
    assert abs(m.det() - 1.0) < 1e-12
    assert m.fit_residual < 1e-8
    assert jt.classify(m) == jt.MapClass.Hyperbolic


def test_tongue_tracing():
    assert jt.initial_a(2, 1.0) == pytest.approx(math.sqrt(5.0))
    assert jt.validated_initial_a(1, jt.Side.zero, 1.0) == pytest.approx(
        math.sqrt(2.0), abs=1e-8
    )

    cfg = jt.TraceConfig()
    curve = jt.trace_boundary(1, jt.Side.zero, 1.0, 0.2, cfg)
    assert curve.complete
    assert curve.samples[0].b == 0.0
    assert curve.samples[0].a == pytest.approx(math.sqrt(2.0), abs=1e-8)
    assert all(s.residual < 1e-8 for s in curve.samples)

    with pytest.raises(ValueError):
        jt.half_period_value(jt.Params(0.0, 0.0, 1.0), 1.0)


def test_bessel():
    assert jt.bessel_j(0, 0.0).value == pytest.approx(1.0)
    assert jt.bessel_j(1, -3.0).value == pytest.approx(-jt.bessel_j(1, 3.0).value, abs=1e-12)
    side0 = jt.boundary_asymptote(1, 1.0, 10.0, jt.Side.zero)
    sidepi = jt.boundary_asymptote(1, 1.0, 10.0, jt.Side.pi)
    assert side0 + sidepi == pytest.approx(2.0)


def test_slow_curve():
    assert jt.classify_region(3.0, 1.0) == jt.Region.A
    assert jt.classify_region(1.0, 1.0) == jt.Region.B
    assert jt.classify_region(0.0, 2.0) == jt.Region.C

    sc = jt.slow_curve(1.0, 1.0)
    assert len(sc.components) == 1
    assert sc.components[0].contractible
    assert len(sc.folds) == 2

    sc = jt.slow_curve(0.0, 2.0)
    assert [c.contractible for c in sc.components] == [False, False]
    assert len(sc.folds) == 4
    assert len(jt.fold_points(3.0, 1.0)) == 0
