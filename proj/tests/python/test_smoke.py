"""Smoke tests for the python bindings."""

import math

import pytest

import bandlab as bl


def params(kind=bl.ModelKind.LimitedNoCrowd, beta=0.25, gamma0=20.0, tau=0.05):
    return bl.derive_params(tau, 0.25, 1.5, beta, gamma0, kind=kind)


def test_derived_constants():
    p = params(kind=bl.ModelKind.UnlimitedNoCrowd, gamma0=25.0)
    assert p.d == pytest.approx(2.0)
    assert p.gamma == pytest.approx(6.25)
    assert p.alpha == pytest.approx(0.0625)
    assert p.B == pytest.approx(0.09)
    assert p.lambda_plus == pytest.approx(0.1125)
    assert not bl.crowd_neutral(p)
    assert bl.crowd_neutral(params(kind=bl.ModelKind.UnlimitedCrowd))


def test_parameter_validation_raises():
    with pytest.raises(bl.BandlabError):
        bl.derive_params(-0.05, 0.25, 1.5, 0.25, 25.0)
    with pytest.raises(bl.BandlabError):
        bl.derive_params(0.05, 0.25, 1.5, 0.1, 25.0,
                         kind=bl.ModelKind.UnlimitedNoCrowd)


def test_closed_forms_and_umax():
    p = params(kind=bl.ModelKind.UnlimitedNoCrowd, beta=0.1625)
    prof = bl.eval_model1([0.0], p)
    assert prof.u[0] == pytest.approx(0.1488188486220187, abs=1e-12)
    assert prof.v[0] == pytest.approx(0.09921256574801247, abs=1e-12)
    m = bl.umax_model1(p)
    assert m.zeta_star == pytest.approx(2.0066213405432267, abs=1e-12)
    assert m.u_max == pytest.approx(0.28872738852517806, abs=1e-12)

    p3 = params(kind=bl.ModelKind.LimitedCrowd, gamma0=25.0)
    assert bl.asymptotics(bl.ModelKind.LimitedCrowd, p3).u_minus_inf == \
        pytest.approx(0.4)
    p4 = params()
    assert bl.asymptotics(bl.ModelKind.LimitedNoCrowd, p4).u_minus_inf == \
        pytest.approx(0.45)
    with pytest.raises(bl.BandlabError):
        bl.asymptotics(bl.ModelKind.UnlimitedCrowd, p4)


def test_kind_strings_round_trip():
    for kind in (bl.ModelKind.UnlimitedNoCrowd, bl.ModelKind.UnlimitedCrowd,
                 bl.ModelKind.LimitedCrowd, bl.ModelKind.LimitedNoCrowd):
        assert bl.kind_from_string(bl.kind_to_string(kind)) == kind


def test_residuals_on_closed_form():
    p = params()
    prof = bl.eval_model4(bl.linspace(-10.0, 10.0, 4001), p)
    norms = bl.ode_residual(prof, bl.ModelKind.LimitedNoCrowd, p)
    assert norms.worst() < 1e-6


def test_pde_short_run_tracks_the_band():
    p = params()
    g = bl.make_grid(-10.0, 10.0, 801)
    s0 = bl.init_state(g, bl.ModelKind.LimitedNoCrowd, p)
    cfg = bl.SolverConfig()
    cfg.dt = bl.cfl_dt(g, p)
    cfg.t_end = 0.02
    traj = bl.run(s0, bl.ModelKind.LimitedNoCrowd, p, cfg)
    assert traj[-1].t == pytest.approx(0.02, abs=1e-6)
    a = 2 * p.tau * p.c / p.mu
    worst = 0.0
    for i, u in enumerate(traj[-1].u):
        x = g.x_min + g.dx() * i
        if -8.0 < x < 8.0:
            exact = p.Q2 / (p.d + math.exp(a * (x - p.c * traj[-1].t)))
            worst = max(worst, abs(u - exact))
    assert worst < 1e-4


def test_kernel_step_interval():
    p = params()
    g = bl.make_grid(-10.0, 10.0, 401)
    s0 = bl.init_state(g, bl.ModelKind.LimitedNoCrowd, p)
    s1 = bl.kernel_step(s0, p, bl.KernelSpec(), bl.ModelKind.LimitedNoCrowd)
    assert s1.t == pytest.approx(p.tau)
    assert min(s1.u) >= -1e-12

    coarse = bl.make_grid(-10.0, 10.0, 81)
    with pytest.raises(bl.BandlabError):
        bl.kernel_step(bl.init_state(coarse, bl.ModelKind.LimitedNoCrowd, p),
                       p, bl.KernelSpec(), bl.ModelKind.LimitedNoCrowd)


def test_params_json_round_trip():
    p = params(kind=bl.ModelKind.LimitedCrowd, gamma0=25.0)
    text = bl.params_to_json(p, bl.ModelKind.LimitedCrowd)
    q, kind = bl.params_from_json(text)
    assert kind == bl.ModelKind.LimitedCrowd
    assert q.tau == p.tau and q.beta == p.beta and q.gamma0 == p.gamma0


def test_envelopes():
    pb = params(kind=bl.ModelKind.UnlimitedNoCrowd, gamma0=20.0)
    pc = params(kind=bl.ModelKind.UnlimitedCrowd, gamma0=25.0)
    base = bl.eval_model1(bl.linspace(-5.0, 5.0, 51), pb)
    bp = bl.bounds_model2(base, 0.5, pc)
    assert all(lo <= hi for lo, hi in zip(bp.u_minus, bp.u_plus))
    with pytest.raises(bl.BandlabError):
        bl.bounds_model2(base, 0.5, params(kind=bl.ModelKind.UnlimitedCrowd))
