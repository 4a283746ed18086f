import math

import pytest

fbcd = pytest.importorskip("fbcdlab")


def test_semiwave_speed_bracket():
    sw = fbcd.solve_semiwave(fbcd.SemiWaveParams(mu=1, a=1, b=1, d=1))
    assert 0 < sw.c < 2
    assert sw.q[0] == 0
    assert abs(sw.q[-1] - 1) < 1e-5


def test_formulas():
    p = fbcd.Params()
    thr = fbcd.thresholds(p)
    assert thr.s1_star == pytest.approx(math.pi / 2)
    assert fbcd.coexistence_limits(0.5, 0.5) == pytest.approx((2 / 3, 2 / 3))
    bounds = fbcd.iteration_bounds(0.5, 0.5, 60)
    assert bounds.converged
    assert fbcd.eigen_length(1, 1, 1, -0.5) == pytest.approx(2 * math.pi)


def test_short_run_and_classify():
    p = fbcd.Params()
    p.k = p.h = 0.5
    init = fbcd.InitialData()
    init.s1_0 = init.s2_0 = 2.0
    init.u0 = fbcd.cosine_profile(0.5, 256)
    init.v0 = fbcd.cosine_profile(0.5, 256)
    grid = fbcd.GridSpec()
    grid.n_xi = 64
    grid.dt = 1e-3
    grid.t_end = 2.0
    traj = fbcd.run(p, init, grid)
    assert traj.t[-1] == pytest.approx(2.0)
    assert all(b >= a for a, b in zip(traj.s1, traj.s1[1:]))
    out = fbcd.classify(traj, fbcd.thresholds(p))
    assert out.species1.label in (fbcd.Label.Spreading, fbcd.Label.Indeterminate)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(Exception):
        fbcd.SemiWaveParams(mu=-1, a=1, b=1, d=1)
    with pytest.raises(Exception):
        fbcd.coexistence_limits(1.0, 1.0)


def test_presets_round_trip():
    names = fbcd.preset_names()
    assert "thm3-coexist" in names
    cfg = fbcd.preset_config("thm3-coexist")
    assert '"params"' in cfg
