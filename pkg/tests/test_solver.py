import math

import numpy as np
import pytest

from apinterval import errorterms as et
from apinterval import reference as ref
from apinterval import solver as sv
from apinterval.errors import DomainError, InfeasibleError, NoRootError


def test_input_validation():
    sv.SolverInput(5e4, 1.0, u=0.05, m=10, H=3.0)
    for bad in (dict(q0=4e4), dict(eps=0), dict(u=0.5), dict(u=1e-4), dict(m=2),
                dict(H=0.9), dict(slack=0), dict(slack=1)):
        kw = {"q0": 1e10, "eps": 1.0, **bad}
        with pytest.raises(DomainError):
            sv.SolverInput(**kw)


def test_tilde_alpha(golden):
    a = sv.tilde_alpha(62.5, 16, 1e10, 1.0)
    assert a == pytest.approx(golden["tilde_alpha_62.5_1e10_1"], rel=1e-12)
    assert a == pytest.approx(5.191, abs=1e-3)
    assert abs(a / 5.3418 - 1) < 0.03
    assert sv.tilde_alpha(62.5, 40, 1e10, 1.0) == a
    v = [sv.tilde_alpha(h, 16, 1e10, 1.0) for h in np.geomspace(1.5, 1e6, 40)]
    assert all(y > x for x, y in zip(v, v[1:]))
    with pytest.raises(DomainError):
        sv.tilde_alpha(1.0, 16, 1e10, 1.0)


def test_tilde_H(golden):
    h = sv.tilde_H(16, 1e10, 1.0, 0.057)
    assert h == pytest.approx(golden["tilde_H_16_1e10_1_0.057"], rel=1e-12)
    assert 62.5 / 2 < h < 62.5 * 2
    assert sv.tilde_H(11, 5e4, 10.0, 0.037) == pytest.approx(golden["tilde_H_11_5e4_10_0.037"], rel=1e-12)
    v = [sv.tilde_H(16, 1e10, 1.0, u) for u in sv.default_u_grid()]
    assert all(y < x for x, y in zip(v, v[1:]))
    with pytest.raises(DomainError):
        sv.tilde_H(1, 1e10, 1.0, 0.05)


def test_tilde_m(golden):
    m = sv.tilde_m(1e10, 1.0, 0.057)
    assert m == pytest.approx(golden["tilde_m_1e10_1_0.057"], rel=1e-12)
    assert math.ceil(m) == 16
    v = [sv.tilde_m(q, 1.0, 0.05) for q in sv.TABLE_Q0]
    assert all(y > x for x, y in zip(v, v[1:]))
    v = [sv.tilde_m(1e10, 1.0, u) for u in sv.default_u_grid()]
    assert all(y < x for x, y in zip(v, v[1:]))


@pytest.mark.parametrize("q0,eps,u,m,H", [(1e10, 1.0, 0.057, 16, 62.5), (5e4, 10.0, 0.037, 11, 4.4219)])
def test_solve_H_table_rows(q0, eps, u, m, H):
    seed = sv.tilde_alpha(sv.tilde_H(m, q0, eps, u), m, q0, eps)
    got = sv.solve_H(seed, u, m, q0, eps)
    assert got == pytest.approx(H, rel=0.05)
    assert sv.solve_H(seed, 2 * u, m, q0, eps) < got


def test_solve_H_no_root():
    with pytest.raises(NoRootError):
        sv.solve_H(5.0, 1e-300, 16, 1e10, 1.0)


def test_solve_alpha_contract():
    a, it = sv.solve_alpha(62.5, 16, 1e10, 1.0)
    assert a == pytest.approx(5.3418, rel=5e-3)
    r = sv.residual(a, 62.5, 16, 1e10, 1.0)
    assert 1e-6 <= r <= 1e-6 + 1e-9
    assert a < et.condalf_ceiling(1e10, 62.5)
    assert it > 0


def test_solve_alpha_operating_point():
    op = ref.OPERATING_POINT
    sol = sv.solve_fixed(op["q0"], op["eps"], op["m"], op["H"])
    assert sol.alpha == pytest.approx(op["alpha"], rel=5e-3)
    assert abs(sol.residual - 1e-6) <= 1e-9


def test_slack_near_one_pushes_alpha_up():
    a1, _ = sv.solve_alpha(62.5, 16, 1e10, 1.0, 1e-6)
    a2, _ = sv.solve_alpha(62.5, 16, 1e10, 1.0, 0.5)
    assert a2 > a1
    # alpha is a log-scale quantity; slack only shifts it by log(1-slack)
    with pytest.raises(InfeasibleError) as ei:
        sv.solve_alpha(62.5, 16, 1e10, 1.0, 1 - 1e-300)
    assert ei.value.stage == "Cond2"


def test_infeasible_small_H():
    with pytest.raises(InfeasibleError):
        sv.solve_alpha(1.0, 3, 5e4, 1e-4)


@pytest.mark.parametrize("cell", ref.SAMPLED_CELLS)
def test_table2_replay(cell):
    q0, eps, u, m, H, alpha = ref.table2_row(*cell)
    sol = sv.solve_fixed(q0, eps, m, H, u=u)
    assert sol.alpha == pytest.approx(alpha, rel=5e-3)


def test_sweep_cells():
    cells = sv.sweep_cells(1e10, 1.0)
    assert len(cells) == 40 * 7
    assert all(3 <= m <= 200 for _, m in cells)
    assert len(sv.default_u_grid()) == 40
    assert sv.default_u_grid()[0] == pytest.approx(0.001) and sv.default_u_grid()[-1] == pytest.approx(0.2)


def test_optimize_one_cell():
    sol = sv.optimize(1e10, 1.0)
    assert sol.alpha <= 5.3418 * 1.005
    assert sol.alpha >= 5.3418 * 0.995
    assert abs(sol.residual - 1e-6) <= 1e-9
    assert sol.alpha < et.condalf_ceiling(1e10, sol.H)
    again = sv.optimize(1e10, 1.0)
    assert again.row() == sol.row()


def test_optimize_infeasible_grid():
    with pytest.raises(InfeasibleError):
        sv.optimize(1e10, 1.0, u_grid=[1e-300])


def test_table_grid():
    g = sv.table_grid()
    assert len(g) == 120 and len(set(g)) == 120
    assert len(ref.TABLE2) == 120
    assert ref.table1_alpha(1e30, 1.0) == 4.4123
    assert ref.table1_alpha(1e60, 0.01) == 4.4308


def test_comparison_modes():
    with pytest.raises(DomainError):
        sv.mccurley_comparison(mode="R7")
    assert set(sv.COMPARISON_MODES) >= {"full", "R6.50", "R9.65"}
