import cmath
import math
import random

import pytest

from qpsi import elliptic as ell
from qpsi.errors import PoleError
from qpsi.qcore import INF, QContext, qpoch


@pytest.fixture
def ec(ctx):
    return ell.EllipticContext(ctx)


def test_period_product_formula(ec, ctx):
    from qpsi.qcore import q_power
    want = (math.pi / 2) * qpoch(ctx, ctx.q, INF) ** 2 \
        * qpoch(ctx, -q_power(ctx, 0.5), INF) ** 4
    assert abs(ec.K - want) < 1e-12 * abs(want)


def test_vartheta_derivative_vs_product(ctx):
    # vartheta11'(0) = -2 pi q^(1/8) (q)_inf^3
    from qpsi.qcore import q_power
    want = -2 * math.pi * q_power(ctx, 0.125) * qpoch(ctx, ctx.q, INF) ** 3
    got = ell.vartheta11_dz0(ctx)
    assert abs(got - want) / abs(want) < 1e-9


def test_oracle_basic_symmetries(ec):
    u, v = 0.21 + 0.03j, 0.34 - 0.02j
    assert abs(ell.wp_diff_oracle(ec, u, u)) < 1e-10
    assert abs(ell.wp_diff_oracle(ec, u, v)
               + ell.wp_diff_oracle(ec, v, u)) < 1e-9
    assert abs(ell.wp_diff_oracle(ec, u, -v)
               - ell.wp_diff_oracle(ec, u, v)) < 1e-9


def test_oracle_pole_detection(ec):
    with pytest.raises(PoleError):
        ell.wp_diff_oracle(ec, 0.0, 0.3)


def test_all_forms_agree(ec):
    u, v = 0.17 + 0.03j, 0.31 - 0.02j
    o = ell.wp_diff_oracle(ec, u, v)
    for val in (ell.wp_diff_psi26(ec, u, v),
                ell.wp_diff_bilateral(ec, u, v),
                ell.wp_diff_split(ec, u, v),
                ell.wp_diff_bailey(ec, u, v, "psi66"),
                ell.wp_diff_bailey(ec, u, v, "sum"),
                ell.wp_diff_bailey(ec, u, v, "partial")):
        assert abs(val - o) / abs(o) < 1e-8


def test_m_func_properties(ec, ctx):
    u, v = 0.19 + 0.04j, 0.33 - 0.01j
    o = ell.wp_diff_oracle(ec, u, v)
    m = ell.m_func(ec, u) - ell.m_func(ec, v)
    assert abs(m - o) / abs(o) < 1e-8
    scale = max(abs(ell.m_func(ec, u)), 1.0)
    assert abs(ell.m_func(ec, u + 1) - ell.m_func(ec, u)) < 1e-8 * scale
    assert abs(ell.m_func(ec, u + ctx.tau) - ell.m_func(ec, u)) \
        < 1e-8 * scale
    assert abs(ell.m_func(ec, -u) - ell.m_func(ec, u)) < 1e-8 * scale


def test_jacobi_combo_forms_and_oracle(ec):
    u = 0.23 + 0.05j
    f1, f2, f3 = ell.jacobi_combo_forms(ec, u)
    assert abs(f1 - f2) / abs(f2) < 1e-10
    assert abs(f3 - f2) / abs(f2) < 1e-10
    orc = ell.jacobi_combo_oracle(ec, u)
    assert abs(orc - f2) / abs(f2) < 1e-8


def test_curious_relation_resolution(ctx):
    res = ell.resolve_curious_relation(ctx, seed=3, draws=6)
    assert res["passing"] == "x^4/q^2"
    assert res["worst_error_passing"] < 1e-8
    assert res["worst_error_rejected"] > 1e-2
