import cmath
import math

import pytest

from qpsi.qcore import (INF, QContext, pochhammer, q_power, qpoch, theta_div,
                        theta_jtp, theta_jtp_sum, vartheta11, vartheta11_sum)


def test_context_from_q_roundtrip(ctx):
    assert abs(ctx.q - (0.2 + 0.05j)) < 1e-14


def test_context_rejects_bad_inputs():
    with pytest.raises(ValueError):
        QContext(tau=0.3 - 0.1j)
    with pytest.raises(ValueError):
        QContext.from_q(1.2)


def test_q_power_homomorphism(ctx):
    for s, t in [(0.5, 0.25), (-1.125, 2.0), (3.5, -0.5)]:
        assert abs(q_power(ctx, s) * q_power(ctx, t)
                   - q_power(ctx, s + t)) < 1e-13


def test_pochhammer_finite_product(ctx):
    a = 0.3 + 0.2j
    direct = (1 - a) * (1 - a * ctx.q) * (1 - a * ctx.q ** 2)
    assert abs(qpoch(ctx, a, 3) - direct) < 1e-14


def test_pochhammer_negative_index(ctx):
    # (a;q)_{-n} (a q^{-n};q)_n = 1
    a = 0.7 + 0.1j
    for n in (1, 2, 5):
        prod = qpoch(ctx, a, -n) * qpoch(ctx, a * q_power(ctx, -n), n)
        assert abs(prod - 1) < 1e-12


def test_pochhammer_zero_argument(ctx):
    assert qpoch(ctx, 0, 7) == 1
    assert qpoch(ctx, 0, INF) == 1


def test_pochhammer_infinite_tail_bound(ctx):
    val = pochhammer(ctx, 0.4, INF)
    assert val.tail_bound < ctx.tol
    # splitting identity (a)_inf = (a)_n (a q^n)_inf
    a = 0.4
    split = qpoch(ctx, a, 6) * qpoch(ctx, a * q_power(ctx, 6), INF)
    assert abs(val.value - split) < 1e-13


def test_theta_jtp_matches_sum(ctx):
    for x in (0.7, -0.45 + 0.2j, 1.8j):
        assert abs(theta_jtp(ctx, x) - theta_jtp_sum(ctx, x)) < 1e-12


def test_theta_div_vs_jtp(ctx):
    # theta(y) (q)_inf = theta_q(-y)
    y = 0.6 + 0.1j
    lhs = theta_div(ctx, y) * qpoch(ctx, ctx.q, INF)
    assert abs(lhs - theta_jtp(ctx, -y)) < 1e-12


def test_vartheta11_matches_sum(ctx):
    for u in (0.17 + 0.03j, -0.4 + 0.1j):
        assert abs(vartheta11(ctx, u) - vartheta11_sum(ctx, u)) < 1e-12


def test_vartheta11_odd_and_periodic(ctx):
    u = 0.23 + 0.04j
    assert abs(vartheta11(ctx, -u) + vartheta11(ctx, u)) < 1e-12
    assert abs(vartheta11(ctx, u + 1) + vartheta11(ctx, u)) < 1e-12


def test_vartheta11_vanishes_at_origin(ctx):
    assert abs(vartheta11(ctx, 0)) < 1e-13
