import cmath

import pytest

from qpsi.errors import NonConvergence
from qpsi.qcore import INF, QContext, q_power, qpoch, theta_div
from qpsi.series import (adaptive_bilateral, convergence_check, eval_series,
                         eval_value, phi, psi, term)


def test_phi_geometric_series(ctx):
    # 1phi0(a; -; x) = (ax)_inf / (x)_inf
    a, x = 0.4 + 0.1j, 0.3 - 0.2j
    spec = phi([a], [], x)
    closed = qpoch(ctx, a * x, INF) / qpoch(ctx, x, INF)
    assert abs(eval_value(ctx, spec) - closed) < 1e-12


def test_term_index_zero_is_one(ctx):
    spec = psi([0.3], [0.7], 0.5)
    assert term(ctx, spec, 0) == 1


def test_bilateral_1psi1_closed_form(ctx):
    # (a;q)_n-weighted bilateral vs the classical product evaluation
    a, b, z = 2.1 + 0.3j, 0.08 + 0.02j, 0.4 + 0.1j
    q = ctx.q
    spec = psi([a], [b], z)
    assert convergence_check(ctx, spec) == "convergent"
    lhs = eval_value(ctx, spec)
    rhs = (qpoch(ctx, q, INF) * qpoch(ctx, b / a, INF)
           * qpoch(ctx, a * z, INF) * qpoch(ctx, q / (a * z), INF)) / (
        qpoch(ctx, b, INF) * qpoch(ctx, q / a, INF)
        * qpoch(ctx, z, INF) * qpoch(ctx, b / (a * z), INF))
    assert abs(lhs - rhs) / abs(rhs) < 1e-10


def test_bilateral_annulus_rejection(ctx):
    spec = psi([0.5], [0.3], 1.5)
    assert convergence_check(ctx, spec) == "divergent"
    with pytest.raises(NonConvergence):
        eval_series(ctx, spec)


def test_deep_negative_index_stability():
    # small |q| drives q^{-n} huge; the walker must not overflow
    ctx = QContext.from_q(0.05)
    spec = psi([1.7, 2.3], [0.1, 0.05], 0.3)
    report = eval_series(ctx, spec)
    assert report.converged
    assert report.n_min < -10


def test_adaptive_bilateral_theta(ctx):
    # sum x^n q^(n(n-1)/2) = theta_q(x)
    x = 0.8 + 0.3j

    def f(n):
        return x ** n * q_power(ctx, n * (n - 1) / 2)

    total = adaptive_bilateral(ctx, f)
    closed = (qpoch(ctx, ctx.q, INF) * qpoch(ctx, -x, INF)
              * qpoch(ctx, -ctx.q / x, INF))
    assert abs(total.value - closed) < 1e-11
    assert total.converged


def test_truncation_report_fields(ctx):
    spec = psi([2.0], [0.1], 0.3)
    report = eval_series(ctx, spec)
    assert report.n_min <= 0 <= report.n_max
    assert report.tail_estimate >= 0
