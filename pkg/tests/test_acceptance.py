"""Acceptance gate: the eight primary criteria, with their stated
tolerances, draw counts, and runtime budgets."""

import json
import random
import time
from fractions import Fraction as F

import pytest

from qpsi import catalog, elliptic, identities
from qpsi.errors import PoleError
from qpsi.fps import FormalSeries, poch_fs, theta_fs, theta_sum_fs
from qpsi.qcore import INF, QContext, qpoch


def _assert_pass(report, tol=1e-8):
    assert report.status == "pass", (report.id, report.failures)
    assert report.max_rel_err <= tol, (report.id, report.max_rel_err)


def test_criterion_1_summation_oracles():
    start = time.monotonic()
    for ident in ("RAMANUJAN_1PSI1", "BAILEY_6PSI6"):
        _assert_pass(identities.verify(None, ident, seed=0, draws=20))
    assert time.monotonic() - start < 10


def test_criterion_2_mu_representations():
    start = time.monotonic()
    _assert_pass(identities.verify(None, "MU_EXPR_EQUIV", seed=0, draws=50))
    assert time.monotonic() - start < 60


def test_criterion_3_transformations():
    for ident in ("THM11_1", "THM11_2", "THM11_2_QBESSEL_FORM", "THM11_3",
                  "THM12", "TRANS_110", "TRANS_VARIATION"):
        _assert_pass(identities.verify(None, ident, seed=0, draws=20))


def test_criterion_4_slater_bailey_layer():
    for ident in ("SLATER_A2_1", "SLATER_A2_2", "SLATER_A2_3",
                  "BAILEY_VWP_A", "BAILEY_VWP_B",
                  "BAILEY_T0", "BAILEY_T1", "BAILEY_T2", "BAILEY_T3",
                  "INV_R", "SLATER_A_1", "SLATER_A_2", "SLATER_A_3",
                  "SLATER_BC_1", "SLATER_BC_2", "SLATER_BC_8PSI8"):
        _assert_pass(identities.verify(None, ident, seed=0, draws=20))


def test_criterion_5_hermite_and_recursion():
    _assert_pass(identities.verify(None, "MU_CQH", seed=0, draws=20),
                 tol=1e-9)
    _assert_pass(identities.verify(None, "MU_QBESSEL_REC", seed=0,
                                   draws=20))


def test_criterion_6_catalog_order_40():
    start = time.monotonic()
    reports = catalog.verify_all(40, half_power_order=20)
    assert len(reports) == 46
    for r in reports:
        # a mismatch may never pass silently: either the three printed
        # forms agree exactly, or the report localizes the first bad
        # exponent with both coefficients AND a single-edit variant that
        # restores exact agreement
        if r.status == "pass":
            assert r.findings == ()
        else:
            assert r.status == "pass_with_findings", (r.name, r.findings)
            assert r.findings, r.name
            for f in r.findings:
                assert f["exponent"] is not None
                assert f["left"] != f["right"]
            assert r.variant and r.variant["passes"], r.name
    assert time.monotonic() - start < 300


def test_criterion_7_elliptic():
    rng = random.Random("elliptic-acceptance")
    done = 0
    attempts = 0
    while done < 20:
        attempts += 1
        assert attempts < 400
        mod = rng.uniform(0.05, 0.4)
        arg = rng.uniform(-0.3, 0.3)
        ctx = QContext.from_q(mod * complex(1, arg) /
                              abs(complex(1, arg)))
        ec = elliptic.EllipticContext(ctx)
        u = rng.uniform(0.08, 0.42) + 1j * rng.uniform(-0.05, 0.05)
        v = rng.uniform(0.08, 0.42) + 1j * rng.uniform(-0.05, 0.05)
        if abs(u - v) < 0.05 or abs(u + v - round((u + v).real)) < 0.05:
            continue
        try:
            vals = [elliptic.wp_diff_oracle(ec, u, v),
                    elliptic.wp_diff_psi26(ec, u, v),
                    elliptic.wp_diff_bilateral(ec, u, v),
                    elliptic.wp_diff_split(ec, u, v),
                    elliptic.wp_diff_bailey(ec, u, v)]
            f1, f2, f3 = elliptic.jacobi_combo_forms(ec, u)
        except PoleError:
            continue
        done += 1
        scale = max(max(abs(x) for x in vals), 1e-30)
        for x in vals[1:]:
            assert abs(x - vals[0]) / scale < 1e-8
        cscale = max(abs(f2), 1e-30)
        assert abs(f1 - f2) / cscale < 1e-8
        assert abs(f3 - f2) / cscale < 1e-8

    ctx = QContext.from_q(0.2 + 0.05j)
    ec = elliptic.EllipticContext(ctx)
    u = 0.19 + 0.04j
    scale = max(abs(elliptic.m_func(ec, u)), 1.0)
    assert abs(elliptic.m_func(ec, u + 1)
               - elliptic.m_func(ec, u)) < 1e-8 * scale
    assert abs(elliptic.m_func(ec, u + ctx.tau)
               - elliptic.m_func(ec, u)) < 1e-8 * scale
    assert abs(elliptic.m_func(ec, -u)
               - elliptic.m_func(ec, u)) < 1e-8 * scale

    res = elliptic.resolve_curious_relation(ctx, seed=0, draws=10)
    assert res["passing"] == "x^4/q^2"


def test_criterion_8_infrastructure():
    # Jacobi triple product: exact formal identity to order 200
    N = F(200)
    assert theta_fs(F(1), F(1), N) == theta_sum_fs(F(1), F(1), N)
    # and numerically within tol
    ctx = QContext.from_q(0.15)
    from qpsi.qcore import theta_jtp
    approx = theta_fs(F(1), F(1), N).eval_at(ctx)
    exact = theta_jtp(ctx, ctx.q)
    assert abs(approx - exact) < ctx.tol

    # ring laws on randomized sparse series
    rng = random.Random("fps-acceptance")
    for _ in range(30):
        def draw():
            s = FormalSeries.zero(F(14))
            for _ in range(rng.randint(0, 5)):
                s = s + FormalSeries.monomial(
                    F(rng.randint(-5, 5), rng.randint(1, 3)),
                    F(rng.randint(-4, 10), rng.choice((1, 2))), F(14))
            return s
        a, b, c = draw(), draw(), draw()
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a + b) - b == a

    # suite determinism: byte-identical reports per seed
    ids = ["INV_R", "MU_SYMMETRY", "RAMANUJAN_1PSI1"]
    r1 = [r.to_json() for r in identities.run_suite(ids=ids, seed=5,
                                                    draws=5)]
    r2 = [r.to_json() for r in identities.run_suite(ids=ids, seed=5,
                                                    draws=5)]
    assert r1 == r2
