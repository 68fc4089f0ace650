"""Elliptic-function q-expansions through bilateral series.

Implements the Weierstrass difference p(u) - p(v) in four ways (a
2-psi-6 pair, an explicit bilateral sum, a split double sum, and the
classical very-well-poised 6-psi-6 specialization), the Jacobi
dn/(sn*cn) combination in three ways, and numeric oracles built purely
from vartheta11 quotients.  The Weierstrass sigma quotient

    p(u) - p(v) = -sigma(u+v) sigma(u-v) / (sigma(u)^2 sigma(v)^2)

reduces to vartheta11 ratios times vartheta11'(0)^2 because the
quadratic exponential factors cancel identically in this combination;
sigma itself is never constructed.  Jacobi sn/cn/dn are likewise never
constructed: the mu-function relation

    mu(u, u + 1/2) = -(1/2*pi*i) (2K / vartheta11(1/2)) dn/(sn*cn)

serves as the oracle for the combination, with the overall convention
sign fixed once by a calibration draw against the bilateral form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import PoleError
from .mu import MuPoint, mu
from .qcore import (INF, TWO_PI_I, QContext, q_power, qpoch, theta_div,
                    vartheta11)
from .series import adaptive_bilateral, eval_value, psi

FOUR_PI_SQ = 4.0 * math.pi * math.pi


def _theta2_null(ctx: QContext) -> complex:
    """Jacobi theta-2 null value with classical nome q^(1/2)."""
    total = 0j
    for n in range(0, 40):
        total += q_power(ctx, (n + 0.5) ** 2 / 2.0)
    return 2.0 * total


def _theta3_null(ctx: QContext) -> complex:
    total = 1.0 + 0j
    for n in range(1, 40):
        total += 2.0 * q_power(ctx, n * n / 2.0)
    return total


@dataclass(frozen=True)
class EllipticContext:
    """QContext plus the elliptic period K and modulus k.

    K is fixed by the product formula (pi/2)(q)_inf^2 (-q^(1/2))_inf^4;
    k is the classical theta-null quotient (theta2/theta3)^2 at nome
    q^(1/2).
    """

    ctx: QContext
    K: complex = field(init=False)
    k_mod: complex = field(init=False)

    def __post_init__(self):
        ctx = self.ctx
        half = q_power(ctx, 0.5)
        K = (math.pi / 2.0) * qpoch(ctx, ctx.q, INF) ** 2 \
            * qpoch(ctx, -half, INF) ** 4
        k = (_theta2_null(ctx) / _theta3_null(ctx)) ** 2
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "k_mod", k)


def vartheta11_dz0(ctx: QContext, step: float = 1e-5) -> complex:
    """vartheta11'(0) by central differences with Richardson halving."""
    def central(h):
        return (vartheta11(ctx, h) - vartheta11(ctx, -h)) / (2.0 * h)

    h = step
    table = [central(h)]
    best = table[0]
    for _ in range(12):
        h /= 2.0
        row = [central(h)]
        for k, prev in enumerate(table):
            row.append(row[k] + (row[k] - prev) / (4.0 ** (k + 1) - 1.0))
        new_best = row[-1]
        if abs(new_best - best) <= ctx.tol * max(abs(new_best), 1.0):
            return new_best
        best = new_best
        table = row
    return best


def _require_off_lattice(ctx: QContext, *thetas):
    for t in thetas:
        if abs(t) <= ctx.pole_eps:
            raise PoleError("argument too close to the theta lattice")


def wp_diff_oracle(ec: EllipticContext, u: complex, v: complex) -> complex:
    """p(u) - p(v) from the sigma quotient reduced to vartheta11 ratios."""
    ctx = ec.ctx
    tu, tv = vartheta11(ctx, u), vartheta11(ctx, v)
    _require_off_lattice(ctx, tu, tv)
    c = vartheta11_dz0(ctx)
    return -vartheta11(ctx, u + v) * vartheta11(ctx, u - v) * c * c \
        / (tu * tu * tv * tv)


def _psi26_half(ctx: QContext, u: complex, arg_power: int) -> complex:
    """One x-branch of the 2-psi-6 expansion (without the -4 pi^2)."""
    x = cmath.exp(TWO_PI_I * u)
    q = ctx.q
    if abs(q - x) <= ctx.pole_eps:
        raise PoleError("x = q pinches the (q+x)/(q-x) factor")
    head = (x / q) * (q + x) / (q - x) \
        * qpoch(ctx, q, INF) ** 2 / theta_div(ctx, x * x / (q * q))
    spec = psi([-x, x / q], [-x / q, x, 0, 0, 0, 0],
               x ** arg_power / (q * q))
    return head * eval_value(ctx, spec)


def wp_diff_psi26(ec: EllipticContext, u: complex, v: complex,
                  arg_power: int = 4) -> complex:
    """p(u) - p(v) as a difference of two 2-psi-6 terms.

    arg_power selects the bilateral argument x^arg_power / q^2; the two
    printed candidates are 4 and 2 and resolve_curious_relation records
    which one is consistent.
    """
    return -FOUR_PI_SQ * (_psi26_half(ec.ctx, u, arg_power)
                          - _psi26_half(ec.ctx, v, arg_power))


def wp_diff_bilateral(ec: EllipticContext, u: complex, v: complex) -> complex:
    """p(u) - p(v) as the single bilateral (1+xq^n)/(1-xq^n) sum."""
    ctx = ec.ctx
    x = cmath.exp(TWO_PI_I * u)
    y = cmath.exp(TWO_PI_I * v)
    tx, ty = theta_div(ctx, x * x), theta_div(ctx, y * y)
    _require_off_lattice(ctx, tx, ty)

    def term(n):
        qn = q_power(ctx, n)
        gauss = q_power(ctx, 2 * n * n)
        dx, dy = 1.0 - x * qn, 1.0 - y * qn
        if abs(dx) <= ctx.pole_eps or abs(dy) <= ctx.pole_eps:
            raise PoleError("bilateral summand pole at finite n")
        return ((1.0 + x * qn) / dx * x ** (4 * n + 1) * gauss / tx
                - (1.0 + y * qn) / dy * y ** (4 * n + 1) * gauss / ty)

    return -FOUR_PI_SQ * qpoch(ctx, ctx.q, INF) ** 2 \
        * adaptive_bilateral(ctx, term).value


def _split_half(ctx: QContext, u: complex) -> complex:
    x = cmath.exp(TWO_PI_I * u)
    tx = theta_div(ctx, x * x)
    _require_off_lattice(ctx, tx)

    def term(n):
        qn = q_power(ctx, n)
        gauss = q_power(ctx, 2 * n * n)
        d1, d2 = 1.0 - x * qn, 1.0 - qn / x
        if abs(d1) <= ctx.pole_eps or abs(d2) <= ctx.pole_eps:
            raise PoleError("split summand pole at finite n")
        return gauss * (x ** (4 * n) / (d1 * d1) - x ** (-4 * n) / (d2 * d2))

    return x * qpoch(ctx, ctx.q, INF) ** 2 / tx \
        * adaptive_bilateral(ctx, term).value


def wp_diff_split(ec: EllipticContext, u: complex, v: complex) -> complex:
    """p(u) - p(v) as the regrouped double sum over squared poles."""
    return -FOUR_PI_SQ * (_split_half(ec.ctx, u) - _split_half(ec.ctx, v))


def _bailey_psi66(ctx: QContext, u: complex, v: complex) -> complex:
    """The very-well-poised 6-psi-6 combination (without the -4 pi^2)."""
    x = cmath.exp(TWO_PI_I * u)
    y = cmath.exp(TWO_PI_I * v)
    q = ctx.q
    rxy = cmath.exp(1j * math.pi * (u + v))  # branch-fixed sqrt(xy)
    dx, dy = 1.0 - x, 1.0 - y
    if abs(dx) <= ctx.pole_eps or abs(dy) <= ctx.pole_eps:
        raise PoleError("x or y too close to 1")
    head = (1.0 - x * y) * (x - y) / (dx * dx * dy * dy)
    spec = psi([q * rxy, -q * rxy, x, x, y, y],
               [rxy, -rxy, q * y, q * y, q * x, q * x], q)
    return head * eval_value(ctx, spec)


def wp_diff_bailey(ec: EllipticContext, u: complex, v: complex,
                   form: str = "psi66") -> complex:
    """p(u) - p(v) via the classical specialized summation.

    form: "psi66" (very-well-poised series), "sum" (the explicit
    (x-y)(1-xy q^(2n)) summand), or "partial" (the partial-fraction
    regrouping).
    """
    ctx = ec.ctx
    x = cmath.exp(TWO_PI_I * u)
    y = cmath.exp(TWO_PI_I * v)
    if form == "psi66":
        return -FOUR_PI_SQ * _bailey_psi66(ctx, u, v)
    if form == "sum":
        def term(n):
            qn = q_power(ctx, n)
            dx, dy = 1.0 - x * qn, 1.0 - y * qn
            if abs(dx) <= ctx.pole_eps or abs(dy) <= ctx.pole_eps:
                raise PoleError("summand pole at finite n")
            return (x - y) * (1.0 - x * y * qn * qn) * qn \
                / (dx * dx * dy * dy)
        return -FOUR_PI_SQ * adaptive_bilateral(ctx, term).value
    if form == "partial":
        def term(n):
            qn = q_power(ctx, n)
            dx, dy = 1.0 - x * qn, 1.0 - y * qn
            if abs(dx) <= ctx.pole_eps or abs(dy) <= ctx.pole_eps:
                raise PoleError("summand pole at finite n")
            return x * qn / (dx * dx) - y * qn / (dy * dy)
        return -FOUR_PI_SQ * adaptive_bilateral(ctx, term).value
    raise ValueError(f"unknown form {form!r}")


def m_func(ec: EllipticContext, u: complex) -> complex:
    """M(u) = 4 pi^2 i q^(1/8) (q)_inf^3 mu(u, u); p(u) - p(v) equals
    M(u) - M(v), and M is doubly periodic and even."""
    ctx = ec.ctx
    value = complex(mu(MuPoint(u, u, 1.0, ctx)))
    return FOUR_PI_SQ * 1j * q_power(ctx, 0.125) \
        * qpoch(ctx, ctx.q, INF) ** 3 * value


_COMBO_SIGN: dict = {}


def _combo_sign(ec: EllipticContext) -> float:
    """Convention sign of the dn/(sn*cn) oracle, fixed by one draw.

    The external relation defining the oracle leaves an overall sign
    depending on the square-root conventions for k and K; calibrate it
    once against the bilateral form at a fixed generic point, then hold
    it for every subsequent evaluation.
    """
    key = (ec.ctx.tau, ec.ctx.tol)
    if key not in _COMBO_SIGN:
        u0 = 0.131 + 0.067j
        raw = -complex(mu(MuPoint(u0, u0 + 0.5, 1.0, ec.ctx)))
        ref = _combo_bilateral(ec.ctx, u0)
        _COMBO_SIGN[key] = 1.0 if abs(raw - ref) <= abs(-raw - ref) else -1.0
    return _COMBO_SIGN[key]


def jacobi_combo_oracle(ec: EllipticContext, u: complex) -> complex:
    """(1/2*pi*i)(2K/vartheta11(1/2)) dn/(sn*cn) at 2Ku, via mu(u, u+1/2)."""
    return _combo_sign(ec) * -complex(mu(MuPoint(u, u + 0.5, 1.0, ec.ctx)))


def _combo_head(ctx: QContext, u: complex) -> complex:
    x = cmath.exp(TWO_PI_I * u)
    t = theta_div(ctx, -x * x)
    _require_off_lattice(ctx, t)
    return q_power(ctx, -0.125) * x / (qpoch(ctx, ctx.q, INF) * t)


def _combo_psi48(ctx: QContext, u: complex) -> complex:
    # The leading sign is fixed by consistency with the bilateral and
    # split companions: shifting the summation index by one and using
    # theta(-x^2) = q^3 x^-4 theta(-x^2/q^2) turns this form into
    # exactly the bilateral one, which pins the sign as +.
    x = cmath.exp(TWO_PI_I * u)
    q = ctx.q
    if abs(q * q - x * x) <= ctx.pole_eps:
        raise PoleError("x^2 = q^2 pinches the head factor")
    head = q_power(ctx, -1.125) * (q * q + x * x) / (q * q - x * x) \
        * x / (qpoch(ctx, q, INF) * theta_div(ctx, -x * x / (q * q)))
    spec = psi([1j * x, -1j * x, x / q, -x / q],
               [1j * x / q, -1j * x / q, x, -x, 0, 0, 0, 0],
               x ** 4 / (q * q))
    return head * eval_value(ctx, spec)


def _combo_bilateral(ctx: QContext, u: complex) -> complex:
    x = cmath.exp(TWO_PI_I * u)

    def term(n):
        q2n = q_power(ctx, 2 * n)
        d = 1.0 - x * x * q2n
        if abs(d) <= ctx.pole_eps:
            raise PoleError("bilateral summand pole at finite n")
        return (1.0 + x * x * q2n) / d * x ** (4 * n) \
            * q_power(ctx, 2 * n * n)

    return _combo_head(ctx, u) * adaptive_bilateral(ctx, term).value


def _combo_split(ctx: QContext, u: complex) -> complex:
    x = cmath.exp(TWO_PI_I * u)

    def term(n):
        q2n = q_power(ctx, 2 * n)
        d1 = 1.0 - x * x * q2n
        d2 = 1.0 - q2n / (x * x)
        if abs(d1) <= ctx.pole_eps or abs(d2) <= ctx.pole_eps:
            raise PoleError("split summand pole at finite n")
        gauss = q_power(ctx, 2 * n * n)
        return gauss * (x ** (4 * n) / d1 - x ** (-4 * n) / d2)

    return _combo_head(ctx, u) * adaptive_bilateral(ctx, term).value


def jacobi_combo_forms(ec: EllipticContext, u: complex):
    """The 4-psi-8, bilateral, and split forms of the combination."""
    ctx = ec.ctx
    return (_combo_psi48(ctx, u), _combo_bilateral(ctx, u),
            _combo_split(ctx, u))


def resolve_curious_relation(ctx: QContext, seed: int = 0,
                             draws: int = 10, tol: float = 1e-8) -> dict:
    """Decide the bilateral argument of the 2-psi-6 expansion empirically.

    The two printed candidates are x^4/q^2 and x^2/q^2.  For each, the
    6-psi-6 combination is compared against the difference of 2-psi-6
    terms at random points; exactly one candidate must pass every draw.
    """
    import random
    rng = random.Random(f"curious:{seed}")
    ec = EllipticContext(ctx)
    passes = {4: True, 2: True}
    worst = {4: 0.0, 2: 0.0}
    done = 0
    attempts = 0
    while done < draws:
        attempts += 1
        if attempts > 100 * draws:
            raise RuntimeError("could not draw enough admissible points")
        u = rng.uniform(0.08, 0.42) + 1j * rng.uniform(-0.04, 0.04)
        v = rng.uniform(0.08, 0.42) + 1j * rng.uniform(-0.04, 0.04)
        if abs(u - v) < 0.05 or abs(u + v - round((u + v).real)) < 0.05:
            continue
        try:
            lhs = _bailey_psi66(ctx, u, v)
            vals = {p: _psi26_half(ctx, u, p) - _psi26_half(ctx, v, p)
                    for p in (4, 2)}
        except PoleError:
            continue
        done += 1
        for p in (4, 2):
            err = abs(lhs - vals[p]) / max(abs(lhs), abs(vals[p]), 1e-30)
            worst[p] = max(worst[p], err)
            if err > tol:
                passes[p] = False
    winners = [p for p in (4, 2) if passes[p]]
    if len(winners) != 1:
        raise AssertionError(
            f"expected exactly one passing argument variant, got {winners}")
    return {
        "passing": f"x^{winners[0]}/q^2",
        "rejected": f"x^{2 if winners[0] == 4 else 4}/q^2",
        "draws": done,
        "worst_error_passing": worst[winners[0]],
        "worst_error_rejected": worst[2 if winners[0] == 4 else 4],
    }
