"""Registry of randomized numeric identity checks.

Every entry pins one transformation or summation formula from the
bilateral basic hypergeometric layer (Slater and Bailey transformations,
the classical summations, the mu-function representation/translation
formulas).  Checks draw parameters from documented annuli with a 0.1
log-modulus safety margin, evaluate both sides, and report the maximum
relative error; draws that hit a pole or leave a convergence region are
rejected and resampled, bounded at 100x the requested draw count.

Where the standard printed form of a formula contains a known
transcription defect, the registry carries the corrected variant that
passes numeric verification; the corrections are noted on the
descriptors' ``reference`` strings.
"""

from __future__ import annotations

import cmath
import json
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .errors import QpsiError, UnknownIdentity
from .mu import (
    MuPoint,
    MuRepresentation,
    cont_q_hermite,
    j_func,
    mu,
    mu_def,
    mu_psi02,
    mu_psi12,
    mu_psi22,
    mu_psi48,
    phi_factor,
)
from .qcore import INF, QContext, pochhammer_multi, q_power, qpoch, theta_div, vartheta11
from .series import CONVERGENT, adaptive_bilateral, convergence_check, eval_value, phi, psi

REL_FLOOR = 1e-30
MARGIN = 0.1  # log-modulus safety margin for annulus sampling
THETA_GUARD = 1e-6  # reject draws whose theta denominators fall below this


class _Reject(Exception):
    """Draw left the admissible domain; resample."""


def rel_err(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), REL_FLOOR)


# ---------------------------------------------------------------------------
# samplers

def _modulus(rng, lo, hi):
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def _cx(rng, lo, hi):
    return cmath.rect(_modulus(rng, lo, hi), rng.uniform(0.0, 2 * math.pi))


def _draw_ctx(rng, q_max, tol, max_terms):
    m = _modulus(rng, 0.05, q_max)
    ph = rng.uniform(-0.45 * math.pi, 0.45 * math.pi)
    return QContext.from_q(cmath.rect(m, ph), tol=tol, max_terms=max_terms)


def _annulus_arg(rng, bound):
    """Draw |x| log-uniformly inside (bound, 1) shrunk by MARGIN each side."""
    lo = math.log(max(bound, 1e-280)) + MARGIN
    hi = -MARGIN
    if lo >= hi:
        raise _Reject("empty sampling annulus")
    return cmath.rect(math.exp(rng.uniform(lo, hi)), rng.uniform(0.0, 2 * math.pi))


def _uv(rng):
    return complex(rng.uniform(0.06, 0.44), rng.uniform(-0.08, 0.08))


def _alpha(rng, lo=-1.2, hi=1.2):
    return complex(rng.uniform(lo, hi), rng.uniform(-0.25, 0.25))


def _theta(ctx, t):
    val = theta_div(ctx, t)
    if abs(val) < THETA_GUARD:
        raise _Reject("theta factor too close to zero")
    return val


def _poch(ctx, *xs):
    return pochhammer_multi(ctx, xs, INF)


def _prod(vals):
    out = 1.0 + 0j
    for v in vals:
        out *= v
    return out


def _convergent(ctx, spec):
    if convergence_check(ctx, spec) != CONVERGENT:
        raise _Reject("series outside convergence region")
    return spec


def _mu_val(ctx, u, v, alpha):
    return mu(MuPoint(u=u, v=v, alpha=alpha, ctx=ctx)).value


def _cpl(z):
    z = complex(z)
    return [z.real, z.imag]


# ---------------------------------------------------------------------------
# individual checks; each returns (lhs, rhs, params)

def _chk_inv(ctx, rng):
    q = ctx.q
    r = rng.randint(1, 3)
    a = [_cx(rng, 1.1, 2.0) for _ in range(r)]
    b = [_cx(rng, 0.03, 0.12) for _ in range(r)]
    x = _annulus_arg(rng, abs(_prod(b) / _prod(a)))
    lhs = eval_value(ctx, _convergent(ctx, psi(a, b, x)))
    inv = psi([q / t for t in b], [q / t for t in a], _prod(b) / (_prod(a) * x))
    rhs = eval_value(ctx, _convergent(ctx, inv))
    return lhs, rhs, {"q": _cpl(q), "a": [_cpl(t) for t in a],
                      "b": [_cpl(t) for t in b], "x": _cpl(x)}


def _chk_slater_a(ctx, rng, r):
    # r-term A-type transformation; the m-th term carries the full product
    # prod_j (c_m/a_j, b_j q/c_m)_inf (the common printed form drops the
    # j = m factor (b_m q/c_m)_inf, which fails numerically).
    q = ctx.q
    a = [_cx(rng, 0.9, 1.8) for _ in range(r)]
    b = [_cx(rng, 0.02, 0.1) for _ in range(r)]
    c = [_cx(rng, 0.7, 1.5) for _ in range(r)]
    x = _annulus_arg(rng, abs(_prod(b) / _prod(a)))
    d = _prod(a) / _prod(c)
    lhs = _theta(ctx, d * x * q)
    for j in range(r):
        lhs *= _poch(ctx, b[j], q / a[j]) / _theta(ctx, c[j])
    lhs *= eval_value(ctx, _convergent(ctx, psi(a, b, x)))
    rhs = 0.0 + 0j
    for m in range(r):
        cm = c[m]
        t = _theta(ctx, cm * d * x) / _theta(ctx, cm)
        t *= _poch(ctx, *[cm / aj for aj in a], *[bj * q / cm for bj in b])
        for j in range(r):
            if j != m:
                t *= 1 / _theta(ctx, cm / c[j])
        t *= eval_value(ctx, _convergent(
            ctx, psi([aj * q / cm for aj in a], [bj * q / cm for bj in b], x)))
        rhs += t
    return lhs, rhs, {"q": _cpl(q), "a": [_cpl(t) for t in a],
                      "b": [_cpl(t) for t in b], "c": [_cpl(t) for t in c],
                      "x": _cpl(x)}


def _slater_a2_coeff(ctx, a1, a2, b1, b2, c1, c2, x, cm, co):
    q = ctx.q
    t = (q / cm) * _theta(ctx, a1 * a2 * x / (q * co)) * _theta(ctx, co)
    t /= _theta(ctx, a1 * a2 * x / (c1 * c2)) * _theta(ctx, cm / co)
    # full product including (q b_j / c_m)_inf for both j (see _chk_slater_a)
    t *= _poch(ctx, cm / a1, cm / a2, q * b1 / cm, q * b2 / cm)
    t /= _poch(ctx, q / a1, q / a2, b1, b2)
    return t


def _draw_a2(ctx, rng):
    a1, a2 = _cx(rng, 0.9, 1.8), _cx(rng, 0.9, 1.8)
    b1, b2 = _cx(rng, 0.02, 0.1), _cx(rng, 0.02, 0.1)
    c1, c2 = _cx(rng, 0.7, 1.5), _cx(rng, 0.7, 1.5)
    x = _annulus_arg(rng, abs(b1 * b2 / (a1 * a2)))
    return a1, a2, b1, b2, c1, c2, x


def _chk_slater_a2(ctx, rng, invert_first, invert_second):
    q = ctx.q
    a1, a2, b1, b2, c1, c2, x = _draw_a2(ctx, rng)
    lhs = eval_value(ctx, _convergent(ctx, psi([a1, a2], [b1, b2], x)))

    def tail(cm, inverted):
        if inverted:
            spec = psi([cm / b1, cm / b2], [cm / a1, cm / a2],
                       b1 * b2 / (a1 * a2 * x))
        else:
            spec = psi([q * a1 / cm, q * a2 / cm], [q * b1 / cm, q * b2 / cm], x)
        return eval_value(ctx, _convergent(ctx, spec))

    rhs = (_slater_a2_coeff(ctx, a1, a2, b1, b2, c1, c2, x, c1, c2)
           * tail(c1, invert_first)
           + _slater_a2_coeff(ctx, a1, a2, b1, b2, c1, c2, x, c2, c1)
           * tail(c2, invert_second))
    return lhs, rhs, {"q": _cpl(q), "a": [_cpl(a1), _cpl(a2)],
                      "b": [_cpl(b1), _cpl(b2)], "c": [_cpl(c1), _cpl(c2)],
                      "x": _cpl(x)}


def _chk_slater_bc(ctx, rng, r):
    # BC-type r-term transformation with argument a^{r+1} q^r / prod(b):
    # the exponents follow the verified r = 2 display and degenerate to the
    # 6psi6 summation pattern at r = 1 (a^{r-1} q^{r-2} fails numerically).
    q = ctx.q
    a = _cx(rng, 0.8, 1.3)
    am = [_cx(rng, 0.9, 1.4) for _ in range(r)]
    bs = [_cx(rng, 1.8, 3.0) for _ in range(2 * r + 2)]
    arg = a ** (r + 1) * q ** r / _prod(bs)
    if abs(arg) > math.exp(-MARGIN):
        raise _Reject("BC argument too close to the unit circle")
    ra = cmath.sqrt(a)
    lhs = (1 - a) / _theta(ctx, a)
    lhs *= _poch(ctx, *[t for b in bs for t in (q / b, a * q / b)])
    for ak in am:
        lhs /= _theta(ctx, ak) * _theta(ctx, ak / a)
    lhs *= eval_value(ctx, _convergent(ctx, psi(
        [ra * q, -ra * q] + bs, [ra, -ra] + [a * q / b for b in bs], arg)))
    rhs = 0.0 + 0j
    for m in range(r):
        ak = am[m]
        t = (1 - ak ** 2 / a) / (_theta(ctx, ak) * _theta(ctx, ak / a)
                                 * _theta(ctx, ak ** 2 / a))
        t *= _poch(ctx, *[u for b in bs for u in (ak * q / b, a * q / (ak * b))])
        for k in range(r):
            if k != m:
                t /= _theta(ctx, am[k] / ak) * _theta(ctx, am[k] * ak / a)
        t *= eval_value(ctx, _convergent(ctx, psi(
            [ak * q / ra, -ak * q / ra] + [ak * b / a for b in bs],
            [ak / ra, -ak / ra] + [ak * q / b for b in bs], arg)))
        rhs += t
    return lhs, rhs, {"q": _cpl(q), "a": _cpl(a), "a_m": [_cpl(t) for t in am],
                      "b": [_cpl(t) for t in bs]}


def _chk_ramanujan(ctx, rng):
    q = ctx.q
    a = _cx(rng, 0.8, 1.6)
    b = _cx(rng, 0.03, 0.12)
    x = _annulus_arg(rng, abs(b / a))
    lhs = eval_value(ctx, _convergent(ctx, psi([a], [b], x)))
    rhs = (_poch(ctx, a * x, q / (a * x), q, b / a)
           / _poch(ctx, x, b / (a * x), b, q / a))
    return lhs, rhs, {"q": _cpl(q), "a": _cpl(a), "b": _cpl(b), "x": _cpl(x)}


def _chk_bailey_6psi6(ctx, rng):
    q = ctx.q
    a = _cx(rng, 0.8, 1.3)
    bs = [_cx(rng, 1.7, 2.9) for _ in range(4)]
    arg = q * a ** 2 / _prod(bs)
    if abs(arg) > math.exp(-MARGIN):
        raise _Reject("summation argument too close to the unit circle")
    ra = cmath.sqrt(a)
    lhs = eval_value(ctx, _convergent(ctx, psi(
        [ra * q, -ra * q] + bs, [ra, -ra] + [a * q / t for t in bs], arg)))
    b, c, d, e = bs
    rhs = _poch(ctx, a * q, a * q / (b * c), a * q / (b * d), a * q / (b * e),
                a * q / (c * d), a * q / (c * e), a * q / (d * e), q, q / a)
    rhs /= _poch(ctx, a * q / b, a * q / c, a * q / d, a * q / e,
                 q / b, q / c, q / d, q / e, arg)
    return lhs, rhs, {"q": _cpl(q), "a": _cpl(a), "b": [_cpl(t) for t in bs]}


def _chk_vwp_a(ctx, rng):
    q = ctx.q
    a = _cx(rng, 0.9, 1.4)
    c, d, e, f = (_cx(rng, 1.6, 2.8) for _ in range(4))
    lhs = eval_value(ctx, _convergent(
        ctx, psi([e, f], [a * q / c, a * q / d], a * q / (e * f))))
    ra = cmath.sqrt(a)
    rhs = _poch(ctx, q / c, q / d, a * q / e, a * q / f)
    rhs /= _poch(ctx, a * q, q / a, a * q / (c * d), a * q / (e * f))
    rhs *= eval_value(ctx, _convergent(ctx, psi(
        [ra * q, -ra * q, c, d, e, f],
        [ra, -ra, a * q / c, a * q / d, a * q / e, a * q / f, 0, 0],
        a ** 3 * q ** 2 / (c * d * e * f))))
    return lhs, rhs, {"q": _cpl(q), "a": _cpl(a), "c": _cpl(c), "d": _cpl(d),
                      "e": _cpl(e), "f": _cpl(f)}


def _vwp_b_rhs(ctx, a, b, c, d, x):
    q = ctx.q
    abx = a * b * x
    r1, r2 = cmath.sqrt(q * abx), cmath.sqrt(abx / q)
    coeff = _poch(ctx, a * x, b * x, q * c / abx, q * d / abx)
    coeff /= _poch(ctx, x, abx, q * q / abx, c * d / abx)
    series = eval_value(ctx, _convergent(ctx, psi(
        [r1, -r1, abx / c, abx / d, a, b],
        [r2, -r2, c, d, b * x, a * x, 0, 0], c * d * x / q)))
    return coeff * series


def _chk_vwp_b(ctx, rng):
    q = ctx.q
    a, b = _cx(rng, 0.9, 1.6), _cx(rng, 0.9, 1.6)
    c, d = _cx(rng, 0.03, 0.1), _cx(rng, 0.03, 0.1)
    x = _annulus_arg(rng, abs(c * d / (a * b)))
    lhs = eval_value(ctx, _convergent(ctx, psi([a, b], [c, d], x)))
    rhs = _vwp_b_rhs(ctx, a, b, c, d, x)
    return lhs, rhs, {"q": _cpl(q), "a": _cpl(a), "b": _cpl(b), "c": _cpl(c),
                      "d": _cpl(d), "x": _cpl(x)}


def _chk_bailey_t(ctx, rng, variant):
    q = ctx.q
    a, b = _cx(rng, 0.9, 1.6), _cx(rng, 0.9, 1.6)
    c, d = _cx(rng, 0.03, 0.1), _cx(rng, 0.03, 0.1)
    x = _annulus_arg(rng, abs(c * d / (a * b)))
    abx = a * b * x
    lhs = eval_value(ctx, _convergent(ctx, psi([a, b], [c, d], x)))
    if variant == 0:
        coeff = _poch(ctx, a * x, c / a, d / b, q * c / abx) / _poch(
            ctx, x, c, q / b, c * d / abx)
        spec = psi([a, abx / c], [a * x, d], c / a)
    elif variant == 1:
        coeff = _poch(ctx, b * x, d / b, c / a, q * d / abx) / _poch(
            ctx, x, d, q / a, c * d / abx)
        spec = psi([b, abx / d], [b * x, c], d / b)
    elif variant == 2:
        coeff = _poch(ctx, a * x, d / a, c / b, q * d / abx) / _poch(
            ctx, x, d, q / b, c * d / abx)
        spec = psi([a, abx / d], [a * x, c], d / a)
    else:
        coeff = _poch(ctx, b * x, c / b, d / a, q * c / abx) / _poch(
            ctx, x, c, q / a, c * d / abx)
        spec = psi([b, abx / c], [b * x, d], c / b)
    rhs = coeff * eval_value(ctx, _convergent(ctx, spec))
    return lhs, rhs, {"q": _cpl(q), "a": _cpl(a), "b": _cpl(b), "c": _cpl(c),
                      "d": _cpl(d), "x": _cpl(x), "variant": variant}


def _chk_mu_expr_equiv(ctx, rng):
    u, v, alpha = _uv(rng), _uv(rng), _alpha(rng)
    if abs(q_power(ctx, alpha)) > math.exp(-MARGIN):
        raise _Reject("|q^alpha| too close to 1 for the 2psi2 form")
    p = MuPoint(u=u, v=v, alpha=alpha, ctx=ctx)
    vals = [mu_def(p).value, mu_psi12(p).value, mu_psi22(p).value,
            mu_psi02(p).value, mu_psi48(p).value]
    worst = (0.0, vals[0], vals[0])
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            e = rel_err(vals[i], vals[j])
            if e > worst[0]:
                worst = (e, vals[i], vals[j])
    return worst[1], worst[2], {"q": _cpl(ctx.q), "u": _cpl(u), "v": _cpl(v),
                                "alpha": _cpl(alpha)}


def _draw_mu_point(ctx, rng):
    u, v = _uv(rng), _uv(rng)
    if abs(u - v) < 0.05:
        raise _Reject("u too close to v")
    alpha = _alpha(rng)
    return MuPoint(u=u, v=v, alpha=alpha, ctx=ctx)


def _chk_thm11_1(ctx, rng):
    # Two-term connection formula with free parameters x', y'.  The second
    # coefficient uses theta(y y') theta(x y'/a) as forced by the A-type
    # transformation (the naive x <-> y symmetrization of the first
    # coefficient fails numerically).
    q = ctx.q
    p = _draw_mu_point(ctx, rng)
    x, y, a = p.x, p.y, p.a
    xp, yp = _cx(rng, 0.5, 1.6), _cx(rng, 0.5, 1.6)
    lhs = mu(p).value

    def mu_shift(wm):
        w = cmath.log(wm) / (2j * math.pi)
        return _mu_val(ctx, p.u + w, p.v + w, p.alpha)

    t1 = xp * _theta(ctx, x * y * yp / (q * q * a)) * _theta(ctx, y * xp) \
        * _theta(ctx, x * xp / a) * _theta(ctx, q / yp)
    t1 /= _theta(ctx, x * y * xp * yp / (q * q * a)) * _theta(ctx, y) \
        * _theta(ctx, x / a) * _theta(ctx, yp / xp)
    t1 *= mu_shift(xp)
    t2 = yp * _theta(ctx, x * y * xp / (q * q * a)) * _theta(ctx, y * yp) \
        * _theta(ctx, x * yp / a) * _theta(ctx, q / xp)
    t2 /= _theta(ctx, x * y * xp * yp / (q * q * a)) * _theta(ctx, y) \
        * _theta(ctx, x / a) * _theta(ctx, xp / yp)
    t2 *= mu_shift(yp)
    return lhs, t1 + t2, {"q": _cpl(q), "u": _cpl(p.u), "v": _cpl(p.v),
                          "alpha": _cpl(p.alpha), "xp": _cpl(xp), "yp": _cpl(yp)}


def _qbessel_0phi1(ctx, lower, arg):
    return eval_value(ctx, phi([], [lower], arg))


def _chk_thm11_2(ctx, rng, bessel_form=False):
    q = ctx.q
    p = _draw_mu_point(ctx, rng)
    x, y, a = p.x, p.y, p.a
    xp = _cx(rng, 0.5, 1.6)
    lhs = mu(p).value
    pref = -1j * q_power(ctx, -0.125) * p.prefactor_xy_alpha_half()

    w = cmath.log(xp) / (2j * math.pi)
    s1 = xp * _theta(ctx, x / q ** 2) * _theta(ctx, y * xp) \
        * _theta(ctx, x * xp / a) * _theta(ctx, q * y / a)
    s1 /= _theta(ctx, x * xp / q ** 2) * _theta(ctx, y) \
        * _theta(ctx, x / a) * _theta(ctx, a / (y * xp))
    s1 *= _mu_val(ctx, p.u + w, p.v + w, p.alpha)

    if bessel_form:
        # read the 0phi1 through the second Jackson q-Bessel function:
        # J^(2)_nu(z; q) with q^{nu+1} = qy/x and (z/2)^2 = -q^{1-alpha}
        nu = (p.v - p.u) / ctx.tau
        half_z = 1j * q_power(ctx, (1 - p.alpha) / 2)
        j2 = (half_z ** nu / qpoch(ctx, q, INF)) * eval_value(
            ctx, phi([-half_z ** 2], [0], q * y / x))
        series = qpoch(ctx, q, INF) / (_poch(ctx, q * y / x) * half_z ** nu) * j2
    else:
        series = _qbessel_0phi1(ctx, q * y / x, q * q * y / (a * x))
    s2 = pref * (a / y) * _theta(ctx, x * y * xp / (q * q * a)) \
        * _theta(ctx, q / xp) * _poch(ctx, a, q * y / x)
    s2 /= _theta(ctx, x * xp / q ** 2) * _theta(ctx, y) \
        * _theta(ctx, x / a) * _theta(ctx, y * xp / a)
    s2 *= series
    return lhs, s1 + s2, {"q": _cpl(q), "u": _cpl(p.u), "v": _cpl(p.v),
                          "alpha": _cpl(p.alpha), "xp": _cpl(xp)}


def _chk_thm11_3(ctx, rng):
    q = ctx.q
    p = _draw_mu_point(ctx, rng)
    x, y, a = p.x, p.y, p.a
    lhs = mu(p).value
    pref = -1j * q_power(ctx, -0.125) * p.prefactor_xy_alpha_half()
    w1 = pref * (a / x) * _theta(ctx, x / q ** 2) * _theta(ctx, q * y / a) \
        * _poch(ctx, a, q * x / y)
    w1 /= _theta(ctx, a / q ** 2) * _theta(ctx, y) * _theta(ctx, x / a) \
        * _theta(ctx, x / y)
    w1 *= _qbessel_0phi1(ctx, q * x / y, q * q * x / (a * y))
    w2 = pref * (a / y) * _theta(ctx, y / q ** 2) * _theta(ctx, q * x / a) \
        * _poch(ctx, a, q * y / x)
    w2 /= _theta(ctx, a / q ** 2) * _theta(ctx, y) * _theta(ctx, x / a) \
        * _theta(ctx, y / x)
    w2 *= _qbessel_0phi1(ctx, q * y / x, q * q * y / (a * x))
    return lhs, w1 + w2, {"q": _cpl(q), "u": _cpl(p.u), "v": _cpl(p.v),
                          "alpha": _cpl(p.alpha)}


def _chk_thm12(ctx, rng):
    q = ctx.q
    u, v = _uv(rng), _uv(rng)
    if abs(u - v) < 0.05:
        raise _Reject("u too close to v")
    p = MuPoint(u=u, v=v, alpha=1.0, ctx=ctx)
    x, y = p.x, p.y
    lhs = mu(p).value
    rxy = cmath.exp(1j * math.pi * (u + v))  # sqrt(xy) in additive coordinates
    qinf = qpoch(ctx, q, INF)
    pre = 1j * q_power(ctx, -0.125) * rxy / ((1 - x / q) * (q - y))
    pre /= qinf * _theta(ctx, x * y / q ** 2)
    f1 = pre * (1 - x * y / q ** 2) * eval_value(ctx, _convergent(ctx, psi(
        [rxy, -rxy, x / q, y / q],
        [rxy / q, -rxy / q, y, x, 0, 0, 0, 0], (x * y) ** 2 / q ** 2)))

    def split_a(n):
        return (x * y) ** (2 * n) * q ** (2 * n * n) / (
            (1 - x * q ** n) * (1 - y * q ** n))

    def split_b(n):
        return (x * y) ** (-2 * n) * q ** (2 * n * n) / (
            (1 - q ** n / x) * (1 - q ** n / y))

    def bilat(n):
        return (1 - x * y * q ** (2 * n)) * (x * y) ** (2 * n) \
            * q ** (2 * n * n) / ((1 - x * q ** n) * (1 - y * q ** n))

    scale = 1j * q_power(ctx, -0.125) * rxy / (qinf * _theta(ctx, x * y))
    f2 = scale * adaptive_bilateral(ctx, bilat).value
    f3 = scale * (adaptive_bilateral(ctx, split_a).value
                  - adaptive_bilateral(ctx, split_b).value)
    worst = max(((rel_err(lhs, f), f) for f in (f1, f2, f3)),
                key=lambda t: t[0])
    return lhs, worst[1], {"q": _cpl(q), "u": _cpl(u), "v": _cpl(v)}


def _chk_trans_110(ctx, rng):
    # Translation by z.  The correction term is the theta-quotient
    # factorization of Phi(u+z, v+z) - Phi(u, v) times j(u-v; alpha); the
    # commonly printed variant (thetas of u and v - alpha*tau swapped,
    # reversed series direction) fails numerically.
    q = ctx.q
    tau = ctx.tau
    p = _draw_mu_point(ctx, rng)
    u, v, alpha = p.u, p.v, p.alpha
    z = complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.2, 0.2))
    if abs(z) < 0.05:
        raise _Reject("z too close to 0")
    lhs = _mu_val(ctx, u + z, v + z, alpha)
    base = phi_factor(p) * _mu_val(ctx, v, u, alpha)
    qa = q_power(ctx, alpha)
    t2 = -1j * qpoch(ctx, qa, INF) * qpoch(ctx, q, INF) ** 2 \
        * q_power(ctx, (1 - 4 * alpha) / 8)
    t2 *= vartheta11(ctx, z) * vartheta11(ctx, u + v + z - alpha * tau)
    t2 /= (vartheta11(ctx, u - alpha * tau) * vartheta11(ctx, v)
           * vartheta11(ctx, u + z - alpha * tau) * vartheta11(ctx, v + z))
    t2 *= cmath.exp(1j * math.pi * (1 + alpha) * (u - v))
    t2 *= eval_value(ctx, phi([q_power(ctx, 1 - alpha)], [0],
                              cmath.exp(2j * math.pi * (u - v)) * q))
    return lhs, base + t2, {"q": _cpl(q), "u": _cpl(u), "v": _cpl(v),
                            "alpha": _cpl(alpha), "z": _cpl(z)}


def _chk_trans_variation(ctx, rng):
    p = _draw_mu_point(ctx, rng)
    lhs = 1j * q_power(ctx, 0.125) * mu(p).value
    rhs = phi_factor(p) * j_func(ctx, p.u - p.v, p.alpha) \
        + j_func(ctx, p.v - p.u, p.alpha)
    return lhs, rhs, {"q": _cpl(ctx.q), "u": _cpl(p.u), "v": _cpl(p.v),
                      "alpha": _cpl(p.alpha)}


def _chk_mu_symmetry(ctx, rng):
    p = _draw_mu_point(ctx, rng)
    lhs = mu_def(p).value
    x, y, a = p.x, p.y, p.a
    quot = _theta(ctx, y / a) * _theta(ctx, x) / (
        _theta(ctx, x / a) * _theta(ctx, y))
    quot *= cmath.exp(2j * math.pi * p.alpha * (p.u - p.v))
    rhs = quot * _mu_val(ctx, p.v, p.u, p.alpha)
    return lhs, rhs, {"q": _cpl(ctx.q), "u": _cpl(p.u), "v": _cpl(p.v),
                      "alpha": _cpl(p.alpha)}


def _chk_mu_cqh(ctx, rng):
    u, v = _uv(rng), _uv(rng)
    if abs(u - v) < 0.05:
        raise _Reject("u too close to v")
    scale = -1j * q_power(ctx, -0.125)
    worst = (0.0, 0j, 0j)
    for k in range(11):
        lhs = mu_def(MuPoint(u=u, v=v, alpha=-k, ctx=ctx)).value
        rhs = scale * cont_q_hermite(ctx, k, u - v)
        e = rel_err(lhs, rhs)
        if e > worst[0]:
            worst = (e, lhs, rhs)
    return worst[1], worst[2], {"q": _cpl(ctx.q), "u": _cpl(u), "v": _cpl(v)}


def _chk_mu_qbessel_rec(ctx, rng):
    p = _draw_mu_point(ctx, rng)
    lhs = 2 * cmath.cos(math.pi * (p.u - p.v)) * mu(p).value
    rhs = (1 - q_power(ctx, -p.alpha)) * mu(p.shifted(dalpha=1)).value \
        + mu(p.shifted(dalpha=-1)).value
    return lhs, rhs, {"q": _cpl(ctx.q), "u": _cpl(p.u),
                      "v": _cpl(p.v), "alpha": _cpl(p.alpha)}


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    reference: str
    arity: int
    domain: str
    check: Callable
    default_tol: float = 1e-8
    q_max: float = 0.5


@dataclass(frozen=True)
class IdentityReport:
    id: str
    reference: str
    seed: int
    draws: int
    max_rel_err: float
    status: str
    failures: tuple
    rejected_samples: int

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "reference": self.reference,
            "seed": self.seed,
            "draws": self.draws,
            "max_rel_err": self.max_rel_err,
            "status": self.status,
            "failures": list(self.failures),
            "rejected_samples": self.rejected_samples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _d(id, reference, arity, domain, check, **kw):
    return IdentityDescriptor(id=id, reference=reference, arity=arity,
                              domain=domain, check=check, **kw)


_REGISTRY: tuple = (
    _d("INV_R", "bilateral r-psi-r inversion (parameter reciprocation)", 7,
       "r in 1..3; |b_j| in [0.03,0.12], |a_j| in [1.1,2.0], x in annulus",
       _chk_inv),
    _d("SLATER_A_1", "Slater A-type transformation, one term", 4,
       "|a|,|c| ~ 1, |b| small, x in annulus",
       lambda ctx, rng: _chk_slater_a(ctx, rng, 1)),
    _d("SLATER_A_2", "Slater A-type transformation, two terms", 7,
       "|a|,|c| ~ 1, |b| small, x in annulus",
       lambda ctx, rng: _chk_slater_a(ctx, rng, 2)),
    _d("SLATER_A_3", "Slater A-type transformation, three terms", 10,
       "|a|,|c| ~ 1, |b| small, x in annulus; |q| <= 0.3",
       lambda ctx, rng: _chk_slater_a(ctx, rng, 3), q_max=0.3),
    _d("SLATER_BC_1", "Slater BC-type transformation, one term (6psi6 level)",
       6, "|a|,|a_1| ~ 1, |b_j| in [1.8,3.0]",
       lambda ctx, rng: _chk_slater_bc(ctx, rng, 1)),
    _d("SLATER_BC_2", "Slater BC-type transformation, two terms (8psi8 level)",
       9, "|a|,|a_m| ~ 1, |b_j| in [1.8,3.0]",
       lambda ctx, rng: _chk_slater_bc(ctx, rng, 2)),
    _d("RAMANUJAN_1PSI1", "Ramanujan 1psi1 summation", 3,
       "|a| in [0.8,1.6], |b| in [0.03,0.12], x in annulus; |q| <= 0.4",
       _chk_ramanujan, q_max=0.4),
    _d("BAILEY_6PSI6", "Bailey 6psi6 summation", 5,
       "very-well-poised pattern, |b_j| in [1.7,2.9]; |q| <= 0.4",
       _chk_bailey_6psi6, q_max=0.4),
    _d("SLATER_A2_1", "two-term 2psi2 transformation, both sides forward", 7,
       "r = 2 A-type domain", lambda ctx, rng: _chk_slater_a2(ctx, rng, False, False)),
    _d("SLATER_A2_2", "two-term 2psi2 transformation, second term inverted", 7,
       "r = 2 A-type domain", lambda ctx, rng: _chk_slater_a2(ctx, rng, False, True)),
    _d("SLATER_A2_3", "two-term 2psi2 transformation, both terms inverted", 7,
       "r = 2 A-type domain", lambda ctx, rng: _chk_slater_a2(ctx, rng, True, True)),
    _d("BAILEY_VWP_A", "Bailey 2psi2 to very-well-poised 6psi8, poised argument",
       5, "|a| ~ 1, |c|,|d|,|e|,|f| in [1.6,2.8]", _chk_vwp_a),
    _d("BAILEY_VWP_B", "Bailey 2psi2 to very-well-poised 6psi8, free argument",
       5, "|a|,|b| ~ 1, |c|,|d| small, x in annulus", _chk_vwp_b),
    _d("SLATER_BC_8PSI8", "two-term very-well-poised 8psi8 transformation", 9,
       "|a|,|a_m| ~ 1, |b_j| in [1.8,3.0]",
       lambda ctx, rng: _chk_slater_bc(ctx, rng, 2)),
    _d("BAILEY_T0", "Heine-type bilateral transformation, variant 0", 5,
       "2psi2 annulus", lambda ctx, rng: _chk_bailey_t(ctx, rng, 0)),
    _d("BAILEY_T1", "Heine-type bilateral transformation, variant 1", 5,
       "2psi2 annulus", lambda ctx, rng: _chk_bailey_t(ctx, rng, 1)),
    _d("BAILEY_T2", "Heine-type bilateral transformation, variant 2", 5,
       "2psi2 annulus", lambda ctx, rng: _chk_bailey_t(ctx, rng, 2)),
    _d("BAILEY_T3", "Heine-type bilateral transformation, variant 3", 5,
       "2psi2 annulus", lambda ctx, rng: _chk_bailey_t(ctx, rng, 3)),
    _d("MU_EXPR_EQUIV", "mu-function: five series representations agree", 3,
       "u, v near the real interval (0,1), |Re alpha| <= 1.2",
       _chk_mu_expr_equiv),
    _d("THM11_1", "mu-function two-term connection formula (free x', y')", 5,
       "mu domain plus |x'|,|y'| in [0.5,1.6]", _chk_thm11_1),
    _d("THM11_2", "mu-function connection to one mu term and one 0phi1 term",
       4, "mu domain plus |x'| in [0.5,1.6]",
       lambda ctx, rng: _chk_thm11_2(ctx, rng, False)),
    _d("THM11_2_QBESSEL_FORM", "same connection with the 0phi1 read as a "
       "second Jackson q-Bessel function", 4,
       "mu domain plus |x'| in [0.5,1.6]",
       lambda ctx, rng: _chk_thm11_2(ctx, rng, True)),
    _d("THM11_3", "mu-function expansion in two 0phi1 (q-Bessel) terms", 3,
       "mu domain", _chk_thm11_3),
    _d("THM12", "mu at unit deformation: 4psi8, bilateral and split forms", 2,
       "u, v in the mu domain", _chk_thm12),
    _d("TRANS_110", "translation of both mu arguments by z", 4,
       "mu domain plus |z| in [0.05,0.45]", _chk_trans_110),
    _d("TRANS_VARIATION", "mu split into two 1phi1 (j-function) terms", 3,
       "mu domain", _chk_trans_variation),
    _d("MU_SYMMETRY", "mu argument-swap symmetry with theta quotient", 3,
       "mu domain", _chk_mu_symmetry),
    _d("MU_CQH", "mu at nonpositive integer deformation equals continuous "
       "q-Hermite polynomials, k = 0..10", 2, "u, v in the mu domain",
       _chk_mu_cqh, default_tol=1e-9),
    _d("MU_QBESSEL_REC", "three-term recursion in the deformation parameter",
       3, "mu domain", _chk_mu_qbessel_rec),
)

_BY_ID = {d.id: d for d in _REGISTRY}


def registry() -> list:
    """The fixed list of identity descriptors, in report order."""
    return list(_REGISTRY)


def verify(ctx: Optional[QContext], ident: str, seed: int = 0,
           draws: int = 20) -> IdentityReport:
    """Check one identity over `draws` random parameter draws.

    ctx = None samples a fresh nome per draw from the descriptor's
    |q| domain; a concrete ctx pins the nome and tolerances.  Results
    are deterministic functions of (ctx, ident, seed, draws).
    """
    try:
        desc = _BY_ID[ident]
    except KeyError:
        raise UnknownIdentity(f"no identity registered under {ident!r}")
    rng = random.Random(f"{ident}:{seed}")
    tol = ctx.tol if ctx is not None else 1e-12
    max_terms = ctx.max_terms if ctx is not None else 5000
    done = 0
    rejected = 0
    max_err = 0.0
    failures = []
    while done < draws:
        if rejected > 100 * draws:
            break
        case_ctx = ctx if ctx is not None else _draw_ctx(
            rng, desc.q_max, tol, max_terms)
        try:
            lhs, rhs, params = desc.check(case_ctx, rng)
        except (_Reject, QpsiError, OverflowError, ZeroDivisionError):
            rejected += 1
            continue
        err = rel_err(lhs, rhs)
        max_err = max(max_err, err)
        if err > desc.default_tol:
            failures.append({"params": params, "lhs": _cpl(lhs),
                             "rhs": _cpl(rhs), "err": err})
        done += 1
    status = "pass" if (not failures and done >= draws) else (
        "fail" if failures else "inconclusive")
    return IdentityReport(id=desc.id, reference=desc.reference, seed=seed,
                          draws=done, max_rel_err=max_err, status=status,
                          failures=tuple(failures), rejected_samples=rejected)


def run_suite(ctx: Optional[QContext] = None, ids: Optional[Sequence[str]] = None,
              seed: int = 0, draws: int = 20) -> list:
    """Run all (or the selected) identities; one report each, registry order."""
    wanted = [d.id for d in _REGISTRY] if ids is None else list(ids)
    for ident in wanted:
        if ident not in _BY_ID:
            raise UnknownIdentity(f"no identity registered under {ident!r}")
    reports = []
    for ident in wanted:
        try:
            reports.append(verify(ctx, ident, seed=seed, draws=draws))
        except QpsiError as exc:  # isolation: one failure never aborts the run
            reports.append(IdentityReport(
                id=ident, reference=_BY_ID[ident].reference, seed=seed,
                draws=0, max_rel_err=math.inf, status="inconclusive",
                failures=({"error": str(exc)},), rejected_samples=0))
    return reports
