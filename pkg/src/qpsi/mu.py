"""The generalized Zwegers mu-function and its companions.

mu(u, v; alpha) is handled in additive coordinates: the branch-sensitive
prefactor (x/y)^(alpha/2) is always computed as exp(pi*i*alpha*(u-v)),
so every representation below agrees on the nose, not just up to a
root-of-unity.  Five representations are provided: the defining
bilateral sum (DEF), the 1_psi_2 / 2_psi_2 / 0_psi_2 forms, and the
very-well-poised 4_psi_8 form, which cross-certify each other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import NonConvergence, PoleError
from .qcore import INF, TWO_PI_I, QContext, q_power, qpoch, theta_div, vartheta11
from .series import (
    TruncationReport,
    adaptive_bilateral,
    eval_series,
    phi,
    psi,
    term,
)


class MuRepresentation(Enum):
    DEF = "def"
    PSI12 = "psi12"
    PSI22 = "psi22"
    PSI02 = "psi02"
    PSI48 = "psi48"


@dataclass(frozen=True)
class MuPoint:
    """Additive coordinates (u, v, alpha) over a QContext."""

    u: complex
    v: complex
    alpha: complex
    ctx: QContext

    @property
    def x(self) -> complex:
        return cmath.exp(TWO_PI_I * self.u)

    @property
    def y(self) -> complex:
        return cmath.exp(TWO_PI_I * self.v)

    @property
    def a(self) -> complex:
        return q_power(self.ctx, self.alpha)

    def prefactor_xy_alpha_half(self) -> complex:
        """(x/y)^(alpha/2) with the branch fixed by additive coordinates."""
        return cmath.exp(1j * math.pi * self.alpha * (self.u - self.v))

    def shifted(self, du=0, dv=0, dalpha=0) -> "MuPoint":
        return MuPoint(self.u + du, self.v + dv, self.alpha + dalpha, self.ctx)


@dataclass(frozen=True)
class MuValue:
    value: complex
    representation: MuRepresentation
    report: TruncationReport

    def __complex__(self) -> complex:
        return self.value


def from_multiplicative(ctx: QContext, x: complex, y: complex, alpha: complex) -> MuPoint:
    """Build a MuPoint from multiplicative x, y by principal logarithm.

    Identity checks are guaranteed only in additive coordinates; this
    entry point is for one-off evaluations.
    """
    return MuPoint(cmath.log(x) / TWO_PI_I, cmath.log(y) / TWO_PI_I, alpha, ctx)


def _poch_ratio_inf(ctx: QContext, c: complex, d: complex) -> complex:
    """(c;q)_inf / (d;q)_inf computed factor-paired to avoid overflow."""
    q = ctx.q
    value = 1.0 + 0j
    cj, dj = complex(c), complex(d)
    for _ in range(ctx.max_terms):
        if abs(cj) < ctx.tol and abs(dj) < ctx.tol:
            return value
        den = 1 - dj
        if abs(den) < ctx.pole_eps:
            raise PoleError(f"(d;q)_inf factor vanishes, d={d!r}")
        value *= (1 - cj) / den
        cj *= q
        dj *= q
    raise NonConvergence("paired infinite product did not stabilize")


def _check_point(p: MuPoint):
    """Reject points on the vartheta11 zero lattice or theta(x/a) zeros."""
    eps = p.ctx.pole_eps
    for w in (p.u, p.v):
        # distance to Z + Z*tau measured through the theta value itself
        if abs(vartheta11(p.ctx, w)) < eps:
            raise PoleError(f"u or v on the zero lattice of vartheta11: {w!r}")
    if abs(theta_div(p.ctx, p.x / p.a)) < eps:
        raise PoleError("theta(x/a) vanishes")


def mu_def(p: MuPoint) -> MuValue:
    """The defining bilateral sum, Pochhammer-quotient weighted."""
    _check_point(p)
    ctx = p.ctx
    x, a = p.x, p.a
    q = ctx.q

    def term_fn(n: int) -> complex:
        phase = (-1) ** n * cmath.exp(TWO_PI_I * (n + 0.5) * p.v)
        if n >= 0:
            weight = _poch_ratio_inf(ctx, x * q**(n + 1), x * q**(n + 1) / a)
            return phase * q_power(ctx, Fraction(n * (n + 1), 2)) * weight
        # n < 0: peel the m = -n-1 factors with q^(n+1) <= |q|^0 off the
        # quotient and balance each as a * (1 - q^j/x) / (1 - a q^j/x),
        # so nothing overflows however deep the tail walks
        m = -n - 1
        weight = _poch_ratio_inf(ctx, x, x / a)
        qj = 1.0 + 0j
        for _ in range(m):
            qj *= q
            den = 1 - a * qj / x
            if abs(den) < ctx.pole_eps:
                raise PoleError("defining-sum factor (1 - a q^j / x) vanishes")
            weight *= (1 - qj / x) / den
        return phase * q_power(
            ctx, n * (n + 1) / 2 + p.alpha * m) * weight

    report = adaptive_bilateral(ctx, term_fn)
    pref = cmath.exp(1j * math.pi * p.alpha * (p.u - p.v)) / vartheta11(ctx, p.v)
    return MuValue(pref * report.value, MuRepresentation.DEF, report)


def _common_prefactor(p: MuPoint) -> complex:
    """-i q^(-1/8) (x/y)^(alpha/2) / (q)_inf, shared by the psi forms."""
    ctx = p.ctx
    return (
        -1j
        * q_power(ctx, Fraction(-1, 8))
        * p.prefactor_xy_alpha_half()
        / qpoch(ctx, ctx.q, INF)
    )


def mu_psi12(p: MuPoint) -> MuValue:
    _check_point(p)
    ctx = p.ctx
    x, y, a = p.x, p.y, p.a
    q = ctx.q
    report = eval_series(ctx, psi([y / a], [0, y], x))
    pref = (
        _common_prefactor(p)
        / theta_div(ctx, x / a)
        * _poch_ratio_inf(ctx, a * q / y, q / y)
    )
    return MuValue(pref * report.value, MuRepresentation.PSI12, report)


def mu_psi22(p: MuPoint) -> MuValue:
    _check_point(p)
    ctx = p.ctx
    x, y, a = p.x, p.y, p.a
    q = ctx.q
    report = eval_series(ctx, psi([x / a, y / a], [0, 0], a))
    pref = (
        _common_prefactor(p)
        * qpoch(ctx, a, INF)
        * qpoch(ctx, a * q / x, INF)
        * qpoch(ctx, a * q / y, INF)
        / (theta_div(ctx, y) * theta_div(ctx, x / a))
    )
    return MuValue(pref * report.value, MuRepresentation.PSI22, report)


def mu_psi02(p: MuPoint) -> MuValue:
    _check_point(p)
    ctx = p.ctx
    x, y, a = p.x, p.y, p.a
    report = eval_series(ctx, psi([], [x, y], x * y / a))
    pref = (
        _common_prefactor(p)
        * qpoch(ctx, a, INF)
        * qpoch(ctx, x, INF)
        * qpoch(ctx, y, INF)
        / (theta_div(ctx, y) * theta_div(ctx, x / a))
    )
    return MuValue(pref * report.value, MuRepresentation.PSI02, report)


def mu_psi48(p: MuPoint) -> MuValue:
    """Very-well-poised form, via its explicit sqrt-free bilateral sum."""
    _check_point(p)
    ctx = p.ctx
    x, y, a = p.x, p.y, p.a
    q = ctx.q
    if abs(theta_div(ctx, x * y / (a * q))) < ctx.pole_eps:
        raise PoleError("theta(xy/aq) vanishes")
    core = psi([x / a, y / a], [x, y, 0, 0, 0, 0], x * x * y * y / (a * q))
    w = x * y / (a * q)

    def term_fn(n: int) -> complex:
        return (1 - w * q ** (2 * n)) * term(ctx, core, n)

    report = adaptive_bilateral(ctx, term_fn)
    pref = (
        _common_prefactor(p)
        * qpoch(ctx, x, INF)
        * qpoch(ctx, y, INF)
        * qpoch(ctx, a * q / x, INF)
        * qpoch(ctx, a * q / y, INF)
        / (theta_div(ctx, y) * theta_div(ctx, x / a) * theta_div(ctx, x * y / (a * q)))
    )
    return MuValue(pref * report.value, MuRepresentation.PSI48, report)


_REPRESENTATIONS = {
    MuRepresentation.DEF: mu_def,
    MuRepresentation.PSI12: mu_psi12,
    MuRepresentation.PSI22: mu_psi22,
    MuRepresentation.PSI02: mu_psi02,
    MuRepresentation.PSI48: mu_psi48,
}


def mu(p: MuPoint, representation: MuRepresentation = MuRepresentation.PSI22) -> MuValue:
    """User-facing mu with the exact polynomial path near alpha = -k."""
    k = -p.alpha
    if abs(k - round(k.real)) < p.ctx.pole_eps and round(k.real) >= 0:
        kk = round(k.real)
        value = (
            -1j
            * q_power(p.ctx, Fraction(-1, 8))
            * cont_q_hermite(p.ctx, kk, p.u - p.v)
        )
        report = TruncationReport(value, 0, kk, 0.0, True)
        return MuValue(value, MuRepresentation.DEF, report)
    try:
        return _REPRESENTATIONS[representation](p)
    except NonConvergence:
        # e.g. PSI22 needs |q^alpha| < 1; the defining sum does not
        if representation is MuRepresentation.DEF:
            raise
        return mu_def(p)


def mu_zwegers_sum(p: MuPoint, nmax: int = 80) -> complex:
    """Brute-force Zwegers mu (alpha = 1 display); test oracle only."""
    ctx = p.ctx
    x = p.x
    total = 0.0 + 0j
    for n in range(-nmax, nmax + 1):
        total += (
            (-1) ** n
            * cmath.exp(TWO_PI_I * n * p.v)
            * q_power(ctx, Fraction(n * (n + 1), 2))
            / (1 - x * ctx.q**n)
        )
    return cmath.exp(1j * math.pi * p.u) / vartheta11(ctx, p.v) * total


def w_func(ctx: QContext, a: complex, b: complex, c: complex) -> complex:
    """Degenerate very-well-poised bilateral series W(a; b, c; q)."""
    q = ctx.q
    core = psi([b, c], [a / b, a / c, 0, 0, 0, 0], a**3 * q**2 / (b * c))

    def term_fn(n: int) -> complex:
        qn = q**n
        d1 = 1 - (a / b) * qn
        d2 = 1 - (a / c) * qn
        if abs(d1) < ctx.pole_eps or abs(d2) < ctx.pole_eps:
            raise PoleError("W: (a/b, a/c) pole lattice hit")
        return (1 - a * qn * qn) / (d1 * d2) * term(ctx, core, n)

    return adaptive_bilateral(ctx, term_fn).value


def cont_q_hermite(ctx: QContext, k: int, w: complex) -> complex:
    """Continuous q-Hermite polynomial H_k(cos(pi w) | q), exact finite sum."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    qk = qpoch(ctx, ctx.q, k)
    total = 0.0 + 0j
    for l in range(k + 1):
        coeff = qk / (qpoch(ctx, ctx.q, l) * qpoch(ctx, ctx.q, k - l))
        total += coeff * cmath.exp(1j * math.pi * (k - 2 * l) * w)
    return total


def phi_factor(p: MuPoint) -> complex:
    """The theta-quotient translation factor Phi(u, v; alpha)."""
    ctx = p.ctx
    at = p.alpha * ctx.tau
    den = vartheta11(ctx, p.u - at) * vartheta11(ctx, p.v)
    if abs(den) < ctx.pole_eps:
        raise PoleError("Phi denominator vanishes")
    return (
        vartheta11(ctx, p.v - at)
        * vartheta11(ctx, p.u)
        / den
        * cmath.exp(TWO_PI_I * p.alpha * (p.u - p.v))
    )


def j_func(ctx: QContext, w: complex, alpha: complex) -> complex:
    """The 1_phi_1 building block of the translation variation formula."""
    th = vartheta11(ctx, w)
    if abs(th) < ctx.pole_eps:
        raise PoleError("vartheta11(w) vanishes")
    qa = q_power(ctx, 1 - alpha)
    series = eval_series(ctx, phi([qa], [0], cmath.exp(TWO_PI_I * w) * ctx.q))
    return (
        1j
        * q_power(ctx, Fraction(1, 8))
        * qpoch(ctx, ctx.q, INF)
        / qpoch(ctx, qa, INF)
        * cmath.exp(1j * math.pi * (1 - alpha) * w)
        / th
        * series.value
    )


def recursion_residual(p: MuPoint, representation: MuRepresentation = MuRepresentation.PSI22) -> complex:
    """LHS - RHS of the three-term recursion in alpha (q-Bessel type)."""
    mid = mu(p, representation).value
    up = mu(p.shifted(dalpha=1), representation).value
    dn = mu(p.shifted(dalpha=-1), representation).value
    lhs = 2 * cmath.cos(math.pi * (p.u - p.v)) * mid
    rhs = (1 - q_power(p.ctx, -p.alpha)) * up + dn
    return lhs - rhs


def symmetry_transform(p: MuPoint, representation: MuRepresentation = MuRepresentation.PSI22) -> complex:
    """RHS of the u <-> v symmetry relation; equals mu(p) on the domain."""
    ctx = p.ctx
    x, y, a = p.x, p.y, p.a
    den = theta_div(ctx, x / a) * theta_div(ctx, y)
    if abs(den) < ctx.pole_eps:
        raise PoleError("symmetry theta denominator vanishes")
    quotient = theta_div(ctx, y / a) * theta_div(ctx, x) / den
    swapped = MuPoint(p.v, p.u, p.alpha, ctx)
    return (
        quotient
        * cmath.exp(TWO_PI_I * p.alpha * (p.u - p.v))
        * mu(swapped, representation).value
    )
