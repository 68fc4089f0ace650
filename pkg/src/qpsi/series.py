"""Generic evaluator for unilateral r_phi_s and bilateral r_psi_s series.

Conventions follow the standard definitions: the unilateral n-th term
carries ((-1)^n q^(n(n-1)/2))^(s-r+1) together with the implicit (q;q)_n
denominator, the bilateral one carries the same factor at exponent s-r.
Zero lower parameters are permitted in bilateral series via the
(0;q)_n == 1 convention, which makes series like 0_psi_2 total.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Sequence

from .errors import NonConvergence, PoleError
from .qcore import QContext

CONVERGENT = "convergent"
DIVERGENT = "divergent"
CONDITIONAL = "conditional"


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameter lists, argument and kind for an r_phi_s / r_psi_s series."""

    upper: tuple
    lower: tuple
    arg: complex
    kind: Literal["unilateral", "bilateral"]

    def __init__(self, upper: Sequence[complex], lower: Sequence[complex],
                 arg: complex, kind: str):
        if kind not in ("unilateral", "bilateral"):
            raise ValueError(f"unknown kind {kind!r}")
        object.__setattr__(self, "upper", tuple(complex(a) for a in upper))
        object.__setattr__(self, "lower", tuple(complex(b) for b in lower))
        object.__setattr__(self, "arg", complex(arg))
        object.__setattr__(self, "kind", kind)

    @property
    def sign_exponent(self) -> int:
        """Exponent on the (-1)^n q^(n(n-1)/2) factor."""
        s, r = len(self.lower), len(self.upper)
        return s - r + (1 if self.kind == "unilateral" else 0)


@dataclass(frozen=True)
class TruncationReport:
    value: complex
    n_min: int
    n_max: int
    tail_estimate: float
    converged: bool


def phi(upper, lower, arg) -> HypergeometricSpec:
    return HypergeometricSpec(upper, lower, arg, "unilateral")


def psi(upper, lower, arg) -> HypergeometricSpec:
    return HypergeometricSpec(upper, lower, arg, "bilateral")


def convergence_check(ctx: QContext, spec: HypergeometricSpec) -> str:
    """Classify the series as convergent / divergent / conditional.

    "conditional" flags arguments sitting within pole_eps of a boundary
    of the convergence region, where double precision is unreliable.
    """
    r, s = len(spec.upper), len(spec.lower)
    ax = abs(spec.arg)
    eps = ctx.pole_eps
    if spec.kind == "unilateral":
        if r < s + 1:
            return CONVERGENT
        if r == s + 1:
            if ax < 1 - eps:
                return CONVERGENT
            if ax < 1 + eps:
                return CONDITIONAL
            return DIVERGENT
        return CONVERGENT if ax == 0 else DIVERGENT
    # bilateral
    if r > s:
        return DIVERGENT
    if ax == 0:
        return DIVERGENT
    prod_a = 1.0
    for a in spec.upper:
        prod_a *= abs(a)
    prod_b = 1.0
    for b in spec.lower:
        prod_b *= abs(b)
    if prod_a == 0:
        return DIVERGENT
    bound = prod_b / prod_a
    if r == s:
        if bound + eps < ax < 1 - eps:
            return CONVERGENT
        if bound - eps < ax < 1 + eps:
            return CONDITIONAL
        return DIVERGENT
    # r < s
    if ax > bound + eps:
        return CONVERGENT
    if ax > bound - eps:
        return CONDITIONAL
    return DIVERGENT


def term(ctx: QContext, spec: HypergeometricSpec, n: int) -> complex:
    """Exact n-th summand, built from scratch (reference path).

    Pochhammer quotients, the sign/q-power factor and x^n are interleaved
    factor by factor so intermediate magnitudes stay balanced even far
    into the tails.
    """
    import cmath

    q = ctx.q
    e = spec.sign_exponent
    if n == 0:
        return 1.0 + 0j
    if spec.kind == "unilateral" and n < 0:
        return 0.0 + 0j
    x = spec.arg
    if x == 0:
        return 0.0 + 0j
    m = abs(n)
    # per-step share of ((-1)^n q^(n(n-1)/2))^e * x^n
    log_phase = (e * n * (n - 1) / 2) * cmath.log(q) + n * cmath.log(x)
    step_phase = cmath.exp(log_phase / m)
    sign = -1.0 if (n * e) % 2 else 1.0
    val = complex(sign)
    eps = ctx.pole_eps
    if n > 0:
        qj = 1.0 + 0j
        for _ in range(n):
            num = 1.0 + 0j
            for a in spec.upper:
                num *= 1 - a * qj
            den = 1.0 + 0j
            for b in spec.lower:
                f = 1 - b * qj
                if abs(f) < eps:
                    raise PoleError(f"term n={n}: lower factor (1 - {b!r} q^j) vanishes")
                den *= f
            if spec.kind == "unilateral":
                den *= 1 - q * qj
            val *= num / den * step_phase
            qj *= q
    else:
        qj = 1.0 + 0j
        for _ in range(m):
            qj /= q
            num = 1.0 + 0j
            for b in spec.lower:
                num *= 1 - b * qj
            den = 1.0 + 0j
            for a in spec.upper:
                f = 1 - a * qj
                if abs(f) < eps:
                    raise PoleError(f"term n={n}: upper factor (1 - {a!r} q^-j) vanishes")
                den *= f
            val *= num / den * step_phase
    return val


class _TermWalker:
    """Incremental term generator t(n) via one-step Pochhammer ratios."""

    def __init__(self, ctx: QContext, spec: HypergeometricSpec):
        self.ctx = ctx
        self.spec = spec
        self.q = ctx.q
        self.e = spec.sign_exponent
        # state for the upward and downward walks, both seeded at n = 0
        self.up_n = 0
        self.up_t = 1.0 + 0j
        self.up_qn = 1.0 + 0j  # q^n at n = up_n
        self.dn_n = 0
        self.dn_t = 1.0 + 0j
        self.dn_inv_qn = 1.0 + 0j  # q^(-n) at n = dn_n

    def next_up(self) -> complex:
        """Advance to n+1 and return t(n+1)."""
        eps = self.ctx.pole_eps
        qn = self.up_qn
        factor = self.spec.arg
        for a in self.spec.upper:
            factor *= 1 - a * qn
        for b in self.spec.lower:
            f = 1 - b * qn
            if abs(f) < eps:
                raise PoleError(f"lower parameter {b!r} hits pole lattice")
            factor /= f
        if self.spec.kind == "unilateral":
            f = 1 - self.q * qn
            if abs(f) < eps:
                raise PoleError("implicit (q;q)_n factor vanishes")
            factor /= f
        if self.e:
            factor *= (-qn) ** self.e
        self.up_t *= factor
        self.up_n += 1
        self.up_qn *= self.q
        return self.up_t

    def next_down(self) -> complex:
        """Advance to n-1 and return t(n-1) (bilateral only).

        The step ratio is written with the overall (-q^(n-1))^(s-r)
        cancelled against the Pochhammer factors, so only the decaying
        quantity q^(1-n) appears and deep negative n never overflows:
        t(n-1)/t(n) = prod_b (b - q^(1-n)) / (x * prod_a (a - q^(1-n))).
        """
        eps = self.ctx.pole_eps
        inv = self.dn_inv_qn * self.q  # q^(-(n-1))
        factor = 1.0 / self.spec.arg
        for b in self.spec.lower:
            factor *= b - inv
        for a in self.spec.upper:
            f = a - inv
            if abs(f) < eps:
                raise PoleError(f"upper parameter {a!r} hits pole lattice")
            factor /= f
        self.dn_t *= factor
        self.dn_n -= 1
        self.dn_inv_qn = inv
        return self.dn_t


def eval_series(ctx: QContext, spec: HypergeometricSpec) -> TruncationReport:
    """Adaptive summation with doubling windows.

    Bilateral series are summed over symmetric windows [-N, N] with
    N = 8, 16, 32, ...; the run stops when two successive windows agree
    to tol relative and the boundary terms are negligible.
    """
    status = convergence_check(ctx, spec)
    if status == DIVERGENT:
        raise NonConvergence(f"series classified divergent: {spec}")
    walker = _TermWalker(ctx, spec)
    bilateral = spec.kind == "bilateral"
    total = 1.0 + 0j  # n = 0 term
    boundary = 1.0
    prev_total = None
    window = 8
    n_done = 0
    while window <= ctx.max_terms:
        while n_done < window:
            t_up = walker.next_up()
            total += t_up
            boundary = abs(t_up)
            if bilateral:
                t_dn = walker.next_down()
                total += t_dn
                boundary = max(boundary, abs(t_dn))
            n_done += 1
        scale = max(abs(total), 1e-300)
        if prev_total is not None:
            delta = abs(total - prev_total)
            if delta <= ctx.tol * scale and boundary <= ctx.tol * scale:
                return TruncationReport(
                    value=total,
                    n_min=-n_done if bilateral else 0,
                    n_max=n_done,
                    tail_estimate=delta + boundary,
                    converged=True,
                )
        prev_total = total
        window *= 2
    raise NonConvergence(
        f"series did not stabilize within max_terms={ctx.max_terms}"
    )


def eval_value(ctx: QContext, spec: HypergeometricSpec) -> complex:
    return eval_series(ctx, spec).value


def adaptive_bilateral(ctx: QContext, term_fn: Callable[[int], complex]) -> TruncationReport:
    """Adaptive symmetric summation of an arbitrary bilateral term function.

    Used for sums that are not plain hypergeometric ratios (mu's defining
    sum, the degenerate very-well-poised W, the elliptic expansions).
    """
    total = complex(term_fn(0))
    prev_total = None
    boundary = abs(total)
    window = 8
    n_done = 0
    while window <= ctx.max_terms:
        while n_done < window:
            n_done += 1
            t_up = complex(term_fn(n_done))
            t_dn = complex(term_fn(-n_done))
            total += t_up + t_dn
            boundary = max(abs(t_up), abs(t_dn))
        scale = max(abs(total), 1e-300)
        if prev_total is not None:
            delta = abs(total - prev_total)
            if delta <= ctx.tol * scale and boundary <= ctx.tol * scale:
                return TruncationReport(
                    value=total,
                    n_min=-n_done,
                    n_max=n_done,
                    tail_estimate=delta + boundary,
                    converged=True,
                )
        prev_total = total
        window *= 2
    raise NonConvergence("bilateral sum did not stabilize within max_terms")
