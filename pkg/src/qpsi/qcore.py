"""Nome/precision context and the primitive q-objects.

Everything downstream is a function of an immutable :class:`QContext`,
which fixes the modular parameter tau (and hence the nome q), the target
relative tolerance for truncated objects, and the pole threshold.  The
canonical internal parameter is tau, not q: every fractional power of q
is defined as exp(2*pi*i*tau*s), which removes all branch ambiguity from
expressions like q**(1/8) or q**(alpha/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PoleError, TruncationError

TWO_PI_I = 2j * math.pi

INF = math.inf


@dataclass(frozen=True)
class QContext:
    """Immutable evaluation context: tau with Im(tau) > 0 and tolerances."""

    tau: complex
    tol: float = 1e-12
    max_terms: int = 5000
    pole_eps: float = 1e-12
    q: complex = field(init=False)

    def __post_init__(self):
        tau = complex(self.tau)
        if not tau.imag > 0:
            raise ValueError(f"Im(tau) must be positive, got tau={tau!r}")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 8:
            raise ValueError("max_terms must be at least 8")
        if not self.pole_eps > 0:
            raise ValueError("pole_eps must be positive")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "q", cmath.exp(TWO_PI_I * tau))

    @classmethod
    def from_q(cls, q: complex, **kwargs) -> "QContext":
        """Build a context from the nome, taking tau on the principal branch."""
        q = complex(q)
        if not 0 < abs(q) < 1:
            raise ValueError(f"need 0 < |q| < 1, got q={q!r}")
        return cls(tau=cmath.log(q) / TWO_PI_I, **kwargs)


def q_power(ctx: QContext, s) -> complex:
    """q**s defined as exp(2*pi*i*tau*s); exact homomorphism in s."""
    if isinstance(s, Fraction):
        s = s.numerator / s.denominator
    return cmath.exp(TWO_PI_I * ctx.tau * s)


@dataclass(frozen=True)
class PochhammerValue:
    """Value of (a;q)_n with truncation metadata for the n = infinity case."""

    value: complex
    truncation_terms: int
    tail_bound: float

    def __complex__(self) -> complex:
        return self.value


def pochhammer(ctx: QContext, a: complex, n) -> PochhammerValue:
    """(a;q)_n for n in Z or n = math.inf.

    Finite nonnegative n is the plain product prod_{j<n} (1 - a q^j);
    negative n is 1 / prod_{j=1..-n} (1 - a q^{-j}); n = inf truncates
    the infinite product once |a q^M| drops below tol and records a
    geometric tail bound.  (0;q)_n == 1 for every n by convention.
    """
    a = complex(a)
    q = ctx.q
    if a == 0:
        return PochhammerValue(1.0 + 0j, 0 if n is INF or n >= 0 else abs(n), 0.0)
    if n is INF or n == INF:
        value = 1.0 + 0j
        m = 0
        aq = a
        while abs(aq) >= ctx.tol:
            value *= 1 - aq
            aq *= q
            m += 1
            if m > ctx.max_terms:
                raise TruncationError(
                    f"(a;q)_inf with a={a!r}: {ctx.max_terms} factors without meeting tail bound"
                )
        # one more factor so the recorded bound is conservative
        value *= 1 - aq
        m += 1
        tail = abs(aq * q) / (1 - abs(q))
        return PochhammerValue(value, m, tail)
    n = int(n)
    if n >= 0:
        value = 1.0 + 0j
        aq = a
        for _ in range(n):
            value *= 1 - aq
            aq *= q
        return PochhammerValue(value, n, 0.0)
    # n < 0: quotient definition forces 1 / prod_{j=1..-n} (1 - a q^{-j})
    value = 1.0 + 0j
    aq = a
    for _ in range(-n):
        aq /= q
        factor = 1 - aq
        if abs(factor) < ctx.pole_eps:
            raise PoleError(f"(a;q)_{n} with a={a!r}: factor (1 - a q^-j) vanishes")
        value *= factor
    return PochhammerValue(1 / value, -n, 0.0)


def qpoch(ctx: QContext, a: complex, n) -> complex:
    """(a;q)_n as a bare complex value."""
    return pochhammer(ctx, a, n).value


def pochhammer_multi(ctx: QContext, params, n) -> complex:
    """(a_1,...,a_r;q)_n, the product of the individual symbols."""
    value = 1.0 + 0j
    for a in params:
        value *= pochhammer(ctx, a, n).value
    return value


def theta_div(ctx: QContext, y: complex) -> complex:
    """theta(y) = (y;q)_inf (q/y;q)_inf, the two-factor theta quotient."""
    if y == 0:
        raise ValueError("theta(y) requires y != 0")
    return qpoch(ctx, y, INF) * qpoch(ctx, ctx.q / y, INF)


def theta_jtp(ctx: QContext, x: complex) -> complex:
    """theta_q(x) = (q, -x, -q/x;q)_inf, the Jacobi triple product form."""
    if x == 0:
        raise ValueError("theta_q(x) requires x != 0")
    return (
        qpoch(ctx, ctx.q, INF)
        * qpoch(ctx, -x, INF)
        * qpoch(ctx, -ctx.q / x, INF)
    )


def theta_jtp_sum(ctx: QContext, x: complex, nmax: int = 60) -> complex:
    """Brute-force bilateral sum for theta_q(x); test oracle only."""
    total = 0.0 + 0j
    for n in range(-nmax, nmax + 1):
        total += x**n * q_power(ctx, Fraction(n * (n - 1), 2))
    return total


def vartheta11(ctx: QContext, u: complex) -> complex:
    """The odd Jacobi theta, by its infinite-product form."""
    x = cmath.exp(TWO_PI_I * u)
    return (
        -1j
        * q_power(ctx, Fraction(1, 8))
        * cmath.exp(-1j * math.pi * u)
        * qpoch(ctx, ctx.q, INF)
        * qpoch(ctx, x, INF)
        * qpoch(ctx, ctx.q / x, INF)
    )


def vartheta11_sum(ctx: QContext, u: complex, nmax: int = 40) -> complex:
    """Brute-force half-integer series for vartheta11; test oracle only."""
    total = 0.0 + 0j
    for n in range(-nmax, nmax + 1):
        h = n + 0.5
        total += cmath.exp(TWO_PI_I * h * (u + 0.5) + 1j * math.pi * h * h * ctx.tau)
    return total
