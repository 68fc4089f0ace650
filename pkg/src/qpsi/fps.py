"""Exact truncated Laurent series in q^(1/D) over the rationals.

The coefficient-exact verification currency: a series stores integer
exponent numerators over a per-series denominator D together with the
truncation order N (the series is known exactly for exponents < N).
All arithmetic is exact Fraction arithmetic; binary operations merge
denominators to their lcm and propagate the provable order of the
result rather than assuming the inputs' orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Tuple

from .errors import Instability, NonUnit, RangeOverflow
from .qcore import INF, QContext, q_power

SUM_WINDOW_LIMIT = 10**6


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class FormalSeries:
    """Truncated Laurent series sum_k c_k q^(k/denom) + O(q^order)."""

    denom: int
    coeffs: Tuple[Tuple[int, Fraction], ...]  # sorted (k, c_k), c_k != 0
    order: Fraction

    def __init__(self, denom: int, coeffs, order):
        denom = int(denom)
        if denom <= 0:
            raise ValueError("denom must be a positive integer")
        order = _frac(order)
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = list(coeffs)
        kept = {}
        for k, c in items:
            c = _frac(c)
            if c == 0 or Fraction(k, denom) >= order:
                continue
            kept[int(k)] = kept.get(int(k), Fraction(0)) + c
        kept = {k: c for k, c in kept.items() if c != 0}
        # canonical exponent denominator: divide out the common factor
        g = denom
        for k in kept:
            g = math.gcd(g, abs(k))
            if g == 1:
                break
        if g > 1:
            denom //= g
            kept = {k // g: c for k, c in kept.items()}
        object.__setattr__(self, "denom", denom)
        object.__setattr__(self, "coeffs",
                           tuple(sorted(kept.items())))
        object.__setattr__(self, "order", order)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order, denom: int = 1) -> "FormalSeries":
        return cls(denom, {}, order)

    @classmethod
    def one(cls, order) -> "FormalSeries":
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, coeff, exponent, order) -> "FormalSeries":
        e = _frac(exponent)
        return cls(e.denominator, {e.numerator: _frac(coeff)}, order)

    # -- views --------------------------------------------------------------

    def terms(self):
        """Sorted (exponent, coefficient) pairs with exact Fractions."""
        return [(Fraction(k, self.denom), c) for k, c in self.coeffs]

    def coefficient(self, exponent) -> Fraction:
        e = _frac(exponent)
        if e >= self.order:
            raise ValueError(f"exponent {e} is beyond known order {self.order}")
        target = e * self.denom
        for k, c in self.coeffs:
            if k == target:
                return c
        return Fraction(0)

    def valuation(self) -> Optional[Fraction]:
        """Lowest exponent carrying a nonzero coefficient; None if zero."""
        if not self.coeffs:
            return None
        return Fraction(self.coeffs[0][0], self.denom)

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, order) -> "FormalSeries":
        order = _frac(order)
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return FormalSeries(self.denom, dict(self.coeffs), order)

    # -- ring operations ----------------------------------------------------

    def _lift(self, denom: int) -> dict:
        m = denom // self.denom
        return {k * m: c for k, c in self.coeffs}

    def __add__(self, other) -> "FormalSeries":
        if not isinstance(other, FormalSeries):
            other = FormalSeries.monomial(other, 0, self.order)
        d = self.denom * other.denom // math.gcd(self.denom, other.denom)
        out = self._lift(d)
        for k, c in other._lift(d).items():
            out[k] = out.get(k, Fraction(0)) + c
        return FormalSeries(d, out, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self) -> "FormalSeries":
        return FormalSeries(self.denom, {k: -c for k, c in self.coeffs},
                            self.order)

    def __sub__(self, other) -> "FormalSeries":
        return self + (-other if isinstance(other, FormalSeries)
                       else FormalSeries.monomial(-_frac(other), 0, self.order))

    def __rsub__(self, other) -> "FormalSeries":
        return (-self) + other

    def scale(self, c) -> "FormalSeries":
        c = _frac(c)
        return FormalSeries(self.denom, {k: c * v for k, v in self.coeffs},
                            self.order)

    def __mul__(self, other) -> "FormalSeries":
        if not isinstance(other, FormalSeries):
            return self.scale(other)
        d = self.denom * other.denom // math.gcd(self.denom, other.denom)
        a, b = self._lift(d), other._lift(d)
        va = self.valuation() if self.coeffs else self.order
        vb = other.valuation() if other.coeffs else other.order
        order = min(va + other.order, self.order + vb)
        bound = order * d
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                if k < bound:
                    out[k] = out.get(k, Fraction(0)) + ca * cb
        return FormalSeries(d, out, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FormalSeries":
        if n < 0:
            return self.invert() ** (-n)
        out = FormalSeries.one(self.order if n else self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def invert(self) -> "FormalSeries":
        """Laurent inverse: f * invert(f) = 1 to the provable order."""
        if not self.coeffs:
            raise NonUnit("cannot invert the zero series")
        v = self.valuation()
        c0 = self.coeffs[0][1]
        rel_order = self.order - v  # u = f / (c0 q^v) = 1 + h + O(q^rel_order)
        u = FormalSeries(self.denom,
                         {k - self.coeffs[0][0]: c / c0 for k, c in self.coeffs},
                         rel_order)
        h = u - 1
        acc = FormalSeries.one(rel_order)
        power = FormalSeries.one(rel_order)
        while True:
            # truncate back to rel_order: mul's order propagation would
            # otherwise keep the powers alive forever as their valuation
            # and provable order grow in lockstep
            power = (power * (-h)).truncate(rel_order)
            if power.is_zero():
                break
            acc = acc + power
        inv_v = -v
        d = acc.denom * inv_v.denominator // math.gcd(acc.denom,
                                                      inv_v.denominator)
        shift = inv_v * d
        out = {k * (d // acc.denom) + shift: c / c0 for k, c in acc.coeffs}
        return FormalSeries(d, out, rel_order - v)

    # -- numeric substitution ----------------------------------------------

    def eval_at(self, ctx: QContext) -> complex:
        """Substitute the context's nome; fractional powers branch-free."""
        total = 0j
        for k, c in self.coeffs:
            total += (c.numerator / c.denominator) * q_power(
                ctx, Fraction(k, self.denom))
        return total

    # -- serialization ------------------------------------------------------

    def csv_rows(self):
        """Rows (exponent_numerator, denominator, coeff_num, coeff_den)."""
        return [(k, self.denom, c.numerator, c.denominator)
                for k, c in self.coeffs]

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row)
                         for row in self.csv_rows())

    def __str__(self) -> str:
        if not self.coeffs:
            return f"O(q^{self.order})"
        parts = []
        for k, c in self.coeffs:
            e = Fraction(k, self.denom)
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"q^{e}")
            elif c == -1:
                parts.append(f"-q^{e}")
            else:
                parts.append(f"{c}*q^{e}")
        return " + ".join(parts).replace("+ -", "- ") + f" + O(q^{self.order})"


# ---------------------------------------------------------------------------
# module-level operation aliases

def add(f: FormalSeries, g: FormalSeries) -> FormalSeries:
    return f + g


def mul(f: FormalSeries, g: FormalSeries) -> FormalSeries:
    return f * g


def neg(f: FormalSeries) -> FormalSeries:
    return -f


def scale(f: FormalSeries, c) -> FormalSeries:
    return f.scale(c)


def invert(f: FormalSeries) -> FormalSeries:
    return f.invert()


# ---------------------------------------------------------------------------
# q-products and theta functions on signed monomial arguments

def poch_fs(coeff, exponent, n, order, base=1) -> FormalSeries:
    """(c q^e; q^base)_n as a formal series to the given order.

    n may be any integer or math.inf; coeff = 0 returns 1 for every n
    by convention.  For n = inf the exponent step must be positive and
    the starting exponent positive so the product stabilizes.
    """
    order = _frac(order)
    coeff = _frac(coeff)
    e = _frac(exponent)
    step = _frac(base)
    if coeff == 0:
        return FormalSeries.one(order)
    if n is INF or n == INF:
        if step <= 0:
            raise Instability(f"infinite q-product with step {step} <= 0")
        if e <= 0:
            raise Instability(
                f"infinite q-product starting at exponent {e} <= 0 never "
                "stabilizes")
        out = FormalSeries.one(order)
        j = 0
        while e + j * step < order:
            out = out * (1 - FormalSeries.monomial(coeff, e + j * step, order))
            j += 1
        return out
    n = int(n)
    if step == 0 and n not in (0,):
        raise Instability("zero exponent step in a finite q-product")
    if n >= 0:
        out = FormalSeries.one(order)
        for j in range(n):
            out = out * (1 - FormalSeries.monomial(coeff, e + j * step, order))
        return out
    den = FormalSeries.one(order)
    for j in range(1, -n + 1):
        den = den * (1 - FormalSeries.monomial(coeff, e - j * step, order))
    return den.invert()


def theta_fs(coeff, exponent, order, base=1) -> FormalSeries:
    """theta_{q^base}(c q^e) = (q^b, -c q^e, -(1/c) q^(b-e); q^b)_inf."""
    order = _frac(order)
    coeff = _frac(coeff)
    e = _frac(exponent)
    b = _frac(base)
    if b <= 0:
        raise Instability("theta base exponent must be positive")
    if coeff == 0:
        raise ValueError("theta argument must be a nonzero monomial")
    out = poch_fs(1, b, INF, order, base=b)
    # the two x-factors may start at nonpositive exponents (Laurent case);
    # peel factors until the running exponent is positive, then stabilize
    for c0, e0 in ((-coeff, e), (-1 / coeff, b - e)):
        j = 0
        while e0 + j * b <= 0:
            out = out * (1 - FormalSeries.monomial(c0, e0 + j * b, order))
            j += 1
        out = out * poch_fs(c0, e0 + j * b, INF, order, base=b)
    return out


def theta_sum_fs(coeff, exponent, order, base=1) -> FormalSeries:
    """Bilateral-sum cross-check for theta_fs: sum x^n q^(b n(n-1)/2)."""
    coeff = _frac(coeff)
    e = _frac(exponent)
    b = _frac(base)

    def valuation(n):
        return n * e + b * Fraction(n * (n - 1), 2)

    def term(n):
        return FormalSeries.monomial(coeff ** n, valuation(n), order)

    return bilateral_sum_fs(valuation, term, order)


# ---------------------------------------------------------------------------
# exact truncated sums

def _scan(valuation, order, ns):
    """Indices from ns whose valuation is below order.

    The scan stops once two consecutive indices have valuation >= order
    (every catalog valuation is quadratic, hence eventually monotone).
    """
    window = []
    exceeded = 0
    for n in ns:
        if abs(n) > SUM_WINDOW_LIMIT:
            raise RangeOverflow(
                f"valuation did not exceed {order} within |n| <= "
                f"{SUM_WINDOW_LIMIT}")
        if _frac(valuation(n)) < order:
            window.append(n)
            exceeded = 0
        else:
            exceeded += 1
            if exceeded >= 2:
                break
    return window


def bilateral_sum_fs(valuation: Callable, term: Callable, order) -> FormalSeries:
    """Exact sum over n in Z of term(n), all n with valuation(n) < order.

    valuation(n) must lower-bound the valuation of term(n) and grow to
    infinity in both directions (quadratically in every catalog case);
    the result is then exact to the requested order by construction.
    """
    order = _frac(order)
    acc = FormalSeries.zero(order)
    for n in _scan(valuation, order, _bilateral_indices()):
        acc = acc + term(n)
    return acc


def eulerian_sum_fs(valuation: Callable, term: Callable, order) -> FormalSeries:
    """Unilateral (n >= 0) analogue of bilateral_sum_fs."""
    order = _frac(order)
    acc = FormalSeries.zero(order)
    for n in _scan(valuation, order, _count_up()):
        acc = acc + term(n)
    return acc


def _count_up():
    n = 0
    while True:
        yield n
        n += 1


def _bilateral_indices():
    yield 0
    n = 1
    while True:
        yield n
        yield -n
        n += 1
