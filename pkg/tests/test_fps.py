from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpsi.errors import Instability, NonUnit
from qpsi.fps import (FormalSeries, bilateral_sum_fs, eulerian_sum_fs,
                      poch_fs, theta_fs, theta_sum_fs)
from qpsi.qcore import INF, QContext


def _sparse(draw_exps, draw_coeffs, order=12):
    pairs = list(zip(draw_exps, draw_coeffs))
    s = FormalSeries.zero(order)
    for e, c in pairs:
        s = s + FormalSeries.monomial(F(c), F(e), order)
    return s


series_strategy = st.builds(
    _sparse,
    st.lists(st.integers(min_value=-4, max_value=10), max_size=5),
    st.lists(st.fractions(min_value=-5, max_value=5), max_size=5),
)


@settings(max_examples=40, deadline=None)
@given(series_strategy, series_strategy, series_strategy)
def test_ring_laws(a, b, c):
    assert (a + b) - b == a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    # associativity within the common truncation order
    assert ((a * b) * c) == (a * (b * c))


@settings(max_examples=30, deadline=None)
@given(series_strategy)
def test_additive_inverse(a):
    assert (a + (-a)).is_zero()


@settings(max_examples=25, deadline=None)
@given(series_strategy)
def test_invert_roundtrip(a):
    if a.is_zero() or a.valuation() is None:
        with pytest.raises(NonUnit):
            a.invert()
        return
    inv = a.invert()
    prod = a * inv
    v = prod - FormalSeries.one(prod.order)
    assert v.is_zero()


def test_known_expansion_euler():
    # 1/(q;q)_inf = partition generating function
    s = poch_fs(1, 1, INF, 12).invert()
    parts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]
    for k, want in enumerate(parts):
        assert s.coefficient(F(k)) == want


def test_jacobi_triple_product_exact():
    # (q)_inf (-x q^e)_inf (-q^(1-e)/x)_inf equals the bilateral theta sum
    N = 60
    for coeff, e in [(F(1), F(1, 2)), (F(2), F(1)), (F(-1), F(2))]:
        prod = theta_fs(coeff, e, N)
        sum_form = theta_sum_fs(coeff, e, N)
        # a Laurent factor with negative valuation can lower the provable
        # order of the product form; compare over the common order
        common = min(prod.order, sum_form.order)
        assert prod.truncate(common) == sum_form.truncate(common)
        assert common >= N - 2


def test_half_integer_exponents():
    s = FormalSeries.monomial(F(1), F(1, 2), F(3))
    t = s * s
    assert t.coefficient(F(1)) == 1
    rows = s.csv_rows()
    assert rows == [(1, 2, 1, 1)]


def test_laurent_invert():
    # (q^-1 - 1)^-1 = -q - q^2 - ... shifted geometric
    s = FormalSeries.monomial(F(1), F(-1), F(5)) - FormalSeries.one(F(5))
    inv = s.invert()
    assert inv.valuation() == 1
    prod = s * inv
    assert (prod - FormalSeries.one(prod.order)).is_zero()


def test_poch_fs_negative_index_consistency():
    # (a;q)_{-n} (a q^{-n};q)_n = 1
    N = F(10)
    a_e = F(5)
    left = poch_fs(1, a_e, -3, N)
    right = poch_fs(1, a_e - 3, 3, N)
    prod = left * right
    assert (prod - FormalSeries.one(prod.order)).is_zero()


def test_instability_errors():
    with pytest.raises(Instability):
        poch_fs(1, 0, INF, 10)


def test_numeric_evaluation_matches(ctx_real):
    from qpsi.qcore import qpoch
    s = poch_fs(1, 1, INF, 40)
    approx = s.eval_at(ctx_real)
    exact = qpoch(ctx_real, ctx_real.q, INF)
    assert abs(approx - exact) < 1e-12


def test_csv_format():
    s = FormalSeries.one(F(3)) + FormalSeries.monomial(F(-2), F(2), F(3))
    assert s.to_csv().splitlines() == ["0,1,1,1", "2,1,-2,1"]
