from fractions import Fraction as F

import pytest

from qpsi import catalog
from qpsi.errors import UnknownEntry
from qpsi.qcore import QContext


def test_registry_counts():
    entries = catalog.list_entries()
    assert len(entries) == 46
    by_order = {}
    for e in entries:
        by_order[e.order] = by_order.get(e.order, 0) + 1
    assert by_order == {2: 3, 3: 7, 5: 12, 6: 9, 7: 3, 8: 8, 10: 4}


def test_names_are_namespaced():
    for e in catalog.list_entries():
        order, _, short = e.name.partition(".")
        assert order == f"order{e.order}"
        assert short


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        catalog.expand("order99.zeta", 10)


def test_expand_known_coefficients():
    s = catalog.expand("order3.f", 10)
    want = [1, 1, -2, 3, -3, 3, -5, 7, -6, 6]
    for k, c in enumerate(want):
        assert s.coefficient(F(k)) == c


def test_expand_integer_coefficients():
    for name in ("order2.A", "order5.f0", "order8.S0", "order10.X"):
        s = catalog.expand(name, 15)
        for _, c in s.terms():
            assert c.denominator == 1


def test_half_power_entry_has_denom_two():
    e = catalog.get_entry("order6.phi_minus")
    assert e.denom == 2
    # the forms work in base q^(1/2) internally, so a half-integer
    # truncation order is meaningful and the sides still agree exactly
    lhs = e.lhs(F(13, 2))
    rhs = e.rhs_bilateral(F(13, 2))
    assert lhs.order == F(13, 2)
    assert lhs.truncate(F(6)) == rhs.truncate(F(6))


def test_verify_entry_pass(ctx):
    report = catalog.verify_entry("order3.omega", 14)
    assert report.status == "pass"
    assert report.findings == ()


def test_verify_entry_finding_structure():
    report = catalog.verify_entry("order2.mu", 12)
    assert report.status == "pass_with_findings"
    assert report.findings
    first = report.findings[0]
    for key in ("pair", "exponent", "left", "right"):
        assert key in first
    assert report.variant["passes"] is True


def test_truncation_coherence():
    lo = catalog.expand("order5.F1", 8)
    hi = catalog.expand("order5.F1", 16)
    assert hi.truncate(lo.order) == lo


def test_numeric_cross_check():
    # order-60 truncations of both sides agree numerically at q = 0.15
    ctx = QContext.from_q(0.15)
    e = catalog.get_entry("order3.f")
    lhs = e.lhs(F(60)).eval_at(ctx)
    rhs = e.rhs_w(F(60)).eval_at(ctx)
    assert abs(lhs - rhs) < 1e-10


def test_export_registry():
    meta = catalog.export_registry()
    assert len(meta) == 46
    flagged = {m["name"] for m in meta if m["has_variants"]}
    assert flagged == {"order2.mu", "order5.f1", "order5.chi0",
                       "order7.F2", "order10.psi"}
