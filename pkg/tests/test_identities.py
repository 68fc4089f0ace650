import json

import pytest

from qpsi import identities
from qpsi.errors import UnknownIdentity


def test_registry_contents():
    ids = [d.id for d in identities.registry()]
    assert len(ids) == len(set(ids))
    for needed in ("RAMANUJAN_1PSI1", "BAILEY_6PSI6", "MU_EXPR_EQUIV",
                   "THM11_1", "THM11_2", "THM11_3", "TRANS_110",
                   "TRANS_VARIATION", "MU_CQH", "MU_QBESSEL_REC",
                   "SLATER_A_1", "SLATER_BC_8PSI8", "MU_SYMMETRY"):
        assert needed in ids


def test_unknown_identity_raises():
    with pytest.raises(UnknownIdentity):
        identities.verify(None, "NOPE")


def test_single_verify_smoke():
    report = identities.verify(None, "RAMANUJAN_1PSI1", seed=1, draws=5)
    assert report.status == "pass"
    assert report.draws == 5
    assert report.max_rel_err < 1e-8


def test_determinism_byte_identical():
    a = identities.verify(None, "MU_SYMMETRY", seed=7, draws=5).to_json()
    b = identities.verify(None, "MU_SYMMETRY", seed=7, draws=5).to_json()
    assert a == b
    c = identities.verify(None, "MU_SYMMETRY", seed=8, draws=5).to_json()
    assert c != a  # different seed must actually change the draws


def test_run_suite_subset_order_preserved():
    ids = ["MU_SYMMETRY", "INV_R"]
    reports = identities.run_suite(ids=ids, seed=0, draws=3)
    assert [r.id for r in reports] == ids


def test_report_schema_roundtrip():
    report = identities.verify(None, "INV_R", seed=0, draws=3)
    data = json.loads(report.to_json())
    for key in ("id", "seed", "draws", "max_rel_err", "status",
                "failures", "rejected_samples"):
        assert key in data
