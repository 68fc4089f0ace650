import pytest

from qpsi.qcore import QContext


@pytest.fixture
def ctx():
    return QContext.from_q(0.2 + 0.05j)


@pytest.fixture
def ctx_real():
    return QContext.from_q(0.15)
