"""qpsi: numerics and exact verification for q-series.

Core layers:

* :mod:`qpsi.qcore` — nome context, q-powers, Pochhammer symbols, thetas;
* :mod:`qpsi.series` — unilateral/bilateral basic hypergeometric series
  with adaptive truncation;
* :mod:`qpsi.mu` — the generalized mu-function in five representations,
  continuous q-Hermite polynomials, the degenerate very-well-poised W;
* :mod:`qpsi.identities` — randomized numeric identity suite;
* :mod:`qpsi.fps` — exact rational formal Laurent series;
* :mod:`qpsi.catalog` — the 46-entry mock theta registry with
  coefficient-exact verification;
* :mod:`qpsi.elliptic` — elliptic-function q-expansions and oracles;
* :mod:`qpsi.cli` — the ``qpsi`` command.
"""

from .errors import (Instability, NonConvergence, NonUnit, PoleError,
                     QpsiError, RangeOverflow, TruncationError, UnknownEntry,
                     UnknownIdentity)
from .fps import FormalSeries
from .mu import MuPoint, MuRepresentation, cont_q_hermite, mu, w_func
from .qcore import (INF, QContext, pochhammer, q_power, qpoch, theta_div,
                    theta_jtp, vartheta11)
from .series import (HypergeometricSpec, adaptive_bilateral, eval_series,
                     eval_value, phi, psi)

__version__ = "0.1.0"

__all__ = [
    "FormalSeries", "HypergeometricSpec", "INF", "Instability", "MuPoint",
    "MuRepresentation", "NonConvergence", "NonUnit", "PoleError",
    "QContext", "QpsiError", "RangeOverflow", "TruncationError",
    "UnknownEntry", "UnknownIdentity", "adaptive_bilateral",
    "cont_q_hermite", "eval_series", "eval_value", "mu", "phi",
    "pochhammer", "psi", "q_power", "qpoch", "theta_div", "theta_jtp",
    "vartheta11", "w_func", "__version__",
]
