"""The deformed mu-function and its five computational routes.

mu(u, v; alpha) generalizes the classical Zwegers mu-function
(recovered at alpha = 1) and degenerates to continuous q-Hermite
polynomials at negative integer alpha.  All five representations
must agree; comparing them is the package's main self-check.
"""

import cmath
import math

from qpsi import (MuPoint, MuRepresentation, QContext, cont_q_hermite, mu,
                  q_power)

ctx = QContext.from_q(0.2 + 0.05j)
p = MuPoint(0.23 + 0.02j, 0.11 - 0.03j, 0.8 + 0.1j, ctx)

print("mu(u, v; alpha) by five routes:")
for rep in MuRepresentation:
    res = mu(p, rep)
    print(f"  {rep.name:6s} {complex(res):.15g}  window [{res.report.n_min}, {res.report.n_max}]")

# alpha = 0 collapses to a constant
p0 = MuPoint(0.3 + 0.1j, 0.07, 0.0, ctx)
print("\nalpha = 0       :", complex(mu(p0)))
print("-i q^(-1/8)     :", -1j * q_power(ctx, -0.125))

# negative integer alpha: continuous q-Hermite polynomials
u, v = 0.31 + 0.03j, 0.12 - 0.02j
scale = -1j * q_power(ctx, -0.125)
print("\nq-Hermite degeneration, k = 0..4:")
for k in range(5):
    lhs = complex(mu(MuPoint(u, v, -k, ctx)))
    rhs = scale * cont_q_hermite(ctx, k, u - v)
    print(f"  k={k}  mu = {lhs:.12g}   -i q^(-1/8) H_k = {rhs:.12g}")

# the three-term recursion in alpha (q-Bessel type)
from qpsi.mu import recursion_residual
print("\nrecursion residual:", abs(recursion_residual(p)))
