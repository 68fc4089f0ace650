"""Tour of the low-level q-arithmetic layer.

Everything in qpsi is parameterized by tau in the upper half-plane;
the nome is q = exp(2 pi i tau), so fractional powers of q are
single-valued by construction.
"""

from qpsi import INF, QContext, q_power, qpoch, theta_div, theta_jtp, vartheta11

ctx = QContext.from_q(0.2 + 0.05j)
print("tau =", ctx.tau)
print("q   =", ctx.q)

# q^(1/8) without any branch ambiguity
print("q^(1/8) =", q_power(ctx, 0.125))

# q-Pochhammer symbols: finite, infinite, and negative index
a = 0.3 + 0.1j
print("(a;q)_5   =", qpoch(ctx, a, 5))
print("(a;q)_inf =", qpoch(ctx, a, INF))
print("(a;q)_-3  =", qpoch(ctx, a, -3))

# the inversion law (a;q)_{-n} (a q^{-n}; q)_n = 1
lhs = qpoch(ctx, a, -3) * qpoch(ctx, a * ctx.q ** -3, 3)
print("inversion law check:", lhs)

# three flavors of theta function and how they relate
y = 0.4 - 0.2j
print("theta_div(y)      =", theta_div(ctx, y))
print("theta_jtp(-y)     =", theta_jtp(ctx, -y))
print("ratio (should be (q)_inf):",
      theta_jtp(ctx, -y) / theta_div(ctx, y), "vs", qpoch(ctx, ctx.q, INF))

# the odd Jacobi theta in additive coordinates
u = 0.23 + 0.04j
print("vartheta11(u)  =", vartheta11(ctx, u))
print("vartheta11(-u) =", vartheta11(ctx, -u), "(odd function)")
