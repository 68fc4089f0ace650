"""Evaluating basic hypergeometric series, unilateral and bilateral.

The evaluator classifies convergence before summing and reports the
index window it actually used, so you can see how much of the
bilateral sum mattered.
"""

from qpsi import INF, QContext, eval_series, eval_value, phi, psi, qpoch

ctx = QContext.from_q(0.2 + 0.05j)
q = ctx.q

# the q-binomial theorem: 1phi0(a;-;x) = (ax)_inf / (x)_inf
a, x = 0.4 + 0.1j, 0.3 - 0.2j
spec = phi([a], [], x)
print("1phi0 series :", eval_value(ctx, spec))
print("closed form  :", qpoch(ctx, a * x, INF) / qpoch(ctx, x, INF))

# the classical bilateral summation: 1psi1 has a product evaluation
a, b, z = 2.1 + 0.3j, 0.08 + 0.02j, 0.4 + 0.1j
report = eval_series(ctx, psi([a], [b], z))
print("\n1psi1 value  :", report.value)
print("index window : [%d, %d]" % (report.n_min, report.n_max))
print("tail bound   :", report.tail_estimate)

product = (qpoch(ctx, q, INF) * qpoch(ctx, b / a, INF)
           * qpoch(ctx, a * z, INF) * qpoch(ctx, q / (a * z), INF)) / (
    qpoch(ctx, b, INF) * qpoch(ctx, q / a, INF)
    * qpoch(ctx, z, INF) * qpoch(ctx, b / (a * z), INF))
print("product side :", product)

# outside the convergence annulus the evaluator refuses to sum
from qpsi.errors import NonConvergence
try:
    eval_series(ctx, psi([0.5], [0.3], 1.5))
except NonConvergence as exc:
    print("\nrejected as expected:", exc)
