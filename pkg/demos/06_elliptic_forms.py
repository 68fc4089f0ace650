"""Elliptic specializations: Weierstrass p differences and a Jacobi
combination, each computable several independent ways.

The theta-quotient oracle is the reference; the series forms must all
reproduce it.  The last section settles a sign/argument ambiguity by
brute comparison: exactly one candidate survives.
"""

from qpsi import QContext
from qpsi import elliptic as ell

ctx = QContext.from_q(0.2 + 0.05j)
ec = ell.EllipticContext(ctx)
u, v = 0.17 + 0.03j, 0.31 - 0.02j

print("p(u) - p(v) by five routes:")
print("  theta oracle   :", ell.wp_diff_oracle(ec, u, v))
print("  2psi6 pair     :", ell.wp_diff_psi26(ec, u, v))
print("  bilateral sum  :", ell.wp_diff_bilateral(ec, u, v))
print("  split sum      :", ell.wp_diff_split(ec, u, v))
print("  6psi6 special  :", ell.wp_diff_bailey(ec, u, v))

# M(u) = const * mu(u, u) is doubly periodic and even,
# and M(u) - M(v) reproduces the p-difference
m_u, m_v = ell.m_func(ec, u), ell.m_func(ec, v)
print("\nM(u) - M(v)      :", m_u - m_v)
print("M(u + 1) - M(u)  :", abs(ell.m_func(ec, u + 1) - m_u))
print("M(u + tau) - M(u):", abs(ell.m_func(ec, u + ctx.tau) - m_u))
print("M(-u) - M(u)     :", abs(ell.m_func(ec, -u) - m_u))

# the Jacobi dn/(sn cn) combination, three series forms plus a
# mu-function oracle
f1, f2, f3 = ell.jacobi_combo_forms(ec, u)
print("\nJacobi combination:")
print("  4psi8 form     :", f1)
print("  bilateral form :", f2)
print("  split form     :", f3)
print("  mu oracle      :", ell.jacobi_combo_oracle(ec, u))

# which argument does the 2psi6 relation actually take?
res = ell.resolve_curious_relation(ctx, seed=0, draws=8)
print("\nargument resolution over", res["draws"], "draws:")
print("  passing  :", res["passing"],
      " worst err", res["worst_error_passing"])
print("  rejected :", res["rejected"],
      " worst err", res["worst_error_rejected"])
