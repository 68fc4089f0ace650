"""The mock theta catalog: exact coefficient verification and findings.

Every entry records three printed forms of the same function (an
Eulerian series, a fine-structure sum, and a bilateral sum).  The
verifier expands all three over exact rational arithmetic and compares
coefficients.  Where the printed forms disagree, it reports the first
bad exponent with both coefficients, plus a single-edit variant that
restores agreement.
"""

from fractions import Fraction

from qpsi import catalog

entries = catalog.list_entries()
print(f"{len(entries)} catalog entries")

# expand a classic: the third-order function f
s = catalog.expand("order3.f", 12)
print("\norder3.f expansion:", " + ".join(
    f"{c}q^{k}" for k, c in s.terms()))

# clean verification
rep = catalog.verify_entry("order3.omega", 20)
print("\norder3.omega @ q^20:", rep.status)

# an entry whose printed forms disagree
rep = catalog.verify_entry("order2.mu", 20)
print("\norder2.mu @ q^20:", rep.status)
for f in rep.findings:
    print("  first mismatch between", f["pair"], "at exponent", f["exponent"],
          ":", f["left"], "vs", f["right"])
print("  corrected variant:", rep.variant["description"],
      "-> passes:", rep.variant["passes"])

# the base-q^(1/2) entries verify in half-integer orders
rep = catalog.verify_entry("order6.phi_minus", Fraction(10))
print("\norder6.phi_minus @ q^10:", rep.status)

# full sweep at a modest order
reports = catalog.verify_all(16, half_power_order=8)
flagged = [r.name for r in reports if r.status != "pass"]
print(f"\nfull sweep @ q^16: {len(reports)} entries,",
      f"{len(flagged)} with findings: {flagged}")
