"""Exact finiteness certification for five-vortex strength tuples.

A tuple is certified finite when every nonempty index subset has nonzero
total strength and nonzero pairwise momentum; otherwise it is flagged as a
suspect for supporting a continuum, and the matching catalog diagrams are
listed as diagnostics.
"""

from fractions import Fraction

from vortexcc import VorticitySet, catalog, verdict


def report(vals):
    v = VorticitySet(tuple(Fraction(x) for x in vals))
    r = verdict(v)
    print(f"\nGamma = {vals}")
    print(f"  verdict: {r.verdict}")
    sc = r.subset_check
    if sc.passed:
        print("  all 31 subset sums and 26 pair momenta are nonzero")
    else:
        print(f"  violating subset: J = {set(sc.witness)} ({sc.witness_kind})")
    ids = sorted({m.diagram_id for m in r.matches})
    print(f"  catalog diagrams matched: {ids if ids else 'none'}")


# All positive strengths: finiteness is certified outright.
report((1, 1, 1, 1, 1))
report((1, 2, 3, 4, 5))

# The rhombus-continuum strengths: the triple {1,2,5} has vanishing pairwise
# momentum, and diagrams 5 and 6 (among others) match.
report((2, 2, 2, 2, -1))

# One vanishing pair sum is enough to lose the certificate.
report((1, -1, 2, 3, 4))

# Rationals work exactly.
report((Fraction(1, 2), Fraction(-1, 3), 2, 1, -1))

print("\nCatalog summary")
for d in catalog():
    kinds = "/".join(c.lambda_branch for c in d.clauses)
    eqs = "; ".join(str(p) + " = 0" for p in d.clauses[0].equalities)
    more = f"  (+{len(d.clauses) - 1} clause)" if len(d.clauses) > 1 else ""
    print(f"  {d.id:2d} [{kinds}] {eqs}{more}")
