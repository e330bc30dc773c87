"""Verifying the cataloged extremal claims by exhaustive search.

Runs the whole claim catalog for 3-uniform hypergraphs with four and
five edges at three weights.  Every verdict is exact; "degenerate"
marks a size at which the designated hypergraph coincides with the
neighboring extreme one, so the claim carries no content there (the
second-last unicyclic claim at m=4 is the one such case).
"""

from fractions import Fraction

from alphatrace import list_claims, verify_theorem

for claim_id, description in list_claims():
    print(f"== claim {claim_id}: {description}")
    for m in (4, 5):
        for alpha in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
            report = verify_theorem(claim_id, 3, m, alpha)
            mark = "PASS" if report.holds else "----"
            summary = ", ".join(f"{c.label}:{c.status}" for c in report.checks)
            print(f"  m={m} alpha={alpha}: {mark} ({summary})")
    print()
