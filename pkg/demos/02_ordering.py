"""Ranking whole families in the spectral-moment order.

Enumerates every 3-uniform hypertree and linear unicyclic hypergraph
with four edges (one representative per isomorphism class), ranks them
at alpha = 1/2, and prints where each one first separates from its
neighbor.  The symbolic comparator then certifies that the verdicts
hold for every alpha in (0, 1), not just the sampled one.
"""

from fractions import Fraction

from alphatrace import (
    compare_symbolic,
    enumerate_hypertrees,
    enumerate_linear_unicyclic,
    sort_family,
)

half = Fraction(1, 2)

for title, family in [
    ("3-uniform hypertrees, m=4", enumerate_hypertrees(3, 4)),
    ("3-uniform linear unicyclic, m=4", enumerate_linear_unicyclic(3, 4)),
    ("3-uniform linear unicyclic, m=5", enumerate_linear_unicyclic(3, 5)),
]:
    ranked = sort_family(family, half, 8)
    print(f"== {title}: {len(family)} classes")
    flat = [i for g in ranked.groups for i in g]
    for rank, i in enumerate(flat):
        h = family[i]
        print(f"  #{rank}: degrees {sorted(h.degrees(), reverse=True)}  edges {list(h.edges)}")
    for a, b in zip(flat, flat[1:]):
        verdict = ranked.verdict(a, b)
        sym = compare_symbolic(family[a], family[b], 8)
        print(
            f"  #{flat.index(a)} < #{flat.index(b)}: first differing order "
            f"{verdict.first_diff_order}; on all of (0,1): {sym.relation}"
        )
    print()
