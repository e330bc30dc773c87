"""Computing exact spectral moments, three ways.

Builds a few named hypergraphs, computes their moment polynomials by
assignment enumeration, by the infragraph decomposition, and by the
closed forms, and shows the slices the polynomial carries: the degree
moment at alpha=1, the adjacency moment at alpha=0, and the
signless-Laplacian scaling at alpha=1/2.
"""

from fractions import Fraction

from alphatrace import (
    adjacency_moment,
    degree_moment,
    hypercycle,
    hyperpath,
    hyperstar,
    signless_laplacian_moment,
    trace_bruteforce,
    trace_closed,
    trace_structural,
)

half = Fraction(1, 2)

for name, h in [
    ("single 3-uniform edge", hyperpath(3, 1)),
    ("hyperpath P_3 (k=3)", hyperpath(3, 3)),
    ("hyperstar S_3 (k=3)", hyperstar(3, 3)),
    ("hypercycle C_4 (k=3)", hypercycle(3, 4)),
]:
    print(f"== {name}: n={h.n}, degrees {sorted(h.degrees(), reverse=True)}")
    for d in range(0, h.k + 3):
        structural = trace_structural(h, d)
        if d >= 1:
            assert structural == trace_bruteforce(h, d)
            assert structural == trace_closed(h, d)
        print(f"  Tr_{d} = {structural.pretty()}")
    d = h.k + 2
    poly = trace_structural(h, d)
    print(f"  slices at order {d}:")
    print(f"    alpha=1 (degree tensor)   : {poly.evaluate(Fraction(1))} == {degree_moment(h, d)}")
    print(f"    alpha=0 (adjacency tensor): {poly.evaluate(Fraction(0))} == {adjacency_moment(h, d)}")
    q = signless_laplacian_moment(h, d)
    print(f"    D+A moment = {q} == 2^{d} * Tr_{d}(1/2) = {2**d * poly.evaluate(half)}")
    print()
