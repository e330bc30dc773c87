"""The degree-moving transformations and their strict monotonicity.

Applies each transformation to a concrete instance and lets the
comparator confirm the direction: the sigma move (re-attaching pendant
edges at a higher-degree vertex) pushes a hypergraph strictly later in
the order, while the three path slides pull it strictly earlier.  The
printed first-differing order shows which moment detects each move.
"""

from fractions import Fraction

from alphatrace import (
    coalesce,
    compare_at_alpha,
    hyperpath,
    hyperstar,
    sigma_candidates,
    sigma_transform,
)
from alphatrace.transforms import first_path_slide, second_path_slide, third_path_slide

half = Fraction(1, 2)


def show(tag, before, after, smaller_first):
    a, b = (after, before) if smaller_first else (before, after)
    verdict = compare_at_alpha(a, b, half, 8)
    print(f"  {tag}: {verdict.relation} at first differing order {verdict.first_diff_order}")
    print(f"    degrees {sorted(before.degrees(), reverse=True)} -> {sorted(after.degrees(), reverse=True)}")


print("== sigma move on the 3-uniform path P_4")
h = hyperpath(3, 4)
u, v = sigma_candidates(h)[0]
out = sigma_transform(h, u, v)
show(f"move pendants from {u} to {v} (original comes first)", h, out, smaller_first=False)

print("\n== first path slide: pendant edge off a joint")
base = coalesce(hyperpath(3, 2), 2, hyperpath(3, 1), 0)
pe = [base.edges.index(e) for e in hyperpath(3, 2).edges]
out = first_path_slide(base, pe, 2)
show("slide to a degree-1 path vertex (result comes first)", base, out, smaller_first=True)

print("\n== second path slide: attachment from edge 2 to edge 1")
path = hyperpath(3, 3)
base = coalesce(path, 3, hyperpath(3, 1), 0)
pe = [base.edges.index(e) for e in path.edges]
out = second_path_slide(base, pe, 3)
show("degree multiset preserved, separated at order k+2", base, out, smaller_first=True)

print("\n== third path slide: the 3-edge hyperstar unrolled into a path")
star = hyperstar(3, 3)
out = third_path_slide(star, [0, 1], 0)
show("attachment moved one joint outward", star, out, smaller_first=True)
