"""
The exceptional graphs
======================

Every graph here satisfies sigma* >= n but has no 2-proper partition with at
most alpha* parts.  They all still have an almost 2-proper partition, in which
one part may be a single edge.
"""

import random

from twoproper import construct_2pp, construct_almost_2pp, recognize, sigma_star
from twoproper import exceptional as ex
from twoproper.invariants import alpha_star, format_ext
from twoproper.oracle import oracle_min_2pp

rng = random.Random(1)

for n in (2, 5, 6, 7, 11, 12):
    family = ex.enumerate_family(n)
    print(f"order {n}: {len(family)} labelled members")
    for cls, g in family[:4]:
        perm = list(range(n))
        rng.shuffle(perm)
        seen = recognize(g.relabel(perm))
        almost = construct_almost_2pp(g)
        print(
            f"  {str(cls):18} sigma*={format_ext(sigma_star(g)[0]):>3} alpha*={alpha_star(g)[0]}"
            f"  relabelled -> {seen}  almost parts {[sorted(p) for p in almost.parts]}"
        )

print("\nF11 isomorphism classes:", [str(c) for c in ex.isomorphism_classes("F11")])
print("F12 isomorphism classes:", len(ex.isomorphism_classes("F12")))

# H(s,t) with 3 <= s <= t and t >= 4 does split into 2-connected parts, just not
# into alpha* = 2 of them
g = ex.generate(ex.H(3, 4))
print("\nH(3,4):", construct_2pp(g).status, "| oracle minimum:", oracle_min_2pp(g)[0], "| alpha*:", alpha_star(g)[0])
print("H(2,5):", "oracle minimum:", oracle_min_2pp(ex.generate(ex.H(2, 5))))
