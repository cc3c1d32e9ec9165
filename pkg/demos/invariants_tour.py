"""
Degree-sum invariants on a handful of small graphs
==================================================

sigma2 / pi2 look at non-adjacent pairs, sigma* at "large" independent
sets, alpha* at "light" ones.  Infinite values print as ``inf``.
"""

from twoproper import complete, complete_bipartite, cycle, sharp_gt, summarize
from twoproper.exceptional import F5, H, generate
from twoproper.invariants import format_ext, format_witness

graphs = {
    "K5": complete(5),
    "C6": cycle(6),
    "K3,3": complete_bipartite(3, 3),
    "F5": generate(F5()),
    "H(3,4)": generate(H(3, 4)),
    "G_t(3,4)": sharp_gt((3, 4)),
}

print(f"{'graph':10} {'n':>3} {'delta':>5} {'sigma2':>6} {'pi2':>5} {'sigma*':>6} {'alpha*':>6} {'alpha':>5}")
for name, g in graphs.items():
    s = summarize(g)
    print(
        f"{name:10} {s.n:>3} {s.delta:>5} {format_ext(s.sigma2):>6} {format_ext(s.pi2):>5} "
        f"{format_ext(s.sigma_star):>6} {s.alpha_star:>6} {s.alpha:>5}"
    )

# K3,3 has three independent vertices but any two of them already weigh 6 > n-1,
# so only one fits under the light budget
s = summarize(graphs["K3,3"])
print("\nK3,3: alpha =", s.alpha, "but alpha* =", s.alpha_star)

# the witness for G_t is the hub plus one non-attachment vertex from each clique
s = summarize(graphs["G_t(3,4)"])
print("G_t(3,4) sigma* witness:", format_witness(s.sigma_star_witness), "weight", s.sigma_star_witness.weight)

# F5 has no large independent set at all
print("F5 sigma* witness:", format_witness(summarize(graphs["F5"]).sigma_star_witness))
