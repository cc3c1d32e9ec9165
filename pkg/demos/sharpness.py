"""
Why sigma* >= n cannot be lowered to n - 1
==========================================

G_t glues d cliques to a hub through one vertex each; G'_t joins the hub to
every clique vertex.
"""

from twoproper import construct_2pp, sharp_gt, sharp_gt_prime, sigma_star, verify_partition
from twoproper.invariants import alpha_star, format_ext, format_witness
from twoproper.oracle import oracle_min_2pp

for t in [(3, 4), (4, 4, 4), (4, 5)]:
    g = sharp_gt(t)
    value, witness = sigma_star(g)
    budget = max(12, g.n)
    best = oracle_min_2pp(g, max_n=budget)
    print(f"G_t{t}: n={g.n} sigma*={value} witness={format_witness(witness)} oracle={best}")

for t in [(3, 4), (4, 4, 4), (4, 5)]:
    g = sharp_gt_prime(t)
    res = construct_2pp(g)
    best = oracle_min_2pp(g, max_n=max(12, g.n))
    print(
        f"G'_t{t}: n={g.n} sigma*={format_ext(sigma_star(g)[0])} alpha*={alpha_star(g)[0]}"
        f" oracle min={best[0]} constructed={len(res.partition)} verified={bool(verify_partition(g, res.partition))}"
    )

# G_t falls one short of the hypothesis and has no partition at all;
# G'_t meets it with room to spare and needs exactly d parts
