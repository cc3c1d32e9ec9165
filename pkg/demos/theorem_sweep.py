"""
Sweeping every labelled graph on five and six vertices
======================================================

Each graph with sigma* >= n is either exceptional or gets a verified
partition; the tallies show which construction produced it.
"""

import numpy as np

from twoproper.checks import run_exhaustive, run_random

for n in (5, 6):
    report = run_exhaustive(n, "ind")
    print(f"n={n}")
    for line in report.lines()[2:]:
        print("  " + line)

# the same harness on random graphs, for the degree-sum inequality
report = run_random(500, 14, 0.4, seed=3, statement="prop2")
print("\nprop2 on 500 random graphs:", "ok" if report.ok else report.violations[:3])

# how often does the hypothesis hold as density grows?
from twoproper import random_graph, sigma_star_at_least

ps = np.linspace(0.1, 0.9, 9)
rates = []
for p in ps:
    hits = sum(sigma_star_at_least(g, g.n)[0] for g in (random_graph(10, p, seed) for seed in range(200)))
    rates.append(hits / 200)
print("\np     share with sigma* >= n (n=10)")
for p, r in zip(ps, rates):
    print(f"{p:.1f}   {r:.2f}  {'#' * int(40 * r)}")
