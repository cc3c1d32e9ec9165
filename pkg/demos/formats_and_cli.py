"""
Reading and writing graphs
==========================
"""

import subprocess
import sys

from twoproper import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from twoproper.exceptional import F5, generate

g = generate(F5())
text = emit_edge_list(g)
print(text)
print("graph6:", emit_graph6(g))
assert parse_edge_list(text) == g == parse_graph6(emit_graph6(g))

# comments, blank lines and repeated edges are fine; an n= header adds isolated vertices
print(parse_edge_list("n=5\n# square\n0 1\n1 2\n2 3\n3 0\n1 0\n"))

# the same library behind the command line
cli = [sys.executable, "-m", "twoproper"]
f5 = subprocess.run(cli + ["gen", "f5"], capture_output=True, text=True, check=True).stdout
for args in (["invariants"], ["partition"], ["partition", "--almost"]):
    out = subprocess.run(cli + args, input=f5, capture_output=True, text=True)
    print("$ twoproper", " ".join(args), f"(exit {out.returncode})")
    print(out.stdout)
