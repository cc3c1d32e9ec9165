"""
From block tree to partition
============================

A connected graph that is not 2-connected is cut into blocks.  Rooting the
block-cut-vertex tree at an end-block and working upward yields one part per
block that owns a non-cut vertex.
"""

from itertools import combinations

from twoproper import Graph, block_decomposition, construct_2pp, root_block_tree, verify_partition
from twoproper.partition import ClaimViolation, tree_construct

# two copies of K5 glued at vertex 4
g = Graph(9, list(combinations(range(5), 2)) + list(combinations(range(4, 9), 2)))

dec = block_decomposition(g)
print("blocks:", [sorted(b) for b in dec.blocks])
print("cut vertices:", sorted(dec.cut_vertices))

tree = root_block_tree(g)
print("root block:", sorted(tree.blocks[tree.root]))
for b in tree.order[1:]:
    print(
        f"  block {sorted(tree.blocks[b])}: parent cut {tree.parent_cut[b]},"
        f" non-cut vertices {sorted(tree.x_sets[b])}, carrier {sorted(tree.carriers[b])}"
    )

p = tree_construct(g, tree)
print("tree partition:", [sorted(part) for part in p.parts], "->", bool(verify_partition(g, p)))
print("blocks with non-cut vertices:", len(tree.tilde_blocks(tree.root)))

# the driver adds the precondition, exceptional and fallback handling
res = construct_2pp(g)
print("construct_2pp:", res.status, res.path, "parts <= alpha* =", res.parts_bound)

# K3 and K4 sharing vertex 2.  Rooted at the triangle, the K4 block's carrier
# is the triangle K4 - 2 and the tree pass works.  Rooted at K4, the triangle
# block's carrier is a single edge, so the pass stops with a claim report.
h = Graph(6, [(0, 1), (1, 2), (0, 2)] + list(combinations(range(2, 6), 2)))
for r in block_decomposition(h).end_blocks():
    t = root_block_tree(h, r)
    try:
        q = tree_construct(h, t)
        print(f"\nroot {sorted(t.blocks[r])}: parts {[sorted(x) for x in q.parts]}")
    except ClaimViolation as err:
        print(f"\nroot {sorted(t.blocks[r])}: {err}")

# the default root is the end-block holding the smallest vertex id; --all-roots
# on the command line tries each one
res = construct_2pp(h, all_roots=True)
print("construct_2pp:", res.status, "via", res.path, [sorted(q) for q in res.partition.parts])
