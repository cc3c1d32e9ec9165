"""Sharpness graphs and standard graph families.

In ``sharp_gt`` / ``sharp_gt_prime`` the cliques take consecutive ids in the
order given, the attachment vertex of each clique is its lowest id, and the
hub is the last vertex ``n - 1``.

Random graphs come from ``numpy.random.default_rng(seed)`` (PCG64): one
uniform draw per vertex pair in the order (0,1), (0,2), ..., (n-2,n-1), the
edge present when the draw is below ``p``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph


def check_sharpness_spec(t: Sequence[int], strict: bool = False) -> None:
    """Raise ``ValueError`` naming the violated constraint on the clique sizes ``t``.

    ``min(t) >= d + 1`` always applies.  It already forces
    ``n >= d(d+1) + 1``; ``strict`` additionally rejects the equality case
    (all cliques of order ``d + 1``).
    """
    d = len(t)
    if d == 0:
        raise ValueError("t must contain at least one clique size")
    n = 1 + sum(t)
    if min(t) < d + 1:
        raise ValueError(f"min(t)={min(t)} must be at least d+1={d + 1}")
    if strict and not d * (d + 1) + 1 < n:
        raise ValueError(f"d(d+1)+1={d * (d + 1) + 1} must be less than n={n}")


def _cliques(t: Sequence[int]) -> tuple[list[list[int]], list[tuple[int, int]]]:
    groups, edges, start = [], [], 0
    for size in t:
        members = list(range(start, start + size))
        groups.append(members)
        edges += list(combinations(members, 2))
        start += size
    return groups, edges


def sharp_gt(t: Sequence[int], strict: bool = False) -> Graph:
    """Disjoint cliques of orders ``t`` and a hub joined to one vertex of each."""
    check_sharpness_spec(t, strict)
    groups, edges = _cliques(t)
    hub = sum(t)
    edges += [(hub, grp[0]) for grp in groups]
    return Graph(hub + 1, edges)


def sharp_gt_prime(t: Sequence[int], strict: bool = False) -> Graph:
    """Disjoint cliques of orders ``t`` and a hub joined to every clique vertex."""
    check_sharpness_spec(t, strict)
    groups, edges = _cliques(t)
    hub = sum(t)
    edges += [(hub, v) for grp in groups for v in grp]
    return Graph(hub + 1, edges)


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) drawn deterministically from ``seed``."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph(n, [e for e, x in zip(pairs, draws) if x < p])


def random_graphs(count: int, sizes: Sequence[int], probs: Sequence[float], seed: int) -> Iterator[Graph]:
    """``count`` graphs with order and density picked uniformly from ``sizes``/``probs``."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.choice(sizes))
        p = float(rng.choice(probs))
        m = n * (n - 1) // 2
        draws = rng.random(m)
        yield Graph(n, [e for e, x in zip(combinations(range(n), 2), draws) if x < p])


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (2^(n(n-1)/2) of them)."""
    pairs = list(combinations(range(n), 2))
    bits = [(1 << u, 1 << v, u, v) for u, v in pairs]
    for code in range(1 << len(pairs)):
        masks = [0] * n
        k = 0
        c = code
        while c:
            if c & 1:
                bu, bv, u, v = bits[k]
                masks[u] |= bv
                masks[v] |= bu
            c >>= 1
            k += 1
        yield Graph.from_masks(masks, check=False)
