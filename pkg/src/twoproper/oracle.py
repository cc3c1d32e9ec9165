"""Brute-force reference computations for small graphs.

Nothing here shares code with the branch-and-bound searches in
:mod:`twoproper.invariants` or the constructive partitioner; the point is to
have a second, obviously-correct route to every value.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import Graph, iter_bits, reach_mask

INF = float("inf")

DEFAULT_PARTITION_MAX_N = 12
DEFAULT_INVARIANT_MAX_N = 16


class BudgetExceeded(ValueError):
    """Input too large (or search too slow) for a brute-force routine."""


@dataclass(frozen=True)
class OracleBudget:
    partition_max_n: int = DEFAULT_PARTITION_MAX_N
    invariant_max_n: int = DEFAULT_INVARIANT_MAX_N
    time_limit: Optional[float] = None

    @classmethod
    def from_env(cls) -> "OracleBudget":
        """Default budget, with ``PP_ORACLE_MAX_N`` overriding the partition limit."""
        raw = os.environ.get("PP_ORACLE_MAX_N")
        if raw is None:
            return cls()
        return cls(partition_max_n=int(raw))


def _check(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise BudgetExceeded(f"{what}: n={g.n} exceeds oracle budget {limit}")


def independent_sets(g: Graph) -> Iterator[int]:
    """Every independent set of ``g`` (the empty set included) as a bitmask."""
    n = g.n
    adj = g.adj

    def walk(i: int, chosen: int) -> Iterator[int]:
        if i == n:
            yield chosen
            return
        yield from walk(i + 1, chosen)
        if not adj[i] & chosen:
            yield from walk(i + 1, chosen | (1 << i))

    yield from walk(0, 0)


def oracle_sigma_star(g: Graph, max_n: int = DEFAULT_INVARIANT_MAX_N) -> float | int:
    """sigma* by listing every independent set."""
    _check(g, max_n, "oracle_sigma_star")
    deg = g.degrees
    best: float | int = INF
    for s in independent_sets(g):
        if not s:
            continue
        members = list(iter_bits(s))
        if len(members) >= min(deg[v] for v in members) + 1:
            best = min(best, sum(deg[v] for v in members))
    return best


def oracle_alpha_star(g: Graph, max_n: int = DEFAULT_INVARIANT_MAX_N) -> int:
    """alpha* by listing every independent set."""
    _check(g, max_n, "oracle_alpha_star")
    if g.n == 0:
        raise ValueError("alpha* of the empty graph is undefined")
    deg = g.degrees
    best = 0
    for s in independent_sets(g):
        members = list(iter_bits(s))
        if sum(deg[v] for v in members) <= g.n - 1:
            best = max(best, len(members))
    return best


def _two_connected_by_deletion(g: Graph, mask: int) -> bool:
    """|S| > 2, G[S] connected, and G[S - v] connected for every v."""
    if mask.bit_count() <= 2:
        return False
    adj = g.adj
    for v in iter_bits(mask):
        # a vertex of degree < 2 inside S already breaks 2-connectivity
        if (adj[v] & mask).bit_count() < 2:
            return False
    start = (mask & -mask).bit_length() - 1
    if reach_mask(g, start, mask) != mask:
        return False
    for v in iter_bits(mask):
        rest = mask & ~(1 << v)
        s = (rest & -rest).bit_length() - 1
        if reach_mask(g, s, rest) != rest:
            return False
    return True


def enumerate_biconnected_subsets(
    g: Graph, include_k2: bool = False, max_n: int = DEFAULT_PARTITION_MAX_N
) -> list[frozenset[int]]:
    """All vertex sets inducing a 2-connected subgraph.

    With ``include_k2`` the edges (2-sets inducing K2) are listed too.
    """
    return [frozenset(iter_bits(m)) for m in _biconnected_masks(g, include_k2, max_n)]


def _biconnected_masks(g: Graph, include_k2: bool, max_n: int) -> list[int]:
    _check(g, max_n, "enumerate_biconnected_subsets")
    out = []
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        if size == 2:
            if include_k2:
                u, v = iter_bits(mask)
                if g.adj[u] >> v & 1:
                    out.append(mask)
        elif size >= 3 and _two_connected_by_deletion(g, mask):
            out.append(mask)
    return out


def oracle_min_2pp(
    g: Graph,
    allow_k2_first: bool = False,
    max_n: int = DEFAULT_PARTITION_MAX_N,
    time_limit: Optional[float] = None,
) -> Optional[tuple[int, list[frozenset[int]]]]:
    """Exact minimum (almost) 2-proper partition, or ``None`` if none exists.

    Parts are chosen so that each one's smallest vertex is the smallest
    vertex not yet covered.  With ``allow_k2_first`` at most one part may
    induce K2; it is returned in position 0.
    """
    _check(g, max_n, "oracle_min_2pp")
    if g.n == 0:
        return 0, []
    deadline = None if time_limit is None else time.monotonic() + time_limit
    by_low: list[list[int]] = [[] for _ in range(g.n)]
    for m in _biconnected_masks(g, allow_k2_first, max_n):
        by_low[(m & -m).bit_length() - 1].append(m)

    best: list = [g.n + 1, None]
    chosen: list[int] = []

    def search(uncovered: int, used_k2: bool) -> None:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("oracle_min_2pp: time limit reached")
        if not uncovered:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), list(chosen)
            return
        if len(chosen) + 1 >= best[0]:
            return
        low = (uncovered & -uncovered).bit_length() - 1
        for m in by_low[low]:
            if m & ~uncovered:
                continue
            k2 = m.bit_count() == 2
            if k2 and used_k2:
                continue
            chosen.append(m)
            search(uncovered & ~m, used_k2 or k2)
            chosen.pop()

    search(g.vertex_mask, False)
    if best[1] is None:
        return None
    parts = [frozenset(iter_bits(m)) for m in best[1]]
    parts.sort(key=lambda p: (len(p) != 2, min(p)))
    return best[0], parts
