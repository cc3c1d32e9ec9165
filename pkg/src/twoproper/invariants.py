"""Degree-based invariants: minimum degree, sigma_2, pi_2, sigma*, alpha* and alpha.

``math.inf`` stands for the +infinity value of sigma_2, pi_2 and sigma* on
graphs without a qualifying pair or set.  Comparisons between ints and
``math.inf`` are exact, and every finite value returned is a Python int.

sigma* and alpha* are found by exact depth-first branch and bound over the
vertices sorted by (degree, id).  Sorting matters for sigma*: the first
vertex put into a set is then one of minimum degree, so a set started at
``v`` is large exactly when it ends up with ``deg(v) + 1`` members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .graph import Graph, iter_bits, to_mask

ExtInt = Union[int, float]
INF = math.inf


@dataclass(frozen=True)
class IndependentSetReport:
    vertices: frozenset[int]
    weight: int
    min_degree: ExtInt
    is_large: bool
    is_light: bool

    def __len__(self) -> int:
        return len(self.vertices)


def independent_set_report(g: Graph, vertices: Iterable[int]) -> IndependentSetReport:
    """Weight/largeness/lightness of a vertex set, which must be independent."""
    vs = frozenset(vertices)
    mask = to_mask(vs)
    for v in vs:
        if g.adj[v] & mask:
            raise ValueError(f"vertex set is not independent (vertex {v})")
    deg = g.degrees
    weight = sum(deg[v] for v in vs)
    low = min((deg[v] for v in vs), default=INF)
    return IndependentSetReport(vs, weight, low, len(vs) >= low + 1, weight <= g.n - 1)


@dataclass(frozen=True)
class InvariantSummary:
    n: int
    delta: int
    sigma2: ExtInt
    pi2: ExtInt
    sigma_star: ExtInt
    sigma_star_witness: Optional[IndependentSetReport]
    alpha_star: int
    alpha_star_witness: IndependentSetReport
    alpha: int


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degrees)


def _pair_scan(g: Graph) -> tuple[ExtInt, ExtInt]:
    deg = g.degrees
    best_sum: ExtInt = INF
    best_prod: ExtInt = INF
    for u in range(g.n):
        non = g.vertex_mask & ~g.adj[u] & ~((2 << u) - 1)
        for v in iter_bits(non):
            s = deg[u] + deg[v]
            p = deg[u] * deg[v]
            if s < best_sum:
                best_sum = s
            if p < best_prod:
                best_prod = p
    return best_sum, best_prod


def sigma2(g: Graph) -> ExtInt:
    """Minimum degree sum over non-adjacent pairs; ``inf`` for complete graphs."""
    return _pair_scan(g)[0]


def pi2(g: Graph) -> ExtInt:
    """Minimum degree product over non-adjacent pairs; ``inf`` for complete graphs."""
    return _pair_scan(g)[1]


def _order(g: Graph) -> list[int]:
    deg = g.degrees
    return sorted(range(g.n), key=lambda v: (deg[v], v))


def _min_large_set(g: Graph, bound: ExtInt, first_hit: bool) -> Optional[tuple[int, int]]:
    """Lightest large independent set with weight ``< bound``.

    Returns ``(weight, mask)`` or ``None``.  With ``first_hit`` the search
    stops at the first qualifying set instead of minimising.
    """
    deg = g.degrees
    adj = g.adj
    order = _order(g)
    best: list = [bound, None]

    def extend(cands: list[int], suffix: list[int], start: int, avail: int, need: int, weight: int, chosen: int) -> bool:
        if need == 0:
            if weight < best[0]:
                best[0] = weight
                best[1] = chosen
                return first_hit
            return False
        for j in range(start, len(cands)):
            c = cands[j]
            if not (avail >> c) & 1:
                continue
            # every remaining candidate has degree >= deg[c]
            if weight + need * deg[c] >= best[0]:
                return False
            if (avail & suffix[j]).bit_count() < need:
                return False
            if extend(cands, suffix, j + 1, avail & ~adj[c], need - 1, weight + deg[c], chosen | (1 << c)):
                return True
            avail &= ~(1 << c)
        return False

    for i, v in enumerate(order):
        k = deg[v]
        if k * (k + 1) >= best[0]:
            break
        later = order[i + 1 :]
        cands = [c for c in later if not (adj[v] >> c) & 1]
        if len(cands) < k:
            continue
        suffix = [0] * (len(cands) + 1)
        for j in range(len(cands) - 1, -1, -1):
            suffix[j] = suffix[j + 1] | (1 << cands[j])
        if extend(cands, suffix, 0, suffix[0], k, k, 1 << v):
            break
    if best[1] is None:
        return None
    return best[0], best[1]


def sigma_star(g: Graph) -> tuple[ExtInt, Optional[IndependentSetReport]]:
    """Minimum weight of a large independent set, with a witness.

    ``(inf, None)`` when the graph has no large independent set.
    """
    hit = _min_large_set(g, INF, first_hit=False)
    if hit is None:
        return INF, None
    weight, mask = hit
    return weight, independent_set_report(g, iter_bits(mask))


def sigma_star_at_least(g: Graph, threshold: int) -> tuple[bool, Optional[IndependentSetReport]]:
    """Decide ``sigma*(g) >= threshold``.

    On failure the second item is a large independent set lighter than
    ``threshold`` (not necessarily the lightest one).
    """
    hit = _min_large_set(g, threshold, first_hit=True)
    if hit is None:
        return True, None
    return False, independent_set_report(g, iter_bits(hit[1]))


def alpha_star(g: Graph) -> tuple[int, IndependentSetReport]:
    """Light independence number and a maximum light independent set."""
    if g.n == 0:
        raise ValueError("alpha* of the empty graph is undefined")
    deg = g.degrees
    adj = g.adj
    order = _order(g)
    budget = g.n - 1
    best = [0, 0]

    def fit_count(start: int, avail: int, room: int) -> int:
        count = 0
        for k in range(start, len(order)):
            c = order[k]
            if (avail >> c) & 1:
                room -= deg[c]
                if room < 0:
                    break
                count += 1
        return count

    def grow(start: int, avail: int, size: int, weight: int, chosen: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, chosen
        for j in range(start, len(order)):
            v = order[j]
            if not (avail >> v) & 1:
                continue
            if weight + deg[v] > budget:
                return
            if size + fit_count(j, avail, budget - weight) <= best[0]:
                return
            grow(j + 1, avail & ~adj[v] & ~(1 << v), size + 1, weight + deg[v], chosen | (1 << v))
            avail &= ~(1 << v)

    grow(0, g.vertex_mask, 0, 0, 0)
    return best[0], independent_set_report(g, iter_bits(best[1]))


def independence_number(g: Graph) -> int:
    adj = g.adj
    best = [0]

    def grow(avail: int, size: int) -> None:
        if size > best[0]:
            best[0] = size
        while avail:
            if size + avail.bit_count() <= best[0]:
                return
            low = avail & -avail
            v = low.bit_length() - 1
            avail ^= low
            grow(avail & ~adj[v], size + 1)

    grow(g.vertex_mask, 0)
    return best[0]


def summarize(g: Graph) -> InvariantSummary:
    """All invariants of a non-empty graph in one record."""
    s2, p2 = _pair_scan(g)
    ss, ss_w = sigma_star(g)
    a_star, a_w = alpha_star(g)
    return InvariantSummary(
        n=g.n,
        delta=min_degree(g),
        sigma2=s2,
        pi2=p2,
        sigma_star=ss,
        sigma_star_witness=ss_w,
        alpha_star=a_star,
        alpha_star_witness=a_w,
        alpha=independence_number(g),
    )


def format_ext(value: ExtInt) -> str:
    return "inf" if value == INF else str(int(value))


def format_witness(report: Optional[IndependentSetReport]) -> str:
    if report is None:
        return "-"
    return ",".join(str(v) for v in sorted(report.vertices))

