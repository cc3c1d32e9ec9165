"""Batch checks of the partition theorem and its companion statements.

Each statement is evaluated graph by graph with this package's own
primitives (plus the oracle where a statement needs an exact minimum), and
the per-graph results are merged into a :class:`TheoremCheckReport`.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from . import exceptional
from .graph import Graph, block_decomposition, component_masks, emit_graph6, is_connected, iter_bits
from .invariants import INF, alpha_star, min_degree, pi2, sigma2, sigma_star, sigma_star_at_least
from .generators import random_graphs
from .oracle import DEFAULT_PARTITION_MAX_N, oracle_min_2pp
from .partition import (
    Exceptional,
    PartitionKind,
    Partitioned,
    construct_2pp,
    construct_almost_2pp,
    verify_partition,
)

STATEMENTS = ("ind", "prop1", "prop2", "lemmas", "corollary-pi", "corollary-sigma", "almost")
EXHAUSTIVE_DEFAULT_MAX = 6
EXHAUSTIVE_HARD_MAX = 7


@dataclass
class TheoremCheckReport:
    corpus: str
    statement: str
    total: int = 0
    tallies: Counter = field(default_factory=Counter)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "TheoremCheckReport") -> None:
        self.total += other.total
        self.tallies.update(other.tallies)
        self.violations.extend(other.violations)
        self.violations.sort()

    def lines(self) -> list[str]:
        out = [f"corpus={self.corpus}", f"statement={self.statement}", f"total={self.total}"]
        out += [f"{k}={self.tallies[k]}" for k in sorted(self.tallies)]
        out.append(f"violations={len(self.violations)}")
        out += [f"violation={v}" for v in self.violations]
        return out


def _meets_sigma2_condition(n: int, delta: int, s2) -> bool:
    # sigma_2 >= n/delta + delta - 1, multiplied through by delta >= 1
    return s2 == INF or delta * s2 >= n + delta * delta - delta


def _check_ind(g: Graph, out: TheoremCheckReport, oracle_max_n: int) -> None:
    n = g.n
    ok, _ = sigma_star_at_least(g, n)
    if not ok:
        out.tallies["precondition_failed"] += 1
        return
    out.tallies["hypothesis"] += 1
    res = construct_2pp(g, oracle_max_n=oracle_max_n)
    if isinstance(res, Exceptional):
        out.tallies["exceptional"] += 1
        return
    if isinstance(res, Partitioned):
        bound, _ = alpha_star(g)
        if verify_partition(g, res.partition) and len(res.partition) <= bound:
            out.tallies[f"partitioned_{res.path}"] += 1
            return
        out.violations.append(f"{emit_graph6(g)} partition failed re-verification")
        return
    out.tallies["construction_failed"] += 1
    out.violations.append(f"{emit_graph6(g)} {res.status}: {getattr(res, 'diagnostic', '')}")


def _check_prop1(g: Graph, out: TheoremCheckReport, oracle_max_n: int) -> None:
    n = g.n
    delta = min_degree(g)
    s2, p2 = sigma2(g), pi2(g)
    if delta >= 1 and _meets_sigma2_condition(n, delta, s2):
        out.tallies["hypothesis_a"] += 1
        if not p2 >= n - delta:
            out.violations.append(f"{emit_graph6(g)} prop1(a): pi2={p2} < n-delta={n - delta}")
    if p2 >= n - delta:
        out.tallies["hypothesis_b"] += 1
        if not sigma_star_at_least(g, n)[0]:
            out.violations.append(f"{emit_graph6(g)} prop1(b): sigma* < n although pi2 >= n-delta")


def _check_prop2(g: Graph, out: TheoremCheckReport, oracle_max_n: int) -> None:
    n = g.n
    if g.is_complete() or min_degree(g) < 1:
        return
    out.tallies["hypothesis"] += 1
    a, _ = alpha_star(g)
    s2 = sigma2(g)
    if a * s2 > 2 * (n - 1):
        out.violations.append(f"{emit_graph6(g)} prop2: alpha*={a}, sigma2={s2}")


def _check_lemmas(g: Graph, out: TheoremCheckReport, oracle_max_n: int) -> None:
    comps = component_masks(g)
    pieces = [g.induced(iter_bits(c))[0] for c in comps]
    ss, _ = sigma_star(g)
    if ss > min((sigma_star(p)[0] for p in pieces), default=INF):
        out.violations.append(f"{emit_graph6(g)} lemma1")
    a, _ = alpha_star(g)
    if a < sum(alpha_star(p)[0] for p in pieces):
        out.violations.append(f"{emit_graph6(g)} lemma2")
    if is_connected(g) and block_decomposition(g).cut_vertices:
        out.tallies["lemma3_hypothesis"] += 1
        if a < 2:
            out.violations.append(f"{emit_graph6(g)} lemma3")
    out.tallies["hypothesis"] += 1


def _allowed_corollary_pi(cls: exceptional.ExceptionalClass) -> bool:
    return cls.kind in ("K2", "F5", "F11", "F12") or exceptional.in_balanced_family(cls)


def _allowed_corollary_sigma(cls: exceptional.ExceptionalClass) -> bool:
    return cls.kind in ("F5", "F11", "F12") or (exceptional.in_balanced_family(cls) and cls.order in (6, 8))


def _check_corollary_pi(g: Graph, out: TheoremCheckReport, oracle_max_n: int) -> None:
    n = g.n
    delta = min_degree(g)
    if not pi2(g) >= n - delta:
        return
    out.tallies["hypothesis"] += 1
    res = construct_2pp(g, oracle_max_n=oracle_max_n)
    if isinstance(res, Partitioned):
        out.tallies["partitioned"] += 1
    elif isinstance(res, Exceptional) and _allowed_corollary_pi(res.cls):
        out.tallies["exceptional"] += 1
    else:
        out.violations.append(f"{emit_graph6(g)} corollary-pi: {res.status} {getattr(res, 'cls', '')}")


def _check_corollary_sigma(g: Graph, out: TheoremCheckReport, oracle_max_n: int) -> None:
    n = g.n
    if g.is_complete():
        return
    delta = min_degree(g)
    s2 = sigma2(g)
    if delta < 1 or not _meets_sigma2_condition(n, delta, s2):
        return
    out.tallies["hypothesis"] += 1
    res = construct_2pp(g, oracle_max_n=oracle_max_n)
    if isinstance(res, Partitioned) and len(res.partition) * s2 <= 2 * (n - 1):
        out.tallies["partitioned"] += 1
        return
    if isinstance(res, Exceptional):
        if _allowed_corollary_sigma(res.cls):
            out.tallies["exceptional"] += 1
            return
        if n > oracle_max_n:
            out.tallies["skipped_budget"] += 1
            return
        hit = oracle_min_2pp(g, max_n=oracle_max_n)
        if hit is not None and hit[0] * s2 <= 2 * (n - 1):
            out.tallies["exceptional_partitioned"] += 1
            return
    out.violations.append(f"{emit_graph6(g)} corollary-sigma: {res.status}")


def _check_almost(g: Graph, out: TheoremCheckReport, oracle_max_n: int) -> None:
    n = g.n
    if not sigma_star_at_least(g, n)[0]:
        return
    out.tallies["hypothesis"] += 1
    if exceptional.recognize(g) is not None:
        out.tallies["exceptional"] += 1
    try:
        p = construct_almost_2pp(g, oracle_max_n=oracle_max_n)
    except Exception as exc:  # any failure is a reported violation
        out.violations.append(f"{emit_graph6(g)} almost: {exc}")
        return
    bound, _ = alpha_star(g)
    if p.kind is not PartitionKind.ALMOST or not verify_partition(g, p) or len(p) > bound:
        out.violations.append(f"{emit_graph6(g)} almost: invalid partition {p}")
    else:
        out.tallies["partitioned"] += 1


_CHECKS: dict[str, Callable[[Graph, TheoremCheckReport, int], None]] = {
    "ind": _check_ind,
    "prop1": _check_prop1,
    "prop2": _check_prop2,
    "lemmas": _check_lemmas,
    "corollary-pi": _check_corollary_pi,
    "corollary-sigma": _check_corollary_sigma,
    "almost": _check_almost,
}


def check_graphs(
    graphs: Iterable[Graph], statement: str, corpus: str = "custom", oracle_max_n: int = DEFAULT_PARTITION_MAX_N
) -> TheoremCheckReport:
    if statement not in _CHECKS:
        raise ValueError(f"unknown statement {statement!r}; choose from {', '.join(STATEMENTS)}")
    check = _CHECKS[statement]
    report = TheoremCheckReport(corpus, statement)
    for g in graphs:
        report.total += 1
        if g.n == 0:
            report.tallies["skipped_empty"] += 1
            continue
        check(g, report, oracle_max_n)
    report.violations.sort()
    return report


def _exhaustive_chunk(args: tuple[int, int, int, str, int]) -> TheoremCheckReport:
    n, lo, hi, statement, oracle_max_n = args
    pairs = list(combinations(range(n), 2))

    def graphs() -> Iterable[Graph]:
        for code in range(lo, hi):
            masks = [0] * n
            for k, (u, v) in enumerate(pairs):
                if code >> k & 1:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
            yield Graph.from_masks(masks, check=False)

    return check_graphs(graphs(), statement, f"exhaustive:{n}", oracle_max_n)


def run_exhaustive(
    n: int,
    statement: str,
    allow_large: bool = False,
    jobs: int = 1,
    oracle_max_n: int = DEFAULT_PARTITION_MAX_N,
) -> TheoremCheckReport:
    """Check ``statement`` on every labelled graph of order ``n``."""
    limit = EXHAUSTIVE_HARD_MAX if allow_large else EXHAUSTIVE_DEFAULT_MAX
    if n > limit:
        raise ValueError(f"exhaustive corpus for n={n} too large (limit {limit}; n=7 needs the opt-in flag)")
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 1 << (n * (n - 1) // 2)
    chunks = max(1, jobs * 8)
    step = -(-total // chunks)
    tasks = [(n, lo, min(lo + step, total), statement, oracle_max_n) for lo in range(0, total, step)]
    report = TheoremCheckReport(f"exhaustive:{n}", statement)
    if jobs <= 1:
        parts = map(_exhaustive_chunk, tasks)
        for part in parts:
            report.merge(part)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_exhaustive_chunk, tasks):
                report.merge(part)
    return report


def run_random(
    count: int,
    n: int,
    p: float,
    seed: int,
    statement: str,
    oracle_max_n: int = DEFAULT_PARTITION_MAX_N,
) -> TheoremCheckReport:
    """Check ``statement`` on ``count`` seeded G(n, p) graphs."""
    graphs = random_graphs(count, [n], [p], seed)
    return check_graphs(graphs, statement, f"random:{count}:{n}:{p}:seed={seed}", oracle_max_n)
