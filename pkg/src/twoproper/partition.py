"""2-proper and almost 2-proper partitions: verification and construction.

The constructive route follows the block-cut-vertex tree bottom-up.  Each
non-root block ``B`` gets a partition of ``G(B) - u_B`` (``minus``) and, when
``B`` has non-cut vertices, a partition of ``G(B)`` (``plus``).  The result
for the whole graph is the root block plus the ``minus`` partitions of the
blocks hanging off the root's cut vertex.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from . import exceptional
from .exceptional import ExceptionalClass
from .graph import (
    Graph,
    RootedBlockTree,
    block_decomposition,
    component_masks,
    from_mask,
    is_biconnected,
    is_biconnected_subset,
    is_connected,
    iter_bits,
    root_block_tree,
    to_mask,
)
from .invariants import IndependentSetReport, alpha_star, sigma_star_at_least
from .oracle import DEFAULT_PARTITION_MAX_N, BudgetExceeded, oracle_min_2pp

log = logging.getLogger(__name__)


class PartitionKind(enum.Enum):
    TWO_PROPER = "2proper"
    ALMOST = "almost"


@dataclass(frozen=True)
class Partition:
    parts: tuple[frozenset[int], ...]
    kind: PartitionKind = PartitionKind.TWO_PROPER

    def __len__(self) -> int:
        return len(self.parts)

    @classmethod
    def normalized(cls, parts: Iterable[Iterable[int]], kind: PartitionKind = PartitionKind.TWO_PROPER) -> "Partition":
        """Parts sorted by smallest vertex; in almost mode a 2-vertex part goes first."""
        ps = [frozenset(p) for p in parts]
        if kind is PartitionKind.ALMOST:
            ps.sort(key=lambda p: (len(p) != 2, min(p)))
        else:
            ps.sort(key=min)
        return cls(tuple(ps), kind)

    def as_kind(self, kind: PartitionKind) -> "Partition":
        return Partition.normalized(self.parts, kind)


@dataclass(frozen=True)
class Verification:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_partition(g: Graph, p: Partition) -> Verification:
    """Check coverage, disjointness and the per-part connectivity rule of ``p.kind``."""
    problems: list[str] = []
    seen: dict[int, int] = {}
    for i, part in enumerate(p.parts):
        if not part:
            problems.append(f"part {i} is empty")
        for v in part:
            if not 0 <= v < g.n:
                problems.append(f"vertex {v} in part {i} is not in the graph")
            elif v in seen:
                problems.append(f"vertex {v} appears in parts {seen[v]} and {i}")
            else:
                seen[v] = i
    missing = sorted(set(range(g.n)) - set(seen))
    if missing:
        problems.append(f"vertex {missing[0]} is not covered" + (f" (and {len(missing) - 1} more)" if len(missing) > 1 else ""))
    if problems:
        return Verification(False, tuple(problems))
    for i, part in enumerate(p.parts):
        if is_biconnected_subset(g, part):
            continue
        if p.kind is PartitionKind.ALMOST and i == 0 and len(part) == 2:
            u, v = sorted(part)
            if g.has_edge(u, v):
                continue
        problems.append(f"part {i} {sorted(part)} does not induce a 2-connected subgraph")
    return Verification(not problems, tuple(problems))


# ---------------------------------------------------------------------------
# outcomes


@dataclass(frozen=True)
class Partitioned:
    partition: Partition
    parts_bound: int
    path: str
    status: str = field(default="partitioned", init=False)


@dataclass(frozen=True)
class Exceptional:
    cls: ExceptionalClass
    status: str = field(default="exceptional", init=False)


@dataclass(frozen=True)
class PreconditionFailed:
    witness: IndependentSetReport
    status: str = field(default="precondition-failed", init=False)


@dataclass(frozen=True)
class ConstructionFailure:
    diagnostic: str
    status: str = field(default="construction-failed", init=False)


PartitionOutcome = Union[Partitioned, Exceptional, PreconditionFailed, ConstructionFailure]


class ClaimViolation(Exception):
    """The tree construction hit a block where one of its structural
    requirements does not hold."""

    def __init__(self, claim: str, block: Optional[int], detail: str):
        super().__init__(f"{claim} fails at block {block}: {detail}")
        self.claim = claim
        self.block = block
        self.detail = detail


class PreconditionError(ValueError):
    def __init__(self, witness: IndependentSetReport):
        super().__init__(f"sigma* < n: large independent set {sorted(witness.vertices)} has weight {witness.weight}")
        self.witness = witness


# ---------------------------------------------------------------------------
# the tree construction


def tree_construct(g: Graph, tree: RootedBlockTree) -> Partition:
    """2-proper partition from the rooted block tree, one part per block with
    non-cut vertices.  Raises :class:`ClaimViolation` when a needed carrier or
    child block is missing or too small."""
    blocks = tree.blocks
    cut = tree.decomposition.cut_vertices
    plus: dict[int, list[frozenset[int]]] = {}
    minus: dict[int, list[frozenset[int]]] = {}

    def chosen_child(x: int, b: int, claim: str) -> int:
        for c in tree.child_blocks[x]:
            if tree.x_sets[c]:
                return c
        raise ClaimViolation(claim, b, f"no block below cut vertex {x} has a non-cut vertex")

    for b in reversed(tree.order[1:]):
        u = tree.parent_cut[b]
        block = blocks[b]
        inner = sorted(block - {u})
        below = {x: tree.child_blocks[x] for x in inner if x in cut}
        xs = tree.x_sets[b]
        if xs:
            if len(block) < 3:
                raise ClaimViolation("claim5", b, f"block {sorted(block)} with non-cut vertices is a bridge")
            parts = [block]
            for x in below:
                for c in below[x]:
                    parts += minus[c]
            plus[b] = parts
            carrier = tree.carriers[b]
            if carrier is None:
                raise ClaimViolation("claim4", b, f"no block of B - {u} contains {sorted(xs)}")
            if len(carrier) < 3:
                raise ClaimViolation("claim7", b, f"carrier {sorted(carrier)} has fewer than 3 vertices")
            parts = [carrier]
            for x in below:
                pick = chosen_child(x, b, "claim6") if x not in carrier else None
                for c in below[x]:
                    parts += plus[c] if c == pick else minus[c]
            minus[b] = parts
        else:
            parts = []
            for x in inner:
                pick = chosen_child(x, b, "claim5")
                for c in below[x]:
                    parts += plus[c] if c == pick else minus[c]
            minus[b] = parts

    root = tree.root
    if len(blocks[root]) < 3:
        raise ClaimViolation("claim2", root, "root end-block has fewer than 3 vertices")
    (u0,) = tree.decomposition.cut_vertices_of(root)
    parts = [blocks[root]]
    for c in tree.child_blocks[u0]:
        parts += minus[c]
    return Partition.normalized(parts)


# ---------------------------------------------------------------------------
# fallbacks


def _end_triangle_rule(g: Graph) -> Optional[list[frozenset[int]]]:
    dec = block_decomposition(g)
    for b in dec.end_blocks():
        block = dec.blocks[b]
        if len(block) == 3:
            rest = g.vertex_mask & ~to_mask(block)
            if is_biconnected_subset(g, rest):
                return [block, from_mask(rest)]
    return None


def _clique_components_rule(g: Graph, bound: int) -> Optional[list[frozenset[int]]]:
    # a block B whose removal leaves only 2-connected components
    dec = block_decomposition(g)
    for block in dec.blocks:
        if len(block) < 3:
            continue
        comps = component_masks(g, g.vertex_mask & ~to_mask(block))
        if 1 + len(comps) > bound:
            continue
        if all(is_biconnected_subset(g, c) for c in comps):
            return [block] + [from_mask(c) for c in comps]
    return None


# ---------------------------------------------------------------------------
# drivers


def _map_parts(parts: Iterable[Iterable[int]], ids: list[int]) -> list[frozenset[int]]:
    return [frozenset(ids[v] for v in p) for p in parts]


def construct_2pp(
    g: Graph,
    all_roots: bool = False,
    oracle_max_n: int = DEFAULT_PARTITION_MAX_N,
) -> PartitionOutcome:
    """Outcome of trying to split ``g`` into 2-connected parts, at most alpha* of them.

    Order of checks: sigma* >= n, exceptional graphs, components, the
    2-connected case, the block-tree construction, then fallbacks.
    """
    n = g.n
    if n == 0:
        return Partitioned(Partition(()), 0, "empty")
    ok, witness = sigma_star_at_least(g, n)
    if not ok:
        assert witness is not None
        return PreconditionFailed(witness)
    cls = exceptional.recognize(g)
    if cls is not None:
        return Exceptional(cls)
    bound, _ = alpha_star(g)

    if not is_connected(g):
        parts: list[frozenset[int]] = []
        for comp in component_masks(g):
            sub, ids = g.induced(iter_bits(comp))
            res = construct_2pp(sub, all_roots=all_roots, oracle_max_n=oracle_max_n)
            if not isinstance(res, Partitioned):
                return ConstructionFailure(f"claim1: component {ids} gave {res.status}")
            parts += _map_parts(res.partition.parts, ids)
        return _finish(g, parts, bound, "components")

    if is_biconnected(g):
        return _finish(g, [frozenset(range(n))], bound, "biconnected")

    failures: list[str] = []
    best: Optional[Partition] = None
    roots = block_decomposition(g).end_blocks() if all_roots else [None]
    for r in roots:
        tree = root_block_tree(g, r)
        try:
            p = tree_construct(g, tree)
        except ClaimViolation as exc:
            log.debug("tree construction failed for root %s: %s", tree.root, exc)
            failures.append(str(exc))
            continue
        if not verify_partition(g, p) or len(p) > bound:
            failures.append(f"root {tree.root}: tree partition failed verification")
            continue
        if best is None or len(p) < len(best):
            best = p
    if best is not None:
        return Partitioned(best, bound, "tree")

    for path, parts_or_none in (
        ("end-triangle", lambda: _end_triangle_rule(g)),
        ("clique-components", lambda: _clique_components_rule(g, bound)),
    ):
        found = parts_or_none()
        if found is not None:
            res = _finish(g, found, bound, path)
            if isinstance(res, Partitioned):
                return res
    if n <= oracle_max_n:
        hit = oracle_min_2pp(g, max_n=oracle_max_n)
        if hit is not None and hit[0] <= bound:
            return _finish(g, hit[1], bound, "oracle")
        failures.append("oracle: no 2-proper partition within alpha*")
    return ConstructionFailure("; ".join(failures) or "no construction applied")


def _finish(g: Graph, parts: list[frozenset[int]], bound: int, path: str) -> PartitionOutcome:
    p = Partition.normalized(parts)
    check = verify_partition(g, p)
    if not check:
        return ConstructionFailure(f"{path}: " + "; ".join(check.problems))
    if len(p) > bound:
        return ConstructionFailure(f"{path}: {len(p)} parts exceed alpha*={bound}")
    return Partitioned(p, bound, path)


def almost_closed_form(g: Graph, cls: ExceptionalClass, phi: list[int]) -> Optional[Partition]:
    """Known almost 2-proper partitions of K2, F5 and the H graphs."""
    everything = frozenset(range(g.n))
    if cls.kind == "K2":
        parts = [everything]
    elif cls.kind == "F5":
        k2 = frozenset((phi[3], phi[4]))
        parts = [k2, everything - k2]
    elif cls.kind == "H":
        k2 = frozenset((phi[2], phi[3]))
        parts = [k2, everything - k2]
    else:
        return None
    return Partition.normalized(parts, PartitionKind.ALMOST)


def construct_almost_2pp(g: Graph, oracle_max_n: int = DEFAULT_PARTITION_MAX_N) -> Partition:
    """Almost 2-proper partition with at most alpha* parts.

    Raises :class:`PreconditionError` when sigma* < n.
    """
    ok, witness = sigma_star_at_least(g, g.n)
    if not ok:
        assert witness is not None
        raise PreconditionError(witness)
    if g.n == 0:
        return Partition((), PartitionKind.ALMOST)
    bound, _ = alpha_star(g)
    hit = exceptional.match(g)
    if hit is not None:
        cls, phi = hit
        p = almost_closed_form(g, cls, phi)
        if p is None:
            if g.n > oracle_max_n:
                raise BudgetExceeded(f"no closed form for {cls} and n={g.n} exceeds the search budget")
            found = oracle_min_2pp(g, allow_k2_first=True, max_n=oracle_max_n)
            if found is None or found[0] > bound:
                raise RuntimeError(f"no almost 2-proper partition of {cls} within alpha*={bound}")
            p = Partition.normalized(found[1], PartitionKind.ALMOST)
        return p
    res = construct_2pp(g, oracle_max_n=oracle_max_n)
    if isinstance(res, Partitioned):
        return res.partition.as_kind(PartitionKind.ALMOST)
    if g.n <= oracle_max_n:
        found = oracle_min_2pp(g, allow_k2_first=True, max_n=oracle_max_n)
        if found is not None and found[0] <= bound:
            return Partition.normalized(found[1], PartitionKind.ALMOST)
    raise RuntimeError(f"no almost 2-proper partition found ({res.status})")


# ---------------------------------------------------------------------------
# serialization


def format_partition(p: Partition) -> str:
    lines = [f"kind={p.kind.value}"] + [" ".join(str(v) for v in sorted(part)) for part in p.parts]
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition`; parts keep their file order."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("kind="):
        raise ValueError("partition file must start with a kind=2proper|almost line")
    try:
        kind = PartitionKind(lines[0][len("kind=") :])
    except ValueError:
        raise ValueError(f"unknown partition kind {lines[0]!r}") from None
    parts = []
    for i, ln in enumerate(lines[1:], start=2):
        try:
            parts.append(frozenset(int(tok) for tok in ln.split()))
        except ValueError:
            raise ValueError(f"line {i}: non-integer vertex id") from None
    return Partition(tuple(parts), kind)
