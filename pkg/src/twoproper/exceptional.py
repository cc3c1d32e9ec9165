"""The exceptional graphs K2, F5, F11, F12, H(s,t) and H-(s,t).

Canonical vertex numbering used by :func:`generate`:

* K2: ``0, 1``
* F5: ``a=0``, ``b1..b4 = 1..4``
* F11: ``a=0``, ``b1=1``, ``b2=2``, ``c1..c8 = 3..10``
* F12: ``a=0``, ``b1=1``, ``b2=2``, ``c1..c9 = 3..11``
* H(s,t): ``a=0``, ``b=1``, ``c1=2``, ``c2=3``, then the ``s-1`` vertices of
  S1 followed by the ``t-1`` vertices of S2.

F5's edge set is read as ``{ab_i} + {b1b2, b3b4}``: two triangles sharing
``a``.  F12 follows its printed edge set literally, so ``c9`` is adjacent to
``c7``, ``c8`` and whatever ``L`` adds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, iter_bits

F11_OPTIONAL = ("ab1", "ab2")
F12_OPTIONAL = ("ab1", "ab2", "ac9", "b2c9")

_NAMED = {"a": 0, "b1": 1, "b2": 2}
_NAMED.update({f"c{i}": 2 + i for i in range(1, 10)})


def _edge_by_name(name: str) -> tuple[int, int]:
    # names are "a" / "b1" / "b2" / "c9" glued together
    for split in range(1, len(name)):
        left, right = name[:split], name[split:]
        if left in _NAMED and right in _NAMED:
            return _NAMED[left], _NAMED[right]
    raise ValueError(f"unknown edge name {name!r}")


@dataclass(frozen=True)
class ExceptionalClass:
    """One exceptional graph.

    ``kind`` is ``"K2"``, ``"F5"``, ``"F11"``, ``"F12"`` or ``"H"``; ``L`` is
    the optional edge set for F11/F12; ``s``, ``t`` and ``minus`` describe
    the H family.
    """

    kind: str
    L: frozenset[str] = frozenset()
    s: int = 0
    t: int = 0
    minus: bool = False

    def __post_init__(self) -> None:
        if self.kind in ("K2", "F5"):
            if self.L or self.s or self.t or self.minus:
                raise ValueError(f"{self.kind} takes no parameters")
        elif self.kind == "F11":
            if not self.L <= set(F11_OPTIONAL):
                raise ValueError(f"F11 L must be a subset of {F11_OPTIONAL}")
        elif self.kind == "F12":
            if not self.L <= set(F12_OPTIONAL):
                raise ValueError(f"F12 L must be a subset of {F12_OPTIONAL}")
            if not self.L & {"ac9", "b2c9"}:
                raise ValueError("F12 L must contain ac9 or b2c9")
        elif self.kind == "H":
            if not 2 <= self.s <= self.t:
                raise ValueError(f"H needs 2 <= s <= t, got s={self.s}, t={self.t}")
        else:
            raise ValueError(f"unknown exceptional kind {self.kind!r}")

    @property
    def order(self) -> int:
        return {"K2": 2, "F5": 5, "F11": 11, "F12": 12}.get(self.kind, self.s + self.t + 2)

    def __str__(self) -> str:
        if self.kind in ("F11", "F12"):
            opts = F11_OPTIONAL if self.kind == "F11" else F12_OPTIONAL
            return f"{self.kind}(L={{{','.join(e for e in opts if e in self.L)}}})"
        if self.kind == "H":
            return f"H{'-' if self.minus else ''}({self.s},{self.t})"
        return self.kind


def K2() -> ExceptionalClass:
    return ExceptionalClass("K2")


def F5() -> ExceptionalClass:
    return ExceptionalClass("F5")


def F11(L: Sequence[str] = ()) -> ExceptionalClass:
    return ExceptionalClass("F11", frozenset(L))


def F12(L: Sequence[str]) -> ExceptionalClass:
    return ExceptionalClass("F12", frozenset(L))


def H(s: int, t: int, minus: bool = False) -> ExceptionalClass:
    return ExceptionalClass("H", s=s, t=t, minus=minus)


def generate(cls: ExceptionalClass) -> Graph:
    """The labelled graph of ``cls`` in the canonical numbering above."""
    if cls.kind == "K2":
        return Graph(2, [(0, 1)])
    if cls.kind == "F5":
        return Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
    c = lambda i: 2 + i  # noqa: E731
    if cls.kind in ("F11", "F12"):
        edges = [(0, c(i)) for i in range(1, 9)]
        edges += [(1, c(i)) for i in range(1, 5)]
        edges += [(2, c(i)) for i in range(5, 9)]
        edges += [(c(1), c(2)), (c(3), c(4)), (c(5), c(6))]
        if cls.kind == "F11":
            edges.append((c(7), c(8)))
            n = 11
        else:
            edges += [(c(7), c(9)), (c(8), c(9))]
            n = 12
        edges += [_edge_by_name(e) for e in sorted(cls.L)]
        return Graph(n, edges)
    s, t = cls.s, cls.t
    s1 = list(range(4, 4 + s - 1))
    s2 = list(range(4 + s - 1, 4 + s - 1 + t - 1))
    edges = [(0, x) for x in s1 + s2] + [(1, x) for x in s1 + s2]
    edges += list(combinations(s1, 2)) + list(combinations(s2, 2))
    edges += [(0, 2), (0, 3), (2, 3)]
    if not cls.minus:
        edges.append((0, 1))
    return Graph(s + t + 2, edges)


def _subsets(items: Sequence[str]) -> list[frozenset[str]]:
    return [frozenset(c) for r in range(len(items) + 1) for c in combinations(items, r)]


def f11_classes() -> list[ExceptionalClass]:
    """All four labelled F11 variants."""
    return [F11(sorted(L)) for L in _subsets(F11_OPTIONAL)]


def f12_classes() -> list[ExceptionalClass]:
    """All twelve labelled F12 variants."""
    return [F12(sorted(L)) for L in _subsets(F12_OPTIONAL) if L & {"ac9", "b2c9"}]


def h_classes(n: int) -> list[ExceptionalClass]:
    out = []
    for s in range(2, n):
        t = n - 2 - s
        if t < s:
            break
        out += [H(s, t), H(s, t, minus=True)]
    return out


def enumerate_family(n: int) -> list[tuple[ExceptionalClass, Graph]]:
    """Every labelled exceptional graph of order ``n``."""
    classes: list[ExceptionalClass] = []
    if n == 2:
        classes.append(K2())
    if n == 5:
        classes.append(F5())
    if n == 11:
        classes += f11_classes()
    if n == 12:
        classes += f12_classes()
    if n >= 6:
        classes += h_classes(n)
    return [(c, generate(c)) for c in classes]


def in_balanced_family(cls: ExceptionalClass) -> bool:
    """Membership of the s = t subfamily of the H graphs."""
    return cls.kind == "H" and cls.s == cls.t


# ---------------------------------------------------------------------------
# isomorphism


def _refined_labels(g: Graph) -> list[tuple]:
    deg = g.degrees
    return [(deg[v], tuple(sorted(deg[w] for w in iter_bits(g.adj[v])))) for v in range(g.n)]


def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """A bijection ``phi`` with ``uv in E(g) <=> phi(u)phi(v) in E(h)``, or ``None``.

    Plain backtracking; vertices may only map to vertices with the same
    degree and the same multiset of neighbour degrees.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    lg, lh = _refined_labels(g), _refined_labels(h)
    if sorted(lg) != sorted(lh):
        return None
    n = g.n
    # visit g in BFS order so each new vertex has mapped neighbours to check
    order: list[int] = []
    seen = 0
    for start in sorted(range(n), key=lambda v: -g.degrees[v]):
        if seen >> start & 1:
            continue
        queue = [start]
        seen |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(iter_bits(g.adj[v] & ~seen), key=lambda w: -g.degrees[w]):
                seen |= 1 << w
                queue.append(w)
    candidates = [[w for w in range(n) if lh[w] == lg[v]] for v in range(n)]
    phi = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:k]:
                if (g.adj[v] >> u & 1) != (h.adj[w] >> phi[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _isomorphism_representatives(classes: list[ExceptionalClass]) -> list[ExceptionalClass]:
    reps: list[ExceptionalClass] = []
    graphs: list[Graph] = []
    for c in classes:
        gc = generate(c)
        if not any(are_isomorphic(gc, r) for r in graphs):
            reps.append(c)
            graphs.append(gc)
    return reps


_REPS_CACHE: dict[str, list[ExceptionalClass]] = {}


def isomorphism_classes(kind: str) -> list[ExceptionalClass]:
    """First labelled member of each isomorphism class of F11 or F12."""
    if kind not in _REPS_CACHE:
        members = f11_classes() if kind == "F11" else f12_classes()
        _REPS_CACHE[kind] = _isomorphism_representatives(members)
    return _REPS_CACHE[kind]


# ---------------------------------------------------------------------------
# recognition


def match(g: Graph) -> Optional[tuple[ExceptionalClass, list[int]]]:
    """Recognise ``g`` and return ``(class, phi)`` with ``phi`` mapping the
    canonical vertices of ``generate(class)`` to the vertices of ``g``."""
    n = g.n
    if n == 2 and g.num_edges == 1:
        return K2(), [0, 1]
    fixed: list[ExceptionalClass] = []
    if n == 5:
        fixed = [F5()]
    elif n == 11:
        fixed = isomorphism_classes("F11")
    elif n == 12:
        fixed = isomorphism_classes("F12")
    for c in fixed:
        phi = find_isomorphism(generate(c), g)
        if phi is not None:
            return c, phi
    if n >= 6:
        return _match_h(g)
    return None


def recognize(g: Graph) -> Optional[ExceptionalClass]:
    """The exceptional class ``g`` is isomorphic to, if any."""
    hit = match(g)
    return None if hit is None else hit[0]


def _match_h(g: Graph) -> Optional[tuple[ExceptionalClass, list[int]]]:
    n = g.n
    deg = g.degrees
    adj = g.adj
    full = g.vertex_mask
    for c1 in range(n):
        if deg[c1] != 2:
            continue
        for c2 in iter_bits(adj[c1]):
            if c2 < c1 or deg[c2] != 2:
                continue
            common = adj[c1] & adj[c2]
            if common.bit_count() != 1:
                continue
            a = common.bit_length() - 1
            rest = full & ~(1 << a | 1 << c1 | 1 << c2)
            for b in iter_bits(rest):
                others = rest & ~(1 << b)
                if adj[b] & others != others or adj[a] & others != others:
                    continue
                minus = not (adj[a] >> b & 1)
                cliques = _two_cliques(g, others)
                if cliques is None:
                    continue
                s1, s2 = cliques
                cls = H(len(s1) + 1, len(s2) + 1, minus)
                phi = [a, b, c1, c2] + s1 + s2
                if _is_embedding(generate(cls), g, phi):
                    return cls, phi
    return None


def _two_cliques(g: Graph, mask: int) -> Optional[tuple[list[int], list[int]]]:
    parts = []
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= g.adj[x]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        parts.append(comp)
        rest &= ~comp
    if len(parts) != 2:
        return None
    for p in parts:
        for v in iter_bits(p):
            if g.adj[v] & p != p & ~(1 << v):
                return None
    parts.sort(key=lambda p: (p.bit_count(), p & -p))
    return list(iter_bits(parts[0])), list(iter_bits(parts[1]))


def _is_embedding(h: Graph, g: Graph, phi: list[int]) -> bool:
    if h.n != g.n or sorted(phi) != list(range(g.n)):
        return False
    for u in range(h.n):
        image = 0
        for w in iter_bits(h.adj[u]):
            image |= 1 << phi[w]
        if image != g.adj[phi[u]]:
            return False
    return True
