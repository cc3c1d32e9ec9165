"""Simple undirected graphs on vertices ``0..n-1`` and their block structure.

Adjacency is stored as one integer bitmask per vertex, which keeps the
small-graph searches elsewhere in the package cheap.  Everything here is
immutable once built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


class GraphFormatError(ValueError):
    """Raised when an edge list or graph6 string cannot be decoded."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


class Graph:
    """A simple graph with integer vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj)
        self._degrees: Optional[tuple[int, ...]] = None

    @classmethod
    def from_masks(cls, masks: Sequence[int], check: bool = True) -> "Graph":
        """Build a graph directly from adjacency bitmasks."""
        g = cls.__new__(cls)
        g.n = len(masks)
        g.adj = tuple(masks)
        g._degrees = None
        if check:
            full = (1 << g.n) - 1
            for u, m in enumerate(g.adj):
                if m & ~full or (m >> u) & 1:
                    raise ValueError(f"invalid adjacency mask for vertex {u}")
                for v in iter_bits(m):
                    if not (g.adj[v] >> u) & 1:
                        raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        return g

    # -- basic queries -------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            self._degrees = tuple(m.bit_count() for m in self.adj)
        return self._degrees

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise IndexError(f"vertex {u} out of range for n={self.n}")

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self.degrees[u]

    def neighbors(self, u: int) -> list[int]:
        self._check_vertex(u)
        return list(iter_bits(self.adj[u]))

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        self._check_vertex(u)
        return from_mask(self.adj[u] | (1 << u))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def is_complete(self) -> bool:
        return all(d == self.n - 1 for d in self.degrees)

    # -- derived graphs --------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``.

        Returns the subgraph and the list mapping new ids to original ids.
        """
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        keep = to_mask(order)
        masks = []
        for v in order:
            masks.append(to_mask(index[w] for w in iter_bits(self.adj[v] & keep)))
        return Graph.from_masks(masks, check=False), order

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        masks = [0] * self.n
        for v in range(self.n):
            masks[perm[v]] = to_mask(perm[w] for w in iter_bits(self.adj[v]))
        return Graph.from_masks(masks, check=False)

    def remove_edge(self, u: int, v: int) -> "Graph":
        masks = list(self.adj)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph.from_masks(masks, check=False)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional ``n=<count>`` header.

    Blank lines and ``#`` comments are ignored, duplicate edges collapse.
    """
    n_header: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if n_header is not None or edges:
                raise GraphFormatError(f"line {lineno}: n= header must come first")
            try:
                n_header = int(line[2:])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {line[2:]!r}") from None
            if n_header < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if n_header is not None and max(u, v) >= n_header:
            raise GraphFormatError(f"line {lineno}: vertex id {max(u, v)} exceeds header n={n_header}")
        edges.append((u, v))
    if n_header is None:
        n_header = max((max(e) for e in edges), default=-1) + 1
    return Graph(n_header, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no newline)."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _g6_size(g.n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    """Decode a single graph6 string (an optional ``>>graph6<<`` header is allowed)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ord(ch)} at position {pos} outside [63, 126]")
    data = [ord(ch) - 63 for ch in s]
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n, rest = 0, data[8:]
        for d in data[2:8]:
            n = (n << 6) | d
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n, rest = 0, data[4:]
        for d in data[1:4]:
            n = (n << 6) | d
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(rest) != expected:
        raise GraphFormatError(f"graph6 body has {len(rest)} bytes, expected {expected} for n={n}")
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    if nbits % 6 and rest[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("graph6 padding bits must be zero")
    return Graph.from_masks(masks, check=False)


# ---------------------------------------------------------------------------
# connectivity


def reach_mask(g: Graph, start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` inside ``G[within]``."""
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(g: Graph, within: Optional[int] = None) -> list[int]:
    """Components of ``G[within]`` as bitmasks, ordered by smallest vertex."""
    rest = g.vertex_mask if within is None else within
    comps = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        c = reach_mask(g, v, rest)
        comps.append(c)
        rest &= ~c
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    return [from_mask(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True when ``g`` has at most one component (the empty graph counts as connected)."""
    return len(component_masks(g)) <= 1


def is_connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return True
    v = (mask & -mask).bit_length() - 1
    return reach_mask(g, v, mask) == mask


def is_biconnected(g: Graph) -> bool:
    """2-connectedness: more than two vertices and no cut vertex."""
    if g.n <= 2 or not is_connected(g):
        return False
    return len(block_decomposition(g).blocks) == 1


def is_biconnected_subset(g: Graph, vertices: Iterable[int] | int) -> bool:
    """Whether the subgraph induced on ``vertices`` is 2-connected."""
    mask = vertices if isinstance(vertices, int) else to_mask(vertices)
    if mask.bit_count() <= 2:
        return False
    sub, _ = g.induced(iter_bits(mask))
    return is_biconnected(sub)


# ---------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks and cut vertices of a graph.

    ``blocks`` is sorted by ``(min vertex, sorted members)``; a block's index
    in that tuple is its id everywhere else in the package.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    vertex_blocks: tuple[tuple[int, ...], ...]

    def cut_vertices_of(self, b: int) -> frozenset[int]:
        return self.blocks[b] & self.cut_vertices

    def incidence(self) -> list[tuple[int, int]]:
        """Edges ``(block id, cut vertex)`` of the block-cut-vertex graph."""
        return [(b, x) for x in sorted(self.cut_vertices) for b in self.vertex_blocks[x]]

    def end_blocks(self) -> list[int]:
        """Blocks that are leaves of the block-cut-vertex tree."""
        return [b for b in range(len(self.blocks)) if len(self.cut_vertices_of(b)) == 1]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks via depth-first search with low points (iterative Hopcroft-Tarjan).

    Isolated vertices come out as single-vertex blocks.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    clock = 0
    neighbors = [list(iter_bits(m)) for m in g.adj]
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not g.adj[root]:
            found.append(frozenset((root,)))
            continue
        stack = [(root, -1, iter(neighbors[root]))]
        edges: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edges.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(neighbors[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edges.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                members: set[int] = set()
                while True:
                    e = edges.pop()
                    members.update(e)
                    if e == (p, v):
                        break
                found.append(frozenset(members))
    blocks = tuple(sorted(found, key=lambda b: (min(b), sorted(b))))
    per_vertex: list[list[int]] = [[] for _ in range(n)]
    for i, b in enumerate(blocks):
        for v in b:
            per_vertex[v].append(i)
    cut = frozenset(v for v in range(n) if len(per_vertex[v]) >= 2)
    return BlockDecomposition(blocks, cut, tuple(tuple(x) for x in per_vertex))


@dataclass(frozen=True)
class RootedBlockTree:
    """Block-cut-vertex tree of a connected graph rooted at an end-block.

    ``parent_cut[b]`` is the cut vertex joining block ``b`` to its parent,
    ``child_blocks[x]`` lists the blocks hanging below cut vertex ``x``,
    ``x_sets[b]`` holds the non-cut vertices of ``b`` and ``carriers[b]`` the
    block of ``b - parent_cut[b]`` chosen to contain them (``None`` when no such
    block exists, when ``x_sets[b]`` is empty, and for the root).
    """

    decomposition: BlockDecomposition
    root: int
    order: tuple[int, ...]
    parent_cut: dict[int, int]
    child_blocks: dict[int, tuple[int, ...]]
    x_sets: tuple[frozenset[int], ...]
    carriers: dict[int, Optional[frozenset[int]]]
    _below: dict[int, tuple[int, ...]] = field(repr=False)

    @property
    def blocks(self) -> tuple[frozenset[int], ...]:
        return self.decomposition.blocks

    def children(self, b: int) -> list[int]:
        """Child blocks of ``b``, grouped by cut vertex in increasing order."""
        up = self.parent_cut.get(b)
        out: list[int] = []
        for x in sorted(self.decomposition.cut_vertices_of(b)):
            if x != up:
                out.extend(self.child_blocks[x])
        return out

    def subtree_blocks(self, b: int) -> tuple[int, ...]:
        """Block ids of ``b`` and all its descendants."""
        return self._below[b]

    def subtree_vertices(self, b: int) -> frozenset[int]:
        """Vertex set of ``G(B)``: ``b`` together with its descendant blocks."""
        out: set[int] = set()
        for c in self._below[b]:
            out |= self.blocks[c]
        return frozenset(out)

    def tilde_blocks(self, b: int) -> tuple[int, ...]:
        """Descendant blocks (``b`` included) with a non-empty non-cut set."""
        return tuple(c for c in self._below[b] if self.x_sets[c])


def _pick_carrier(g: Graph, block: frozenset[int], u: int, xs: frozenset[int]) -> Optional[frozenset[int]]:
    rest = block - {u}
    sub, ids = g.induced(rest)
    candidates = []
    for inner in block_decomposition(sub).blocks:
        members = frozenset(ids[i] for i in inner)
        if xs <= members:
            candidates.append(members)
    if not candidates:
        return None
    return min(candidates, key=lambda c: (-len(c), min(c)))


def root_block_tree(g: Graph, root: Optional[int] = None) -> RootedBlockTree:
    """Root the block-cut-vertex tree of a connected, non-2-connected graph.

    ``root`` is a block id from :func:`block_decomposition`; by default the
    first end-block (the one holding the smallest vertex id).
    """
    if g.n < 2 or not is_connected(g):
        raise ValueError("root_block_tree needs a connected graph on at least two vertices")
    dec = block_decomposition(g)
    if len(dec.blocks) < 2:
        raise ValueError("graph has a single block; nothing to root")
    ends = dec.end_blocks()
    if root is None:
        root = ends[0]
    elif root not in ends:
        raise ValueError(f"block {root} is not an end-block")

    parent_cut: dict[int, int] = {}
    child_blocks: dict[int, tuple[int, ...]] = {}
    order = [root]
    queue = deque([root])
    while queue:
        b = queue.popleft()
        for x in sorted(dec.cut_vertices_of(b)):
            if x == parent_cut.get(b):
                continue
            kids = tuple(c for c in dec.vertex_blocks[x] if c != b)
            child_blocks[x] = kids
            for c in kids:
                parent_cut[c] = x
                order.append(c)
                queue.append(c)

    x_sets = tuple(blk - dec.cut_vertices for blk in dec.blocks)
    carriers: dict[int, Optional[frozenset[int]]] = {root: None}
    for b in order[1:]:
        xs = x_sets[b]
        carriers[b] = _pick_carrier(g, dec.blocks[b], parent_cut[b], xs) if xs else None

    below: dict[int, tuple[int, ...]] = {}
    for b in reversed(order):
        acc = [b]
        up = parent_cut.get(b)
        for x in sorted(dec.cut_vertices_of(b)):
            if x != up:
                for c in child_blocks[x]:
                    acc.extend(below[c])
        below[b] = tuple(acc)

    return RootedBlockTree(dec, root, tuple(order), parent_cut, child_blocks, x_sets, carriers, below)
