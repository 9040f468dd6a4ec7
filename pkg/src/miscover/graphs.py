"""Bitset graphs and exact maximal-independent-set (MIS) machinery.

A maximal independent set is an independent set not properly contained in
any other independent set (maximal, not maximum).  Two counting laws drive
everything here: disjoint unions multiply MIS counts, joins add them.

Graphs are immutable, hold at most 128 vertices, and store adjacency as
one Python-int bitmask per vertex, so induced subgraphs are plain mask
intersections.  Counts are exact arbitrary-precision integers; they reach
3**(n/3) and leave 64-bit range near n = 122.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

MAX_VERTICES = 128
DEFAULT_MIS_CAP = 10_000_000


class MisCapError(RuntimeError):
    """Raised when enumeration would exceed its cap; carries the partial count."""

    def __init__(self, cap: int, partial_count: int):
        super().__init__(
            f"number of maximal independent sets exceeds cap {cap} "
            f"({partial_count} enumerated)"
        )
        self.cap = cap
        self.partial_count = partial_count


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices 0..n-1 of some graph, stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} out of range for n={self.n}")

    def members(self) -> tuple[int, ...]:
        return tuple(_bits_of(self.bits))

    def __iter__(self) -> Iterator[int]:
        return _bits_of(self.bits)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members())) + "}"


def _bits_of(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(s) -> int:
    if isinstance(s, VertexSet):
        return s.bits
    if isinstance(s, int):
        return s
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with bitmask adjacency.

    Equality and hashing are label-exact (same n, same adjacency rows);
    isomorphism is deliberately not considered here.
    """

    n: int
    adj: tuple[int, ...]
    _cache: dict = field(default_factory=dict, init=False, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise ValueError(f"adjacency row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} is its own neighbor")
            for u in _bits_of(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as pairs (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in _bits_of(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with the given undirected edges."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {u}-{v} out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(k: int) -> Graph:
    """K_k: all pairs adjacent.  It has exactly k MISes (the singletons)."""
    if not 0 <= k <= MAX_VERTICES:
        raise ValueError(f"k must be in 0..{MAX_VERTICES}, got {k}")
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def cycle_graph(j: int) -> Graph:
    """C_j: vertices i and i+1 (mod j) adjacent, nothing else."""
    if not 3 <= j <= MAX_VERTICES:
        raise ValueError(f"cycle length must be in 3..{MAX_VERTICES}, got {j}")
    return from_edges(j, [(i, (i + 1) % j) for i in range(j)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint union; h's vertices are relabeled after g's.

    The MIS count multiplies: every MIS of the union is the union of one
    MIS from each side.
    """
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"union would have {n} > {MAX_VERTICES} vertices")
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all cross edges.

    The MIS count adds: an independent set cannot straddle the cross
    edges, so every MIS of the join is an MIS of one side.
    """
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"join would have {n} > {MAX_VERTICES} vertices")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.adj]
    adj += [(row << g.n) | g_mask for row in h.adj]
    return Graph(n, tuple(adj))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v]: the vertex v together with its neighbors."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return VertexSet(g.adj[v] | 1 << v, g.n)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph on the given vertices, relabeled 0..k-1 in order."""
    keep = sorted(_bits_of(_mask_of(vertices) & g.full_mask))
    pos = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for u in _bits_of(g.adj[v]):
            if u in pos:
                adj[pos[v]] |= 1 << pos[u]
    return Graph(len(keep), tuple(adj))


def delete_vertices(g: Graph, vertices) -> Graph:
    """G - X: remove the vertices and their incident edges."""
    return induced_subgraph(g, g.full_mask & ~_mask_of(vertices))


def is_independent(g: Graph, s) -> bool:
    mask = _mask_of(s)
    return all(not g.adj[v] & mask for v in _bits_of(mask))


def is_maximal_independent(g: Graph, s) -> bool:
    """Definition check: independent, and no outside vertex can be added."""
    mask = _mask_of(s)
    if not is_independent(g, mask):
        return False
    for u in range(g.n):
        if not mask >> u & 1 and not g.adj[u] & mask:
            return False
    return True


def _branch_vertex(adj: tuple[int, ...], alive: int) -> int:
    """Maximum-degree vertex within the induced mask, lowest index on ties."""
    best_v = -1
    best_d = -1
    for v in _bits_of(alive):
        d = (adj[v] & alive).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    return best_v


def _mis_masks(g: Graph, cap: int) -> list[int]:
    """All MIS bitmasks of g, unordered, at most ``cap`` of them.

    The MISes of a disjoint union are exactly the unions of one MIS per
    connected component, so components are enumerated separately and
    combined as cartesian products.  The error's partial count is the
    number of sets enumerated before the cap struck.
    """
    adj = g.adj
    components = []
    alive = g.full_mask
    while alive:
        comp = _flood(adj, alive, complement=False)
        components.append(comp)
        alive &= ~comp
    lists = [_component_mis_masks(adj, comp, cap) for comp in components]
    out: list[int] = []

    def emit(i: int, partial: int) -> None:
        if i == len(lists):
            if len(out) >= cap:
                raise MisCapError(cap, len(out))
            out.append(partial)
            return
        for mask in lists[i]:
            emit(i + 1, partial | mask)

    emit(0, 0)
    return out


def _component_mis_masks(adj: tuple[int, ...], comp: int, cap: int) -> list[int]:
    """MIS bitmasks of one connected induced subgraph.

    Branches on a maximum-degree vertex v: either v enters the set (N[v]
    leaves play), or v is excluded and recorded as still needing a
    neighbor in the set.  Branches whose pending vertices can no longer
    be dominated are pruned, so each emitted mask is maximal.
    """
    out: list[int] = []

    def rec(alive: int, partial: int, need: int) -> None:
        nd = need
        while nd:
            low = nd & -nd
            if not adj[low.bit_length() - 1] & alive:
                return  # an excluded vertex can never be dominated
            nd ^= low
        if not alive:
            if len(out) >= cap:
                raise MisCapError(cap, len(out))
            out.append(partial)
            return
        v = _branch_vertex(adj, alive)
        bit = 1 << v
        rec(alive & ~(adj[v] | bit), partial | bit, need & ~adj[v])
        rec(alive & ~bit, partial, need | bit)

    rec(comp, 0, 0)
    return out


def enumerate_mis(g: Graph, cap: int = DEFAULT_MIS_CAP) -> list[VertexSet]:
    """All maximal independent sets, sorted by ascending member list.

    The order is canonical: compare the sorted vertex tuples
    lexicographically, e.g. {0,2} before {1}.  Raises MisCapError if more
    than ``cap`` sets exist.
    """
    masks = _mis_masks(g, cap)
    masks.sort(key=lambda m: tuple(_bits_of(m)))
    return [VertexSet(m, g.n) for m in masks]


def count_mis(g: Graph) -> int:
    """Exact number of maximal independent sets of g.

    Recursion with memoization on (alive vertices, excluded-but-undominated
    vertices).  Before branching, the induced subgraph is split along
    connected components (counts multiply) and co-components of the
    complement (joins: counts add), which resolves unions of cliques and
    expression-built graphs without any branching.
    """
    return _count_masked(g, g.full_mask)


def _count_masked(g: Graph, alive: int) -> int:
    adj = g.adj
    memo = g._cache

    def cnt(alive: int, need: int) -> int:
        nd = need
        while nd:
            low = nd & -nd
            if not adj[low.bit_length() - 1] & alive:
                return 0
            nd ^= low
        if not alive:
            return 1
        key = (alive, need)
        r = memo.get(key)
        if r is not None:
            return r
        r = -1
        if not need:
            comp = _flood(adj, alive, complement=False)
            if comp != alive:
                r = cnt(comp, 0) * cnt(alive & ~comp, 0)
            else:
                cocomp = _flood(adj, alive, complement=True)
                if cocomp != alive:
                    r = cnt(cocomp, 0) + cnt(alive & ~cocomp, 0)
        if r < 0:
            v = _branch_vertex(adj, alive)
            bit = 1 << v
            r = cnt(alive & ~(adj[v] | bit), need & ~adj[v]) + cnt(
                alive & ~bit, need | bit
            )
        memo[key] = r
        return r

    return cnt(alive, 0)


def _flood(adj: tuple[int, ...], alive: int, complement: bool) -> int:
    """Connected component of the lowest alive vertex, in G or its complement."""
    comp = alive & -alive
    frontier = comp
    while frontier:
        nxt = 0
        for v in _bits_of(frontier):
            if complement:
                nxt |= alive & ~adj[v] & ~(1 << v)
            else:
                nxt |= alive & adj[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp


class Variant(enum.Enum):
    """Shape choice for extremal graphs when n = 3i+1 admits two of them."""

    DEFAULT = "default"
    TWO_EDGES = "two-edges"
    K4 = "k4"


def extremal_graph(n: int, variant: Variant = Variant.DEFAULT) -> Graph:
    """An n-vertex graph attaining the maximum MIS count.

    Disjoint cliques in the quantities dictated by n mod 3: i triangles
    (n = 3i); i triangles plus an edge (n = 3i+2); and for n = 3i+1 >= 4
    either i-1 triangles plus two edges (TWO_EDGES, the default) or i-1
    triangles plus a K_4 (K4).  The MIS count is max_partition_product(n).
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_VERTICES}, got {n}")
    if variant != Variant.DEFAULT and not (n % 3 == 1 and n >= 4):
        raise ValueError(
            f"variant {variant.value!r} only applies when n = 3i+1 >= 4, got n={n}"
        )
    i, r = divmod(n, 3)
    if n == 1:
        sizes = [1]
    elif r == 0:
        sizes = [3] * i
    elif r == 2:
        sizes = [3] * i + [2]
    elif variant == Variant.K4:
        sizes = [3] * (i - 1) + [4]
    else:
        sizes = [3] * (i - 1) + [2, 2]
    adj = [0] * n
    off = 0
    for k in sizes:
        block = ((1 << k) - 1) << off
        for v in range(off, off + k):
            adj[v] = block ^ (1 << v)
        off += k
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Graph text format: "p <n> <m>" header, then m lines "e <u> <v>" with
# 0-based endpoints and u < v; lines starting with "c" are comments.


def graph_to_text(g: Graph) -> str:
    lines = [f"p {g.n} {g.edge_count()}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    n = None
    declared = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'p <n> <m>'")
            n, declared = int(parts[1]), int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = int(parts[1]), int(parts[2])
            if not u < v:
                raise ValueError(f"line {lineno}: endpoints must satisfy u < v")
            if (u, v) in seen:
                raise ValueError(f"line {lineno}: duplicate edge {u}-{v}")
            seen.add((u, v))
            edges.append((u, v))
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ValueError("missing 'p <n> <m>' header")
    if len(edges) != declared:
        raise ValueError(f"header declares {declared} edges, found {len(edges)}")
    return from_edges(n, edges)


def write_graph_text(g: Graph, path) -> None:
    Path(path).write_text(graph_to_text(g))


def read_graph_text(path) -> Graph:
    return graph_from_text(Path(path).read_text())
