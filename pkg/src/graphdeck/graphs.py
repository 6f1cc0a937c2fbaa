"""Small simple graphs stored as per-vertex neighbor bitmasks.

Graphs are capped at 32 vertices so every neighbor set fits in one machine
word.  The module covers graph6 text I/O, induced subgraphs, distance balls,
and the structural metrics (girth, radius, diameter, degree list, component
count, acyclicity) used throughout the package.  Radius, diameter and girth
use an explicit infinity marker (`INF`) instead of raising: disconnected
graphs have infinite radius/diameter and acyclic graphs infinite girth, and
both conventions matter when minimising these quantities over deck cards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import Graph6Error

MAX_VERTICES = 32

#: Infinity marker for girth of acyclic graphs and radius/diameter of
#: disconnected graphs.  Compares correctly against any int.
INF = math.inf


@dataclass(frozen=True, slots=True)
class Graph:
    """An immutable simple graph on vertices 0..n-1.

    ``adj[v]`` is the bitmask of neighbors of v.  Adjacency must be symmetric
    with no self-loops; public constructors guarantee this, and operations in
    this package only ever build symmetric masks.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor bits of vertex {v} exceed vertex count")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                out.append((u, b.bit_length() - 1))
                m ^= b
        return out

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)


@dataclass(frozen=True, slots=True)
class GraphMetrics:
    """Structural summary of a graph; see module docstring for INF rules."""

    girth: float
    radius: float
    diameter: float
    degree_list: tuple[int, ...]
    components: int
    is_acyclic: bool


# ---------------------------------------------------------------------------
# graph6 I/O (short form, printable bytes 63..126, column-major upper triangle)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 record (optionally '>>graph6<<'-prefixed)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record")
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("long-form vertex counts (n > 62) are not supported")
    if not 63 <= first <= 125:
        raise Graph6Error(f"malformed length header byte {first!r}")
    n = first - 63
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) < nchars:
        raise Graph6Error("truncated graph6 payload")
    if len(payload) > nchars:
        raise Graph6Error("trailing garbage after graph6 payload")
    bits = 0
    for ch in payload:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise Graph6Error(f"non-printable payload byte {ch!r}")
        bits = (bits << 6) | v
    pad = 6 * nchars - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in graph6 payload")
    bits >>= pad
    adj = [0] * n
    # bits were accumulated most-significant first; read them back in order
    pos = nbits
    for col in range(1, n):
        for row in range(col):
            pos -= 1
            if (bits >> pos) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
    return Graph(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    """Encode a graph as a short-form graph6 record; inverse of parse_graph6."""
    return _write_graph6_raw(g.n, g.adj)


def _write_graph6_raw(n: int, adj: Sequence[int]) -> str:
    bits = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            bits = (bits << 1) | ((adj[row] >> col) & 1)
            nbits += 1
    pad = (6 - nbits % 6) % 6
    bits <<= pad
    nbits += pad
    chars = [chr(n + 63)]
    for shift in range(nbits - 6, -1, -6):
        chars.append(chr(((bits >> shift) & 63) + 63))
    return "".join(chars)


def read_graph6_stream(text: str) -> list[Graph]:
    """Parse a newline-separated stream of graph6 records, skipping blanks."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def write_graph6_stream(graphs: Iterable[Graph]) -> str:
    return "".join(write_graph6(g) + "\n" for g in graphs)


# ---------------------------------------------------------------------------
# subgraphs and rebuilds
# ---------------------------------------------------------------------------


def _mask_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def _induced_raw(adj: Sequence[int], mask: int) -> tuple[int, tuple[int, ...]]:
    verts = _mask_vertices(mask)
    rows = []
    for v in verts:
        row_bits = adj[v]
        r = 0
        for j, u in enumerate(verts):
            if (row_bits >> u) & 1:
                r |= 1 << j
        rows.append(r)
    return len(verts), tuple(rows)


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Subgraph induced by the vertex set `mask`, relabeled to 0..|mask|-1
    in increasing order of original index."""
    if mask & ~((1 << g.n) - 1) or mask < 0:
        raise ValueError("vertex mask out of range")
    m, rows = _induced_raw(g.adj, mask)
    return Graph(m, rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    return induced_subgraph(g, ((1 << g.n) - 1) ^ (1 << v))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the bijection old->new given by `perm`."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    adj = [0] * g.n
    for old, row in enumerate(g.adj):
        r = 0
        m = row
        while m:
            b = m & -m
            r |= 1 << perm[b.bit_length() - 1]
            m ^= b
        adj[perm[old]] = r
    return Graph(g.n, tuple(adj))


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    adj: list[int] = []
    shift = 0
    for g in graphs:
        adj.extend(row << shift for row in g.adj)
        shift += g.n
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


# ---------------------------------------------------------------------------
# distances and metrics
# ---------------------------------------------------------------------------


def _component_mask(adj: Sequence[int], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _components_raw(n: int, adj: Sequence[int]) -> list[int]:
    comps = []
    remaining = (1 << n) - 1
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        c = _component_mask(adj, v)
        comps.append(c)
        remaining &= ~c
    return comps


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    return _components_raw(g.n, g.adj)


def _bfs_levels(adj: Sequence[int], start_mask: int) -> list[int]:
    """Masks of vertices at distance 0, 1, 2, ... from the start set."""
    seen = start_mask
    frontier = start_mask
    levels = [start_mask]
    while True:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        if not frontier:
            return levels
        seen |= frontier
        levels.append(frontier)


def _eccentricity(adj: Sequence[int], v: int, comp_mask: int) -> float:
    levels = _bfs_levels(adj, 1 << v)
    reached = 0
    for lv in levels:
        reached |= lv
    if reached != comp_mask:
        return INF
    return len(levels) - 1


def distances_from(g: Graph, v: int) -> list[float]:
    """BFS distances from v; unreachable vertices get INF."""
    dist: list[float] = [INF] * g.n
    for d, lv in enumerate(_bfs_levels(g.adj, 1 << v)):
        for u in _mask_vertices(lv):
            dist[u] = d
    return dist


def _girth_raw(n: int, adj: Sequence[int]) -> float:
    # Shortest cycle through each edge: remove the edge, find the shortest
    # remaining path between its ends.  Exact and cheap at this scale.
    best = INF
    for u in range(n):
        m = adj[u] >> (u + 1) << (u + 1)
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            adj2 = list(adj)
            adj2[u] &= ~(1 << v)
            adj2[v] &= ~(1 << u)
            seen = 1 << u
            frontier = seen
            d = 0
            while frontier and not (seen >> v) & 1 and d + 1 < best:
                nxt = 0
                f = frontier
                while f:
                    fb = f & -f
                    nxt |= adj2[fb.bit_length() - 1]
                    f ^= fb
                frontier = nxt & ~seen
                seen |= frontier
                d += 1
            if (seen >> v) & 1 and d + 1 < best:
                best = d + 1
    return best


def is_connected(g: Graph) -> bool:
    return g.n > 0 and _component_mask(g.adj, 0) == (1 << g.n) - 1


def metrics(g: Graph) -> GraphMetrics:
    """Girth, radius, diameter, sorted degree list, component count, acyclicity."""
    comps = _components_raw(g.n, g.adj)
    e = g.edge_count()
    acyclic = e == g.n - len(comps)
    girth = INF if acyclic else _girth_raw(g.n, g.adj)
    if len(comps) == 1 and g.n > 0:
        full = (1 << g.n) - 1
        eccs = [_eccentricity(g.adj, v, full) for v in range(g.n)]
        radius: float = min(eccs)
        diameter: float = max(eccs)
    else:
        radius = diameter = INF
    degree_list = tuple(sorted(g.degrees(), reverse=True))
    return GraphMetrics(girth, radius, diameter, degree_list, len(comps), acyclic)


def is_acyclic(g: Graph) -> bool:
    return g.edge_count() == g.n - len(_components_raw(g.n, g.adj))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and is_acyclic(g) and len(_components_raw(g.n, g.adj)) == 1


def k_ball(g: Graph, v: int, k: int) -> int:
    """Mask of all vertices within BFS distance k of v."""
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    if k < 0:
        raise ValueError("k must be nonnegative")
    ball = 0
    for d, lv in enumerate(_bfs_levels(g.adj, 1 << v)):
        if d > k:
            break
        ball |= lv
    return ball


def k_subset_masks(n: int, k: int) -> Iterator[int]:
    """All k-subsets of {0..n-1} as bitmasks in increasing (colex) order."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    m = (1 << k) - 1
    top = 1 << n
    while m < top:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r
