"""Canonical labeling and isomorphism-class codes.

The canonical code of a graph is the graph6 string of a canonically relabeled
copy, so two graphs get equal codes exactly when they are isomorphic, and every
code decodes back to a member of its class.  Forests are labeled through rooted
tree encodings (centers first, subtrees sorted); everything else goes through
equitable partition refinement followed by a backtracking search over the
remaining labelings, pruned with automorphisms discovered along the way.  The
search minimises the graph6 bit string, so the code of a non-forest is the
lexicographically least graph6 record over all labelings.

Codes of repeatedly-seen small graphs are cached by labeled adjacency; this is
what makes deck computation over many subsets affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import (
    Graph,
    _components_raw,
    _mask_vertices,
    _write_graph6_raw,
    parse_graph6,
)

__all__ = ["CanonicalCode", "canonical_code", "canonical_form", "are_isomorphic"]


@dataclass(frozen=True, slots=True, order=True)
class CanonicalCode:
    """Isomorphism-class identity: the graph6 string of the canonical form."""

    g6: str

    @property
    def order(self) -> int:
        return ord(self.g6[0]) - 63

    def decode(self) -> Graph:
        return parse_graph6(self.g6)

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.g6


# labeled-adjacency -> canonical g6.  Small graphs are cached unboundedly
# (there are at most 2^15 labeled graphs on 6 vertices); larger ones share a
# capped cache that simply stops growing when full.
_SMALL_N = 6
_CACHE_SMALL: dict[tuple[int, tuple[int, ...]], str] = {}
_CACHE_BIG: dict[tuple[int, tuple[int, ...]], str] = {}
_CACHE_BIG_MAX = 600_000


def canonical_code(g: Graph) -> CanonicalCode:
    """Code equal for exactly the graphs isomorphic to g."""
    return CanonicalCode(_canonical_g6_raw(g.n, g.adj))


def canonical_form(g: Graph) -> Graph:
    """A canonically labeled copy of g (the graph its code decodes to)."""
    return parse_graph6(_canonical_g6_raw(g.n, g.adj))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and _canonical_g6_raw(g.n, g.adj) == _canonical_g6_raw(h.n, h.adj)


def _canonical_g6_raw(n: int, adj: tuple[int, ...]) -> str:
    if n <= _SMALL_N:
        key = (n, adj)
        hit = _CACHE_SMALL.get(key)
        if hit is not None:
            return hit
        g6 = _canonical_g6_compute(n, adj)
        _CACHE_SMALL[key] = g6
        return g6
    key = (n, adj)
    hit = _CACHE_BIG.get(key)
    if hit is not None:
        return hit
    g6 = _canonical_g6_compute(n, adj)
    if len(_CACHE_BIG) < _CACHE_BIG_MAX:
        _CACHE_BIG[key] = g6
    return g6


def _canonical_g6_compute(n: int, adj: tuple[int, ...]) -> str:
    if n == 0:
        return "?"
    comps = _components_raw(n, adj)
    edges = sum(row.bit_count() for row in adj) // 2
    if edges == n - len(comps):
        perm = _forest_canonical_perm(n, adj, comps)
    else:
        perm = _search_canonical_perm(n, adj)
    return _write_graph6_raw(n, _apply_perm(n, adj, perm))


def _apply_perm(n: int, adj: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * n
    for old, row in enumerate(adj):
        r = 0
        m = row
        while m:
            b = m & -m
            r |= 1 << perm[b.bit_length() - 1]
            m ^= b
        out[perm[old]] = r
    return tuple(out)


# ---------------------------------------------------------------------------
# forests: center-rooted encodings
# ---------------------------------------------------------------------------


def _tree_centers(adj: Sequence[int], comp_mask: int) -> list[int]:
    # iterative leaf pruning; 1 or 2 survivors
    alive = comp_mask
    if alive & (alive - 1) == 0:
        return _mask_vertices(alive)
    while True:
        leaves = 0
        m = alive
        while m:
            b = m & -m
            v = b.bit_length() - 1
            if (adj[v] & alive).bit_count() <= 1:
                leaves |= b
            m ^= b
        rest = alive & ~leaves
        if not rest:
            return _mask_vertices(alive)
        if rest & (rest - 1) == 0 or _is_single_edge(adj, rest):
            return _mask_vertices(rest)
        alive = rest


def _is_single_edge(adj: Sequence[int], mask: int) -> bool:
    vs = _mask_vertices(mask)
    return len(vs) == 2 and (adj[vs[0]] >> vs[1]) & 1 == 1


def _rooted_encoding(adj: Sequence[int], root: int) -> tuple[str, list[int]]:
    """Canonical bracket encoding of the tree at `root` plus the matching
    preorder vertex list (children visited in sorted-encoding order)."""

    def rec(v: int, parent: int) -> tuple[str, list[int]]:
        children = []
        m = adj[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            if u != parent:
                children.append(rec(u, v))
        children.sort()
        enc = "(" + "".join(c[0] for c in children) + ")"
        order = [v]
        for c in children:
            order.extend(c[1])
        return enc, order

    return rec(root, -1)


def _forest_canonical_perm(n: int, adj: Sequence[int], comps: list[int]) -> list[int]:
    encoded = []
    for comp in comps:
        best: tuple[str, list[int]] | None = None
        for c in _tree_centers(adj, comp):
            cand = _rooted_encoding(adj, c)
            if best is None or cand[0] < best[0]:
                best = cand
        assert best is not None
        encoded.append(best)
    encoded.sort(key=lambda t: (t[0], t[1][0]))
    perm = [0] * n
    label = 0
    for _, order in encoded:
        for v in order:
            perm[v] = label
            label += 1
    return perm


# ---------------------------------------------------------------------------
# general graphs: refinement + pruned search minimising the graph6 bit string
# ---------------------------------------------------------------------------


def _refine(n: int, adj: Sequence[int], colors: list[int]) -> list[int]:
    """Equitable refinement: split color classes by neighbor-color multisets
    until stable.  Output colors are contiguous 0..c-1 and order-preserving."""
    while True:
        sigs = []
        for v in range(n):
            counts: dict[int, int] = {}
            m = adj[v]
            while m:
                b = m & -m
                c = colors[b.bit_length() - 1]
                counts[c] = counts.get(c, 0) + 1
                m ^= b
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _g6_key(n: int, adj: Sequence[int], perm: Sequence[int]) -> int:
    inv = [0] * n
    for v, c in enumerate(perm):
        inv[c] = v
    key = 0
    for col in range(1, n):
        a = adj[inv[col]]
        for row in range(col):
            key = (key << 1) | ((a >> inv[row]) & 1)
    return key


def _search_canonical_perm(n: int, adj: Sequence[int]) -> list[int]:
    full = (1 << n) - 1
    if all(row == full ^ (1 << v) for v, row in enumerate(adj)):
        return list(range(n))  # complete graph: any labeling is canonical

    best_key: int | None = None
    best_perm: list[int] | None = None
    best_inv: list[int] | None = None
    auts: list[tuple[int, ...]] = []
    aut_seen: set[tuple[int, ...]] = set()

    def leaf(colors: list[int]) -> None:
        nonlocal best_key, best_perm, best_inv
        key = _g6_key(n, adj, colors)
        if best_key is None or key < best_key:
            best_key = key
            best_perm = list(colors)
            best_inv = [0] * n
            for v, c in enumerate(colors):
                best_inv[c] = v
        elif key == best_key:
            assert best_inv is not None
            sigma = tuple(best_inv[colors[x]] for x in range(n))
            if sigma not in aut_seen and any(sigma[x] != x for x in range(n)):
                aut_seen.add(sigma)
                auts.append(sigma)

    def orbit_reps(cell: list[int], prefix: tuple[int, ...]) -> dict[int, int]:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for sigma in auts:
            if all(sigma[p] == p for p in prefix):
                for v in cell:
                    ra, rb = find(v), find(sigma[v])
                    if ra != rb:
                        parent[rb] = ra
        return {v: find(v) for v in cell}

    def rec(colors: list[int], prefix: tuple[int, ...]) -> None:
        if max(colors) == n - 1:
            leaf(colors)
            return
        # first non-singleton cell (lowest color with >= 2 members)
        count: dict[int, int] = {}
        for c in colors:
            count[c] = count.get(c, 0) + 1
        target = min(c for c, k in count.items() if k >= 2)
        cell = [v for v in range(n) if colors[v] == target]
        tried: list[int] = []
        reps: dict[int, int] = {}
        reps_for = -1
        for v in cell:
            if tried:
                if len(auts) != reps_for:
                    reps = orbit_reps(cell, prefix)
                    reps_for = len(auts)
                rv = reps[v]
                if any(reps[u] == rv for u in tried):
                    continue
            tried.append(v)
            nc = [2 * c for c in colors]
            nc[v] -= 1
            rec(_refine(n, adj, nc), prefix + (v,))

    rec(_refine(n, adj, [0] * n), ())
    assert best_perm is not None
    return best_perm
