"""Shared test helpers: independent oracles and hypothesis strategies.

Everything here deliberately avoids the library's canonical-labeling and
deck-counting code paths, so tests compare two genuinely different routes
to the same answer.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations

import networkx as nx
from hypothesis import strategies as st

from graphdeck import Graph, induced_subgraph, k_subset_masks


# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_bits(n: int, bits: int) -> Graph:
    """Graph from an integer encoding the upper triangle row-major."""
    edges = []
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (bits >> idx) & 1:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def all_labeled_graphs(n: int):
    for bits in range(1 << (n * (n - 1) // 2)):
        yield from_bits(n, bits)


# ---------------------------------------------------------------------------
# brute-force isomorphism (permutation search, no canonical labeling)
# ---------------------------------------------------------------------------


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    for perm in permutations(range(g.n)):
        ok = True
        for u in range(g.n):
            row = 0
            m = g.adj[u]
            while m:
                b = m & -m
                row |= 1 << perm[b.bit_length() - 1]
                m ^= b
            if row != h.adj[perm[u]]:
                ok = False
                break
        if ok:
            return True
    return False


def min_g6_over_perms(g: Graph) -> str:
    """Reference normal form: lexicographically least graph6 over all labelings."""
    from graphdeck import relabel, write_graph6

    return min(write_graph6(relabel(g, perm)) for perm in permutations(range(g.n)))


# ---------------------------------------------------------------------------
# brute-force induced-subgraph and maximal-member counting
# ---------------------------------------------------------------------------


def brute_induced_count(pattern: Graph, g: Graph) -> int:
    count = 0
    for mask in k_subset_masks(g.n, pattern.n):
        if brute_force_isomorphic(induced_subgraph(g, mask), pattern):
            count += 1
    return count


def brute_maximal_counts(g: Graph, member_pred) -> Counter:
    """Counter over canonical codes of maximal member subsets of g."""
    from graphdeck import canonical_code

    members = []
    for size in range(1, g.n + 1):
        for mask in k_subset_masks(g.n, size):
            if member_pred(induced_subgraph(g, mask)):
                members.append(mask)
    member_set = set(members)
    counts: Counter = Counter()
    for mask in members:
        if any(o != mask and o & mask == mask for o in member_set):
            continue
        counts[canonical_code(induced_subgraph(g, mask))] += 1
    return counts


# ---------------------------------------------------------------------------
# brute-force vine oracles: enumerate induced subtrees by diameter
# ---------------------------------------------------------------------------


def brute_k_centers(g: Graph, k: int) -> int:
    """Mask of vertices that are centers of induced diameter-2k subtrees."""
    from graphdeck import is_tree, metrics

    result = 0
    for size in range(2 * k + 1, g.n + 1):
        for mask in k_subset_masks(g.n, size):
            sub = induced_subgraph(g, mask)
            if not is_tree(sub):
                continue
            met = metrics(sub)
            if met.diameter != 2 * k:
                continue
            verts = [v for v in range(g.n) if (mask >> v) & 1]
            G = to_networkx(sub)
            ecc = nx.eccentricity(G)
            for i, e in ecc.items():
                if e == k:
                    result |= 1 << verts[i]
    return result


def brute_k_central_edges(g: Graph, k: int) -> set[tuple[int, int]]:
    from graphdeck import is_tree, metrics

    result: set[tuple[int, int]] = set()
    for size in range(2 * k + 2, g.n + 1):
        for mask in k_subset_masks(g.n, size):
            sub = induced_subgraph(g, mask)
            if not is_tree(sub):
                continue
            if metrics(sub).diameter != 2 * k + 1:
                continue
            verts = [v for v in range(g.n) if (mask >> v) & 1]
            ecc = nx.eccentricity(to_networkx(sub))
            ctr = sorted(i for i, e in ecc.items() if e == k + 1)
            assert len(ctr) == 2
            u, v = verts[ctr[0]], verts[ctr[1]]
            result.add((min(u, v), max(u, v)))
    return result


def tree_branch_packing(g: Graph, z: int, length: int) -> int:
    """In a tree: edge-disjoint paths of a given length from z = number of
    distinct first-step neighbors among vertices at that distance."""
    from graphdeck import distances_from

    dist = distances_from(g, z)
    firsts = set()
    for w in range(g.n):
        if dist[w] == length:
            for u in range(g.n):
                if g.has_edge(z, u) and dist[w] - 1 == _tree_dist(g, u, w):
                    firsts.add(u)
                    break
    return len(firsts)


def _tree_dist(g: Graph, a: int, b: int) -> float:
    from graphdeck import distances_from

    return distances_from(g, a)[b]


# ---------------------------------------------------------------------------
# hypothesis strategy
# ---------------------------------------------------------------------------


@st.composite
def graphs_st(draw, min_n: int = 0, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return from_bits(n, bits)


@st.composite
def permutations_st(draw, n: int):
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = draw(st.integers(0, i))
        perm[i], perm[j] = perm[j], perm[i]
    return perm
