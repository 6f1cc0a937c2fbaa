"""Vines, centers, central edges, and the absorbing-family counting engine.

A k-vine is a tree of diameter 2k (its center is a vertex); a k-evine is a
tree of diameter 2k+1 (its center is an edge).  In graphs of girth at least
2k+2 (resp. 2k+3) every induced k-vine (k-evine) lies in a unique maximal one,
which makes these families *absorbing*: the number of occurrences of each
member as a maximal member, m(F, G), can be solved for from induced-subgraph
counts alone by eliminating larger members first:

    s(F, G) = sum over members H of s(F, H) * m(H, G)

Since every induced-count s(F, G) with |F| <= card order is computable from a
deck, m(F, G) is a function of the deck whenever members with more vertices
than a card either cannot occur or have externally supplied counts.  That is
what turns a deck into invariants of every reconstruction: k-center counts,
k-central-edge counts, and (via the star family) the degree list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .canon import CanonicalCode, _canonical_g6_raw, canonical_code
from .decks import Deck, _sub_counts, _subdeck_counts, count_induced_from_deck
from .errors import DeckFormatError, IllegitimateDeckError, PreconditionError
from .graphs import (
    INF,
    Graph,
    GraphMetrics,
    _component_mask,
    _eccentricity,
    is_tree,
    k_subset_masks,
    metrics,
    parse_graph6,
)

# ---------------------------------------------------------------------------
# vine predicates and direct (graph-side) oracles
# ---------------------------------------------------------------------------


def is_k_vine(g: Graph, k: int) -> bool:
    """A tree with diameter exactly 2k."""
    return is_tree(g) and metrics(g).diameter == 2 * k


def is_k_evine(g: Graph, k: int) -> bool:
    """A tree with diameter exactly 2k+1."""
    return is_tree(g) and metrics(g).diameter == 2 * k + 1


def _simple_paths(g: Graph, start: int, length: int, banned: int) -> list[int]:
    """Vertex masks (excluding `start`) of simple paths with `length` edges
    leaving `start`, avoiding the `banned` vertex set."""
    out: list[int] = []

    def rec(v: int, used: int, left: int) -> None:
        if left == 0:
            out.append(used & ~(1 << start))
            return
        m = g.adj[v] & ~used & ~banned
        while m:
            b = m & -m
            rec(b.bit_length() - 1, used | b, left - 1)
            m ^= b

    rec(start, 1 << start, length)
    return out


def k_centers(g: Graph, k: int) -> int:
    """Mask of vertices that are the center of some induced k-vine.

    Requires girth at least 2k+2, where this is equivalent to two paths of
    length k leaving v through distinct neighbors, disjoint except at v.
    """
    if k < 1:
        raise PreconditionError("k-centers need k >= 1")
    if metrics(g).girth < 2 * k + 2:
        raise PreconditionError(f"k-centers need girth >= {2 * k + 2}")
    result = 0
    for v in range(g.n):
        paths = _simple_paths(g, v, k, 0)
        done = False
        for i in range(len(paths)):
            if done:
                break
            for j in range(i + 1, len(paths)):
                if not paths[i] & paths[j]:
                    result |= 1 << v
                    done = True
                    break
    return result


def k_central_edges(g: Graph, k: int) -> set[tuple[int, int]]:
    """Edges uv whose k-eball holds a k-evine centered on uv.

    Requires girth at least 2k+3, where this is equivalent to length-k paths
    leaving u and v away from the edge, vertex-disjoint from each other.
    """
    if k < 1:
        raise PreconditionError("k-central edges need k >= 1")
    if metrics(g).girth < 2 * k + 3:
        raise PreconditionError(f"k-central edges need girth >= {2 * k + 3}")
    result: set[tuple[int, int]] = set()
    for u, v in g.edges():
        pu = _simple_paths(g, u, k, 1 << v)
        if not pu:
            continue
        pv = _simple_paths(g, v, k, 1 << u)
        found = False
        for a in pu:
            if found:
                break
            for b in pv:
                if not a & b:
                    result.add((u, v))
                    found = True
                    break
    return result


# ---------------------------------------------------------------------------
# absorbing families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbsorbingFamily:
    """Membership predicate for one of the absorbing families used here.

    kind: "connected", "star" (trees of diameter 2, i.e. 1-vines),
    "k_vine" or "k_evine" with parameter k.
    """

    kind: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("connected", "star", "k_vine", "k_evine"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in ("k_vine", "k_evine") and (self.k is None or self.k < 1):
            raise ValueError(f"{self.kind} needs a parameter k >= 1")

    @property
    def min_order(self) -> int:
        if self.kind == "connected":
            return 1
        if self.kind == "star":
            return 3
        if self.kind == "k_vine":
            return 2 * self.k + 1  # type: ignore[operator]
        return 2 * self.k + 2  # type: ignore[operator]

    def contains(self, g: Graph) -> bool:
        if self.kind == "connected":
            return g.n >= 1 and metrics(g).components == 1
        if self.kind == "star":
            return is_k_vine(g, 1)
        if self.kind == "k_vine":
            return is_k_vine(g, self.k)  # type: ignore[arg-type]
        return is_k_evine(g, self.k)  # type: ignore[arg-type]


def connected_family() -> AbsorbingFamily:
    return AbsorbingFamily("connected")


def star_family() -> AbsorbingFamily:
    return AbsorbingFamily("star")


def vine_family(k: int) -> AbsorbingFamily:
    return AbsorbingFamily("k_vine", k)


def evine_family(k: int) -> AbsorbingFamily:
    return AbsorbingFamily("k_evine", k)


_MEMBER_CACHE: dict[tuple[str, int | None, str], bool] = {}


def _family_contains_code(fam: AbsorbingFamily, g6: str) -> bool:
    key = (fam.kind, fam.k, g6)
    hit = _MEMBER_CACHE.get(key)
    if hit is None:
        hit = fam.contains(parse_graph6(g6))
        _MEMBER_CACHE[key] = hit
    return hit


@dataclass(frozen=True)
class MaximalCountTable:
    """m(F, G) for the members F of one absorbing family."""

    entries: Mapping[CanonicalCode, int]

    def __post_init__(self) -> None:
        norm = dict(sorted(self.entries.items()))
        for code, m in norm.items():
            if m < 0:
                raise ValueError(f"negative maximal count for {code.g6}")
        object.__setattr__(self, "entries", norm)

    def total(self) -> int:
        return sum(self.entries.values())

    def get(self, code: CanonicalCode) -> int:
        return self.entries.get(code, 0)

    def to_text(self) -> str:
        return "".join(f"{m}\t{c.g6}\n" for c, m in self.entries.items())

    @classmethod
    def from_text(cls, text: str) -> "MaximalCountTable":
        entries: dict[CanonicalCode, int] = {}
        for ln in text.splitlines():
            if not ln.strip():
                continue
            parts = ln.split("\t")
            if len(parts) != 2:
                raise DeckFormatError(f"bad count-table line: {ln!r}")
            try:
                m = int(parts[0])
            except ValueError:
                raise DeckFormatError(f"bad count in line: {ln!r}") from None
            code = canonical_code(parse_graph6(parts[1]))
            entries[code] = entries.get(code, 0) + m
        return cls(entries)


def count_maximal_from_deck(
    d: Deck,
    family: AbsorbingFamily,
    known_large: Mapping[CanonicalCode, int] | None = None,
) -> MaximalCountTable:
    """Solve for m(F, G) for every family member appearing in G.

    Members are gathered from the deck's own sub-decks (orders up to the card
    order); `known_large` must supply m for any member exceeding the card
    order, and may supply it for members of exactly the card order (otherwise
    their induced count is read off the deck directly).  Members are processed
    in decreasing vertex count, subtracting the contributions of already
    resolved larger members; a negative intermediate count means the deck is
    illegitimate or the family is not absorbing here.
    """
    if d.ambient_n is None:
        raise PreconditionError("counting requires a known ambient vertex count")
    k = d.card_order
    known: dict[str, int] = {}
    for code, m in (known_large or {}).items():
        if code.order < k:
            raise PreconditionError(
                "known_large may only carry members with at least as many vertices as a card"
            )
        if m < 0:
            raise ValueError("known counts must be nonnegative")
        known[code.g6] = m

    s_values: dict[str, int] = {}
    for j in range(family.min_order, k + 1):
        if j == k:
            counts = {code.g6: mult for code, mult in d.cards.items()}
        else:
            counts = _subdeck_counts(d, j)
        for g6, s in counts.items():
            if s > 0 and _family_contains_code(family, g6):
                s_values[g6] = s

    member_codes = sorted(
        set(s_values) | set(known),
        key=lambda g6: (-(ord(g6[0]) - 63), g6),
    )
    m_table: dict[str, int] = {}
    for g6 in member_codes:
        order = ord(g6[0]) - 63
        if g6 in known:
            m = known[g6]
        else:
            m = s_values[g6]
            for h6, mh in m_table.items():
                if mh and ord(h6[0]) - 63 > order:
                    m -= _sub_counts(h6, order).get(g6, 0) * mh
            if m < 0:
                raise IllegitimateDeckError(
                    f"negative maximal count for {g6}: precondition violation or illegitimate deck"
                )
        m_table[g6] = m
    return MaximalCountTable({CanonicalCode(s): m for s, m in m_table.items()})


# ---------------------------------------------------------------------------
# deck-side reconstructions of invariants
# ---------------------------------------------------------------------------

_CARD_METRICS: dict[str, GraphMetrics] = {}


def _card_metrics(g6: str) -> GraphMetrics:
    hit = _CARD_METRICS.get(g6)
    if hit is None:
        hit = metrics(parse_graph6(g6))
        _CARD_METRICS[g6] = hit
    return hit


@dataclass(frozen=True)
class ShortCardStats:
    """Minimum card radius and path packings of the cards achieving it.

    k_hat is the minimum radius over connected cards (disconnected cards have
    infinite radius and never win); k = k_hat - 1.  For each short card C,
    d_C is the maximum number of edge-disjoint paths of length k_hat leaving
    a center of C, maximised over centers; d is the maximum d_C.
    """

    k_hat: int
    k: int
    short_cards: tuple[tuple[CanonicalCode, int], ...]
    d: int


def short_card_stats(d: Deck) -> ShortCardStats:
    radii = {code: _card_metrics(code.g6).radius for code in d.cards}
    finite = [r for r in radii.values() if r != INF]
    if not finite:
        raise PreconditionError("no connected card")
    k_hat = int(min(finite))
    shorts = []
    for code in sorted(d.cards):
        if radii[code] == k_hat:
            shorts.append((code, _max_path_packing(parse_graph6(code.g6), k_hat)))
    return ShortCardStats(k_hat, k_hat - 1, tuple(shorts), max(dc for _, dc in shorts))


def _max_path_packing(g: Graph, length: int) -> int:
    """Maximum number of pairwise edge-disjoint paths with `length` edges and
    a common first vertex at a center of g, maximised over centers."""
    m = metrics(g)
    if m.radius == INF:
        raise PreconditionError("path packing needs a connected graph")
    full = (1 << g.n) - 1
    centers = [v for v in range(g.n) if _eccentricity(g.adj, v, full) == m.radius]
    edge_ids = {e: i for i, e in enumerate(g.edges())}

    def edge_mask_paths(z: int) -> list[int]:
        masks: list[int] = []

        def rec(v: int, used_vertices: int, used_edges: int, left: int) -> None:
            if left == 0:
                masks.append(used_edges)
                return
            m2 = g.adj[v] & ~used_vertices
            while m2:
                b = m2 & -m2
                u = b.bit_length() - 1
                eid = edge_ids[(min(u, v), max(u, v))]
                rec(u, used_vertices | b, used_edges | (1 << eid), left - 1)
                m2 ^= b

        rec(z, 1 << z, 0, length)
        return masks

    best = 0
    for z in centers:
        paths = edge_mask_paths(z)

        def rec_pack(i: int, used: int, cnt: int) -> None:
            nonlocal best
            if cnt + (len(paths) - i) <= best:
                return
            if i == len(paths):
                best = max(best, cnt)
                return
            if not paths[i] & used:
                rec_pack(i + 1, used | paths[i], cnt + 1)
            rec_pack(i + 1, used, cnt)

        rec_pack(0, 0, 0)
    return best


def _require_acyclic_cards(d: Deck) -> None:
    for code in d.cards:
        if not _card_metrics(code.g6).is_acyclic:
            raise PreconditionError(f"card {code.g6} contains a cycle")


def count_k_centers_from_deck(d: Deck) -> int:
    """Number of k-centers in every reconstruction of d, with k = k_hat - 1.

    Needs every card acyclic and k_hat >= 2.  Then every reconstruction has
    girth above 2k+2, no k-vine reaches the card order (a card would have
    radius <= k), and the total count of maximal k-vines equals the k-center
    count.
    """
    if d.ambient_n is None:
        raise PreconditionError("counting requires a known ambient vertex count")
    _require_acyclic_cards(d)
    stats = short_card_stats(d)
    if stats.k < 1:
        raise PreconditionError("k_hat must be at least 2 (no star-like short cards)")
    if d.card_order < 2 * stats.k_hat:
        raise PreconditionError("card order too small for the vine family")
    table = count_maximal_from_deck(d, vine_family(stats.k), {})
    return table.total()


def count_k_central_edges_from_deck(d: Deck) -> int:
    """Number of k-central edges in every reconstruction of d, k = k_hat - 1.

    Needs every card acyclic, k_hat >= 2, 2k+2 <= card order, and no card of
    diameter 2k+1 (such a card would be a k-evine as large as a card, whose
    maximal count the deck cannot see)."""
    if d.ambient_n is None:
        raise PreconditionError("counting requires a known ambient vertex count")
    _require_acyclic_cards(d)
    stats = short_card_stats(d)
    k = stats.k
    if k < 1:
        raise PreconditionError("k_hat must be at least 2 (no star-like short cards)")
    if 2 * k + 2 > d.card_order:
        raise PreconditionError("card order too small for the evine family")
    for code in d.cards:
        if _card_metrics(code.g6).diameter == 2 * k + 1:
            raise PreconditionError(f"card {code.g6} has diameter {2 * k + 1}")
    table = count_maximal_from_deck(d, evine_family(k), {})
    return table.total()


def degree_list_from_deck(
    d: Deck, known_large_degrees: Sequence[int] = ()
) -> list[int]:
    """Full degree multiset (descending) of every reconstruction of d.

    Valid for triangle-free reconstructions: maximal stars centered at each
    vertex of degree >= 2 form an absorbing family, recovering those degrees;
    the edge and vertex totals then pin down degrees 1 and 0.  Degrees of at
    least the card order cannot be seen in cards and must be supplied, one
    entry per vertex."""
    if d.ambient_n is None:
        raise PreconditionError("counting requires a known ambient vertex count")
    n, k = d.ambient_n, d.card_order
    if k < 3:
        raise PreconditionError("degree recovery needs cards with at least 3 vertices")
    triangle = _canonical_g6_raw(3, (6, 5, 3))  # K3
    for code in d.cards:
        if _sub_counts(code.g6, 3).get(triangle, 0):
            raise PreconditionError(f"card {code.g6} contains a triangle")
    known: dict[CanonicalCode, int] = {}
    for deg in known_large_degrees:
        if not k - 1 <= deg <= n - 1:
            raise PreconditionError(
                f"supplied degree {deg} outside the unseeable range {k - 1}..{n - 1}"
            )
        code = canonical_code(_star_graph(deg))
        known[code] = known.get(code, 0) + 1
    table = count_maximal_from_deck(d, star_family(), known)
    e = count_induced_from_deck(CanonicalCode(_canonical_g6_raw(2, (2, 1))), d)
    degs: list[int] = []
    high_sum = 0
    for code, m in table.entries.items():
        degree = code.order - 1
        degs.extend([degree] * m)
        high_sum += degree * m
    deg1 = 2 * e - high_sum
    if deg1 < 0:
        raise IllegitimateDeckError("degree totals inconsistent with edge count")
    deg0 = n - len(degs) - deg1
    if deg0 < 0:
        raise IllegitimateDeckError("degree totals exceed the vertex count")
    degs.extend([1] * deg1)
    degs.extend([0] * deg0)
    return sorted(degs, reverse=True)


def _star_graph(leaves: int) -> Graph:
    return build_spider([1] * leaves)


# ---------------------------------------------------------------------------
# spiders and long paths
# ---------------------------------------------------------------------------


def build_spider(leg_lengths: Iterable[int]) -> Graph:
    """Tree formed by legs (paths) of the given lengths sharing one endpoint."""
    legs = sorted(leg_lengths)
    if any(m < 1 for m in legs):
        raise ValueError("leg lengths must be positive")
    n = 1 + sum(legs)
    edges = []
    nxt = 1
    for m in legs:
        prev = 0
        for _ in range(m):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(n, edges)


def count_long_paths(g: Graph, m: int) -> int:
    """Number of m-vertex subsets inducing a path."""
    if m < 1:
        raise ValueError("path order must be at least 1")
    if m > g.n:
        return 0
    count = 0
    for mask in k_subset_masks(g.n, m):
        if _induces_path(g, mask, m):
            count += 1
    return count


def _induces_path(g: Graph, mask: int, m: int) -> bool:
    degs = []
    edges2 = 0
    mv = mask
    while mv:
        b = mv & -mv
        d = (g.adj[b.bit_length() - 1] & mask).bit_count()
        if d > 2:
            return False
        degs.append(d)
        edges2 += d
        mv ^= b
    if edges2 != 2 * (m - 1):
        return False
    # connected with m-1 edges is a tree; max degree 2 then forces a path
    start = (mask & -mask).bit_length() - 1
    sub_adj = [g.adj[v] & mask if (mask >> v) & 1 else 0 for v in range(g.n)]
    return _component_mask(sub_adj, start) == mask
