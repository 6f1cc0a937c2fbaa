"""Decks of induced subgraphs and the counting arithmetic they support.

A k-deck is the multiset of isomorphism classes of k-vertex induced subgraphs,
stored as canonical codes with multiplicities.  Every j-subset of the ambient
vertex set lies in exactly C(n-j, k-j) of the k-subsets, so induced-subgraph
counts at every order j <= k are recoverable from a k-deck by an exact integer
division; a division with a remainder proves the multiset is not the deck of
any graph and raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .canon import CanonicalCode, _canonical_g6_raw
from .errors import DeckFormatError, IllegitimateDeckError, PreconditionError
from .graphs import Graph, _induced_raw, k_subset_masks, parse_graph6


@dataclass(frozen=True)
class Deck:
    """Multiset of cards: canonical code -> multiplicity.

    `ambient_n` is the vertex count of the graphs this deck came from (None
    when unknown, e.g. a deck file with header ``n=?``); counting operations
    require it.
    """

    card_order: int
    cards: Mapping[CanonicalCode, int]
    ambient_n: int | None = None

    def __post_init__(self) -> None:
        norm = {}
        for code, mult in sorted(self.cards.items()):
            if not isinstance(mult, int) or mult < 1:
                raise DeckFormatError(f"multiplicity {mult!r} for {code.g6} not a positive integer")
            if code.order != self.card_order:
                raise DeckFormatError(
                    f"card {code.g6} has {code.order} vertices, expected {self.card_order}"
                )
            norm[code] = mult
        object.__setattr__(self, "cards", norm)
        if self.ambient_n is not None:
            if self.card_order > self.ambient_n:
                raise DeckFormatError("card order exceeds ambient vertex count")
            total = sum(norm.values())
            expected = comb(self.ambient_n, self.card_order)
            if total != expected:
                raise IllegitimateDeckError(
                    f"deck holds {total} cards, but C({self.ambient_n},{self.card_order})={expected}"
                )

    def total_cards(self) -> int:
        return sum(self.cards.values())

    def multiplicity(self, code: CanonicalCode) -> int:
        return self.cards.get(code, 0)


def compute_deck(g: Graph, k: int) -> Deck:
    """The k-deck of g: one card per k-subset of vertices, in colex order."""
    if not 0 <= k <= g.n:
        raise ValueError(f"card order {k} outside 0..{g.n}")
    counts: dict[str, int] = {}
    adj = g.adj
    for mask in k_subset_masks(g.n, k):
        m, rows = _induced_raw(adj, mask)
        code = _canonical_g6_raw(m, rows)
        counts[code] = counts.get(code, 0) + 1
    return Deck(k, {CanonicalCode(s): c for s, c in counts.items()}, g.n)


def deck_equal(d1: Deck, d2: Deck) -> bool:
    """True exactly when card orders match and the multisets are identical."""
    return d1.card_order == d2.card_order and d1.cards == d2.cards


# per-card induced-subgraph class counts, shared by every deck computation:
# (card g6, j) -> {sub g6: count over j-subsets of the card}
_SUB_COUNTS: dict[tuple[str, int], dict[str, int]] = {}


def _sub_counts(card_g6: str, j: int) -> dict[str, int]:
    key = (card_g6, j)
    hit = _SUB_COUNTS.get(key)
    if hit is not None:
        return hit
    g = parse_graph6(card_g6)
    counts: dict[str, int] = {}
    for mask in k_subset_masks(g.n, j):
        m, rows = _induced_raw(g.adj, mask)
        code = _canonical_g6_raw(m, rows)
        counts[code] = counts.get(code, 0) + 1
    _SUB_COUNTS[key] = counts
    return counts


def _subdeck_counts(d: Deck, j: int) -> dict[str, int]:
    """Exact induced-subgraph counts s(F, G) for every j-vertex class F."""
    n = d.ambient_n
    assert n is not None
    k = d.card_order
    totals: dict[str, int] = {}
    for code, mult in d.cards.items():
        for sub, cnt in _sub_counts(code.g6, j).items():
            totals[sub] = totals.get(sub, 0) + mult * cnt
    divisor = comb(n - j, k - j)
    out: dict[str, int] = {}
    for sub, total in totals.items():
        q, r = divmod(total, divisor)
        if r:
            raise IllegitimateDeckError(
                f"count of {sub} is {total}, not divisible by C({n - j},{k - j})={divisor}"
            )
        out[sub] = q
    return out


def subdeck(d: Deck, j: int) -> Deck:
    """Derive the j-deck from a k-deck (j <= k); exact by construction."""
    if d.ambient_n is None:
        raise PreconditionError("subdeck requires a known ambient vertex count")
    if not 0 <= j <= d.card_order:
        raise ValueError(f"subdeck order {j} outside 0..{d.card_order}")
    if j == d.card_order:
        return d
    counts = _subdeck_counts(d, j)
    return Deck(j, {CanonicalCode(s): c for s, c in counts.items() if c > 0}, d.ambient_n)


def count_induced_from_deck(f: CanonicalCode | Graph, d: Deck) -> int:
    """s(F, G): induced copies of F in any graph G having deck d."""
    if isinstance(f, Graph):
        f = CanonicalCode(_canonical_g6_raw(f.n, f.adj))
    if d.ambient_n is None:
        raise PreconditionError("counting requires a known ambient vertex count")
    j = f.order
    if j > d.card_order:
        raise PreconditionError("pattern has more vertices than the cards")
    n, k = d.ambient_n, d.card_order
    total = 0
    for code, mult in d.cards.items():
        total += mult * _sub_counts(code.g6, j).get(f.g6, 0)
    divisor = comb(n - j, k - j)
    q, r = divmod(total, divisor)
    if r:
        raise IllegitimateDeckError(
            f"count of {f.g6} is {total}, not divisible by C({n - j},{k - j})={divisor}"
        )
    return q


# ---------------------------------------------------------------------------
# deck files: header "deck k=<K> n=<N|?>", body "<multiplicity>\t<graph6>"
# ---------------------------------------------------------------------------


def deck_to_text(d: Deck) -> str:
    n_part = "?" if d.ambient_n is None else str(d.ambient_n)
    lines = [f"deck k={d.card_order} n={n_part}"]
    for code, mult in sorted(d.cards.items()):
        lines.append(f"{mult}\t{code.g6}")
    return "\n".join(lines) + "\n"


def deck_from_text(text: str) -> Deck:
    """Parse a deck file.  Body order is irrelevant; repeated classes merge,
    and cards are re-canonicalized so any valid graph6 spelling is accepted."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DeckFormatError("empty deck file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "deck":
        raise DeckFormatError(f"bad deck header: {lines[0]!r}")
    try:
        if not header[1].startswith("k=") or not header[2].startswith("n="):
            raise ValueError
        k = int(header[1][2:])
        n_part = header[2][2:]
        ambient = None if n_part == "?" else int(n_part)
    except ValueError:
        raise DeckFormatError(f"bad deck header: {lines[0]!r}") from None
    counts: dict[str, int] = {}
    for ln in lines[1:]:
        parts = ln.split("\t")
        if len(parts) != 2:
            raise DeckFormatError(f"bad deck line: {ln!r}")
        try:
            mult = int(parts[0])
        except ValueError:
            raise DeckFormatError(f"bad multiplicity in line: {ln!r}") from None
        if mult < 1:
            raise DeckFormatError(f"multiplicity must be positive: {ln!r}")
        g = parse_graph6(parts[1])
        if g.n != k:
            raise DeckFormatError(
                f"card {parts[1]!r} has {g.n} vertices, header says k={k}"
            )
        code = _canonical_g6_raw(g.n, g.adj)
        counts[code] = counts.get(code, 0) + mult
    return Deck(k, {CanonicalCode(s): c for s, c in counts.items()}, ambient)
