"""Deciding acyclicity from a deck, reconstruction search, and verification.

The decision pipeline layers cheap deck-computed tests over a complete search
fallback.  Steps, in order: a cyclic card or an edge count reaching n settles
Cyclic; no connected card settles Acyclic (a cyclic reconstruction would have
girth above the card order and hence a path card); when n >= 2l+2 and the
evine-counting preconditions hold, the k-central-edge count s' discriminates
(s' <= d + l only for acyclic reconstructions, s' >= n - l + d - 1 only for
cyclic ones, and the two ranges are disjoint); otherwise a complete search
over forest reconstructions decides.  For n <= 2l and the known (5, 2) case
the deck may genuinely admit both kinds, so a full search reports the
ambiguity instead.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .canon import CanonicalCode, _canonical_g6_raw
from .decks import Deck, _subdeck_counts, compute_deck, count_induced_from_deck, deck_to_text
from .errors import IllegitimateDeckError, PreconditionError
from .generate import enumerate_graphs
from .graphs import (
    INF,
    Graph,
    _components_raw,
    _induced_raw,
    _mask_vertices,
    cycle_graph,
    disjoint_union,
    distances_from,
    empty_graph,
    is_acyclic,
    k_subset_masks,
    parse_graph6,
    path_graph,
)
from .vines import (
    _card_metrics,
    build_spider,
    count_k_central_edges_from_deck,
    count_k_centers_from_deck,
    degree_list_from_deck,
    short_card_stats,
)

_K2_G6 = _canonical_g6_raw(2, (2, 1))
_K3_G6 = _canonical_g6_raw(3, (6, 5, 3))


class Verdict(enum.Enum):
    ACYCLIC = "Acyclic"
    CYCLIC = "Cyclic"
    EXCEPTION_PAIR = "ExceptionPair"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class RecognitionReport:
    """Everything the recognizer derived from one deck."""

    n: int
    l: int
    e: int
    all_cards_acyclic: bool
    k_hat: int | None
    k: int | None
    d: int | None
    s: int | None
    s_prime: int | None
    decision_path: str  # "fast" | "fallback"
    rule: str  # which test settled the verdict
    verdict: Verdict
    undecided_reason: str | None = None
    witnesses: tuple[CanonicalCode, ...] = ()

    def to_text(self) -> str:
        def fmt(v: object) -> str:
            return "-" if v is None else str(v)

        lines = [
            f"n={self.n}",
            f"l={self.l}",
            f"e={self.e}",
            f"k_hat={fmt(self.k_hat)}",
            f"d={fmt(self.d)}",
            f"s={fmt(self.s)}",
            f"s_prime={fmt(self.s_prime)}",
            f"path={self.decision_path}",
            f"verdict={self.verdict.value}",
        ]
        for w in self.witnesses:
            lines.append(w.g6)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReconstructionSearchResult:
    matches: tuple[CanonicalCode, ...]
    acyclic_found: bool
    cyclic_found: bool
    exhausted: bool


def reconstruct_all(
    d: Deck,
    restrict: Callable[[Graph], bool] | None = None,
    cap: int | None = None,
    *,
    forest: bool = False,
) -> ReconstructionSearchResult:
    """Every isomorphism class whose deck equals d, by growing one vertex at a
    time with deck-consistency pruning.

    Partial graphs up to the card order must themselves appear in the matching
    sub-deck; above it, the multiset of completed card-order subsets may never
    exceed the deck.  `forest` restricts the search space itself (hereditary);
    `restrict` filters finished matches.  `cap` bounds examined extensions;
    when exceeded the result is flagged not exhausted.
    """
    n, k = d.ambient_n, d.card_order
    if n is None:
        raise PreconditionError("reconstruction requires a known ambient vertex count")
    if k < 1:
        raise PreconditionError("reconstruction requires card order >= 1")
    if not forest and n > 12:
        raise PreconditionError("unrestricted search is capped at 12 vertices")

    target = {code.g6: mult for code, mult in d.cards.items()}
    sub: dict[int, dict[str, int]] = {}
    for j in range(1, k):
        sub[j] = _subdeck_counts(d, j)
    sub[k] = dict(target)
    e_target = _edge_total(sub, k)
    deg_target = _degree_bound(d, n, k)
    girth_floor = _girth_floor(d, k)

    levels: dict[str, tuple[tuple[int, ...], dict[str, int] | None]] = {
        "?": ((), None)
    }
    examined = 0
    exhausted = True
    for m in range(1, n + 1):
        nxt: dict[str, tuple[tuple[int, ...], dict[str, int] | None]] = {}
        for adj, counter in levels.values():
            g = Graph(m - 1, adj)
            dist = [distances_from(g, v) for v in range(m - 1)]
            for mask in _candidate_masks(m - 1, adj, forest, girth_floor, dist):
                examined += 1
                if cap is not None and examined > cap:
                    exhausted = False
                    break
                cadj = tuple(
                    row | ((mask >> v & 1) << (m - 1)) for v, row in enumerate(adj)
                ) + (mask,)
                if e_target is not None:
                    edges = sum(r.bit_count() for r in cadj) // 2
                    if edges > e_target or edges + _max_new_edges(m, n, forest) < e_target:
                        continue
                if deg_target is not None and not _degrees_fit(cadj, deg_target):
                    continue
                code = _canonical_g6_raw(m, cadj)
                if m <= k:
                    if sub[m].get(code, 0) < 1:
                        continue
                    counter2 = {code: 1} if m == k else None
                else:
                    assert counter is not None
                    counter2 = dict(counter)
                    ok = True
                    for sel in k_subset_masks(m - 1, k - 1):
                        sm, rows = _induced_raw(cadj, sel | (1 << (m - 1)))
                        c = _canonical_g6_raw(sm, rows)
                        cnt = counter2.get(c, 0) + 1
                        if cnt > target.get(c, 0):
                            ok = False
                            break
                        counter2[c] = cnt
                    if not ok:
                        continue
                if code not in nxt:
                    nxt[code] = (cadj, counter2)
            if not exhausted:
                break
        levels = nxt
        if not exhausted or not levels:
            break

    matches: list[CanonicalCode] = []
    acyclic_found = cyclic_found = False
    if exhausted or levels:
        for code, (adj, counter) in sorted(levels.items()):
            if len(adj) != n:
                continue
            final = counter if counter is not None else {code: 1}
            if final != target:
                continue
            g = Graph(n, adj)
            if not _deck_matches(g, d):
                continue
            if restrict is not None and not restrict(g):
                continue
            matches.append(CanonicalCode(code))
            if is_acyclic(g):
                acyclic_found = True
            else:
                cyclic_found = True
    return ReconstructionSearchResult(tuple(matches), acyclic_found, cyclic_found, exhausted)


def _deck_matches(g: Graph, d: Deck) -> bool:
    dd = compute_deck(g, d.card_order)
    return dd.cards == d.cards


def _edge_total(sub: dict[int, dict[str, int]], k: int) -> int | None:
    if k < 2:
        return None
    return sub[2].get(_K2_G6, 0)


def _max_new_edges(m: int, n: int, forest: bool) -> int:
    # the vertex added at size i+1 touches at most i existing vertices
    total = sum(range(m, n))
    if forest:
        return min(total, n - 1)
    return total


def _degree_bound(d: Deck, n: int, k: int) -> list[int] | None:
    """Exact target degree multiset when it is deck-computable: triangle-free
    evidence plus no star card caps the maximum degree below the card order."""
    if k < 3:
        return None
    for code in d.cards:
        met = _card_metrics(code.g6)
        if met.radius <= 1 and met.components == 1:
            return None  # a star card: some degree may reach the card order
    from .decks import _sub_counts

    for code in d.cards:
        if _sub_counts(code.g6, 3).get(_K3_G6, 0):
            return None
    try:
        return degree_list_from_deck(d, ())
    except (PreconditionError, IllegitimateDeckError):
        return None


def _degrees_fit(adj: Sequence[int], target_desc: list[int]) -> bool:
    # partial degrees only ever grow, so sorted comparison must dominate
    partial = sorted((r.bit_count() for r in adj), reverse=True)
    return all(p <= t for p, t in zip(partial, target_desc))


def _girth_floor(d: Deck, k: int) -> int:
    girths = [_card_metrics(code.g6).girth for code in d.cards]
    finite = [g for g in girths if g != INF]
    if finite:
        return int(min(finite))
    return k + 1  # all cards acyclic: any cycle must be longer than a card


def _candidate_masks(
    m: int,
    adj: tuple[int, ...],
    forest: bool,
    girth_floor: int,
    dist: list[list[float]],
) -> Iterable[int]:
    if m == 0:
        return [0]
    if forest:
        comps = _components_raw(m, adj)
        out = []
        for mask in _component_products(comps):
            out.append(mask)
        return out
    masks = []
    for mask in range(1 << m):
        vs = _mask_vertices(mask)
        ok = True
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                if dist[vs[i]][vs[j]] + 2 < girth_floor:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            masks.append(mask)
    return masks


def _component_products(comps: list[int]) -> Iterable[int]:
    out = [0]
    for comp in comps:
        added = []
        m = comp
        while m:
            b = m & -m
            added.extend(acc | b for acc in out)
            m ^= b
        out.extend(added)
    return out


# ---------------------------------------------------------------------------
# the recognizer
# ---------------------------------------------------------------------------


def recognize(d: Deck, cap: int | None = None) -> RecognitionReport:
    """Decide whether every reconstruction of d is acyclic.

    The deck must be legitimate (the deck of at least one graph) with a known
    ambient vertex count and card order >= 2.
    """
    n, k = d.ambient_n, d.card_order
    if n is None:
        raise PreconditionError("recognition requires a known ambient vertex count")
    if k < 2:
        raise PreconditionError("recognition requires card order >= 2")
    l = n - k
    e = count_induced_from_deck(CanonicalCode(_K2_G6), d)

    all_acyclic = all(_card_metrics(code.g6).is_acyclic for code in d.cards)
    k_hat = kk = d_val = s = s_prime = None
    no_long_evine_card = None
    if all_acyclic:
        try:
            stats = short_card_stats(d)
            k_hat, kk, d_val = stats.k_hat, stats.k, stats.d
        except PreconditionError:
            pass
    if kk is not None and kk >= 1:
        # inexact divisions prove the deck illegitimate and propagate
        try:
            s = count_k_centers_from_deck(d)
        except PreconditionError:
            s = None
        no_long_evine_card = all(
            _card_metrics(code.g6).diameter != 2 * kk + 1 for code in d.cards
        )
        if no_long_evine_card and 2 * kk + 2 <= k:
            try:
                s_prime = count_k_central_edges_from_deck(d)
            except PreconditionError:
                s_prime = None

    def report(
        verdict: Verdict,
        path: str,
        rule: str,
        witnesses: tuple[CanonicalCode, ...] = (),
        reason: str | None = None,
    ) -> RecognitionReport:
        return RecognitionReport(
            n, l, e, all_acyclic, k_hat, kk, d_val, s, s_prime,
            path, rule, verdict, reason, witnesses,
        )

    # (1) a cyclic card certifies a cycle
    if not all_acyclic:
        return report(Verdict.CYCLIC, "fast", "cyclic_card")
    # (2) any n-vertex graph with n edges has a cycle
    if e >= n:
        return report(Verdict.CYCLIC, "fast", "edge_count")
    # (3) a cyclic reconstruction has girth > card order, hence a path card
    if k_hat is None:
        return report(Verdict.ACYCLIC, "fast", "no_connected_card")

    exceptional = (n, l) == (5, 2) or n <= 2 * l
    if not exceptional:
        # (4) the central-edge discriminator, valid for n >= 2l+2
        if (
            n >= 2 * l + 2
            and kk is not None
            and kk >= 1
            and s_prime is not None
            and d_val is not None
        ):
            if s_prime <= d_val + l:
                return report(Verdict.ACYCLIC, "fast", "evine_bound")
            if s_prime >= n - l + d_val - 1:
                return report(Verdict.CYCLIC, "fast", "evine_bound")
        # (5) complete fallback over forest reconstructions
        res = reconstruct_all(d, cap=cap, forest=True)
        if res.acyclic_found:
            return report(
                Verdict.ACYCLIC, "fallback", "forest_search", res.matches
            )
        if not res.exhausted:
            return report(
                Verdict.UNDECIDED, "fallback", "forest_search",
                reason="search cap exceeded",
            )
        return report(Verdict.CYCLIC, "fallback", "forest_search")

    # (6) n <= 2l or the (5, 2) case: the deck may be genuinely ambiguous
    res = reconstruct_all(d, cap=cap)
    if res.acyclic_found and res.cyclic_found:
        return report(Verdict.EXCEPTION_PAIR, "fallback", "full_search", res.matches)
    if not res.exhausted:
        return report(
            Verdict.UNDECIDED, "fallback", "full_search",
            reason="search cap exceeded",
        )
    if res.acyclic_found:
        return report(Verdict.ACYCLIC, "fallback", "full_search", res.matches)
    if res.cyclic_found:
        return report(Verdict.CYCLIC, "fallback", "full_search", res.matches)
    raise IllegitimateDeckError("no graph has this deck")


# ---------------------------------------------------------------------------
# equal-deck example families
# ---------------------------------------------------------------------------


def nydl_pair(l: int) -> tuple[Graph, Graph]:
    """Two trees on 2l vertices sharing their l-deck: a path on 2l-1 vertices
    plus one leaf, attached at the central vertex or at a neighbor of it."""
    if l < 2:
        raise ValueError("l must be at least 2")
    base = 2 * l - 1
    center = l - 1
    a = Graph.from_edges(2 * l, [(i, i + 1) for i in range(base - 1)] + [(center, base)])
    b = Graph.from_edges(2 * l, [(i, i + 1) for i in range(base - 1)] + [(center + 1, base)])
    return a, b


def sharpness_pair(l: int) -> tuple[Graph, Graph]:
    """P_{2l} and C_{l+1} + P_{l-1}: equal l-decks, cyclic second member."""
    if l < 2:
        raise ValueError("l must be at least 2")
    return path_graph(2 * l), disjoint_union(cycle_graph(l + 1), path_graph(l - 1))


def exception_pair() -> tuple[Graph, Graph]:
    """C4 + K1 and the spider S_{1,1,2}: the (n, l) = (5, 2) ambiguity."""
    return disjoint_union(cycle_graph(4), empty_graph(1)), build_spider([1, 1, 2])


def two_cycle_pair(l: int) -> tuple[Graph, Graph]:
    """C_{2l-2} and C_{l-1} + C_{l-1}: equal (l-2)-decks."""
    if l < 4:
        raise ValueError("l must be at least 4")
    return cycle_graph(2 * l - 2), disjoint_union(cycle_graph(l - 1), cycle_graph(l - 1))


def two_path_pair(l: int) -> tuple[Graph, Graph]:
    """P_l + P_l and P_{l+1} + P_{l-1}: equal l-decks."""
    if l < 2:
        raise ValueError("l must be at least 2")
    return (
        disjoint_union(path_graph(l), path_graph(l)),
        disjoint_union(path_graph(l + 1), path_graph(l - 1)),
    )


# ---------------------------------------------------------------------------
# exhaustive verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MixedClass:
    """One deck class containing both an acyclic and a cyclic graph."""

    deck_text: str
    acyclic_members: tuple[CanonicalCode, ...]
    cyclic_members: tuple[CanonicalCode, ...]


@dataclass(frozen=True)
class VerifySummary:
    n: int
    l: int
    classes: int
    mixed: tuple[MixedClass, ...]

    def to_text(self) -> str:
        lines = [f"classes={self.classes} mixed={len(self.mixed)}"]
        for mc in self.mixed:
            lines.append(
                f"mixed acyclic={mc.acyclic_members[0].g6} cyclic={mc.cyclic_members[0].g6}"
            )
        return "\n".join(lines) + "\n"


def restricted_source(n: int, l: int) -> Iterable[Graph]:
    """Forests together with all graphs of girth above the card order.

    Sufficient for mixed-class detection: a deck class holding an acyclic and
    a cyclic graph has only acyclic cards, so the cyclic member has girth at
    least n-l+1 and the acyclic member is a forest; both lie in this source.
    """
    return enumerate_graphs(n, min_girth=n - l + 1)


def full_source(n: int) -> Iterable[Graph]:
    return enumerate_graphs(n)


def _verify_one(args: tuple[str, int]) -> tuple[str, bool, str]:
    g6, k = args
    g = parse_graph6(g6)
    d = compute_deck(g, k)
    return deck_to_text(d), is_acyclic(g), g6


def verify_recognizability(
    n: int,
    l: int,
    source: Iterable[Graph],
    *,
    jobs: int = 1,
) -> VerifySummary:
    """Group the source graphs by their (n-l)-deck and report every class
    containing both an acyclic and a cyclic graph."""
    if n - l < 2:
        raise PreconditionError("card order must be at least 2")
    k = n - l
    items: list[tuple[str, int]] = []
    seen: set[str] = set()
    for g in source:
        if g.n != n:
            raise PreconditionError(f"source graph has {g.n} vertices, expected {n}")
        g6 = _canonical_g6_raw(g.n, g.adj)
        if g6 in seen:
            raise PreconditionError(f"duplicate isomorphism class in source: {g6}")
        seen.add(g6)
        items.append((g6, k))

    if jobs > 1 and len(items) > 1:
        chunk = max(1, len(items) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_verify_one, items, chunksize=chunk))
    else:
        rows = [_verify_one(it) for it in items]

    groups: dict[str, tuple[list[str], list[str]]] = {}
    for deck_text, acyclic, g6 in rows:
        acy, cyc = groups.setdefault(deck_text, ([], []))
        (acy if acyclic else cyc).append(g6)
    mixed = []
    for deck_text in sorted(groups):
        acy, cyc = groups[deck_text]
        if acy and cyc:
            mixed.append(
                MixedClass(
                    deck_text,
                    tuple(CanonicalCode(s) for s in sorted(acy)),
                    tuple(CanonicalCode(s) for s in sorted(cyc)),
                )
            )
    mixed.sort(key=lambda mc: (mc.acyclic_members[0], mc.cyclic_members[0]))
    return VerifySummary(n, l, len(groups), tuple(mixed))


def default_jobs() -> int:
    env = os.environ.get("GRAPHDECK_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


# ---------------------------------------------------------------------------
# consequence checks on mixed-class witnesses
# ---------------------------------------------------------------------------


def consequence_checks(g: Graph, l: int) -> list[tuple[str, str]]:
    """Evaluate, on a would-be ambiguous-deck witness, the structural
    consequences that ambiguity forces when n >= 2l+1 (excluding (5, 2)):
    no star card, maximum degree at least 3, and 2*k_hat <= l.  Any violation
    on a genuinely mixed class indicates an implementation bug, not new math.
    Returns (tag, status) with status in holds/violated/out_of_hypothesis.
    """
    n = g.n
    if n < 2 * l + 1 or (n, l) == (5, 2) or n - l < 2:
        return [
            ("no_star_card", "out_of_hypothesis"),
            ("max_degree_ge_3", "out_of_hypothesis"),
            ("khat_bound", "out_of_hypothesis"),
        ]
    d = compute_deck(g, n - l)
    results = []
    star = any(
        _card_metrics(code.g6).radius <= 1 and _card_metrics(code.g6).components == 1
        for code in d.cards
    )
    results.append(("no_star_card", "holds" if not star else "violated"))
    results.append(
        ("max_degree_ge_3", "holds" if max(g.degrees(), default=0) >= 3 else "violated")
    )
    try:
        stats = short_card_stats(d)
        ok = 2 * stats.k_hat <= l
        results.append(("khat_bound", "holds" if ok else "violated"))
    except PreconditionError:
        results.append(("khat_bound", "out_of_hypothesis"))
    return results


def ambiguous_pair_checks(g1: Graph, g2: Graph, l: int) -> list[tuple[str, str]]:
    """Pair-level harness: flags deck inequality before any structural check."""
    if g1.n != g2.n:
        return [("deck_equality", "violated")]
    k = g1.n - l
    d1, d2 = compute_deck(g1, k), compute_deck(g2, k)
    if d1.cards != d2.cards:
        return [("deck_equality", "violated")]
    out = [("deck_equality", "holds")]
    for g in (g1, g2):
        out.extend(consequence_checks(g, l))
    return out
