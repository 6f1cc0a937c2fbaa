"""Deck computation, subdecks, counting, equality, and the file format."""

from math import comb

import pytest
from conftest import brute_induced_count, graphs_st
from hypothesis import given, settings

from graphdeck import (
    Deck,
    DeckFormatError,
    IllegitimateDeckError,
    PreconditionError,
    build_spider,
    canonical_code,
    compute_deck,
    count_induced_from_deck,
    cycle_graph,
    deck_equal,
    deck_from_text,
    deck_to_text,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    parse_graph6,
    path_graph,
    subdeck,
)

K2 = canonical_code(path_graph(2))
P3 = canonical_code(path_graph(3))
E2 = canonical_code(empty_graph(2))
K2K1 = canonical_code(disjoint_union(path_graph(2), empty_graph(1)))


def test_deck_p3_order2():
    d = compute_deck(path_graph(3), 2)
    assert d.cards == {K2: 2, E2: 1}
    assert d.ambient_n == 3


def test_deck_c5_order3():
    d = compute_deck(cycle_graph(5), 3)
    assert d.cards == {P3: 5, K2K1: 5}


def test_deck_full_order_is_the_graph():
    g = cycle_graph(6)
    d = compute_deck(g, 6)
    assert d.cards == {canonical_code(g): 1}


def test_deck_order_zero():
    d = compute_deck(cycle_graph(4), 0)
    assert d.total_cards() == 1 and d.card_order == 0


def test_deck_total_is_binomial():
    g = cycle_graph(6)
    for k in range(7):
        assert compute_deck(g, k).total_cards() == comb(6, k)


def test_deck_invariant_validation():
    with pytest.raises(IllegitimateDeckError):
        Deck(2, {K2: 2}, ambient_n=3)  # should be C(3,2) = 3 cards
    with pytest.raises(DeckFormatError):
        Deck(3, {K2: 1}, ambient_n=None)  # card order mismatch
    with pytest.raises(DeckFormatError):
        Deck(2, {K2: 0})


def test_subdeck_consistency_c6():
    g = cycle_graph(6)
    assert deck_equal(subdeck(compute_deck(g, 4), 3), compute_deck(g, 3))


def test_subdeck_edge_count_example():
    d2 = subdeck(compute_deck(cycle_graph(5), 3), 2)
    assert d2.cards == {K2: 5, E2: 5}


def test_subdeck_identity():
    d = compute_deck(path_graph(5), 3)
    assert subdeck(d, 3) is d


def test_subdeck_requires_ambient():
    d = compute_deck(path_graph(4), 3)
    anon = Deck(3, d.cards, ambient_n=None)
    with pytest.raises(PreconditionError):
        subdeck(anon, 2)


def test_count_induced_examples():
    d = compute_deck(cycle_graph(5), 3)
    assert count_induced_from_deck(K2, d) == 5
    assert count_induced_from_deck(P3, d) == 5
    k3 = canonical_code(parse_graph6("Bw"))
    assert count_induced_from_deck(k3, d) == 0


def test_count_induced_accepts_graph():
    d = compute_deck(cycle_graph(5), 3)
    assert count_induced_from_deck(path_graph(2), d) == 5


def test_count_induced_rejects_large_pattern():
    d = compute_deck(cycle_graph(5), 3)
    with pytest.raises(PreconditionError):
        count_induced_from_deck(canonical_code(path_graph(4)), d)


@settings(max_examples=60, deadline=None)
@given(graphs_st(min_n=3, max_n=6))
def test_count_induced_matches_brute_force(g):
    k = max(2, g.n - 2)
    d = compute_deck(g, k)
    for j in range(1, k + 1):
        for f in enumerate_graphs(j):
            assert count_induced_from_deck(canonical_code(f), d) == brute_induced_count(f, g)


def test_deck_equal_known_pairs():
    a = disjoint_union(cycle_graph(4), empty_graph(1))
    b = build_spider([1, 1, 2])
    assert deck_equal(compute_deck(a, 3), compute_deck(b, 3))
    assert deck_equal(
        compute_deck(path_graph(6), 3),
        compute_deck(disjoint_union(cycle_graph(4), path_graph(2)), 3),
    )
    assert not deck_equal(compute_deck(path_graph(5), 3), compute_deck(cycle_graph(5), 3))


def test_deck_equal_ignores_ambient_but_not_order():
    d1 = compute_deck(path_graph(4), 2)
    d2 = Deck(2, d1.cards, ambient_n=None)
    assert deck_equal(d1, d2)
    assert not deck_equal(compute_deck(path_graph(4), 2), compute_deck(path_graph(4), 3))


def test_illegitimate_deck_detected_by_division():
    # perturb the deck of C5: totals still C(5,3) but the edge-count division
    # 16 / C(3,1) leaves a remainder
    bad = Deck(3, {P3: 6, K2K1: 4}, ambient_n=5)
    with pytest.raises(IllegitimateDeckError):
        count_induced_from_deck(K2, bad)
    with pytest.raises(IllegitimateDeckError):
        subdeck(bad, 2)


def test_deck_text_roundtrip():
    d = compute_deck(cycle_graph(6), 4)
    text = deck_to_text(d)
    back = deck_from_text(text)
    assert deck_equal(d, back) and back.ambient_n == 6
    assert deck_to_text(back) == text  # canonical serialization is stable


def test_deck_text_header():
    d = compute_deck(parse_graph6("Bw"), 3)
    assert deck_to_text(d) == "deck k=3 n=3\n1\tBw\n"


def test_deck_text_unknown_ambient():
    text = "deck k=2 n=?\n2\tA_\n"
    d = deck_from_text(text)
    assert d.ambient_n is None and d.total_cards() == 2


def test_deck_text_order_insensitive_and_canonicalizing():
    # same class spelled two ways merges; body order is irrelevant
    a = deck_from_text("deck k=3 n=?\n1\tBo\n1\tBg\n")
    b = deck_from_text("deck k=3 n=?\n2\tBg\n")
    assert deck_equal(a, b)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "deck k=x n=3\n",
        "cards k=3 n=3\n",
        "deck k=3 n=3\nBw\n",
        "deck k=3 n=3\n0\tBw\n",
        "deck k=3 n=3\n1\tA_\n",  # wrong card order
    ],
)
def test_deck_text_errors(text):
    with pytest.raises(DeckFormatError):
        deck_from_text(text)


@settings(max_examples=40, deadline=None)
@given(graphs_st(min_n=2, max_n=7))
def test_subdeck_matches_direct_small(g):
    k = g.n - 1
    d = compute_deck(g, k)
    for j in range(k + 1):
        assert deck_equal(subdeck(d, j), compute_deck(g, j))


@settings(max_examples=60, deadline=None)
@given(graphs_st(min_n=2, max_n=7))
def test_isomorphic_graphs_have_equal_decks(g):
    from graphdeck import relabel

    h = relabel(g, list(reversed(range(g.n))))
    for k in range(g.n + 1):
        assert deck_equal(compute_deck(g, k), compute_deck(h, k))
