"""Exhaustive enumeration of unlabeled graphs via canonical augmentation.

Graphs on m vertices are generated by attaching one new vertex to each graph
on m-1 vertices; a child survives only if deleting its canonically-last vertex
recovers (an isomorph of) the parent it was grown from, so every isomorphism
class is produced exactly once and no global seen-set is needed.  Hereditary
restrictions (forests, girth lower bounds) prune attachment masks directly, so
restricted enumeration at larger n never visits the unrestricted space.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .canon import _canonical_g6_raw
from .errors import CapExceededError, PreconditionError
from .graphs import (
    Graph,
    _components_raw,
    _induced_raw,
    _mask_vertices,
    distances_from,
    parse_graph6,
)

_FULL_ENUM_MAX_N = 10

# (m, restriction key) -> list of (adj of canonical form, canonical g6)
_LEVELS: dict[tuple[int, tuple], list[tuple[tuple[int, ...], str]]] = {}


def enumerate_graphs(
    n: int,
    *,
    forest: bool = False,
    min_girth: int | None = None,
    predicate: Callable[[Graph], bool] | None = None,
    cap: int | None = None,
) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class of n-vertex
    graphs, in a deterministic order.

    `forest` and `min_girth` are hereditary restrictions applied during
    generation; `predicate` is an arbitrary post-filter.  `cap` bounds the
    number of candidate extensions examined; exceeding it raises
    CapExceededError.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if min_girth is not None and min_girth <= 3:
        min_girth = None  # every simple graph has girth >= 3
    if forest:
        key: tuple = ("forest",)
    elif min_girth is not None:
        key = ("girth", min_girth)
    else:
        key = ("all",)
        if n > _FULL_ENUM_MAX_N:
            raise PreconditionError(
                f"full enumeration is capped at n={_FULL_ENUM_MAX_N}; "
                "use a forest or girth restriction"
            )
    level = _build_levels(n, key, forest, min_girth, cap)
    for adj, _ in level:
        g = Graph(n, adj)
        if predicate is None or predicate(g):
            yield g


def _build_levels(
    n: int,
    key: tuple,
    forest: bool,
    min_girth: int | None,
    cap: int | None,
) -> list[tuple[tuple[int, ...], str]]:
    examined = 0
    for m in range(n + 1):
        if (m, key) in _LEVELS:
            continue
        if m == 0:
            _LEVELS[(m, key)] = [((), "?")]
            continue
        out: list[tuple[tuple[int, ...], str]] = []
        for padj, pcode in _LEVELS[(m - 1, key)]:
            seen: set[str] = set()
            for mask in _attachment_masks(m - 1, padj, forest, min_girth):
                examined += 1
                if cap is not None and examined > cap:
                    raise CapExceededError(
                        f"enumeration cap of {cap} extensions exceeded"
                    )
                cadj = tuple(row | ((mask >> v & 1) << (m - 1)) for v, row in enumerate(padj)) + (mask,)
                code = _canonical_g6_raw(m, cadj)
                if code in seen:
                    continue
                seen.add(code)
                canon_adj = parse_graph6(code).adj
                _, dropped = _induced_raw(canon_adj, (1 << (m - 1)) - 1)
                if _canonical_g6_raw(m - 1, dropped) == pcode:
                    out.append((canon_adj, code))
        _LEVELS[(m, key)] = out
    return _LEVELS[(n, key)]


def _attachment_masks(
    m: int, adj: tuple[int, ...], forest: bool, min_girth: int | None
) -> Iterator[int]:
    """All neighbor masks for a new vertex that keep the restriction."""
    if m == 0:
        yield 0
        return
    if forest:
        # at most one neighbor per component keeps the graph acyclic
        comps = _components_raw(m, adj)
        yield from _component_products(comps)
        return
    if min_girth is not None:
        g = Graph(m, adj)
        dist = [distances_from(g, v) for v in range(m)]
        for mask in range(1 << m):
            vs = _mask_vertices(mask)
            ok = True
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    if dist[vs[i]][vs[j]] + 2 < min_girth:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                yield mask
        return
    yield from range(1 << m)


def _component_products(comps: list[int]) -> Iterator[int]:
    def rec(i: int, acc: int) -> Iterator[int]:
        if i == len(comps):
            yield acc
            return
        yield from rec(i + 1, acc)
        m = comps[i]
        while m:
            b = m & -m
            yield from rec(i + 1, acc | b)
            m ^= b

    yield from rec(0, 0)
