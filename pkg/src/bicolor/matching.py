"""Perfect matching enumeration for bi-colored multigraphs.

``enumerate_perfect_matchings`` is the production path. ``oracle_enumerate``
is an independent brute force (all vertex pairings, then every choice of
parallel edge per pair) kept for testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .graph import BiColoredGraph

DEFAULT_MAX_MATCHINGS = 10**7
ORACLE_MAX_N = 12


class MatchingExplosion(RuntimeError):
    pass


class TooLargeForOracle(ValueError):
    pass


@dataclass(frozen=True)
class PerfectMatching:
    edge_ids: tuple[int, ...]
    weight: complex


def _matching(graph: BiColoredGraph, edge_ids) -> PerfectMatching:
    ids = tuple(sorted(edge_ids))
    return PerfectMatching(ids, prod((graph.edges[i].weight for i in ids), start=1 + 0j))


def enumerate_edge_sets(graph: BiColoredGraph, max_matchings: int = DEFAULT_MAX_MATCHINGS):
    """All perfect matchings as sorted edge-id tuples, in lexicographic order."""
    n = graph.n
    if n % 2:
        return []
    # adjacency[v] lists (other endpoint, edge id) in edge order
    adjacency = [[] for _ in range(n)]
    for e in graph.edges:
        adjacency[e.u].append((e.v, e.id))
        adjacency[e.v].append((e.u, e.id))

    covered = [False] * n
    chosen: list[int] = []
    found: list[tuple[int, ...]] = []

    def dead_end() -> bool:
        for x in range(n):
            if not covered[x] and not any(not covered[y] for y, _ in adjacency[x]):
                return True
        return False

    def recurse(start: int):
        v = start
        while v < n and covered[v]:
            v += 1
        if v == n:
            if len(found) >= max_matchings:
                raise MatchingExplosion(f"more than {max_matchings} perfect matchings")
            found.append(tuple(sorted(chosen)))
            return
        covered[v] = True
        for other, eid in adjacency[v]:
            if covered[other]:
                continue
            covered[other] = True
            chosen.append(eid)
            if not dead_end():
                recurse(v + 1)
            chosen.pop()
            covered[other] = False
        covered[v] = False

    if not dead_end():
        recurse(0)
    found.sort()
    return found


def enumerate_perfect_matchings(
    graph: BiColoredGraph, max_matchings: int = DEFAULT_MAX_MATCHINGS
) -> list[PerfectMatching]:
    """Every perfect matching exactly once, sorted by edge-id tuple.

    Parallel edges give distinct matchings. Raises ``MatchingExplosion`` if
    more than ``max_matchings`` exist.
    """
    return [_matching(graph, ids) for ids in enumerate_edge_sets(graph, max_matchings)]


def _pairings(vertices: tuple[int, ...]):
    if not vertices:
        yield ()
        return
    first, rest = vertices[0], vertices[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in _pairings(remaining):
            yield ((first, partner),) + tail


def oracle_enumerate(graph: BiColoredGraph) -> list[PerfectMatching]:
    """Brute-force reference enumerator for ``n <= 12``."""
    n = graph.n
    if n > ORACLE_MAX_N:
        raise TooLargeForOracle(f"oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    if n % 2:
        return []
    between: dict[tuple[int, int], list[int]] = {}
    for e in graph.edges:
        between.setdefault((e.u, e.v), []).append(e.id)
    result = []
    for pairing in _pairings(tuple(range(n))):
        choices = [between.get(pair, []) for pair in pairing]
        for pick in itertools.product(*choices):
            result.append(_matching(graph, pick))
    return result
