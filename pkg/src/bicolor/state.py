"""Inherited vertex colorings and the coloring weights of a graph.

Each perfect matching colors every vertex with the color its matching edge
carries at that endpoint. Summing matching weights per coloring gives the
graph's state ``{coloring: w(c)}``. Colorings whose sum vanishes (within a
tolerance) are kept and flagged as cancelled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import DEFAULT_TOL, BiColoredGraph, default_palette
from .matching import DEFAULT_MAX_MATCHINGS, PerfectMatching, enumerate_perfect_matchings

Coloring = tuple[int, ...]


class NotAMatching(ValueError):
    pass


class BadColoring(ValueError):
    pass


@dataclass(frozen=True)
class Term:
    coloring: Coloring
    weight: complex
    matchings: tuple[int, ...]  # indices into StateMap.matchings
    cancelled: bool


@dataclass(frozen=True)
class StateMap:
    n: int
    d: int
    terms: dict[Coloring, Term]
    tol: float = DEFAULT_TOL
    palette: tuple[str, ...] = ()
    matchings: tuple[PerfectMatching, ...] = field(default=(), repr=False)

    def weight(self, coloring: Sequence[int]) -> complex:
        term = self.terms.get(tuple(coloring))
        return term.weight if term is not None else 0j

    @property
    def weights(self) -> dict[Coloring, complex]:
        return {c: t.weight for c, t in self.terms.items()}

    @property
    def norm(self) -> float:
        """Sum of ``|w(c)|^2`` over all computed weights (no zero rounding)."""
        return sum(abs(t.weight) ** 2 for t in self.terms.values())

    @property
    def surviving(self) -> list[Term]:
        return [t for t in self.terms.values() if not t.cancelled]

    @property
    def degenerate(self) -> bool:
        """No matchings, or every coloring cancels."""
        return not self.surviving

    def label(self, coloring: Sequence[int]) -> str:
        return ",".join(self.palette[c] for c in coloring)


def state_from_weights(
    n: int,
    d: int,
    weights: dict[Sequence[int], complex] | Iterable[tuple[Sequence[int], complex]],
    tol: float = DEFAULT_TOL,
    palette: Sequence[str] = (),
) -> StateMap:
    """Build a StateMap directly from coloring weights (no graph behind it)."""
    items = weights.items() if isinstance(weights, dict) else weights
    terms = {}
    for coloring, w in items:
        key = tuple(int(c) for c in coloring)
        if len(key) != n or any(not 0 <= c < d for c in key):
            raise BadColoring(f"coloring {key} invalid for n={n}, d={d}")
        w = complex(w)
        terms[key] = Term(key, w, (), abs(w) <= tol)
    return StateMap(n, d, dict(sorted(terms.items())), tol, tuple(palette) or default_palette(d))


def inherited_coloring(graph: BiColoredGraph, pm: PerfectMatching | Iterable[int]) -> Coloring:
    """Color each vertex with its matching edge's color at that endpoint."""
    edge_ids = pm.edge_ids if isinstance(pm, PerfectMatching) else tuple(pm)
    colors: list[int | None] = [None] * graph.n
    for eid in edge_ids:
        e = graph.edges[eid]
        for x, c in ((e.u, e.color_at_u), (e.v, e.color_at_v)):
            if colors[x] is not None:
                raise NotAMatching(f"vertex {x} covered twice")
            colors[x] = c
    if any(c is None for c in colors):
        missing = [i for i, c in enumerate(colors) if c is None]
        raise NotAMatching(f"vertices {missing} not covered")
    return tuple(colors)


def compute_state(
    graph: BiColoredGraph,
    tol: float = DEFAULT_TOL,
    max_matchings: int = DEFAULT_MAX_MATCHINGS,
) -> StateMap:
    """Group all perfect matchings by inherited coloring and sum their weights."""
    matchings = enumerate_perfect_matchings(graph, max_matchings)
    sums: dict[Coloring, complex] = {}
    members: dict[Coloring, list[int]] = {}
    for i, pm in enumerate(matchings):
        c = inherited_coloring(graph, pm)
        sums[c] = sums.get(c, 0j) + pm.weight
        members.setdefault(c, []).append(i)
    terms = {
        c: Term(c, sums[c], tuple(members[c]), abs(sums[c]) <= tol) for c in sorted(sums)
    }
    return StateMap(graph.n, graph.d, terms, tol, graph.palette, tuple(matchings))


def weight_of_coloring(
    graph: BiColoredGraph, coloring: Sequence[int], tol: float = DEFAULT_TOL
) -> complex:
    """``w(c)`` for one coloring; 0 when no matching induces it."""
    c = tuple(coloring)
    if len(c) != graph.n or any(not 0 <= x < graph.d for x in c):
        raise BadColoring(f"coloring {c} invalid for n={graph.n}, d={graph.d}")
    return compute_state(graph, tol).weight(c)
