"""Edge bi-colored weighted multigraphs.

A graph has a fixed vertex ordering ``0..n-1`` and a declared palette of
``d >= 2`` colors. Each edge joins ``u < v``, carries a complex weight, and
has one color at each endpoint. Parallel edges (including exact duplicates)
are kept as distinct edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

DEFAULT_TOL = 1e-9


class GraphError(ValueError):
    """Base class for invalid graph input."""


class LoopEdge(GraphError):
    pass


class ColorOutOfPalette(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class OddN(GraphError):
    pass


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    color_at_u: int
    color_at_v: int
    weight: complex = 1.0 + 0j

    @property
    def monochromatic(self) -> bool:
        return self.color_at_u == self.color_at_v

    def color_at(self, vertex: int) -> int:
        if vertex == self.u:
            return self.color_at_u
        if vertex == self.v:
            return self.color_at_v
        raise ValueError(f"vertex {vertex} is not an endpoint of edge {self.id}")

    def spec(self) -> tuple[int, int, int, int, complex]:
        return (self.u, self.v, self.color_at_u, self.color_at_v, self.weight)


@dataclass(frozen=True)
class BiColoredGraph:
    n: int
    d: int
    edges: tuple[Edge, ...]
    palette: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.palette:
            object.__setattr__(self, "palette", default_palette(self.d))

    @property
    def weights(self) -> list[complex]:
        return [e.weight for e in self.edges]

    def edge(self, edge_id: int) -> Edge:
        return self.edges[edge_id]

    def incident(self, vertex: int) -> list[Edge]:
        return [e for e in self.edges if vertex in (e.u, e.v)]

    def specs(self) -> list[tuple[int, int, int, int, complex]]:
        return [e.spec() for e in self.edges]

    def with_weights(self, weights: Sequence[complex]) -> "BiColoredGraph":
        """Same topology, new edge weights (in edge order)."""
        if len(weights) != len(self.edges):
            raise ValueError(f"expected {len(self.edges)} weights, got {len(weights)}")
        edges = tuple(replace(e, weight=complex(w)) for e, w in zip(self.edges, weights))
        return replace(self, edges=edges)

    def relabel_colors(self, perm: Sequence[int]) -> "BiColoredGraph":
        """Apply the palette permutation ``color -> perm[color]`` to every edge."""
        if sorted(perm) != list(range(self.d)):
            raise ValueError("perm must be a permutation of range(d)")
        edges = tuple(
            replace(e, color_at_u=perm[e.color_at_u], color_at_v=perm[e.color_at_v])
            for e in self.edges
        )
        return replace(self, edges=edges)


def default_palette(d: int) -> tuple[str, ...]:
    if d == 2:
        return ("r", "g")
    if d == 3:
        return ("r", "g", "b")
    return tuple(f"c{i}" for i in range(d))


def build_graph(
    n: int,
    d: int,
    edge_specs: Iterable[Sequence],
    palette: Sequence[str] | None = None,
) -> BiColoredGraph:
    """Validate edge specs ``(u, v, color_at_u, color_at_v[, weight])``.

    Specs with ``u > v`` are stored with the endpoints and the color pair
    swapped together. The weight defaults to 1.
    """
    if n < 1:
        raise VertexOutOfRange(f"n must be >= 1, got {n}")
    if d < 2:
        raise ColorOutOfPalette(f"palette size must be >= 2, got {d}")
    if palette is not None:
        palette = tuple(str(p) for p in palette)
        if len(palette) != d:
            raise ColorOutOfPalette(f"palette has {len(palette)} labels but d={d}")
        if len(set(palette)) != d:
            raise ColorOutOfPalette(f"palette labels must be unique: {palette}")

    edges = []
    for i, spec in enumerate(edge_specs):
        if len(spec) == 4:
            u, v, cu, cv = spec
            w = 1.0
        else:
            u, v, cu, cv, w = spec
        u, v, cu, cv = int(u), int(v), int(cu), int(cv)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"edge {i}: vertex {x} not in 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"edge {i}: loop at vertex {u}")
        for c in (cu, cv):
            if not 0 <= c < d:
                raise ColorOutOfPalette(f"edge {i}: color {c} not in 0..{d - 1}")
        if u > v:
            u, v, cu, cv = v, u, cv, cu
        edges.append(Edge(i, u, v, cu, cv, complex(w)))
    return BiColoredGraph(n, d, tuple(edges), palette or ())


def disjoint_union(g1: BiColoredGraph, g2: BiColoredGraph) -> BiColoredGraph:
    """Place ``g2`` after ``g1`` (vertices shifted by ``g1.n``). Palettes must agree."""
    if g1.d != g2.d:
        raise ValueError("palette sizes differ")
    specs = g1.specs() + [(u + g1.n, v + g1.n, cu, cv, w) for u, v, cu, cv, w in g2.specs()]
    return build_graph(g1.n + g2.n, g1.d, specs, g1.palette)


def alternating_cycle(n: int, colors: tuple[int, int] = (0, 1), d: int = 2) -> BiColoredGraph:
    """Even cycle 0-1-...-(n-1)-0 with monochromatic edges alternating two colors."""
    if n % 2:
        raise OddN(f"alternating cycle needs even n, got {n}")
    if n < 4:
        raise OddN(f"alternating cycle needs n >= 4, got {n}")
    a, b = colors
    specs = []
    for i in range(n):
        c = a if i % 2 == 0 else b
        specs.append((i, (i + 1) % n, c, c, 1.0))
    return build_graph(n, d, specs)


def k4_ghz() -> BiColoredGraph:
    """K4 split into its three perfect matchings, colored 0, 1, 2; unit weights."""
    specs = [
        (0, 1, 0, 0, 1.0),
        (2, 3, 0, 0, 1.0),
        (0, 2, 1, 1, 1.0),
        (1, 3, 1, 1, 1.0),
        (0, 3, 2, 2, 1.0),
        (1, 2, 2, 2, 1.0),
    ]
    return build_graph(4, 3, specs)


def complete_multigraph(n: int, d: int, monochromatic_only: bool = False) -> BiColoredGraph:
    """Every vertex pair joined once per ordered color pair (or per color)."""
    specs = []
    for u in range(n):
        for v in range(u + 1, n):
            for cu in range(d):
                for cv in range(d):
                    if monochromatic_only and cu != cv:
                        continue
                    specs.append((u, v, cu, cv, 1.0))
    return build_graph(n, d, specs)
