"""Bundled example graphs and targets (JSON documents next to this module)."""

from __future__ import annotations

from pathlib import Path

from ..fidelity import TargetSpec
from ..graph import (
    BiColoredGraph,
    alternating_cycle,
    build_graph,
    default_palette,
    disjoint_union,
    k4_ghz,
)

CATALOG_DIR = Path(__file__).parent


def names() -> list[str]:
    return sorted(p.name for p in CATALOG_DIR.glob("*.json"))


def path(name: str) -> Path:
    for candidate in (CATALOG_DIR / name, CATALOG_DIR / f"{name}.json"):
        if candidate.is_file():
            return candidate
    raise FileNotFoundError(f"no catalog entry {name!r}; have {names()}")


def wstate_target() -> TargetSpec:
    """One green vertex out of four, weights (1, 1, 2, i); palette (r, g)."""
    return TargetSpec(
        colorings=((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
        weights=(1, 1, 2, 1j),
    )


def kmono_n6_k4() -> BiColoredGraph:
    """4-cycle GHZ on vertices 0..3 plus a red edge 4-5: 4-monochromatic with d=2."""
    red_pair = build_graph(2, 2, [(0, 1, 0, 0, 1.0)])
    return disjoint_union(alternating_cycle(4), red_pair)


def kmono_n10_k4_d3() -> BiColoredGraph:
    """K4 GHZ plus three red edges: 10 vertices, d=3, 4-monochromatic."""
    reds = build_graph(6, 3, [(0, 1, 0, 0, 1.0), (2, 3, 0, 0, 1.0), (4, 5, 0, 0, 1.0)])
    return disjoint_union(k4_ghz(), reds)


def builders() -> dict[str, BiColoredGraph]:
    """Constructors behind every shipped graph file."""
    graphs = {"k4_ghz.json": k4_ghz()}
    for n in (4, 6, 8, 10):
        graphs[f"cycle{n}.json"] = alternating_cycle(n)
    graphs["kmono_n6_k4.json"] = kmono_n6_k4()
    graphs["kmono_n10_k4_d3.json"] = kmono_n10_k4_d3()
    graphs["cancel_pair.json"] = build_graph(2, 2, [(0, 1, 0, 0, 1.0), (0, 1, 0, 0, -1.0)])
    return graphs


WSTATE_PALETTE = default_palette(2)
