import pytest
from hypothesis import given

from bicolor.graph import (
    ColorOutOfPalette,
    LoopEdge,
    OddN,
    VertexOutOfRange,
    alternating_cycle,
    build_graph,
    complete_multigraph,
    disjoint_union,
    k4_ghz,
)
from bicolor.matching import enumerate_perfect_matchings
from tests.helpers import graphs


def test_k4_build_from_matchings():
    specs = [(0, 1, 0, 0, 1), (2, 3, 0, 0, 1), (0, 2, 1, 1, 1), (1, 3, 1, 1, 1), (0, 3, 2, 2, 1), (1, 2, 2, 2, 1)]
    g = build_graph(4, 3, specs)
    assert len(g.edges) == 6
    assert all(e.monochromatic for e in g.edges)
    assert g == k4_ghz()


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        build_graph(2, 2, [(0, 0, 0, 0, 1)])


@pytest.mark.parametrize("spec,error", [
    ((0, 2, 0, 0, 1), VertexOutOfRange),
    ((-1, 1, 0, 0, 1), VertexOutOfRange),
    ((0, 1, 0, 2, 1), ColorOutOfPalette),
])
def test_invalid_specs(spec, error):
    with pytest.raises(error):
        build_graph(2, 2, [spec])


def test_palette_size_at_least_two():
    with pytest.raises(ColorOutOfPalette):
        build_graph(2, 1, [])


def test_swapped_endpoints_swap_colors():
    red, green = 0, 1
    g = build_graph(4, 2, [(3, 1, red, green, 1)])
    e = g.edges[0]
    assert (e.u, e.v, e.color_at_u, e.color_at_v) == (1, 3, green, red)


@given(graphs())
def test_normalization_is_idempotent(g):
    swapped = [(v, u, cv, cu, w) for u, v, cu, cv, w in g.specs()]
    assert build_graph(g.n, g.d, swapped) == g
    assert build_graph(g.n, g.d, g.specs()) == g


def test_parallel_duplicates_kept():
    g = build_graph(2, 2, [(0, 1, 0, 0, 1), (0, 1, 0, 0, 1)])
    assert [e.id for e in g.edges] == [0, 1]
    assert len(enumerate_perfect_matchings(g)) == 2


@pytest.mark.parametrize("n", [4, 6])
def test_alternating_cycle(n):
    g = alternating_cycle(n)
    assert len(g.edges) == n
    assert [e.color_at_u for e in g.edges] == [i % 2 for i in range(n)]
    assert all(e.monochromatic and e.weight == 1 for e in g.edges)
    assert {(e.u, e.v) for e in g.edges} == {tuple(sorted((i, (i + 1) % n))) for i in range(n)}


@pytest.mark.parametrize("n", [5, 3, 2])
def test_alternating_cycle_rejects(n):
    with pytest.raises(OddN):
        alternating_cycle(n)


def test_k4_ghz_shape():
    g = k4_ghz()
    assert (g.n, g.d, len(g.edges)) == (4, 3, 6)
    by_color = {}
    for e in g.edges:
        by_color.setdefault(e.color_at_u, set()).add((e.u, e.v))
    assert by_color == {0: {(0, 1), (2, 3)}, 1: {(0, 2), (1, 3)}, 2: {(0, 3), (1, 2)}}
    assert len(enumerate_perfect_matchings(g)) == 3


def test_catalog_graphs_validate():
    for g in [k4_ghz(), complete_multigraph(4, 2)] + [alternating_cycle(n) for n in (4, 6, 8, 10)]:
        assert build_graph(g.n, g.d, g.specs(), g.palette) == g


def test_disjoint_union_shifts_vertices():
    g = disjoint_union(alternating_cycle(4), alternating_cycle(4))
    assert g.n == 8
    assert max(e.v for e in g.edges) == 7
    assert len(g.edges) == 8


def test_relabel_colors_requires_permutation():
    with pytest.raises(ValueError):
        k4_ghz().relabel_colors([0, 0, 1])
