"""Independent oracles and random generators shared by the tests."""

from collections import defaultdict

import numpy as np
from hypothesis import strategies as st

from bicolor.graph import build_graph
from bicolor.matching import oracle_enumerate


def brute_state(graph):
    """Coloring weights from the brute-force enumerator, colored by hand."""
    weights = defaultdict(complex)
    for pm in oracle_enumerate(graph):
        colors = [None] * graph.n
        w = 1 + 0j
        for eid in pm.edge_ids:
            u, v, cu, cv, we = graph.specs()[eid]
            colors[u], colors[v] = cu, cv
            w *= we
        weights[tuple(colors)] += w
    return dict(weights)


def brute_fidelity(weights, amplitudes, z):
    """``|sum a_c w(c)|^2 / (z * sum |w(c)|^2)`` straight from the formula."""
    N = sum(abs(w) ** 2 for w in weights.values())
    overlap = sum(a * weights.get(c, 0) for c, a in amplitudes.items())
    return abs(overlap) ** 2 / (z * N)


def random_graph(rng, n, d, num_edges, max_multiplicity=3, complex_weights=True):
    """Random multigraph with at most ``max_multiplicity`` edges per vertex pair."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    load = defaultdict(int)
    specs = []
    while len(specs) < num_edges and pairs:
        u, v = pairs[rng.integers(len(pairs))]
        if load[u, v] >= max_multiplicity:
            pairs.remove((u, v))
            continue
        load[u, v] += 1
        if rng.random() < 0.5:
            u, v = v, u
        w = complex(rng.normal(), rng.normal()) if complex_weights else complex(rng.normal())
        specs.append((u, v, int(rng.integers(d)), int(rng.integers(d)), w))
    return build_graph(n, d, specs)


def random_graph_with_matchings(rng, n, d, num_edges, max_multiplicity=3):
    from bicolor.state import compute_state

    num_edges = max(num_edges, n)  # fewer than n/2 edges can never cover n vertices
    while True:
        g = random_graph(rng, n, d, num_edges, max_multiplicity)
        if not compute_state(g).degenerate:
            return g


weights_st = st.complex_numbers(min_magnitude=0.1, max_magnitude=3, allow_nan=False, allow_infinity=False)


@st.composite
def graphs(draw, max_n=6, max_d=3, max_edges=12, even=True):
    n = draw(st.sampled_from([x for x in range(2, max_n + 1) if x % 2 == 0 or not even]))
    d = draw(st.integers(2, max_d))
    num = draw(st.integers(1, max_edges))
    specs = []
    for _ in range(num):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 2))
        v = v if v < u else v + 1
        specs.append((u, v, draw(st.integers(0, d - 1)), draw(st.integers(0, d - 1)), draw(weights_st)))
    return build_graph(n, d, specs)


def seeded_rng(seed=0):
    return np.random.default_rng(seed)
