import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicolor.catalog import kmono_n6_k4, wstate_target
from bicolor.fidelity import (
    LITERAL,
    LengthMismatch,
    TargetSpec,
    UndefinedFidelity,
    general_fidelity,
    is_k_monochromatic_coloring,
    k_monochromatic_colorings,
    k_monochromatic_fidelity,
    monochromatic_colorings,
    monochromatic_fidelity,
    verify_k_monochromatic,
    verify_monochromatic,
    verify_target,
)
from bicolor.graph import alternating_cycle, build_graph, k4_ghz
from bicolor.state import compute_state, state_from_weights
from tests.helpers import brute_fidelity, brute_state, graphs

R, G = 0, 1


def six_term_state():
    """d=3, six unit terms, the three monochromatic ones with weight 1."""
    terms = {
        (0,) * 6: 1, (1,) * 6: 1, (2,) * 6: 1,
        (0, 1, 0, 1, 0, 1): 1j, (1, 2, 1, 2, 1, 2): -1, (2, 0, 2, 0, 0, 1): cmath.exp(0.3j),
    }
    return state_from_weights(6, 3, terms)


def test_six_term_example():
    assert monochromatic_fidelity(six_term_state()).value == pytest.approx(0.5, abs=1e-12)


def test_k4_mono_fidelity():
    report = monochromatic_fidelity(compute_state(k4_ghz()))
    assert report.value == pytest.approx(1, abs=1e-12)
    assert report.N == 3 and report.d == 3


def test_matchless_undefined():
    s = compute_state(build_graph(4, 2, [(0, 1, 0, 0, 1)]))
    with pytest.raises(UndefinedFidelity):
        monochromatic_fidelity(s)
    cancelled = compute_state(build_graph(2, 2, [(0, 1, 0, 0, 1), (0, 1, 0, 0, -1)]))
    with pytest.raises(UndefinedFidelity):
        monochromatic_fidelity(cancelled)


@pytest.mark.parametrize("coloring,k,expected", [
    ((G, G, G, R, R), 3, True),
    ((G, G, R, G, R), 3, False),
    ((R, R, R, R, R), 3, True),
    ((G, R, G, R, R), 3, False),
])
def test_is_k_monochromatic(coloring, k, expected):
    assert is_k_monochromatic_coloring(coloring, k, red=R) is expected


def test_k_equals_n_reduces_to_mono():
    s = compute_state(k4_ghz())
    assert k_monochromatic_fidelity(s, 4, 0).value == pytest.approx(monochromatic_fidelity(s).value)


def test_single_term_k1():
    # the one supported coloring is one of the d k-monochromatic ones
    s = state_from_weights(3, 2, {(G, R, R): 1})
    amplitudes = {c: 1 for c in k_monochromatic_colorings(3, 2, 1, R)}
    assert (G, R, R) in amplitudes
    expected = brute_fidelity({(G, R, R): 1}, amplitudes, 2)
    assert expected == pytest.approx(0.5)
    assert k_monochromatic_fidelity(s, 1, R).value == pytest.approx(expected)


def test_general_exact_conjugated():
    t = wstate_target()
    s = state_from_weights(4, 2, dict(zip(t.colorings, t.weights)))
    report = general_fidelity(s, t)
    assert report.value == pytest.approx(1)
    assert report.N1 == pytest.approx(7) and report.N2 == pytest.approx(7)


def test_general_literal_mode():
    t = wstate_target()
    s = state_from_weights(4, 2, dict(zip(t.colorings, t.weights)))
    literal = TargetSpec(t.colorings, t.weights, LITERAL)
    # sum w_i * w_i = 1 + 1 + 4 - 1 = 5
    assert general_fidelity(s, literal).value == pytest.approx(25 / 49, abs=1e-12)


def test_general_orthogonal():
    s = state_from_weights(4, 2, {(0, 0, 0, 0): 1})
    assert general_fidelity(s, wstate_target()).value == 0


def test_general_length_mismatch():
    with pytest.raises(LengthMismatch):
        general_fidelity(compute_state(k4_ghz()), TargetSpec([(0, 0)], [1]))


def test_target_validation():
    with pytest.raises(ValueError):
        TargetSpec([(0, 0), (0, 0)], [1, 1])
    with pytest.raises(ValueError):
        TargetSpec([(0, 0)], [0])
    with pytest.raises(ValueError):
        TargetSpec([], [])


def test_verify_monochromatic_known():
    assert verify_monochromatic(compute_state(k4_ghz()))
    for n in (4, 6, 8, 10):
        assert verify_monochromatic(compute_state(alternating_cycle(n)))


def test_verify_monochromatic_perturbed():
    g = k4_ghz()
    g2 = g.with_weights([2] + g.weights[1:])
    weights = brute_state(g2)
    assert weights[(0, 0, 0, 0)] == 2
    assert not verify_monochromatic(compute_state(g2))


def test_verify_k_monochromatic():
    s = compute_state(k4_ghz())
    assert verify_k_monochromatic(s, 4, 0)
    assert not verify_k_monochromatic(s, 3, 0)
    assert verify_k_monochromatic(compute_state(kmono_n6_k4()), 4, R)
    assert not verify_k_monochromatic(compute_state(kmono_n6_k4()), 6, R)


def test_verify_target():
    t = wstate_target()
    exact = dict(zip(t.colorings, t.weights))
    assert verify_target(state_from_weights(4, 2, exact), t)
    extra = dict(exact)
    extra[(0, 0, 0, 0)] = 0.5
    assert not verify_target(state_from_weights(4, 2, extra), t)


@settings(deadline=None)
@given(graphs(max_n=6))
def test_matches_brute_fidelity(g):
    s = compute_state(g)
    if s.degenerate:
        return
    amplitudes = {c: 1 for c in monochromatic_colorings(g.n, g.d)}
    assert monochromatic_fidelity(s).value == pytest.approx(
        brute_fidelity(brute_state(g), amplitudes, g.d), abs=1e-9
    )


@settings(deadline=None)
@given(graphs(max_n=6), st.integers(1, 6), st.integers(0, 2))
def test_bounded(g, k, red):
    s = compute_state(g)
    if s.degenerate:
        return
    k = min(k, g.n)
    red = red % g.d
    values = [monochromatic_fidelity(s).value, k_monochromatic_fidelity(s, k, red).value]
    target = TargetSpec(list(s.terms)[:3], [1, 1j, -2][: min(3, len(s.terms))])
    values.append(general_fidelity(s, target).value)
    for v in values:
        assert -1e-12 <= v <= 1 + 1e-12


@settings(deadline=None)
@given(graphs(max_n=6), st.complex_numbers(min_magnitude=0.2, max_magnitude=5))
def test_scale_phase_invariance(g, z):
    s = compute_state(g)
    if s.degenerate:
        return
    s2 = compute_state(g.with_weights([w * z for w in g.weights]))
    target = TargetSpec(list(s.terms)[:2], [1, 1j][: min(2, len(s.terms))])
    assert monochromatic_fidelity(s2).value == pytest.approx(monochromatic_fidelity(s).value, abs=1e-9)
    assert k_monochromatic_fidelity(s2, 2, 0).value == pytest.approx(
        k_monochromatic_fidelity(s, 2, 0).value, abs=1e-9
    )
    assert general_fidelity(s2, target).value == pytest.approx(general_fidelity(s, target).value, abs=1e-9)


@given(graphs(max_n=6), st.randoms())
def test_relabel_equivariance(g, random):
    s = compute_state(g)
    if s.degenerate:
        return
    perm = list(range(g.d))
    random.shuffle(perm)
    relabeled = compute_state(g.relabel_colors(perm))
    assert monochromatic_fidelity(relabeled).value == pytest.approx(monochromatic_fidelity(s).value, abs=1e-12)


@given(graphs(max_n=6))
def test_k_n_reduction_random(g):
    s = compute_state(g)
    if s.degenerate:
        return
    for red in range(g.d):
        assert k_monochromatic_fidelity(s, g.n, red).value == pytest.approx(
            monochromatic_fidelity(s).value, abs=1e-12
        )


@given(st.floats(-1e-10, 1e-10), st.floats(-1e-10, 1e-10))
def test_verified_implies_unit_fidelity(a, b):
    s = state_from_weights(4, 3, {(0,) * 4: 1 + a, (1,) * 4: 1 - b, (2,) * 4: 1, (0, 1, 0, 1): complex(a, b)})
    tol = 1e-9
    assert verify_monochromatic(s, tol)
    assert monochromatic_fidelity(s).value == pytest.approx(1, abs=3 * s.d * tol)


def test_report_fields():
    s = compute_state(kmono_n6_k4())
    r = k_monochromatic_fidelity(s, 4, R)
    assert (r.k, r.red, r.d, r.kind) == (4, R, 2, "k_mono")
    assert r.value == pytest.approx(1)
    assert set(r.matched_terms) == set(k_monochromatic_colorings(6, 2, 4, R))
    assert np.isclose(r.tolerance, 1e-9)
