"""Weight optimization and topology search over bi-colored graphs.

A topology (edges and colors, weights ignored) is compiled once into an array
of perfect matchings. Every fidelity is then a smooth rational function of
the edge weights::

    w(c) = sum_{m in c} prod_{e in m} w_e
    F    = |sum_c a_c w(c)|^2 / (Z * sum_c |w(c)|^2)

Weights are packed as a real vector ``[Re w_0..Re w_{E-1}, Im w_0..Im w_{E-1}]``.
The gradient uses Wirtinger derivatives: ``w(c)`` is holomorphic in each
``w_e``, so for real ``F`` we get ``dF/dRe w_e = 2 Re(dF/dw_e)`` and
``dF/dIm w_e = -2 Im(dF/dw_e)``.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import least_squares, minimize

from .fidelity import (
    TargetSpec,
    general_fidelity,
    k_monochromatic_colorings,
    k_monochromatic_fidelity,
    monochromatic_colorings,
    monochromatic_fidelity,
    verify_k_monochromatic,
    verify_monochromatic,
    verify_target,
)
from .graph import DEFAULT_TOL, BiColoredGraph, build_graph, complete_multigraph
from .matching import DEFAULT_MAX_MATCHINGS, enumerate_edge_sets
from .state import StateMap, compute_state, inherited_coloring

log = logging.getLogger(__name__)

COMPLEX, REAL, POSITIVE = "complex", "real", "positive"
CONSTRAINTS = (COMPLEX, REAL, POSITIVE)
MIN_POSITIVE = 1e-12

SNAP_VALUES = (0.0, 1.0, -1.0, 2.0, -2.0, 0.5, -0.5, math.sqrt(2) / 2, -math.sqrt(2) / 2)
SNAP_RADIUS = 1e-4


class UndefinedAtPoint(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Objective:
    kind: str = "mono"  # mono | k_mono | general
    constraint: str = COMPLEX
    k: int | None = None
    red: int = 0
    target: TargetSpec | None = None

    def __post_init__(self):
        if self.kind not in ("mono", "k_mono", "general"):
            raise ValueError(f"unknown objective kind {self.kind!r}")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"constraint must be one of {CONSTRAINTS}")
        if self.kind == "k_mono" and self.k is None:
            raise ValueError("k_mono objective needs k")
        if self.kind == "general" and self.target is None:
            raise ValueError("general objective needs a target")

    def amplitudes(self, n: int, d: int) -> dict[tuple, complex]:
        if self.kind == "mono":
            return {c: 1.0 for c in monochromatic_colorings(n, d)}
        if self.kind == "k_mono":
            return {c: 1.0 for c in k_monochromatic_colorings(n, d, self.k, self.red)}
        return self.target.amplitudes()

    def normalizer(self, d: int) -> float:
        return self.target.norm if self.kind == "general" else float(d)

    def exact_weights(self, n: int, d: int) -> dict[tuple, complex]:
        """Coloring weights an exact solution must realize (all others cancel)."""
        if self.kind == "general":
            return dict(zip(self.target.colorings, self.target.weights))
        return {c: 1.0 for c in self.amplitudes(n, d)}

    def fidelity(self, state: StateMap) -> float:
        if self.kind == "mono":
            return monochromatic_fidelity(state).value
        if self.kind == "k_mono":
            return k_monochromatic_fidelity(state, self.k, self.red).value
        return general_fidelity(state, self.target).value

    def verify(self, state: StateMap, tol: float = DEFAULT_TOL) -> bool:
        if self.kind == "mono":
            return verify_monochromatic(state, tol)
        if self.kind == "k_mono":
            return verify_k_monochromatic(state, self.k, self.red, tol)
        return verify_target(state, self.target, tol)


# -- packing -------------------------------------------------------------------


def pack(weights: Sequence[complex]) -> np.ndarray:
    w = np.asarray(weights, dtype=complex)
    return np.concatenate([w.real, w.imag])


def unpack(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    half = len(x) // 2
    return x[:half] + 1j * x[half:]


# -- compiled topology ---------------------------------------------------------


class CompiledTopology:
    """Matchings of a fixed topology as index arrays, reusable for any weights."""

    def __init__(self, topology: BiColoredGraph, max_matchings: int = DEFAULT_MAX_MATCHINGS):
        self.topology = topology
        self.n, self.d = topology.n, topology.d
        self.num_edges = len(topology.edges)
        edge_sets = enumerate_edge_sets(topology, max_matchings)
        self.edge_index = np.array(edge_sets, dtype=np.intp).reshape(len(edge_sets), topology.n // 2)
        index: dict[tuple, int] = {}
        group = []
        for ids in edge_sets:
            c = inherited_coloring(topology, ids)
            group.append(index.setdefault(c, len(index)))
        self.colorings: list[tuple] = list(index)
        self.coloring_index = index
        self.group = np.array(group, dtype=np.intp)

    @property
    def num_matchings(self) -> int:
        return len(self.group)

    def coloring_weights(self, w: np.ndarray) -> np.ndarray:
        """``w(c)`` for every reachable coloring, in ``self.colorings`` order."""
        prods = np.prod(w[self.edge_index], axis=1)
        nc = len(self.colorings)
        return np.bincount(self.group, prods.real, nc) + 1j * np.bincount(self.group, prods.imag, nc)

    def _partials(self, w: np.ndarray) -> np.ndarray:
        """Per matching and slot, the product of the other edge weights."""
        factors = w[self.edge_index]
        m, h = factors.shape
        left = np.ones((m, h), dtype=complex)
        right = np.ones((m, h), dtype=complex)
        for j in range(1, h):
            left[:, j] = left[:, j - 1] * factors[:, j - 1]
            right[:, h - 1 - j] = right[:, h - j] * factors[:, h - j]
        return left * right

    def jacobian(self, w: np.ndarray) -> np.ndarray:
        """Complex derivative ``dw(c)/dw_e`` as a (colorings x edges) matrix."""
        jac = np.zeros((len(self.colorings), self.num_edges), dtype=complex)
        if self.num_matchings:
            partial = self._partials(w)
            rows = np.repeat(self.group, self.edge_index.shape[1])
            np.add.at(jac, (rows, self.edge_index.ravel()), partial.ravel())
        return jac

    def _coefficients(self, obj: Objective) -> np.ndarray:
        a = np.zeros(len(self.colorings), dtype=complex)
        for c, amp in obj.amplitudes(self.n, self.d).items():
            i = self.coloring_index.get(c)
            if i is not None:
                a[i] = amp
        return a

    def fidelity(self, w: np.ndarray, obj: Objective, tol: float = DEFAULT_TOL) -> tuple[float, bool]:
        """Objective value and an "undefined" flag (no surviving coloring -> 0, True)."""
        wc = self.coloring_weights(w)
        if not np.any(np.abs(wc) > tol):
            return 0.0, True
        a = self._coefficients(obj)
        N = float(np.sum(np.abs(wc) ** 2))
        overlap = np.dot(a, wc)
        return float(abs(overlap) ** 2 / (obj.normalizer(self.d) * N)), False

    def complex_gradient(self, w: np.ndarray, obj: Objective, tol: float = DEFAULT_TOL) -> np.ndarray:
        """Wirtinger derivative ``dF/dw_e``."""
        wc = self.coloring_weights(w)
        if not np.any(np.abs(wc) > tol):
            raise UndefinedAtPoint("objective undefined: every coloring cancels")
        a = self._coefficients(obj)
        z = obj.normalizer(self.d)
        N = float(np.sum(np.abs(wc) ** 2))
        A = np.dot(a, wc)
        per_coloring = np.conj(A) * a / (z * N) - abs(A) ** 2 * np.conj(wc) / (z * N**2)
        # chain rule through w(c): weight each matching slot by its coloring's coefficient
        partial = self._partials(w) * per_coloring[self.group][:, None]
        grad = np.zeros(self.num_edges, dtype=complex)
        np.add.at(grad, self.edge_index.ravel(), partial.ravel())
        return grad

    def gradient(self, x: np.ndarray, obj: Objective, tol: float = DEFAULT_TOL) -> np.ndarray:
        g = self.complex_gradient(unpack(x), obj, tol)
        return np.concatenate([2 * g.real, -2 * g.imag])


# -- public single-point operations --------------------------------------------


@dataclass(frozen=True)
class Evaluation:
    value: float
    undefined: bool


def evaluate(topology: BiColoredGraph | CompiledTopology, x: np.ndarray, obj: Objective) -> Evaluation:
    """Objective fidelity of ``topology`` carrying the packed weights ``x``."""
    ct = topology if isinstance(topology, CompiledTopology) else CompiledTopology(topology)
    x = np.asarray(x, dtype=float)
    if len(x) != 2 * ct.num_edges:
        raise ValueError(f"expected {2 * ct.num_edges} parameters, got {len(x)}")
    _check_constraint(x, obj.constraint)
    value, undefined = ct.fidelity(unpack(x), obj)
    return Evaluation(value, undefined)


def gradient(topology: BiColoredGraph | CompiledTopology, x: np.ndarray, obj: Objective) -> np.ndarray:
    """Analytic gradient of the objective with respect to the packed weights."""
    ct = topology if isinstance(topology, CompiledTopology) else CompiledTopology(topology)
    return ct.gradient(np.asarray(x, dtype=float), obj)


def _check_constraint(x: np.ndarray, constraint: str):
    if not np.all(np.isfinite(x)):
        raise ValueError("weights must be finite")
    half = len(x) // 2
    if constraint in (REAL, POSITIVE) and np.any(x[half:] != 0):
        raise ValueError(f"{constraint} constraint requires zero imaginary parts")
    if constraint == POSITIVE and np.any(x[:half] <= 0):
        raise ValueError("positive constraint requires strictly positive real parts")


# -- multi-start ascent ---------------------------------------------------------


@dataclass(frozen=True)
class OptimizeConfig:
    restarts: int = 10
    max_iters: int = 2000
    seed: int = 0
    step_rule: str = "lbfgs"  # lbfgs | backtracking | fixed
    step_size: float = 0.1  # initial (backtracking) or constant (fixed) step
    box: float = 10.0
    ftol: float = 1e-13
    exact_threshold: float = 1e-3  # attempt exact polishing when 1 - F is below this
    tol: float = DEFAULT_TOL


@dataclass
class SearchResult:
    graph: BiColoredGraph
    fidelity: float
    exact: bool
    restarts_used: int
    evaluations: int
    seed: int
    objective: Objective
    snapped: bool = False
    undefined: bool = False
    trace: list[float] = field(default_factory=list, repr=False)

    def canonical(self) -> tuple:
        return tuple((e.u, e.v, e.color_at_u, e.color_at_v) for e in self.graph.edges)


def _initial_point(rng: np.random.Generator, num_edges: int, constraint: str) -> np.ndarray:
    if constraint == POSITIVE:
        re = 1.0 - rng.random(num_edges)  # (0, 1]
        return np.concatenate([re, np.zeros(num_edges)])
    if constraint == REAL:
        return np.concatenate([rng.uniform(-1, 1, num_edges), np.zeros(num_edges)])
    r = np.sqrt(rng.random(num_edges))
    theta = 2 * np.pi * rng.random(num_edges)
    return pack(r * np.exp(1j * theta))


def _project(x: np.ndarray, constraint: str, box: float) -> np.ndarray:
    x = np.clip(x, -box, box)
    half = len(x) // 2
    if constraint in (REAL, POSITIVE):
        x[half:] = 0.0
    if constraint == POSITIVE:
        x[:half] = np.maximum(x[:half], MIN_POSITIVE)
    return x


def _free_mask(num_edges: int, constraint: str) -> np.ndarray:
    mask = np.ones(2 * num_edges, dtype=bool)
    if constraint in (REAL, POSITIVE):
        mask[num_edges:] = False
    return mask


def _rescale(x: np.ndarray) -> np.ndarray:
    # every fidelity is invariant under positive scaling of all weights
    rms = np.sqrt(np.mean(x**2)) if len(x) else 0.0
    return x / rms if rms > 0 else x


class _Counter:
    def __init__(self, ct: CompiledTopology, obj: Objective, tol: float):
        self.ct, self.obj, self.tol = ct, obj, tol
        self.count = 0

    def value(self, x):
        self.count += 1
        return self.ct.fidelity(unpack(x), self.obj, self.tol)

    def grad(self, x):
        return self.ct.gradient(x, self.obj, self.tol)


def _ascend(f: _Counter, x0: np.ndarray, config: OptimizeConfig, constraint: str):
    """Projected gradient ascent. Returns (best x, best value, trace)."""
    mask = _free_mask(len(x0) // 2, constraint)
    if config.step_rule == "lbfgs":
        return _ascend_lbfgs(f, x0, config, constraint, mask)

    x = _rescale(_project(x0.copy(), constraint, config.box))
    value, undefined = f.value(x)
    trace = [value]
    step = config.step_size
    for _ in range(config.max_iters):
        if undefined or value >= 1 - config.ftol:
            break
        g = f.grad(x) * mask
        gnorm2 = float(g @ g)
        if gnorm2 < 1e-30:
            break
        if config.step_rule == "fixed":
            x_new = _project(x + step * g, constraint, config.box)
            new_value, new_undefined = f.value(x_new)
        else:
            step *= 2.0
            while True:
                x_new = _project(x + step * g, constraint, config.box)
                new_value, new_undefined = f.value(x_new)
                if not new_undefined and new_value >= value + 1e-4 * float(g @ (x_new - x)):
                    break
                step *= 0.5
                if step < 1e-14:
                    break
            if step < 1e-14:
                break
        if new_undefined:
            break
        x = _rescale(x_new)
        if new_value <= value and config.step_rule == "backtracking":
            value = max(value, new_value)
            trace.append(new_value)
            break
        value = new_value
        trace.append(value)
    return x, value, trace


def _ascend_lbfgs(f: _Counter, x0, config, constraint, mask):
    half = len(x0) // 2
    x0 = _project(x0.copy(), constraint, config.box)
    free = np.flatnonzero(mask)
    lo = -config.box if constraint != POSITIVE else MIN_POSITIVE
    bounds = [(lo, config.box)] * len(free)
    trace: list[float] = []
    best = [x0, -1.0]

    def full(y):
        x = np.zeros(2 * half)
        x[free] = y
        return x

    def fun(y):
        x = full(y)
        value, undefined = f.value(x)
        trace.append(value)
        if value > best[1]:
            best[:] = [x, value]
        if undefined:
            return 0.0, np.zeros(len(y))
        return -value, -f.grad(x)[free]

    minimize(fun, x0[free], jac=True, method="L-BFGS-B", bounds=bounds,
             options={"maxiter": config.max_iters, "ftol": 1e-16, "gtol": 1e-12})
    # line-search trial points are evaluations too; keep the best one seen
    return best[0], best[1], trace


# -- exactness ------------------------------------------------------------------


def _fix_gauge(ct: CompiledTopology, w: np.ndarray, wanted: dict, constraint: str) -> np.ndarray:
    """Scale all weights so the wanted colorings match in overall magnitude and phase."""
    wc = ct.coloring_weights(w)
    num = 0j
    den = 0.0
    for c, t in wanted.items():
        i = ct.coloring_index.get(c)
        if i is not None:
            num += np.conj(wc[i]) * t
            den += abs(wc[i]) ** 2
    if den == 0 or num == 0:
        return w
    mu = num / den  # want s^(n/2) = mu
    half = ct.n // 2
    if constraint == COMPLEX:
        s = mu ** (1.0 / half)
    else:
        s = abs(mu) ** (1.0 / half)
        if mu.real < 0 and half % 2 == 1 and constraint == REAL:
            s = -s
    return w * s


def _polish(ct: CompiledTopology, w: np.ndarray, wanted: dict, constraint: str) -> np.ndarray:
    """Solve ``w(c) = wanted(c)`` (0 for other colorings) by nonlinear least squares."""
    E = ct.num_edges
    targets = np.array([complex(wanted.get(c, 0.0)) for c in ct.colorings])
    missing = [t for c, t in wanted.items() if c not in ct.coloring_index and t != 0]
    if missing:
        return w  # some wanted coloring is unreachable in this topology

    complex_mode = constraint == COMPLEX

    def unpack_free(y):
        return y[:E] + 1j * y[E:] if complex_mode else y.astype(complex)

    def residual(y):
        r = ct.coloring_weights(unpack_free(y)) - targets
        return np.concatenate([r.real, r.imag])

    def jac(y):
        J = ct.jacobian(unpack_free(y))
        if complex_mode:
            # d/dRe = J, d/dIm = iJ
            top = np.hstack([J.real, -J.imag])
            bottom = np.hstack([J.imag, J.real])
            return np.vstack([top, bottom])
        return np.vstack([J.real, J.imag])

    y0 = np.concatenate([w.real, w.imag]) if complex_mode else w.real.copy()
    if constraint == POSITIVE:
        y0 = np.maximum(y0, MIN_POSITIVE)
        bounds = (MIN_POSITIVE, np.inf)
        method = "trf"
    else:
        bounds = (-np.inf, np.inf)
        method = "trf"
    res = least_squares(residual, y0, jac=jac, bounds=bounds, method=method,
                        xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=200)
    return unpack_free(res.x)


def snap_weights(w: np.ndarray, radius: float = SNAP_RADIUS) -> np.ndarray:
    """Round real and imaginary parts lying within ``radius`` of a simple value."""

    def snap(v):
        for s in SNAP_VALUES:
            if abs(v - s) <= radius:
                return s
        return v

    return np.array([complex(snap(z.real), snap(z.imag)) for z in np.asarray(w, dtype=complex)])


def _make_exact(ct, w, obj, config) -> tuple[np.ndarray, bool, bool]:
    """Try to turn a near-optimal point into an exactly verified one.

    Returns (weights, exact, snapped). The input weights come back unchanged
    when no verified candidate is found.
    """
    wanted = obj.exact_weights(ct.n, ct.d)
    polished = _polish(ct, _fix_gauge(ct, w, wanted, obj.constraint), wanted, obj.constraint)

    def verified(candidate):
        graph = ct.topology.with_weights(candidate)
        return obj.verify(compute_state(graph, config.tol), config.tol)

    snapped = snap_weights(polished)
    if obj.constraint == POSITIVE and np.any(snapped.real <= 0):
        snapped = polished
    if not np.array_equal(snapped, polished) and verified(snapped):
        return snapped, True, True
    if verified(polished):
        return polished, True, False
    return w, False, False


def optimize_weights(
    topology: BiColoredGraph | CompiledTopology,
    obj: Objective,
    config: OptimizeConfig = OptimizeConfig(),
) -> SearchResult:
    """Best of ``config.restarts`` seeded gradient ascents, then an exactness check."""
    ct = topology if isinstance(topology, CompiledTopology) else CompiledTopology(topology)
    rng = np.random.default_rng(config.seed)
    counter = _Counter(ct, obj, config.tol)
    E = ct.num_edges

    best_x, best_value, best_trace = None, -1.0, []
    restarts_used = 0
    for _ in range(config.restarts):
        restarts_used += 1
        x0 = _initial_point(rng, E, obj.constraint)
        if ct.num_matchings == 0:
            x, value, trace = x0, 0.0, [0.0]
        else:
            x, value, trace = _ascend(counter, x0, config, obj.constraint)
        if value > best_value:
            best_x, best_value, best_trace = x, value, trace
        if best_value >= 1 - config.ftol:
            break

    if best_x is None:
        best_x = np.zeros(2 * E)
    w = unpack(best_x)
    exact = snapped = False
    if ct.num_matchings and best_value >= 1 - config.exact_threshold:
        w, exact, snapped = _make_exact(ct, w, obj, config)

    graph = ct.topology.with_weights(w)
    state = compute_state(graph, config.tol)
    undefined = state.degenerate
    fidelity = 0.0 if undefined else obj.fidelity(state)
    return SearchResult(
        graph=graph,
        fidelity=fidelity,
        exact=exact,
        restarts_used=restarts_used,
        evaluations=counter.count,
        seed=config.seed,
        objective=obj,
        snapped=snapped,
        undefined=undefined,
        trace=best_trace,
    )


# -- topology search ------------------------------------------------------------


@dataclass(frozen=True)
class SearchBudget:
    max_edges: int = 6
    max_multiplicity: int = 1  # edges allowed between one vertex pair
    universe: str = "relevant"  # relevant | all
    weight_set: tuple[complex, ...] | None = None  # None -> continuous optimization
    max_candidates: int = 500_000
    stop_at_first_exact: bool = False
    keep_best: int = 5


def edge_universe(n: int, d: int, obj: Objective, universe: str = "relevant") -> list[tuple]:
    """Candidate edges ``(u, v, cu, cv)`` in lexicographic order.

    ``relevant`` keeps only edges whose endpoint colors agree with at least one
    coloring the objective asks for; ``all`` keeps every ordered color pair.
    """
    if universe == "all":
        return [(u, v, cu, cv) for u in range(n) for v in range(u + 1, n)
                for cu in range(d) for cv in range(d)]
    if universe != "relevant":
        raise ValueError(f"unknown universe {universe!r}")
    wanted = [c for c, t in obj.exact_weights(n, d).items() if t != 0]
    edges = {(u, v, c[u], c[v]) for c in wanted for u in range(n) for v in range(u + 1, n)}
    return sorted(edges)


def count_topologies(universe: list[tuple], max_edges: int, max_multiplicity: int) -> int:
    """Number of edge subsets with at most ``max_edges`` edges obeying the multiplicity cap."""
    per_pair: dict[tuple, int] = {}
    for u, v, *_ in universe:
        per_pair[(u, v)] = per_pair.get((u, v), 0) + 1
    poly = [1]
    for m in per_pair.values():
        factor = [math.comb(m, j) for j in range(min(m, max_multiplicity) + 1)]
        out = [0] * min(len(poly) + len(factor) - 1, max_edges + 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(factor):
                if i + j <= max_edges:
                    out[i + j] += a * b
        poly = out
    return sum(poly) - 1  # drop the empty topology


def iter_topologies(universe: list[tuple], max_edges: int, max_multiplicity: int):
    """Edge subsets by growing size, lexicographic within a size."""
    for size in range(1, max_edges + 1):
        yield from _subsets(universe, size, max_multiplicity)


def _subsets(universe, size, max_multiplicity):
    chosen: list[tuple] = []
    load: dict[tuple, int] = {}

    def rec(start):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(universe) - (size - len(chosen)) + 1):
            edge = universe[i]
            pair = edge[:2]
            if load.get(pair, 0) >= max_multiplicity:
                continue
            load[pair] = load.get(pair, 0) + 1
            chosen.append(edge)
            yield from rec(i + 1)
            chosen.pop()
            load[pair] -= 1

    yield from rec(0)


def _worth_optimizing(ct: CompiledTopology, obj: Objective) -> bool:
    """Cheap filters: every edge lies in a matching and every wanted coloring is reachable."""
    if ct.num_matchings == 0:
        return False
    if len(np.unique(ct.edge_index)) != ct.num_edges:
        return False  # a dead edge; the topology without it is examined separately
    wanted = [c for c, t in obj.exact_weights(ct.n, ct.d).items() if t != 0]
    return all(c in ct.coloring_index for c in wanted)


def _discrete_search(ct: CompiledTopology, obj: Objective, weight_set, config: OptimizeConfig):
    best = None
    count = 0
    for combo in itertools.product(weight_set, repeat=ct.num_edges):
        count += 1
        w = np.array(combo, dtype=complex)
        value, undefined = ct.fidelity(w, obj, config.tol)
        if undefined:
            continue
        if best is None or value > best[1] + 1e-12:
            best = (w, value)
        if value >= 1 - 1e-12:
            graph = ct.topology.with_weights(w)
            if obj.verify(compute_state(graph, config.tol), config.tol):
                best = (w, value)
                break
    w = best[0] if best else np.ones(ct.num_edges, dtype=complex)
    graph = ct.topology.with_weights(w)
    state = compute_state(graph, config.tol)
    undefined = state.degenerate
    return SearchResult(
        graph=graph,
        fidelity=0.0 if undefined else obj.fidelity(state),
        exact=(not undefined) and obj.verify(state, config.tol),
        restarts_used=0,
        evaluations=count,
        seed=config.seed,
        objective=obj,
        undefined=undefined,
    )


def search_topologies(
    n: int,
    d: int,
    obj: Objective,
    budget: SearchBudget = SearchBudget(),
    config: OptimizeConfig = OptimizeConfig(restarts=3),
    palette: Sequence[str] | None = None,
) -> list[SearchResult]:
    """Enumerate small topologies and optimize weights on each.

    Returns every exact hit followed by the best ``budget.keep_best``
    approximate results, each group ordered by fidelity (descending) then
    canonical edge list.
    """
    if n % 2:
        return []
    universe = edge_universe(n, d, obj, budget.universe)
    total = count_topologies(universe, budget.max_edges, budget.max_multiplicity)
    if total > budget.max_candidates:
        raise BudgetExceeded(
            f"{total} candidate topologies exceed the budget of {budget.max_candidates}"
        )
    if budget.weight_set is not None:
        per_topology = len(budget.weight_set) ** budget.max_edges
        if total * per_topology > budget.max_candidates * 1000:
            raise BudgetExceeded("discrete weight search too large for budget")

    exact: list[SearchResult] = []
    approx: list[SearchResult] = []
    seen: set[tuple] = set()
    examined = 0
    for edges in iter_topologies(universe, budget.max_edges, budget.max_multiplicity):
        if edges in seen:
            continue
        seen.add(edges)
        topology = build_graph(n, d, [e + (1.0,) for e in edges], palette)
        ct = CompiledTopology(topology)
        if not _worth_optimizing(ct, obj):
            continue
        examined += 1
        if budget.weight_set is not None:
            result = _discrete_search(ct, obj, budget.weight_set, config)
        else:
            result = optimize_weights(ct, obj, config)
        if result.exact:
            exact.append(result)
            log.info("exact hit with %d edges: %s", len(edges), edges)
            if budget.stop_at_first_exact:
                break
        else:
            approx.append(result)
            approx.sort(key=lambda r: (-r.fidelity, r.canonical()))
            del approx[budget.keep_best:]
    log.info("examined %d of %d candidate topologies", examined, total)
    exact.sort(key=lambda r: (-r.fidelity, r.canonical()))
    return exact + approx


def topology_library(n: int, d: int, random_count: int = 3, seed: int = 0) -> list[BiColoredGraph]:
    """Fixed candidate topologies for positive-weight experiments.

    The complete bi-colored multigraph contains every simple colored topology
    on ``n`` vertices as a face of the positive orthant (send weights to 0),
    so it is always included. Random edge subsets of it follow.
    """
    full = complete_multigraph(n, d)
    library = [full, complete_multigraph(n, d, monochromatic_only=True)]
    rng = np.random.default_rng(seed)
    specs = full.specs()
    attempts = 0
    while len(library) < 2 + random_count and attempts < 1000:
        attempts += 1
        keep = rng.random(len(specs)) < 0.5
        g = build_graph(n, d, [s for s, k in zip(specs, keep) if k])
        if CompiledTopology(g).num_matchings:
            library.append(g)
    return library
