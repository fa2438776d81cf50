"""Fidelity functionals and exact-realization predicates.

All fidelities share one shape::

    F = |sum_c a_c * w(c)|^2 / (Z * N),    N = sum_c |w(c)|^2

where the target amplitudes ``a_c`` and normalization ``Z`` depend on the
objective: ``a_c = 1`` over the monochromatic (or k-monochromatic) colorings
with ``Z = d``; or ``a_c = conj(w_i)`` (``w_i`` in literal mode) over a
prescribed target with ``Z = sum |w_i|^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import DEFAULT_TOL
from .state import Coloring, StateMap

CONJUGATED = "conjugated"
LITERAL = "literal"


class UndefinedFidelity(ValueError):
    """The state has no surviving coloring, so it cannot be normalized."""


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class TargetSpec:
    colorings: tuple[Coloring, ...]
    weights: tuple[complex, ...]
    mode: str = CONJUGATED

    def __post_init__(self):
        cs = tuple(tuple(int(x) for x in c) for c in self.colorings)
        ws = tuple(complex(w) for w in self.weights)
        object.__setattr__(self, "colorings", cs)
        object.__setattr__(self, "weights", ws)
        if not cs:
            raise ValueError("target needs at least one coloring")
        if len(cs) != len(ws):
            raise ValueError(f"{len(cs)} colorings but {len(ws)} weights")
        if len(set(cs)) != len(cs):
            raise ValueError("target colorings must be distinct")
        if len({len(c) for c in cs}) != 1:
            raise LengthMismatch("target colorings have different lengths")
        if all(w == 0 for w in ws):
            raise ValueError("target weights are all zero")
        if self.mode not in (CONJUGATED, LITERAL):
            raise ValueError(f"mode must be {CONJUGATED!r} or {LITERAL!r}")

    @property
    def n(self) -> int:
        return len(self.colorings[0])

    @property
    def norm(self) -> float:
        return sum(abs(w) ** 2 for w in self.weights)

    def amplitudes(self) -> dict[Coloring, complex]:
        """Coefficients multiplying w(C_i) inside the overlap sum."""
        if self.mode == CONJUGATED:
            return {c: w.conjugate() for c, w in zip(self.colorings, self.weights)}
        return dict(zip(self.colorings, self.weights))


@dataclass(frozen=True)
class FidelityReport:
    value: float
    kind: str
    d: int
    N: float
    tolerance: float
    matched_terms: dict[Coloring, complex] = field(default_factory=dict)
    k: int | None = None
    red: int | None = None
    mode: str | None = None
    N1: float | None = None

    @property
    def N2(self) -> float:
        return self.N


def monochromatic_colorings(n: int, d: int) -> list[Coloring]:
    return [(c,) * n for c in range(d)]


def k_monochromatic_colorings(n: int, d: int, k: int, red: int = 0) -> list[Coloring]:
    return [(c,) * k + (red,) * (n - k) for c in range(d)]


def is_k_monochromatic_coloring(coloring: Sequence[int], k: int, red: int = 0) -> bool:
    """First ``k`` vertices share one color and every later vertex is ``red``."""
    c = tuple(coloring)
    if not 1 <= k <= len(c):
        raise ValueError(f"k must be in 1..{len(c)}, got {k}")
    return len(set(c[:k])) == 1 and all(x == red for x in c[k:])


def _overlap_fidelity(state: StateMap, amplitudes: dict[Coloring, complex], z: float):
    if state.degenerate:
        raise UndefinedFidelity("no surviving colorings (no perfect matchings or total cancellation)")
    N = state.norm
    overlap = sum(a * state.weight(c) for c, a in amplitudes.items())
    value = abs(overlap) ** 2 / (z * N)
    return value, N, {c: state.weight(c) for c in amplitudes}


def monochromatic_fidelity(state: StateMap) -> FidelityReport:
    amplitudes = {c: 1.0 for c in monochromatic_colorings(state.n, state.d)}
    value, N, matched = _overlap_fidelity(state, amplitudes, state.d)
    return FidelityReport(value, "mono", state.d, N, state.tol, matched)


def k_monochromatic_fidelity(state: StateMap, k: int, red: int = 0) -> FidelityReport:
    if not 1 <= k <= state.n:
        raise ValueError(f"k must be in 1..{state.n}, got {k}")
    amplitudes = {c: 1.0 for c in k_monochromatic_colorings(state.n, state.d, k, red)}
    value, N, matched = _overlap_fidelity(state, amplitudes, state.d)
    return FidelityReport(value, "k_mono", state.d, N, state.tol, matched, k=k, red=red)


def general_fidelity(state: StateMap, target: TargetSpec) -> FidelityReport:
    if target.n != state.n:
        raise LengthMismatch(f"target colorings have length {target.n}, graph has n={state.n}")
    N1 = target.norm
    value, N, matched = _overlap_fidelity(state, target.amplitudes(), N1)
    return FidelityReport(value, "general", state.d, N, state.tol, matched, mode=target.mode, N1=N1)


def _violations(state: StateMap, wanted: dict[Coloring, complex], tol: float):
    """Colorings whose weight misses the wanted value (0 outside ``wanted``)."""
    bad = []
    for c, w in wanted.items():
        if abs(state.weight(c) - w) > tol:
            bad.append((c, state.weight(c), w))
    for c, term in state.terms.items():
        if c not in wanted and abs(term.weight) > tol:
            bad.append((c, term.weight, 0j))
    return bad


def monochromatic_violations(state: StateMap, tol: float = DEFAULT_TOL):
    return _violations(state, {c: 1.0 for c in monochromatic_colorings(state.n, state.d)}, tol)


def k_monochromatic_violations(state: StateMap, k: int, red: int = 0, tol: float = DEFAULT_TOL):
    wanted = {c: 1.0 for c in k_monochromatic_colorings(state.n, state.d, k, red)}
    return _violations(state, wanted, tol)


def target_violations(state: StateMap, target: TargetSpec, tol: float = DEFAULT_TOL):
    if target.n != state.n:
        raise LengthMismatch(f"target colorings have length {target.n}, graph has n={state.n}")
    return _violations(state, dict(zip(target.colorings, target.weights)), tol)


def verify_monochromatic(state: StateMap, tol: float = DEFAULT_TOL) -> bool:
    """Every monochromatic coloring has weight 1 and every other one cancels."""
    return not monochromatic_violations(state, tol)


def verify_k_monochromatic(state: StateMap, k: int, red: int = 0, tol: float = DEFAULT_TOL) -> bool:
    return not k_monochromatic_violations(state, k, red, tol)


def verify_target(state: StateMap, target: TargetSpec, tol: float = DEFAULT_TOL) -> bool:
    """Target colorings carry exactly the prescribed weights; all others cancel."""
    return not target_violations(state, target, tol)
