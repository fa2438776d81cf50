"""Graph and target documents, reports, and DOT export.

Graph documents are JSON objects::

    {"n": 4,
     "palette": ["r", "g", "b"],
     "edges": [[1, 2, "r", "r", 1.0, 0.0], ...]}

Vertices are 1-based in files and 0-based in memory. Each edge record is
``[u, v, color_at_u, color_at_v, re, im]``; ``d`` is the palette length even
when some label is unused. Target documents carry ``colorings`` (label
sequences), ``weights`` (``[re, im]`` pairs) and ``mode``; an optional
``palette`` fixes the label order when no graph is at hand.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Sequence

from .fidelity import CONJUGATED, FidelityReport, TargetSpec
from .graph import BiColoredGraph, GraphError, build_graph, default_palette
from .state import StateMap

PRECISION = 12


class ParseError(ValueError):
    pass


def fmt(x: float, precision: int = PRECISION) -> str:
    return f"{x:.{precision}g}"


def fmt_complex(z: complex, precision: int = PRECISION) -> str:
    return f"{fmt(z.real, precision)} {fmt(z.imag, precision)}"


# -- graph documents ------------------------------------------------------------


def graph_to_document(graph: BiColoredGraph) -> dict:
    p = graph.palette
    return {
        "n": graph.n,
        "palette": list(p),
        "edges": [
            [e.u + 1, e.v + 1, p[e.color_at_u], p[e.color_at_v], e.weight.real, e.weight.imag]
            for e in graph.edges
        ],
    }


def graph_from_document(doc: dict) -> BiColoredGraph:
    if not isinstance(doc, dict):
        raise ParseError("graph document must be an object")
    for key in ("n", "palette", "edges"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    n, palette = doc["n"], doc["palette"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(f"field 'n' must be an integer, got {n!r}")
    if not isinstance(palette, list) or not all(isinstance(c, str) for c in palette):
        raise ParseError("field 'palette' must be a list of strings")
    if len(set(palette)) != len(palette):
        raise ParseError(f"palette labels must be unique: {palette}")
    color = {label: i for i, label in enumerate(palette)}
    specs = []
    for i, record in enumerate(doc["edges"]):
        where = f"edges[{i}]"
        if not isinstance(record, list) or len(record) not in (4, 6):
            raise ParseError(f"{where}: expected [u, v, color_u, color_v, re, im], got {record!r}")
        u, v, cu, cv = record[:4]
        re_, im = record[4:] if len(record) == 6 else (1.0, 0.0)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
            raise ParseError(f"{where}: vertices must be integers, got {u!r}, {v!r}")
        for label in (cu, cv):
            if label not in color:
                raise ParseError(f"{where}: unknown color label {label!r} (palette {palette})")
        if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in (re_, im)):
            raise ParseError(f"{where}: weight parts must be numbers, got {re_!r}, {im!r}")
        specs.append((u - 1, v - 1, color[cu], color[cv], complex(re_, im)))
    try:
        return build_graph(n, len(palette), specs, palette)
    except GraphError as exc:
        raise ParseError(f"invalid graph: {exc} (vertices are 1-based in files)") from exc


def dumps_graph(graph: BiColoredGraph) -> str:
    doc = graph_to_document(graph)
    edges = ",\n    ".join(json.dumps(e) for e in doc["edges"])
    return (
        f'{{\n  "n": {doc["n"]},\n  "palette": {json.dumps(doc["palette"])},\n'
        f'  "edges": [\n    {edges}\n  ]\n}}\n'
    )


def loads_graph(text: str) -> BiColoredGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return graph_from_document(doc)


def read_graph(path: str | Path) -> BiColoredGraph:
    return loads_graph(Path(path).read_text())


def write_graph(graph: BiColoredGraph, path: str | Path) -> None:
    Path(path).write_text(dumps_graph(graph))


# -- target documents -----------------------------------------------------------


def target_from_document(doc: dict, palette: Sequence[str] | None = None) -> TargetSpec:
    if not isinstance(doc, dict):
        raise ParseError("target document must be an object")
    for key in ("colorings", "weights"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    palette = list(doc.get("palette") or palette or [])
    if not palette:
        raise ParseError("target labels need a palette (from the graph or a 'palette' field)")
    color = {label: i for i, label in enumerate(palette)}
    colorings = []
    for i, labels in enumerate(doc["colorings"]):
        try:
            colorings.append(tuple(color[x] for x in labels))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"colorings[{i}]: unknown color label {exc} (palette {palette})") from None
    weights = []
    for i, pair in enumerate(doc["weights"]):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"weights[{i}]: expected [re, im], got {pair!r}")
        weights.append(complex(pair[0], pair[1]))
    try:
        return TargetSpec(tuple(colorings), tuple(weights), doc.get("mode", CONJUGATED))
    except ValueError as exc:
        raise ParseError(f"invalid target: {exc}") from exc


def target_to_document(target: TargetSpec, palette: Sequence[str]) -> dict:
    return {
        "palette": list(palette),
        "colorings": [[palette[c] for c in coloring] for coloring in target.colorings],
        "weights": [[w.real, w.imag] for w in target.weights],
        "mode": target.mode,
    }


def read_target_document(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


# -- reports --------------------------------------------------------------------


def state_report(state: StateMap, precision: int = PRECISION) -> str:
    lines = [
        f"n {state.n}  d {state.d}  palette {','.join(state.palette)}",
        f"perfect matchings {len(state.matchings)}",
        f"colorings {len(state.terms)}  surviving {len(state.surviving)}",
        f"tolerance {fmt(state.tol, precision)}",
        "# coloring  re  im  matchings  cancelled",
    ]
    for c, term in state.terms.items():
        lines.append(
            f"{state.label(c)}  {fmt_complex(term.weight, precision)}  "
            f"{len(term.matchings)}  {'yes' if term.cancelled else 'no'}"
        )
    lines.append(f"N {fmt(state.norm, precision)}")
    return "\n".join(lines)


def fidelity_report(report: FidelityReport, palette: Sequence[str], precision: int = PRECISION) -> str:
    lines = [f"fidelity {report.kind} {fmt(report.value, precision)}", f"d {report.d}"]
    if report.k is not None:
        lines.append(f"k {report.k}  red {palette[report.red]}")
    if report.mode is not None:
        lines.append(f"mode {report.mode}")
        lines.append(f"N1 {fmt(report.N1, precision)}")
        lines.append(f"N2 {fmt(report.N, precision)}")
    else:
        lines.append(f"N {fmt(report.N, precision)}")
    lines.append(f"tolerance {fmt(report.tolerance, precision)}")
    lines.append("# target coloring  re  im")
    for c, w in report.matched_terms.items():
        lines.append(f"{','.join(palette[x] for x in c)}  {fmt_complex(w, precision)}")
    return "\n".join(lines)


def fidelity_to_dict(report: FidelityReport, palette: Sequence[str]) -> dict:
    out = {
        "kind": report.kind,
        "value": report.value,
        "d": report.d,
        "tolerance": report.tolerance,
        "matched_terms": [
            {"coloring": [palette[x] for x in c], "weight": [w.real, w.imag]}
            for c, w in report.matched_terms.items()
        ],
    }
    if report.k is not None:
        out.update(k=report.k, red=palette[report.red])
    if report.mode is not None:
        out.update(mode=report.mode, N1=report.N1, N2=report.N)
    else:
        out["N"] = report.N
    return out


# -- DOT ------------------------------------------------------------------------


def to_dot(graph: BiColoredGraph) -> str:
    """Graphviz source; every edge record carries its full data as attributes."""
    p = graph.palette
    lines = [
        "graph bicolored {",
        f'  graph [n={graph.n}, palette="{",".join(p)}"];',
        "  node [shape=circle];",
    ]
    for v in range(graph.n):
        lines.append(f'  {v + 1} [label="{v + 1}"];')
    for e in graph.edges:
        w = e.weight
        label = f"{fmt(w.real, 6)}{'+' if w.imag >= 0 else '-'}{fmt(abs(w.imag), 6)}i"
        lines.append(
            f'  {e.u + 1} -- {e.v + 1} [taillabel="{p[e.color_at_u]}", headlabel="{p[e.color_at_v]}", '
            f'label="{label}", re="{w.real!r}", im="{w.imag!r}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_GRAPH = re.compile(r'graph \[n=(\d+), palette="([^"]*)"\]')
_DOT_EDGE = re.compile(
    r'(\d+) -- (\d+) \[taillabel="([^"]*)", headlabel="([^"]*)", label="[^"]*", '
    r're="([^"]*)", im="([^"]*)"\]'
)


def from_dot(text: str) -> BiColoredGraph:
    """Parse DOT produced by ``to_dot`` back into a graph."""
    head = _DOT_GRAPH.search(text)
    if head is None:
        raise ParseError("DOT text lacks the graph [n=..., palette=...] header")
    n, palette = int(head.group(1)), head.group(2).split(",")
    edges = [
        [int(u), int(v), cu, cv, float(re_), float(im)]
        for u, v, cu, cv, re_, im in _DOT_EDGE.findall(text)
    ]
    return graph_from_document({"n": n, "palette": palette, "edges": edges})


def default_target_palette(d: int) -> list[str]:
    return list(default_palette(d))
