"""JSON documents for matrices, graphs, tournaments and families.

Schemas (all indices 1-based)::

    matrix       {"n": int, "entries": [[int | "p/q", ...], ...]}
    graph        {"n": int, "edges": [[i, j], ...]}
    tournament   {"n": int, "arcs": [[i, j], ...]}
    family       {"n": int, "bipartitions": [[side_with_1, other_side], ...]}
    set-family   {"ground": [...], "members": [[...], ...]}

Emitted documents are canonical: sorted members, integer entries as JSON
integers, other rationals as ``"p/q"`` strings, two-space indentation with
each row on its own line. Emitting the same object twice gives the same
bytes.
"""

from __future__ import annotations

import json
from collections.abc import Mapping

from .families import AxiomReport, Bipartition, BipartitionFamily, SetFamily, Violation
from .field import RATIONALS, Field
from .graphs import Graph, Tournament
from .matrix import ExactMatrix

__all__ = [
    "DocumentError",
    "KINDS",
    "detect_kind",
    "dumps",
    "load",
    "matrix_to_doc",
    "matrix_from_doc",
    "graph_to_doc",
    "graph_from_doc",
    "tournament_to_doc",
    "tournament_from_doc",
    "family_to_doc",
    "family_from_doc",
    "set_family_to_doc",
    "set_family_from_doc",
    "report_to_doc",
]

KINDS = ("matrix", "graph", "tournament", "family", "set-family")

_KEYS = {
    "matrix": {"n", "entries"},
    "graph": {"n", "edges"},
    "tournament": {"n", "arcs"},
    "family": {"n", "bipartitions"},
    "set-family": {"ground", "members"},
}


class DocumentError(ValueError):
    pass


def detect_kind(doc) -> str:
    if not isinstance(doc, Mapping):
        raise DocumentError("document must be a JSON object")
    keys = set(doc) - {"kind"}
    for kind, expected in _KEYS.items():
        if keys == expected:
            declared = doc.get("kind", kind)
            if declared != kind:
                raise DocumentError(f"declared kind {declared!r} does not match keys of a {kind}")
            return kind
    raise DocumentError(f"unrecognised document keys {sorted(keys)}")


def _expect_kind(doc, kind: str) -> None:
    found = detect_kind(doc)
    if found != kind:
        raise DocumentError(f"expected a {kind} document, got a {found} document")


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(f"{what} must be an integer, got {x!r}")
    return x


def _n(doc, minimum: int = 1) -> int:
    n = _int(doc["n"], "n")
    if n < minimum:
        raise DocumentError(f"n must be >= {minimum}, got {n}")
    return n


def _index_list(xs, what: str, n: int | None = None) -> list[int]:
    if not isinstance(xs, list):
        raise DocumentError(f"{what} must be a list")
    out = [_int(x, f"{what} entry") for x in xs]
    if len(set(out)) != len(out):
        raise DocumentError(f"{what} has repeated indices: {xs}")
    if n is not None and any(not 1 <= x <= n for x in out):
        raise DocumentError(f"{what} has an index outside 1..{n}: {xs}")
    return out


# -- matrices -----------------------------------------------------------------


def matrix_to_doc(A: ExactMatrix) -> dict:
    if not A.is_square:
        raise DocumentError("only square matrices have a document form")
    f = A.field
    return {"n": A.nrows, "entries": [[f.format(x) for x in row] for row in A.rows]}


def matrix_from_doc(doc, field: Field = RATIONALS) -> ExactMatrix:
    _expect_kind(doc, "matrix")
    n = _n(doc)
    rows = doc["entries"]
    if not isinstance(rows, list) or len(rows) != n:
        raise DocumentError(f"entries must be a list of {n} rows")
    parsed = []
    for i, row in enumerate(rows, 1):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"row {i} must have {n} entries")
        try:
            parsed.append([field.parse(x) for x in row])
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"row {i}: {exc}") from None
    return ExactMatrix(parsed, field)


# -- graphs and tournaments ---------------------------------------------------


def graph_to_doc(G: Graph) -> dict:
    return {"n": G.n, "edges": G.sorted_edges()}


def _pairs(doc, key: str, n: int) -> list[list[int]]:
    ps = doc[key]
    if not isinstance(ps, list):
        raise DocumentError(f"{key} must be a list of pairs")
    out = []
    for p in ps:
        p = _index_list(p, f"{key} entry", n)
        if len(p) != 2:
            raise DocumentError(f"{key} entry {p} is not a pair of distinct vertices")
        out.append(p)
    return out


def graph_from_doc(doc) -> Graph:
    _expect_kind(doc, "graph")
    n = _n(doc)
    edges = _pairs(doc, "edges", n)
    if len({frozenset(e) for e in edges}) != len(edges):
        raise DocumentError("edges contain a repeated pair")
    return Graph(n, edges)


def tournament_to_doc(T: Tournament) -> dict:
    return {"n": T.n, "arcs": T.sorted_arcs()}


def tournament_from_doc(doc) -> Tournament:
    _expect_kind(doc, "tournament")
    n = _n(doc)
    arcs = _pairs(doc, "arcs", n)
    try:
        return Tournament(n, arcs)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


# -- families -------------------------------------------------------------------


def family_to_doc(F: BipartitionFamily) -> dict:
    return {"n": F.n, "bipartitions": [b.to_lists() for b in F]}


def family_from_doc(doc) -> BipartitionFamily:
    _expect_kind(doc, "family")
    n = _n(doc, minimum=2)
    items = doc["bipartitions"]
    if not isinstance(items, list):
        raise DocumentError("bipartitions must be a list")
    ground = set(range(1, n + 1))
    members = []
    for item in items:
        if not isinstance(item, list) or len(item) != 2:
            raise DocumentError(f"bipartition {item!r} must be a pair of sides")
        a = _index_list(item[0], "bipartition side", n)
        b = _index_list(item[1], "bipartition side", n)
        if not a or not b or set(a) & set(b) or set(a) | set(b) != ground:
            raise DocumentError(f"{item!r} is not a bipartition of [{n}] into nonempty sides")
        members.append(Bipartition(a, n))
    return BipartitionFamily(n, members)


def _sorted_sets(sets) -> list[list[int]]:
    return [sorted(s) for s in sets]


def set_family_to_doc(P: SetFamily) -> dict:
    return {"ground": sorted(P.ground), "members": _sorted_sets(P)}


def set_family_from_doc(doc) -> SetFamily:
    _expect_kind(doc, "set-family")
    ground = _index_list(doc["ground"], "ground")
    if not ground:
        raise DocumentError("ground must be nonempty")
    members = doc["members"]
    if not isinstance(members, list):
        raise DocumentError("members must be a list")
    parsed = []
    gs = set(ground)
    for m in members:
        m = _index_list(m, "member")
        if not m:
            raise DocumentError("members must be nonempty")
        if not set(m) <= gs:
            raise DocumentError(f"member {m} is not a subset of the ground set")
        parsed.append(m)
    return SetFamily(ground, parsed)


_FROM_DOC = {
    "matrix": matrix_from_doc,
    "graph": graph_from_doc,
    "tournament": tournament_from_doc,
    "family": family_from_doc,
    "set-family": set_family_from_doc,
}


def load(doc, field: Field = RATIONALS):
    """Parse any document, dispatching on its keys."""
    kind = detect_kind(doc)
    if kind == "matrix":
        return matrix_from_doc(doc, field)
    return _FROM_DOC[kind](doc)


# -- reports --------------------------------------------------------------------


def _witness(obj):
    if isinstance(obj, Bipartition):
        return obj.to_lists()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return obj


def _violation_to_doc(v: Violation) -> dict:
    return {
        "axiom": v.axiom,
        "witnesses": [_witness(w) for w in v.witnesses],
        "missing": _witness(v.missing),
    }


def report_to_doc(report: AxiomReport) -> dict:
    return {
        "passed": report.passed,
        "violations": [_violation_to_doc(v) for v in report.violations],
    }


# -- rendering ------------------------------------------------------------------


def _compact(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def _render(value, level: int) -> str:
    pad = "  " * (level + 1)
    close = "  " * level
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_render(v, level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, list) and value and all(isinstance(x, (list, dict)) for x in value):
        items = [
            pad + (_render(x, level + 1) if isinstance(x, dict) else _compact(x)) for x in value
        ]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    return _compact(value)


def dumps(doc) -> str:
    """Canonical multi-line rendering, newline terminated."""
    return _render(doc, 0) + "\n"
