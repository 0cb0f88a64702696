"""JSON forms for every value the library or CLI exchanges.

One shared convention: rationals are strings ``"p/q"`` (``"/1"`` omitted),
vectors are arrays of rationals, frames and Gram matrices are arrays of
arrays.  ``canonical_dumps`` pins key order and strips insignificant
whitespace so equal values serialize to equal bytes; golden fixtures and
the CLI determinism contract both lean on that.

Parsers raise :class:`RelationParseError` with a dotted/indexed location
("points[3].frame[1][0]") for anything structurally wrong.  Semantic Gram
failures (asymmetry, a non-positive minor) propagate as their own error
types since they carry diagnostics a parse error would flatten.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .dependence import (
    Counterexample,
    FactorizationOutcome,
    ProjectionKey,
    Relation,
    RelationPoint,
)
from .errors import OrthoError, RelationParseError
from .inner_product import GramInnerProduct
from .linalg import Frame, Vector
from .maximality import MaximalityReport

RATIONAL_PATTERN = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def canonical_dumps(obj: Any) -> str:
    """Serialize with sorted keys and no insignificant whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def rational_to_json(value: Fraction) -> str:
    return str(Fraction(value))


def rational_from_json(obj: Any, location: str = "rational") -> Fraction:
    if not isinstance(obj, str):
        raise RelationParseError(
            f"expected a \"p/q\" string, got {type(obj).__name__}", location
        )
    if not RATIONAL_PATTERN.match(obj):
        raise RelationParseError(f"not a rational literal: {obj!r}", location)
    try:
        return Fraction(obj)
    except ZeroDivisionError:
        raise RelationParseError(f"zero denominator: {obj!r}", location) from None


def vector_to_json(v: Vector) -> list[str]:
    return [rational_to_json(entry) for entry in v]


def vector_from_json(obj: Any, location: str = "vector") -> Vector:
    if not isinstance(obj, list) or not obj:
        raise RelationParseError("expected a non-empty array of rationals", location)
    return tuple(
        rational_from_json(entry, f"{location}[{k}]") for k, entry in enumerate(obj)
    )


def frame_to_json(frame: Frame) -> list[list[str]]:
    return [vector_to_json(v) for v in frame]


def frame_from_json(obj: Any, location: str = "frame") -> Frame:
    if not isinstance(obj, list) or not obj:
        raise RelationParseError("expected a non-empty array of vectors", location)
    vectors = tuple(
        vector_from_json(entry, f"{location}[{k}]") for k, entry in enumerate(obj)
    )
    try:
        return Frame(vectors)
    except (OrthoError, ValueError) as exc:
        raise RelationParseError(str(exc), location) from exc


def gram_to_json(G: GramInnerProduct) -> list[list[str]]:
    return [vector_to_json(row) for row in G.matrix]


def gram_from_json(obj: Any, location: str = "gram") -> GramInnerProduct:
    """Parse a Gram matrix.  Structure errors become parse errors; symmetry
    and definiteness failures keep their own types (and the failing minor).
    """
    if not isinstance(obj, list) or not obj:
        raise RelationParseError("expected a non-empty array of rows", location)
    rows = tuple(
        vector_from_json(entry, f"{location}[{k}]") for k, entry in enumerate(obj)
    )
    if any(len(row) != len(rows) for row in rows):
        raise RelationParseError(
            f"expected a square {len(rows)}x{len(rows)} matrix", location
        )
    return GramInnerProduct(rows)


def relation_point_to_json(p: RelationPoint) -> dict[str, Any]:
    return {
        "frame": frame_to_json(p.frame),
        "point": vector_to_json(p.point),
        "values": vector_to_json(p.values),
    }


def relation_point_from_json(obj: Any, location: str = "point") -> RelationPoint:
    if not isinstance(obj, dict):
        raise RelationParseError("expected an object", location)
    missing = {"frame", "point", "values"} - obj.keys()
    if missing:
        raise RelationParseError(f"missing fields: {sorted(missing)}", location)
    frame = frame_from_json(obj["frame"], f"{location}.frame")
    point = vector_from_json(obj["point"], f"{location}.point")
    values = vector_from_json(obj["values"], f"{location}.values")
    try:
        return RelationPoint(frame, point, values)
    except (OrthoError, ValueError) as exc:
        raise RelationParseError(str(exc), location) from exc


def relation_to_json(rel: Relation) -> list[dict[str, Any]]:
    return [relation_point_to_json(p) for p in rel.points]


def relation_from_json(obj: Any, location: str = "points") -> Relation:
    if not isinstance(obj, list):
        raise RelationParseError("expected an array of relation points", location)
    points = tuple(
        relation_point_from_json(entry, f"{location}[{k}]")
        for k, entry in enumerate(obj)
    )
    try:
        return Relation(points)
    except (OrthoError, ValueError) as exc:
        raise RelationParseError(str(exc), location) from exc


def tables_to_json(
    tables: tuple[dict[ProjectionKey, Fraction], ...]
) -> list[list[dict[str, Any]]]:
    """Per-slot tables; the slot index is the outer list position + 1.

    Entries keep the first-seen scan order, so equal relations give
    byte-equal tables.
    """
    return [
        [
            {
                "vector": vector_to_json(key.vector),
                "point": vector_to_json(key.point),
                "value": rational_to_json(value),
            }
            for key, value in table.items()
        ]
        for table in tables
    ]


def counterexample_to_json(c: Counterexample) -> dict[str, Any]:
    first_value, second_value = c.values
    return {
        "index": c.index,
        "p": relation_point_to_json(c.first),
        "q": relation_point_to_json(c.second),
        "values": [rational_to_json(first_value), rational_to_json(second_value)],
    }


def outcome_to_json(outcome: FactorizationOutcome) -> dict[str, Any]:
    if outcome.counterexample is not None:
        return {"counterexample": counterexample_to_json(outcome.counterexample)}
    return {"tables": tables_to_json(outcome.tables)}


def maximality_report_to_json(report: MaximalityReport) -> dict[str, Any]:
    """Accepted reports carry candidate and verdict; rejected ones add the
    witness frame, collision point, and the two disagreeing values.
    """
    payload: dict[str, Any] = {
        "candidate": frame_to_json(report.candidate),
        "verdict": report.verdict,
    }
    if not report.accepted:
        payload["witness"] = frame_to_json(report.orthogonal_witness)
        payload["x"] = vector_to_json(report.collision_point)
        payload["value_candidate"] = rational_to_json(report.values[0])
        payload["value_witness"] = rational_to_json(report.values[1])
    return payload


def _loads(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise RelationParseError(
            str(exc), f"{source} line {exc.lineno} column {exc.colno}"
        ) from exc


def load_relation(path: str) -> Relation:
    """Read a relation from a JSON file (array of {frame, point, values})."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return relation_from_json(_loads(text, path), "points")


def load_gram(path: str) -> GramInnerProduct:
    """Read a Gram matrix from a JSON file (array of arrays of "p/q")."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return gram_from_json(_loads(text, path), "gram")
