"""JSON report envelope, its schema, and aligned-table rendering."""

from __future__ import annotations

import json
from typing import Any, Iterable

SCHEMA_ID = "qwalk-report/1"
TABLE_DIGITS = 40

_BIG = {"type": "string", "pattern": "^-?[0-9]+$"}
_BIG_OR_NULL = {"anyOf": [_BIG, {"type": "null"}]}

_ITEM_SCHEMAS: dict[str, dict] = {
    "walk": {
        "type": "object",
        "required": ["graph", "n", "det_WQ", "det_WQtilde", "v2", "a0", "controllable"],
        "properties": {
            "graph": {"type": "string"},
            "n": {"type": "integer", "minimum": 1},
            "det_WQ": _BIG,
            "det_WQtilde": _BIG,
            "v2": {"type": ["integer", "null"]},
            "a0": _BIG,
            "controllable": {"type": "boolean"},
        },
    },
    "certificates": {
        "type": "object",
        "required": ["graph", "theorem", "verdict", "evidence"],
        "properties": {
            "graph": {"type": "string"},
            "theorem": {"type": "string"},
            "verdict": {"enum": ["Certified", "NotApplicable", "Refuted", "Unknown"]},
            "reason": {"type": "string"},
            "certified_graph": {"type": ["string", "null"]},
            "evidence": {
                "type": "object",
                "properties": {
                    "det_WQ": _BIG,
                    "det_WQtilde": _BIG,
                    "quotient": _BIG_OR_NULL,
                    "a0": _BIG,
                    "per_prime": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["p", "dim_nullspace", "alpha_norm_mod_p", "cond_i", "cond_ii"],
                            "properties": {"p": _BIG, "alpha_norm_mod_p": _BIG_OR_NULL},
                        },
                    },
                },
            },
        },
    },
    "identities": {
        "type": "object",
        "required": ["graph", "check"],
        "properties": {
            "graph": {"type": "string"},
            "check": {"enum": ["det", "charpoly", "eigen", "a0", "tower-probe"]},
            "lhs": _BIG_OR_NULL,
            "rhs": _BIG_OR_NULL,
            "det_WQ": _BIG_OR_NULL,
            "a0": _BIG_OR_NULL,
            "holds": {"type": ["boolean", "null"]},
        },
    },
    "mates": {
        "type": "object",
        "required": ["n", "key", "members"],
        "properties": {
            "n": {"type": "integer"},
            "key": {
                "type": "object",
                "properties": {"p_g": {"type": "array", "items": _BIG}, "p_gc": {"type": "array", "items": _BIG}},
            },
            "members": {"type": "array", "items": {"type": "string"}, "minItems": 2},
        },
    },
    "validation": {
        "type": "object",
        "required": ["n", "graphs", "certified", "confirmed", "contradictions"],
        "properties": {
            "n": {"type": "integer"},
            "graphs": {"type": "integer"},
            "certified": {"type": "integer"},
            "confirmed": {"type": "integer"},
            "contradictions": {"type": "array"},
        },
    },
}

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": SCHEMA_ID,
    "type": "object",
    "required": ["schema", "kind", "items"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "kind": {"enum": sorted(_ITEM_SCHEMAS)},
        "items": {"type": "array"},
        "summary": {"type": "object"},
    },
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": kind}}},
            "then": {"properties": {"items": {"items": item}}},
        }
        for kind, item in sorted(_ITEM_SCHEMAS.items())
    ],
}


def envelope(kind: str, items: list[dict], summary: dict | None = None) -> dict:
    out: dict[str, Any] = {"schema": SCHEMA_ID, "kind": kind, "items": items}
    if summary is not None:
        out["summary"] = summary
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def shorten(value: Any, digits: int = TABLE_DIGITS) -> str:
    """Render a cell; integers longer than ``digits`` become 'prefix…(Nd)'."""
    if value is None:
        return "-"
    s = str(value)
    body = s.lstrip("-")
    if body.isdigit() and len(body) > digits:
        sign = "-" if s.startswith("-") else ""
        return f"{sign}{body[:20]}…({len(body)}d)"
    return s


def table(rows: Iterable[dict], columns: list[str]) -> str:
    cells = [[shorten(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"
