"""Serialization of bound reports to JSON, CSV and plain text.

JSON numbers are written with 17 significant digits, so a parsed report
re-emits byte for byte.
"""

import csv
import io
import json
import math

from . import __version__
from .certify import BoundReport

__all__ = ["REPORT_SCHEMA", "COLLECTION_SCHEMA", "CSV_HEADER", "report_to_dict",
           "dumps", "to_json", "to_csv", "to_text"]

CSV_HEADER = ["a", "rho", "epsilon", "lambda_star", "remainder", "tail"]

_number = {"type": "number"}
REPORT_SCHEMA = {
    "type": "object",
    "required": ["tool_version", "params", "kind", "epsilon", "leading_value",
                 "explicit_remainder", "tail", "argmax", "notes"],
    "additionalProperties": False,
    "properties": {
        "tool_version": {"type": "string"},
        "params": {
            "type": "object",
            "required": ["rho", "theta_deg", "a", "gamma0", "q0"],
            "additionalProperties": False,
            "properties": {k: _number for k in ("rho", "theta_deg", "a", "gamma0", "q0")},
        },
        "kind": {"enum": ["single_offsurface", "double_offsurface", "single_onsurface_tailonly"]},
        "epsilon": {"type": "number", "minimum": 0},
        "leading_value": {"type": "number", "minimum": 0},
        "explicit_remainder": {"type": "number", "minimum": 0},
        "tail": {
            "type": "object",
            "required": ["R", "value", "formula_id"],
            "additionalProperties": False,
            "properties": {
                "R": {"type": "integer", "minimum": 1},
                "value": {"type": "number", "minimum": 0},
                "formula_id": {"type": "string"},
            },
        },
        "argmax": {
            "type": "object",
            "required": ["normal", "lambda"],
            "additionalProperties": False,
            "properties": {
                "normal": {"type": "array", "items": _number, "minItems": 3, "maxItems": 3},
                "lambda": {"type": ["number", "null"]},
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}
COLLECTION_SCHEMA = {"type": "array", "items": REPORT_SCHEMA}


def report_to_dict(report: BoundReport) -> dict:
    p = report.params
    return {
        "tool_version": __version__,
        "params": {"rho": p.rho, "theta_deg": p.theta_deg, "a": p.a,
                   "gamma0": p.gamma0, "q0": p.q0},
        "kind": report.kind.value,
        "epsilon": report.epsilon,
        "leading_value": report.leading_value,
        "explicit_remainder": report.explicit_remainder,
        "tail": {"R": int(report.tail_value.R), "value": report.tail_value.value,
                 "formula_id": report.tail_value.formula_id},
        "argmax": {"normal": list(report.argmax_normal.gamma), "lambda": report.argmax_lambda},
        "notes": list(report.notes),
    }


def _emit(obj, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize non-finite number {obj!r}")
        return format(obj, ".17g")
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_emit(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _emit(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent=2):
    """JSON text with floats at 17 significant digits and a trailing newline."""
    return _emit(obj, indent, 0) + "\n"


def to_json(reports):
    if isinstance(reports, BoundReport):
        return dumps(report_to_dict(reports))
    return dumps([report_to_dict(r) for r in reports])


def _g(x):
    return "" if x is None else format(x, ".17g")


def to_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow([_g(r.params.a), _g(r.params.rho), _g(r.epsilon), _g(r.argmax_lambda),
                    _g(r.explicit_remainder), _g(r.tail_value.value)])
    return buf.getvalue()


def to_text(reports):
    lines = [f"{'kind':<26} {'a':>4} {'rho':>5} {'epsilon':>10} {'lambda*':>8} "
             f"{'remainder':>10} {'tail':>10}"]
    for r in reports:
        lam = "-" if r.argmax_lambda is None else f"{r.argmax_lambda:.4f}"
        lines.append(f"{r.kind.value:<26} {r.params.a:>4g} {r.params.rho:>5g} {r.epsilon:>10.3e} "
                     f"{lam:>8} {r.explicit_remainder:>10.3e} {r.tail_value.value:>10.3e}")
    notes = sorted({n for r in reports for n in r.notes})
    lines.extend(f"note: {n}" for n in notes)
    return "\n".join(lines) + "\n"
