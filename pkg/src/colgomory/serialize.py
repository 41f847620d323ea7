"""Instance documents and solve reports.

An instance document is JSON with integer literals only::

    {
      "name": "example",
      "m": 2, "n": 5,
      "A": [[7, 8, -1, 1, 3],
            [5, 6, -1, 2, 1]],
      "b": [26, 19],
      "c": [126, 141, -10, 5, 67]
    }

Reports never contain floats: rationals are written as mixed numbers in
text (``463 1/2``) and as ``{"num": 927, "den": 2}`` in JSON.
"""
from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction

from .driver import LIMIT_REACHED, SolveReport
from .errors import DimensionError, ParseError
from .exact import format_mixed
from .instance import DualFormInstance


def _int_field(value, field):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError("expected an integer, got %s" % json.dumps(value, default=str), field=field)
    return value


def _int_list(value, field):
    if not isinstance(value, list):
        raise ParseError("expected an array", field=field)
    return [_int_field(v, "%s[%d]" % (field, k + 1)) for k, v in enumerate(value)]


def parse_instance(text: str) -> DualFormInstance:
    """Parse and validate an instance document.

    Raises ParseError (syntax, missing or non-integer fields),
    DimensionError and RankError.
    """
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be an object")
    for key in ("m", "n", "A", "b", "c"):
        if key not in doc:
            raise ParseError("missing field", field=key)
    m = _int_field(doc["m"], "m")
    n = _int_field(doc["n"], "n")
    if m < 1 or n < 1:
        raise DimensionError("m and n must be positive")
    if not isinstance(doc["A"], list):
        raise ParseError("expected an array of rows", field="A")
    A = [_int_list(row, "A[%d]" % (k + 1)) for k, row in enumerate(doc["A"])]
    b = _int_list(doc["b"], "b")
    c = _int_list(doc["c"], "c")
    if len(A) != m:
        raise DimensionError("A has %d rows, expected m=%d" % (len(A), m))
    for k, row in enumerate(A):
        if len(row) != n:
            raise DimensionError("A row %d has %d entries, expected n=%d" % (k + 1, len(row), n))
    if len(b) != m:
        raise DimensionError("b has length %d, expected m=%d" % (len(b), m))
    if len(c) != n:
        raise DimensionError("c has length %d, expected n=%d" % (len(c), n))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("expected a string", field="name")
    return DualFormInstance(A, b, c, name=name)


def load_instance(path) -> DualFormInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def render_instance(instance: DualFormInstance) -> str:
    lines = ["{"]
    if instance.name is not None:
        lines.append('  "name": %s,' % json.dumps(instance.name))
    lines.append('  "m": %d, "n": %d,' % (instance.m, instance.n))
    rows = [json.dumps(r) for r in instance.rows]
    lines.append('  "A": [' + (",\n        ".join(rows)) + "],")
    lines.append('  "b": %s,' % json.dumps(list(instance.b)))
    lines.append('  "c": %s' % json.dumps(list(instance.c)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def rational_json(q) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def format_vector(v) -> str:
    return "(" + ", ".join(str(Fraction(x)) for x in v) + ")"


def report_dict(report: SolveReport, oracle: dict | None = None) -> dict:
    d = {
        "status": report.status,
        "mode": report.mode,
        "y_star": report.y_star,
        "z_star": report.z_star,
        "pivot_count": report.pivot_count,
        "cut_count": report.cut_count,
        "objective_trace": [rational_json(z) for z in report.objective_trace],
        "final_y": [rational_json(v) for v in report.final_y],
        "cuts": [
            {"column": s.column, "b_tilde": list(s.b_tilde), "cost": s.cost,
             "source": s.source_i + (0 if report.lifted else 1), "text": s.text}
            for s in report.cut_trace
        ],
        "lifted": report.lifted,
    }
    if report.status == LIMIT_REACHED:
        d["limit"] = {"kind": report.limit_kind, "pivots": report.pivot_count, "cuts": report.cut_count}
    if report.caveat:
        d["caveat"] = report.caveat
    if oracle is not None:
        d["oracle"] = oracle
        d["oracle_agrees"] = oracle.get("agrees")
    return d


def emit_report(report: SolveReport, fmt: str = "text", oracle: dict | None = None) -> str:
    """Render ``report`` as ``text`` or ``json``."""
    if fmt == "json":
        return json.dumps(report_dict(report, oracle), indent=2)
    if fmt != "text":
        raise ValueError("format must be 'text' or 'json'")
    out = ["status: %s" % report.status, "mode: %s" % report.mode]
    if report.y_star is not None:
        out.append("y = (%s)" % ", ".join(str(v) for v in report.y_star))
        out.append("z = %d" % report.z_star)
    out.append("pivots: %d" % report.pivot_count)
    out.append("cuts: %d" % report.cut_count)
    for s in report.cut_trace:
        out.append("  [%d] %s" % (s.column, s.text))
    if report.objective_trace:
        out.append("objective trace: " + ", ".join(format_mixed(z) for z in report.objective_trace))
    if report.status == LIMIT_REACHED:
        out.append("limit reached: %s" % report.limit_kind)
    if report.caveat:
        out.append("note: %s" % report.caveat)
    if oracle is not None:
        if oracle.get("agrees") is None:
            out.append("oracle: skipped (%s)" % oracle.get("reason", ""))
        else:
            out.append("oracle: z* = %s, agrees = %s" % (oracle.get("z"), str(oracle["agrees"]).lower()))
    return "\n".join(out)
