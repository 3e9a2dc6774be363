"""Instance files (CSV and JSON) and JSON result reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .exact_geom import Instance


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def parse_literal(text: str, line=None, column=None) -> Fraction:
    """Exact value of an integer, decimal or ``p/q`` literal."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact numeric literal: {text.strip()!r}", line, column) from None


def parse_row(text: str, line=None) -> tuple:
    cells = text.split(",")
    out = []
    col = 1
    for cell in cells:
        out.append(parse_literal(cell, line, col))
        col += len(cell) + 1
    return tuple(out)


def format_literal(x: Fraction):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _read_csv(text: str, query):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, parse_row(raw, lineno)))
    if query is None:
        if not rows:
            raise ParseError("empty CSV file and no query point given")
        query_row = rows.pop(0)[1]
    else:
        query_row = parse_row(query) if isinstance(query, str) else tuple(Fraction(c) for c in query)
    d = len(query_row)
    for lineno, row in rows:
        if len(row) != d:
            raise ParseError(f"expected {d} coordinates, found {len(row)}", lineno)
    return Instance(tuple(r for _, r in rows), query_row, d)


def _coords(values, what):
    if not isinstance(values, list):
        raise ParseError(f"{what} must be a list of coordinates")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, Fraction, str)):
            raise ParseError(f"{what} has a non-numeric coordinate {v!r}")
        out.append(parse_literal(str(v)) if isinstance(v, str) else Fraction(v))
    return tuple(out)


def _read_json(text: str, query):
    try:
        data = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError('JSON instance needs a "points" field')
    if query is not None:
        q = parse_row(query) if isinstance(query, str) else tuple(Fraction(c) for c in query)
    elif "query" in data:
        q = _coords(data["query"], "query")
    else:
        raise ParseError('JSON instance needs a "query" field')
    d = data.get("d", len(q))
    if not isinstance(d, int) or d != len(q):
        raise ParseError(f'"d" is {d!r} but the query has {len(q)} coordinates')
    pts = []
    for i, row in enumerate(data["points"]):
        p = _coords(row, f"point {i}")
        if len(p) != d:
            raise ParseError(f"point {i} has {len(p)} coordinates, expected {d}")
        pts.append(p)
    return Instance(tuple(pts), q, d)


def load_instance(path, format=None, query=None) -> Instance:
    """Read an instance; CSV without ``query`` takes the first row as the query point."""
    path = Path(path)
    fmt = format or ("json" if path.suffix.lower() == ".json" else "csv")
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    return loads_instance(path.read_text(), fmt, query)


def loads_instance(text: str, format="json", query=None) -> Instance:
    try:
        return _read_json(text, query) if format == "json" else _read_csv(text, query)
    except ParseError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def instance_to_dict(inst: Instance) -> dict:
    return {
        "d": inst.dimension,
        "query": [format_literal(c) for c in inst.query],
        "points": [[format_literal(c) for c in p] for p in inst.points],
    }


def dumps_instance(inst: Instance, format="json") -> str:
    if format == "json":
        return json.dumps(instance_to_dict(inst)) + "\n"
    lines = [",".join(str(format_literal(c)) for c in inst.query)]
    lines += [",".join(str(format_literal(c)) for c in p) for p in inst.points]
    return "\n".join(lines) + "\n"


def save_instance(inst: Instance, path) -> None:
    path = Path(path)
    fmt = "csv" if path.suffix.lower() == ".csv" else "json"
    path.write_text(dumps_instance(inst, fmt))


@dataclass
class ResultReport:
    depth: int
    algorithm: str
    witness: dict | None = None
    stats: dict = field(default_factory=dict)

    @classmethod
    def from_result(cls, res, include_witness=True) -> "ResultReport":
        witness = res.witness.as_dict() if (include_witness and res.witness is not None) else None
        return cls(res.depth, res.algorithm, witness, res.stats.as_dict())

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "algorithm": self.algorithm,
            "witness": self.witness,
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ResultReport":
        data = json.loads(text)
        return cls(data["depth"], data["algorithm"], data["witness"], data["stats"])
