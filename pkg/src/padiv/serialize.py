"""JSON algebra descriptions: validation, parsing, and conversion of results to JSON values."""

from __future__ import annotations

import dataclasses
import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import jsonschema
import numpy as np

from .algebra import (StructureTable, TdParams, TpParams, build_td, build_tp, is_tp_shaped,
                      tp_from_table)
from .errors import DimensionMismatch, InputError
from .exact import QuadSurd

RATIONAL = {
    "anyOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$"},
        {"type": "string", "pattern": r"^\s*[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\s*$"},
    ]
}


def _params_schema(names: str) -> dict:
    return {
        "type": "object",
        "properties": {n: RATIONAL for n in names},
        "required": list(names),
        "additionalProperties": False,
    }


KIND_SCHEMA = {
    "type": "object",
    "properties": {"kind": {"enum": ["tp", "td", "table"]}},
    "required": ["kind"],
}

SCHEMAS = {
    "tp": {
        "type": "object",
        "properties": {"kind": {"const": "tp"}, "params": _params_schema("abcdefgh")},
        "required": ["kind", "params"],
        "additionalProperties": False,
    },
    "td": {
        "type": "object",
        "properties": {"kind": {"const": "td"}, "params": _params_schema("gh")},
        "required": ["kind", "params"],
        "additionalProperties": False,
    },
    "table": {
        "type": "object",
        "properties": {
            "kind": {"const": "table"},
            "dim": {"type": "integer", "minimum": 1},
            "c": {"type": "array", "items": {"type": "array", "items": {"type": "array", "items": RATIONAL}}},
            "unit_index": {"type": ["integer", "null"], "minimum": 0},
        },
        "required": ["kind", "dim", "c"],
        "additionalProperties": False,
    },
}


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def _validate(doc, schema) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = errors[0]
        raise InputError(err.message, _pointer(err.absolute_path))


@dataclass(frozen=True, eq=False)
class AlgebraInput:
    kind: str
    params: Union[TpParams, TdParams, None]
    table: StructureTable

    @property
    def tp(self) -> Union[TpParams, None]:
        """T_p constants when the algebra is given in (or reads as) T_p shape."""
        if isinstance(self.params, TpParams):
            return self.params
        if isinstance(self.params, TdParams):
            return self.params.as_tp()
        if is_tp_shaped(self.table):
            return tp_from_table(self.table)
        return None


def parse_algebra(doc) -> AlgebraInput:
    _validate(doc, KIND_SCHEMA)
    kind = doc["kind"]
    _validate(doc, SCHEMAS[kind])
    if kind == "tp":
        p = TpParams(*(Fraction(str(doc["params"][n]).replace(" ", "")) for n in "abcdefgh"))
        return AlgebraInput(kind, p, build_tp(p))
    if kind == "td":
        p = TdParams(*(Fraction(str(doc["params"][n]).replace(" ", "")) for n in "gh"))
        return AlgebraInput(kind, p, build_td(p))
    n = doc["dim"]
    c = doc["c"]
    if len(c) != n or any(len(row) != n for row in c) or any(len(cell) != n for row in c for cell in row):
        raise InputError(f"c must be a {n}x{n}x{n} array", "/c")
    arr = np.empty((n, n, n), dtype=object)
    for idx in np.ndindex(n, n, n):
        arr[idx] = Fraction(str(c[idx[0]][idx[1]][idx[2]]).replace(" ", ""))
    try:
        t = StructureTable(arr, doc.get("unit_index"))
    except (ValueError, DimensionMismatch) as e:
        raise InputError(str(e), "/unit_index") from e
    return AlgebraInput(kind, None, t)


def describe(inp: AlgebraInput) -> dict:
    """Normalized echo of an input."""
    if inp.kind == "table":
        return {"kind": "table", "dim": inp.table.dim, "c": to_jsonable(inp.table.c),
                "unit_index": inp.table.unit_index}
    return {"kind": inp.kind, "params": to_jsonable(inp.params.as_dict())}


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def to_jsonable(x):
    """Rationals as "p/q", surds as "a+b*sqrt(D)", floats unchanged, containers recursively."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (Fraction, int)):
        return str(Fraction(x))
    if isinstance(x, QuadSurd):
        return str(x)
    if isinstance(x, (float, np.floating)):
        return float(x)
    if isinstance(x, np.integer):
        return str(int(x))
    if isinstance(x, np.ndarray):
        return [to_jsonable(v) for v in x]
    if isinstance(x, enum.Enum):
        return x.value
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: to_jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")
