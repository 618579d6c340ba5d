"""Verification reports and their CSV / JSON serializations.

A :class:`VerificationReport` is the unit every check in the package returns.
When a reference value is present, ``passed`` is derived from the mixed
absolute/relative rule ``|computed - reference| <= tolerance * max(1, |reference|)``;
checks without a reference (monotonicity flags, boundedness) set ``passed``
directly.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

import numpy as np

REPORT_FIELDS = (
    "check_id",
    "inputs",
    "computed",
    "reference",
    "tolerance",
    "passed",
    "runtime_ms",
)

# JSON schema for one report object; the CLI emits an array of these.
REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": list(REPORT_FIELDS),
    "properties": {
        "check_id": {"type": "string"},
        "inputs": {"type": "object"},
        "computed": {"$ref": "#/$defs/value"},
        "reference": {"anyOf": [{"$ref": "#/$defs/value"}, {"type": "null"}]},
        "tolerance": {"type": "number"},
        "passed": {"type": "boolean"},
        "runtime_ms": {"type": ["integer", "null"]},
    },
    "$defs": {
        "value": {
            "anyOf": [
                {"type": "number"},
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["re", "im"],
                    "properties": {"re": {"type": "number"}, "im": {"type": "number"}},
                },
                {
                    "type": "object",
                    "required": ["unbounded"],
                    "properties": {"unbounded": {"const": True}},
                },
            ]
        }
    },
}


def within(computed: complex, reference: complex, tolerance: float) -> bool:
    if not (_finite(computed) and _finite(reference)):
        return False
    return abs(computed - reference) <= tolerance * max(1.0, abs(reference))


def _finite(v: complex) -> bool:
    return math.isfinite(v.real) and math.isfinite(v.imag)


@dataclass
class VerificationReport:
    check_id: str
    inputs: dict[str, Any]
    computed: Any
    reference: Any = None
    tolerance: float = 0.0
    passed: bool | None = None
    runtime_ms: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.passed is None:
            if self.reference is None:
                raise ValueError("passed must be given when there is no reference")
            self.passed = within(self.computed, self.reference, self.tolerance)

    @property
    def discrepancy(self) -> float:
        """Relative gap ``|computed - reference| / max(1, |reference|)``."""
        if self.reference is None:
            return math.nan
        return abs(self.computed - self.reference) / max(1.0, abs(self.reference))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        ref = "" if self.reference is None else f" ref={_fmt(self.reference)}"
        return f"[{status}] {self.check_id}: computed={_fmt(self.computed)}{ref} tol={self.tolerance:g}"

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "inputs": {k: _jsonable(v) for k, v in self.inputs.items()},
            "computed": _jsonable(self.computed),
            "reference": _jsonable(self.reference),
            "tolerance": self.tolerance,
            "passed": bool(self.passed),
            "runtime_ms": int(self.runtime_ms) if timing else None,
        }


@contextmanager
def stopwatch() -> Iterator[dict[str, int]]:
    """Yield a dict whose ``ms`` entry holds elapsed milliseconds on exit."""
    box = {"ms": 0}
    start = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = int(round(1000 * (time.perf_counter() - start)))


def _fmt(v: Any) -> str:
    if isinstance(v, complex):
        return f"({v.real:.12g}{v.imag:+.12g}j)"
    if isinstance(v, float):
        return "inf" if math.isinf(v) else f"{v:.12g}"
    return str(v)


def _jsonable(v: Any) -> Any:
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, np.ndarray):
        return _jsonable(v.tolist())
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, complex) or (hasattr(v, "imag") and getattr(v, "imag", 0) != 0):
        c = complex(v)
        return {"re": float(c.real), "im": float(c.imag)}
    if isinstance(v, int):
        return v
    x = float(v)
    if math.isinf(x):
        return {"unbounded": True}
    if math.isnan(x):
        return None
    return x


def to_json(reports: Iterable[VerificationReport], timing: bool = False) -> str:
    ordered = sorted(reports, key=lambda r: r.check_id)
    return json.dumps([r.to_dict(timing) for r in ordered], indent=2, sort_keys=True) + "\n"


def to_csv(reports: Iterable[VerificationReport], timing: bool = False) -> str:
    ordered = sorted(reports, key=lambda r: r.check_id)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check_id", "inputs", "computed", "reference", "tolerance", "passed"]
               + (["runtime_ms"] if timing else []))
    for r in ordered:
        inputs = ";".join(f"{k}={_fmt(v)}" for k, v in r.inputs.items())
        ref = "" if r.reference is None else _fmt(r.reference)
        row = [r.check_id, inputs, _fmt(r.computed), ref, f"{r.tolerance:g}", str(bool(r.passed)).lower()]
        if timing:
            row.append(str(r.runtime_ms))
        w.writerow(row)
    return buf.getvalue()
