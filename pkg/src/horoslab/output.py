"""CSV and JSON serialisation with deterministic, round-trip number formatting."""
from __future__ import annotations

import io
import json
import math
from functools import lru_cache
from importlib import resources

import jsonschema

SCHEMA_VERSION = "1.0"
PROFILE_COLUMNS = ("s", "rho", "lambda", "x", "z", "dx_ds", "dz_ds")


def fmt(v) -> str:
    """Shortest round-trip text for a number; repr of a float is exactly that."""
    if isinstance(v, bool) or v is None:
        return "" if v is None else str(v).lower()
    if isinstance(v, float):
        if not math.isfinite(v):
            raise ValueError(f"refusing to write non-finite value {v}")
        return repr(v)
    return str(v)


def write_csv(header, rows) -> str:
    # hand-written rather than csv.writer so that floats keep repr formatting
    buf = io.StringIO(newline="")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(fmt(v) for v in row) + "\n")
    return buf.getvalue()


def sample_row(smp) -> tuple:
    return (smp.s, smp.rho, smp.lam, smp.x, smp.z, smp.dx_ds, smp.dz_ds)


def sample_dict(smp) -> dict:
    return dict(zip(PROFILE_COLUMNS, sample_row(smp)))


@lru_cache(maxsize=1)
def output_schema() -> dict:
    text = resources.files("horoslab").joinpath("output_schema.json").read_text("utf-8")
    return json.loads(text)


def validate(doc: dict) -> None:
    jsonschema.validate(doc, output_schema())


def dump_json(doc: dict) -> str:
    """Validate ``doc`` and render it; key order is kept as built, so output is stable."""
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    validate(doc)
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
