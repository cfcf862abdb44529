"""JSON input documents.

Scalars are always strings in the exact grammar of :func:`fshopf.field.parse_scalar`;
JSON numbers are accepted only for indices and ``dim``.
"""

from __future__ import annotations

import json

from . import linalg
from .algebra import StructureAlgebra
from .errors import DimensionMismatch, InputError
from .field import FIELDS, ZERO, format_scalar, parse_scalar
from .hopf import HopfData


def hopf_to_document(H, name: str | None = None) -> dict:
    """Serialize a HopfData (or a bare StructureAlgebra) to the input format."""
    A = H.algebra if isinstance(H, HopfData) else H
    doc = {
        "name": name or (H.name if isinstance(H, HopfData) else "algebra"),
        "field": A.field,
        "dim": A.dim,
        "basis": list(A.labels),
        "unit": [[i, format_scalar(c)] for i, c in enumerate(A.unit) if c],
        "mult": [[i, j, k, format_scalar(c)] for i, j, k, c in A.entries()],
    }
    if isinstance(H, HopfData):
        doc["counit"] = [[i, format_scalar(c)] for i, c in enumerate(H.counit) if c]
        doc["comult"] = [[i, j, k, format_scalar(c)] for i, j, k, c in H.comult_entries()]
        doc["antipode"] = [
            [r, c, format_scalar(x)] for r, row in enumerate(H.antipode) for c, x in enumerate(row) if x
        ]
        if H.reps:
            doc["reps"] = {
                rname: [[[format_scalar(x) for x in row] for row in M] for M in mats] for rname, mats in H.reps
            }
    return doc


def _scalar(value, where):
    try:
        return parse_scalar(value)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def _index(value, dim, where):
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"{where}: index must be an integer, got {value!r}")
    if not 0 <= value < dim:
        raise InputError(f"{where}: index {value} out of range for dim {dim}")
    return value


def _entries(doc, key, arity, dim):
    raw = doc.get(key)
    if not isinstance(raw, list):
        raise InputError(f"field '{key}': expected a list")
    out = []
    for n, entry in enumerate(raw):
        where = f"field '{key}[{n}]'"
        if not isinstance(entry, list) or len(entry) != arity + 1:
            raise InputError(f"{where}: expected [{', '.join(['index'] * arity)}, scalar]")
        idx = tuple(_index(x, dim, where) for x in entry[:arity])
        out.append(idx + (_scalar(entry[arity], where),))
    return out


def _dense(entries, dim):
    v = [ZERO] * dim
    for i, c in entries:
        v[i] = v[i] + c
    return v


def document_to_hopf(doc: dict):
    """Parse an input document; returns HopfData, or StructureAlgebra when no coalgebra data is present."""
    if not isinstance(doc, dict):
        raise InputError("top level: expected a JSON object")
    field = doc.get("field", "Qi")
    if field not in FIELDS:
        raise InputError(f"field 'field': expected one of {FIELDS}, got {field!r}")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise InputError("field 'dim': expected a positive integer")
    labels = doc.get("basis", [f"b{i}" for i in range(dim)])
    if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(s, str) for s in labels):
        raise InputError(f"field 'basis': expected {dim} strings")
    unit = _dense(_entries(doc, "unit", 1, dim), dim)
    mult = _entries(doc, "mult", 3, dim)
    A = StructureAlgebra.from_entries(labels, mult, unit, field)
    hopf_keys = [k for k in ("counit", "comult", "antipode") if k in doc]
    if not hopf_keys:
        return A
    if len(hopf_keys) != 3:
        missing = sorted({"counit", "comult", "antipode"} - set(hopf_keys))
        raise InputError(f"incomplete Hopf data: missing {missing}")
    counit = _dense(_entries(doc, "counit", 1, dim), dim)
    comult = _entries(doc, "comult", 3, dim)
    S = linalg.zeros(dim)
    for r, c, x in _entries(doc, "antipode", 2, dim):
        S[r][c] = S[r][c] + x
    reps = {}
    for rname, mats in (doc.get("reps") or {}).items():
        where = f"field 'reps.{rname}'"
        if not isinstance(mats, list) or len(mats) != dim:
            raise InputError(f"{where}: expected {dim} matrices")
        parsed = []
        for m, M in enumerate(mats):
            if not isinstance(M, list) or not M or any(not isinstance(row, list) or len(row) != len(M) for row in M):
                raise InputError(f"{where}[{m}]: expected a square matrix")
            parsed.append([[_scalar(x, f"{where}[{m}]") for x in row] for row in M])
        reps[rname] = parsed
    try:
        return HopfData.build(A, comult, counit, S, doc.get("name", "H"), reps)
    except DimensionMismatch as exc:
        raise InputError(str(exc)) from None


def load_document(path) -> object:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return document_to_hopf(doc)


def dumps(doc) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"
