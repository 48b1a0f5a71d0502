"""Matrix file formats consumed and produced by the CLI.

JSON: ``{"field": "real"|"complex", "dim": n, "data": [[...], ...]}`` with
complex entries written as ``[re, im]`` pairs.  Plain text (real only):
``n`` on the first line, then ``n`` whitespace-separated rows.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .matcore import OperatorError, SymMatrix


def matrix_to_obj(m: SymMatrix) -> dict:
    if m.field == "complex":
        data = [[[float(z.real), float(z.imag)] for z in row]
                for row in m.data]
    else:
        data = [[float(z) for z in row] for row in m.data]
    return {"field": m.field, "dim": m.dim, "data": data}


def matrix_from_obj(obj: dict) -> SymMatrix:
    try:
        field = obj["field"]
        dim = int(obj["dim"])
        rows = obj["data"]
    except (KeyError, TypeError) as exc:
        raise OperatorError(f"malformed matrix object: {exc}") from exc
    if field not in ("real", "complex"):
        raise OperatorError(f"field must be 'real' or 'complex', got {field!r}")
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise OperatorError(f"data is not a {dim}x{dim} matrix")
    if field == "complex":
        arr = np.empty((dim, dim), dtype=np.complex128)
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                if isinstance(entry, (list, tuple)):
                    if len(entry) != 2:
                        raise OperatorError(
                            f"complex entry at ({i},{j}) is not a [re, im] pair")
                    arr[i, j] = complex(entry[0], entry[1])
                else:
                    arr[i, j] = complex(entry)
    else:
        arr = np.asarray(rows, dtype=np.float64)
    return SymMatrix(arr)


def _load_text(text: str) -> SymMatrix:
    tokens = text.split()
    if not tokens:
        raise OperatorError("empty matrix file")
    try:
        dim = int(tokens[0])
        values = [float(t) for t in tokens[1:]]
    except ValueError as exc:
        raise OperatorError(f"malformed text matrix: {exc}") from exc
    if len(values) != dim * dim:
        raise OperatorError(
            f"text matrix declares dim {dim} but carries {len(values)} entries")
    return SymMatrix(np.asarray(values, dtype=np.float64).reshape(dim, dim))


def load_matrix(path: str | os.PathLike) -> SymMatrix:
    """Load a matrix file, sniffing JSON versus text by the first character."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise OperatorError(f"invalid JSON in {path}: {exc}") from exc
        return matrix_from_obj(obj)
    return _load_text(text)


def save_matrix(m: SymMatrix, path: str | os.PathLike) -> None:
    """Write JSON for ``.json`` paths, the text format otherwise (real only)."""
    path = os.fspath(path)
    if path.endswith(".json"):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(matrix_to_obj(m), fh, indent=2, sort_keys=True)
            fh.write("\n")
        return
    if m.field == "complex":
        raise OperatorError("the text format only carries real matrices; "
                            "use a .json path")
    lines = [str(m.dim)]
    lines += [" ".join(repr(float(v)) for v in row) for row in m.data]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
