"""JSON matrix formats shared by the library and the command line.

Complex matrix: an object {"dim": n, "entries": [[re, im], ...]} with one
[re, im] pair per element, row major, n*n pairs in total.  Real matrix: a
plain nested array of numbers, rectangular.  Serialization uses Python's
shortest round-trip float representation, so identical matrices always
produce identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np


def _require_number(value, where: str) -> float:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{where}: expected a number, got {type(value).__name__}")
    return float(value)


def parse_real_matrix(obj) -> np.ndarray:
    """Validate nested-array input and return a float matrix.

    Error messages name the first offending row and column.
    """
    if not isinstance(obj, list) or not obj:
        raise ValueError("top level: expected a nonempty array of rows")
    width = None
    rows = []
    for i, row in enumerate(obj):
        if not isinstance(row, list) or not row:
            raise ValueError(f"row {i}: expected a nonempty array of numbers")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"row {i}: expected {width} columns, got {len(row)}")
        rows.append([_require_number(v, f"row {i}, column {j}") for j, v in enumerate(row)])
    return np.array(rows, dtype=float)


def parse_complex_matrix(obj) -> np.ndarray:
    """Validate the {"dim", "entries"} object format and return a complex matrix."""
    if not isinstance(obj, dict):
        raise ValueError("top level: expected an object with 'dim' and 'entries'")
    if "dim" not in obj or "entries" not in obj:
        raise ValueError("top level: missing 'dim' or 'entries'")
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ValueError("'dim': expected a positive integer")
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != dim * dim:
        raise ValueError(f"'entries': expected {dim * dim} [re, im] pairs")
    values = []
    for k, pair in enumerate(entries):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"entry {k}: expected an [re, im] pair")
        re = _require_number(pair[0], f"entry {k}, real part")
        im = _require_number(pair[1], f"entry {k}, imaginary part")
        values.append(complex(re, im))
    return np.array(values, dtype=complex).reshape(dim, dim)


def dumps_real_matrix(m) -> str:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise ValueError("expected a two-dimensional real matrix")
    return json.dumps([[float(v) for v in row] for row in m]) + "\n"


def dumps_complex_matrix(m) -> str:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square complex matrix")
    entries = [[float(v.real), float(v.imag)] for v in m.reshape(-1)]
    return json.dumps({"dim": int(m.shape[0]), "entries": entries}, sort_keys=True) + "\n"


def save_real_matrix(path, m) -> None:
    Path(path).write_text(dumps_real_matrix(m))


def save_complex_matrix(path, m) -> None:
    Path(path).write_text(dumps_complex_matrix(m))


def load_real_matrix(path) -> np.ndarray:
    return parse_real_matrix(json.loads(Path(path).read_text()))


def load_complex_matrix(path) -> np.ndarray:
    return parse_complex_matrix(json.loads(Path(path).read_text()))


def load_matrix_auto(path) -> tuple[str, np.ndarray]:
    """Load either format, detecting by the top-level JSON type.

    Returns ("real", matrix) or ("complex", matrix).  JSON syntax errors
    propagate as json.JSONDecodeError, which carries the position of the
    first bad token.
    """
    obj = json.loads(Path(path).read_text())
    if isinstance(obj, dict):
        return "complex", parse_complex_matrix(obj)
    return "real", parse_real_matrix(obj)
