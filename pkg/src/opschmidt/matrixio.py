"""Matrix Market and JSON serialization of bipartite operators."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import scipy.io
import scipy.sparse

from .core import BipartiteOperator


def format_for(path, fmt: str | None = None) -> str:
    if fmt:
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix == ".mtx":
        return "mtx"
    raise ValueError(f"cannot infer format from {path!r}; use .mtx or .json")


def write_mtx(path, mat):
    coo = scipy.sparse.coo_matrix(np.asarray(mat, dtype=complex))
    scipy.io.mmwrite(str(path), coo, field="complex", precision=17, symmetry="general")


def read_mtx(path) -> np.ndarray:
    mat = scipy.io.mmread(str(path))
    if scipy.sparse.issparse(mat):
        mat = mat.toarray()
    return np.asarray(mat, dtype=complex)


def write_json(path, u: BipartiteOperator, construction: str = "", certificate: dict | None = None):
    envelope = {
        "dimA": u.dim_a,
        "dimB": u.dim_b,
        "construction": construction,
        "entries": [[float(z.real), float(z.imag)] for z in u.matrix.reshape(-1)],
    }
    if certificate is not None:
        envelope["certificate"] = certificate
    Path(path).write_text(json.dumps(envelope, indent=1) + "\n")


def read_json(path) -> tuple[BipartiteOperator, dict]:
    envelope = json.loads(Path(path).read_text())
    n, m = int(envelope["dimA"]), int(envelope["dimB"])
    ent = np.array(envelope["entries"], dtype=float)
    if ent.shape != (n * m * n * m, 2):
        raise ValueError(f"expected {(n * m) ** 2} [re, im] entries, got shape {ent.shape}")
    mat = (ent[:, 0] + 1j * ent[:, 1]).reshape(n * m, n * m)
    return BipartiteOperator(n, m, mat), envelope


def save(path, u: BipartiteOperator, fmt: str | None = None, construction: str = "",
         certificate: dict | None = None):
    if format_for(path, fmt) == "json":
        write_json(path, u, construction, certificate)
    else:
        write_mtx(path, u.matrix)


def load(path, n: int | None = None, m: int | None = None, fmt: str | None = None) -> BipartiteOperator:
    """Read an operator; Matrix Market files need the factor dimensions supplied."""
    if format_for(path, fmt) == "json":
        u, _ = read_json(path)
        if (n is not None and n != u.dim_a) or (m is not None and m != u.dim_b):
            raise ValueError(f"file holds dims {u.dims}, requested ({n}, {m})")
        return u
    mat = read_mtx(path)
    if n is None or m is None:
        raise ValueError("Matrix Market input needs -n and -m")
    return BipartiteOperator(n, m, mat)
