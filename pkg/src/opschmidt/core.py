"""Dense complex matrix primitives for bipartite operators.

Block convention: an operator ``X`` on C^n (x) C^m is the n x n grid of m x m
blocks ``X[i*m:(i+1)*m, j*m:(j+1)*m]`` so that ``X = sum_ij e_i e_j^* (x) X_ij``.
The realignment stores the row-major flattening of block (i, j) as row
``i*n + j`` (no conjugation).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TOL = 1e-8


class RankComputationError(RuntimeError):
    """SVD failed to converge while computing a rank."""


@dataclass(frozen=True)
class BipartiteOperator:
    """A square matrix on C^dim_a (x) C^dim_b."""

    dim_a: int
    dim_b: int
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        size = self.dim_a * self.dim_b
        if mat.shape != (size, size):
            raise ValueError(
                f"matrix shape {mat.shape} does not match dims ({self.dim_a}, {self.dim_b})"
            )
        if not np.all(np.isfinite(mat)):
            raise ValueError("matrix has non-finite entries")
        # + 0 turns -0.0 into 0.0 so sparse serialization round-trips bitwise
        mat = mat + 0.0
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def dims(self) -> tuple[int, int]:
        return self.dim_a, self.dim_b

    def block(self, i: int, j: int) -> np.ndarray:
        m = self.dim_b
        return self.matrix[i * m:(i + 1) * m, j * m:(j + 1) * m]

    def swap_factors(self) -> "BipartiteOperator":
        """The same operator viewed on C^dim_b (x) C^dim_a."""
        n, m = self.dims
        t = self.matrix.reshape(n, m, n, m).transpose(1, 0, 3, 2)
        return BipartiteOperator(m, n, t.reshape(n * m, n * m))


@dataclass(frozen=True)
class SchmidtDecomposition:
    weights: np.ndarray
    a_factors: list[np.ndarray]
    b_factors: list[np.ndarray]

    def __len__(self):
        return len(self.weights)

    def reconstruct(self) -> np.ndarray:
        n = self.a_factors[0].shape[0]
        m = self.b_factors[0].shape[0]
        out = np.zeros((n * m, n * m), dtype=complex)
        for s, a, b in zip(self.weights, self.a_factors, self.b_factors):
            out += s * np.kron(a, b)
        return out


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def blocks(x: BipartiteOperator) -> list[np.ndarray]:
    """The n^2 blocks X_ij of ``x`` in row-major (i, j) order."""
    n = x.dim_a
    return [x.block(i, j) for i in range(n) for j in range(n)]


def realign(x: BipartiteOperator) -> np.ndarray:
    """Reshuffled n^2 x m^2 matrix whose row (i, j) is vec(X_ij)."""
    n, m = x.dims
    return x.matrix.reshape(n, m, n, m).transpose(0, 2, 1, 3).reshape(n * n, m * m)


def unrealign(r: np.ndarray, n: int, m: int) -> BipartiteOperator:
    """Inverse of :func:`realign`."""
    r = np.asarray(r, dtype=complex)
    mat = r.reshape(n, n, m, m).transpose(0, 2, 1, 3).reshape(n * m, n * m)
    return BipartiteOperator(n, m, mat)


def _svdvals(mat: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.svd(mat, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise RankComputationError(str(exc)) from exc


def numerical_rank(mat, tol: float = DEFAULT_TOL) -> int:
    """Number of singular values above ``tol * sigma_max``; 0 for the zero matrix."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = _svdvals(np.asarray(mat, dtype=complex))
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def realignment_singular_values(x: BipartiteOperator) -> np.ndarray:
    return _svdvals(realign(x))


def schmidt_rank(x: BipartiteOperator, tol: float = DEFAULT_TOL) -> int:
    if not np.any(x.matrix):
        raise ValueError("operator Schmidt rank is undefined for the zero operator")
    return numerical_rank(realign(x), tol)


def block_span_dim(x: BipartiteOperator, tol: float = DEFAULT_TOL) -> int:
    """dim span{X_ij} from the eigenvalues of the HS Gram matrix of the blocks.

    Independent of the SVD path. Gram eigenvalues are squared singular values
    and carry absolute error ~1e-16 * top, so the relative threshold is applied
    to them directly (singular-value cutoff sqrt(tol)).
    """
    bl = blocks(x)
    gram = np.array([[hs_inner(a, b) for b in bl] for a in bl])
    ev = np.linalg.eigvalsh(gram)
    top = ev.max()
    if top <= 0:
        return 0
    return int(np.count_nonzero(ev > tol * top))


def schmidt_decompose(x: BipartiteOperator, tol: float = DEFAULT_TOL) -> SchmidtDecomposition:
    """Operator Schmidt decomposition X = sum_k s_k A_k (x) B_k.

    A and B factors are HS-orthonormal; the weights are sorted non-increasing.
    """
    if not np.any(x.matrix):
        raise ValueError("operator Schmidt decomposition is undefined for the zero operator")
    n, m = x.dims
    try:
        u, s, vh = np.linalg.svd(realign(x))
    except np.linalg.LinAlgError as exc:
        raise RankComputationError(str(exc)) from exc
    k = int(np.count_nonzero(s > tol * s[0]))
    # realign(A (x) B) = vec(A) vec(B)^T, so the left/right singular vectors
    # reshape directly into the factors.
    a_factors = [u[:, t].reshape(n, n) for t in range(k)]
    b_factors = [vh[t, :].reshape(m, m) for t in range(k)]
    return SchmidtDecomposition(s[:k].copy(), a_factors, b_factors)


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product tr(A^* B)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def unitarity_residual(u) -> float:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError("unitarity check needs a square matrix")
    return float(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))))


def is_unitary(u, tol: float = 1e-10) -> tuple[bool, float]:
    res = unitarity_residual(u)
    return res < tol, res


def cyclic_shift(dim: int, k: int) -> np.ndarray:
    """Permutation matrix sending e_i to e_{(i+k) mod dim}."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    s = np.zeros((dim, dim), dtype=complex)
    idx = np.arange(dim)
    s[(idx + k) % dim, idx] = 1
    return s


def clock(dim: int) -> np.ndarray:
    return np.diag(np.exp(2j * np.pi * np.arange(dim) / dim))


def weyl(dim: int, a: int, b: int) -> np.ndarray:
    """Weyl operator X^a Z^b."""
    if not (0 <= a < dim and 0 <= b < dim):
        raise ValueError(f"Weyl indices must lie in [0, {dim})")
    z = np.exp(2j * np.pi * b * np.arange(dim) / dim)
    return cyclic_shift(dim, a) * z[np.newaxis, :]


def weyl_basis(dim: int) -> list[tuple[tuple[int, int], np.ndarray]]:
    """All dim^2 Weyl operators in lexicographic (a, b) order."""
    return [((a, b), weyl(dim, a, b)) for a in range(dim) for b in range(dim)]


def swap_operator(n: int) -> BipartiteOperator:
    mat = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            mat[j * n + i, i * n + j] = 1
    return BipartiteOperator(n, n, mat)
