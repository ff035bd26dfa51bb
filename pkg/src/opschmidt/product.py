"""Product construction U = V1 V2 with Schmidt rank k*l, and the rank n+1 unitaries."""
from __future__ import annotations

import numpy as np

from .core import BipartiteOperator, cyclic_shift


def partition_projectors(dim: int, parts: int) -> list[np.ndarray]:
    """Contiguous diagonal projectors summing to the identity, sizes as equal as possible."""
    if not 1 <= parts <= dim:
        raise ValueError(f"parts must lie in [1, {dim}], got {parts}")
    sizes = [dim // parts + (1 if i < dim % parts else 0) for i in range(parts)]
    projs = []
    start = 0
    for size in sizes:
        d = np.zeros(dim)
        d[start:start + size] = 1
        projs.append(np.diag(d).astype(complex))
        start += size
    return projs


def product_factors(n: int, m: int, k: int, l: int) -> tuple[np.ndarray, np.ndarray]:
    """V1 = sum_i P_i (x) S^m_i and V2 = sum_j S^n_j (x) Q_j, shifts offset from 1."""
    if not (1 <= k <= min(n, m) and 1 <= l <= min(n, m)):
        raise ValueError(f"k, l must lie in [1, {min(n, m)}], got k={k}, l={l}")
    ps = partition_projectors(n, k)
    qs = partition_projectors(m, l)
    v1 = sum(np.kron(p, cyclic_shift(m, i)) for i, p in enumerate(ps, start=1))
    v2 = sum(np.kron(cyclic_shift(n, j), q) for j, q in enumerate(qs, start=1))
    return v1, v2


def product_unitary(n: int, m: int, k: int, l: int) -> BipartiteOperator:
    v1, v2 = product_factors(n, m, k, l)
    return BipartiteOperator(n, m, v1 @ v2)


def rank_n_plus_1_odd(n: int) -> BipartiteOperator:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    return product_unitary(n, n, 2, (n + 1) // 2)


def rank_n_plus_1_even(n: int) -> BipartiteOperator:
    """Doubled blocks of a rank-n unitary on C^k (x) C^k (k = n/2) plus diag(V, W) tails."""
    if n < 4 or n % 2:
        raise ValueError(f"need even n >= 4, got {n}")
    k = n // 2
    small = product_unitary(k, k, 2, k)
    v = np.eye(k, dtype=complex)
    w = np.eye(k, dtype=complex)
    w[-1, -1] = -1
    zero = np.zeros((k, k), dtype=complex)
    tail = np.block([[v, zero], [zero, w]])

    u = np.zeros((n * n, n * n), dtype=complex)
    for bi in range(n):
        for bj in range(n):
            if bi < k and bj < k:
                a = small.block(bi, bj)
                blk = np.block([[a, zero], [zero, a]])
            elif bi == bj:
                blk = tail
            else:
                continue
            u[bi * n:(bi + 1) * n, bj * n:(bj + 1) * n] = blk
    return BipartiteOperator(n, n, u)
