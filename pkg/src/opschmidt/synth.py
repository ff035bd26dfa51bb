"""Dispatcher producing a unitary on C^n (x) C^m of any achievable Schmidt rank."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from . import fourier, perm, product
from .core import (
    DEFAULT_TOL,
    BipartiteOperator,
    blocks,
    cyclic_shift,
    schmidt_rank,
    unitarity_residual,
    weyl,
    weyl_basis,
)

UNITARY_TOL = 1e-10


class RankOutOfRange(ValueError):
    pass


class Rank3Impossible(RankOutOfRange):
    """Two-qubit unitaries only have Schmidt ranks 1, 2 and 4."""


@dataclass(frozen=True)
class SynthesisRequest:
    n: int
    m: int
    r: int
    tol: float = DEFAULT_TOL
    eps: float = fourier.DEFAULT_EPS
    seed: int = 0
    max_attempts: int = fourier.DEFAULT_MAX_ATTEMPTS

    def __post_init__(self):
        if self.n < 2 or self.m < 2:
            raise RankOutOfRange(f"dimensions must be >= 2, got ({self.n}, {self.m})")
        if (self.n, self.m, self.r) == (2, 2, 3):
            raise Rank3Impossible(
                "no unitary on C^2 (x) C^2 has Schmidt rank 3; achievable ranks are {1, 2, 4}"
            )
        top = min(self.n, self.m) ** 2
        if not 1 <= self.r <= top:
            raise RankOutOfRange(f"rank {self.r} outside [1, {top}] for dims ({self.n}, {self.m})")


@dataclass
class Certificate:
    construction: str
    n: int
    m: int
    expected_rank: int
    unitarity_residual: float
    numeric_rank: int
    exact_rank: int | None = None
    parameters: dict = field(default_factory=dict)
    tol: float = DEFAULT_TOL

    @property
    def unitary(self) -> bool:
        return self.unitarity_residual < UNITARY_TOL

    @property
    def passed(self) -> bool:
        exact_ok = self.exact_rank is None or self.exact_rank == self.numeric_rank
        return self.unitary and self.numeric_rank == self.expected_rank and exact_ok

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def certify(u: BipartiteOperator, expected: int, construction: str = "external",
            tol: float = DEFAULT_TOL, exact_rank: int | None = None,
            parameters: dict | None = None) -> Certificate:
    return Certificate(
        construction=construction,
        n=u.dim_a,
        m=u.dim_b,
        expected_rank=expected,
        unitarity_residual=unitarity_residual(u.matrix),
        numeric_rank=schmidt_rank(u, tol),
        exact_rank=exact_rank,
        parameters=parameters or {},
        tol=tol,
    )


def achievable_ranks(n: int, m: int) -> set[int]:
    if (n, m) == (2, 2):
        return {1, 2, 4}
    return set(range(1, min(n, m) ** 2 + 1))


def diag_block_unitary(n: int, r: int) -> BipartiteOperator:
    """sum_i e_i e_i^* (x) V_i with V_1..V_r the first Weyl operators, V_r repeated."""
    if not 1 <= r <= n:
        raise RankOutOfRange(f"diagonal-block rank must lie in [1, {n}], got {r}")
    ops = [w for _, w in weyl_basis(n)[:r]]
    ops += [ops[-1]] * (n - r)
    mat = np.zeros((n * n, n * n), dtype=complex)
    for i, v in enumerate(ops):
        mat[i * n:(i + 1) * n, i * n:(i + 1) * n] = v
    return BipartiteOperator(n, n, mat)


def find_independent_unitary(mats, tol: float = DEFAULT_TOL) -> tuple[tuple[int, int], np.ndarray]:
    """First Weyl operator (lexicographic) lying outside span(mats)."""
    mats = [np.asarray(a, dtype=complex) for a in mats]
    dim = mats[0].shape[0]
    stack = np.array([a.reshape(-1) for a in mats]).T
    u, s, _ = np.linalg.svd(stack, full_matrices=False)
    q = u[:, s > tol * s[0]] if s.size and s[0] > 0 else u[:, :0]
    if q.shape[1] >= dim * dim:
        raise ValueError("matrices already span the full matrix algebra")
    for idx, w in weyl_basis(dim):
        vec = w.reshape(-1)
        resid = np.linalg.norm(vec - q @ (q.conj().T @ vec)) / np.linalg.norm(vec)
        if resid > tol:
            return idx, w
    raise AssertionError("Weyl operators form a basis; some must lie outside a proper span")


def _balanced(req: SynthesisRequest):
    n, r = req.n, req.r
    if r <= n:
        return diag_block_unitary(n, r), "diag_blocks", {}, None
    if n == 2:
        # only r = 4 remains
        return product.product_unitary(2, 2, 2, 2), "product", {"k": 2, "l": 2}, None
    if r in perm.perm_ranks(n):
        alpha, beta = perm.construct_perm_rank(n, r)
        params = {"alpha": [list(p) for p in alpha], "beta": [list(p) for p in beta]}
        return perm.perm_unitary(alpha, beta), "permutation", params, perm.count_n(alpha, beta)
    if r == n + 1:
        if n % 2:
            params = {"k": 2, "l": (n + 1) // 2}
            return product.rank_n_plus_1_odd(n), "product_odd", params, None
        return product.rank_n_plus_1_even(n), "product_even", {"k": n // 2}, None
    # r == n^2 - 1
    u, wit = fourier.rank_n2_minus_1(n, req.eps, req.seed, req.max_attempts)
    params = {"x": wit.x, "p": wit.p, "min_abs_dft": wit.min_abs_dft, "attempts": wit.attempts}
    return u, "fourier", params, None


def embed_unbalanced(n: int, m: int, r: int, policy: SynthesisRequest | None = None):
    """Unitary on C^n (x) C^m (n != m) of rank r >= 2 from a balanced one of rank r - 1.

    Returns ``(operator, construction, parameters)``.
    """
    if n == m:
        raise ValueError("embedding needs n != m")
    if n > m:
        u, tag, params = embed_unbalanced(m, n, r, policy)
        return u.swap_factors(), tag, params
    if not 2 <= r <= n * n:
        raise RankOutOfRange(f"embedding handles ranks in [2, {n * n}], got {r}")
    policy = policy or SynthesisRequest(n, m, r)
    if n == 2 and r == 4:
        return product.product_unitary(2, m, 2, 2), "product", {"k": 2, "l": 2}
    inner_req = SynthesisRequest(n, n, r - 1, policy.tol, policy.eps, policy.seed, policy.max_attempts)
    inner, inner_tag, inner_params, _ = _balanced(inner_req)
    idx, v = find_independent_unitary(blocks(inner), policy.tol)
    # m x m grid of n x n blocks: the inner operator followed by m - n copies of V
    mat = np.zeros((n * m, n * m), dtype=complex)
    mat[:n * n, :n * n] = inner.matrix
    for i in range(n, m):
        mat[i * n:(i + 1) * n, i * n:(i + 1) * n] = v
    big = BipartiteOperator(m, n, mat)
    params = {"inner": inner_tag, "inner_parameters": inner_params, "weyl_index": list(idx)}
    return big.swap_factors(), "embedding", params


def synthesize(req: SynthesisRequest) -> tuple[BipartiteOperator, Certificate]:
    n, m, r = req.n, req.m, req.r
    exact = None
    if n == m:
        u, tag, params, exact = _balanced(req)
    elif r == 1:
        u = BipartiteOperator(n, m, np.kron(cyclic_shift(n, 1), cyclic_shift(m, 1)))
        tag, params = "tensor_shifts", {}
    else:
        u, tag, params = embed_unbalanced(n, m, r, req)
    return u, certify(u, r, tag, req.tol, exact, params)


def synth(n: int, m: int, r: int, **policy) -> tuple[BipartiteOperator, Certificate]:
    return synthesize(SynthesisRequest(n, m, r, **policy))


__all__ = [
    "Certificate",
    "Rank3Impossible",
    "RankOutOfRange",
    "SynthesisRequest",
    "achievable_ranks",
    "certify",
    "diag_block_unitary",
    "embed_unbalanced",
    "find_independent_unitary",
    "synth",
    "synthesize",
]
