"""Fourier-basis diagonal unitaries D_lambda and the rank n^2 - 1 construction."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import BipartiteOperator

DEFAULT_EPS = 1e-6
DEFAULT_MAX_ATTEMPTS = 64


class FourierSearchError(RuntimeError):
    """No admissible phase parameter was found within the attempt budget."""


@dataclass(frozen=True)
class FourierWitness:
    x: float
    p: int
    min_abs_dft: float
    abs_dft_00: float
    attempts: int


def phi(n: int) -> complex:
    return np.exp(2j * np.pi / n)


def fourier_basis_vector(n: int, alpha: int, beta: int) -> np.ndarray:
    """v = n^{-1/2} sum_j phi^{alpha (j - beta)} e_{(j - beta) mod n} (x) e_j."""
    v = np.zeros(n * n, dtype=complex)
    for j in range(n):
        v[((j - beta) % n) * n + j] = np.exp(2j * np.pi * alpha * (j - beta) / n)
    return v / np.sqrt(n)


def fourier_basis(n: int) -> np.ndarray:
    """Columns v_{alpha,beta} in row-major (alpha, beta) order."""
    return np.column_stack(
        [fourier_basis_vector(n, a, b) for a in range(n) for b in range(n)]
    )


def dft2(lam) -> np.ndarray:
    """lam_hat(a, b) = (1/n) sum exp(2 pi i (a alpha + b beta) / n) lam(alpha, beta)."""
    lam = np.asarray(lam, dtype=complex)
    n = lam.shape[0]
    # numpy's ifft2 uses the + sign and a 1/n^2 factor
    return np.fft.ifft2(lam) * n


def check_unimodular(lam, atol: float = 1e-12) -> np.ndarray:
    lam = np.asarray(lam, dtype=complex)
    if lam.ndim != 2 or lam.shape[0] != lam.shape[1]:
        raise ValueError("phase matrix must be square")
    if not np.allclose(np.abs(lam), 1, rtol=0, atol=atol):
        raise ValueError("phase matrix entries must have modulus 1")
    return lam


def d_lambda(lam) -> BipartiteOperator:
    """D = sum lam(alpha, beta) v_{alpha,beta} v_{alpha,beta}^*."""
    lam = check_unimodular(lam)
    n = lam.shape[0]
    basis = fourier_basis(n)
    mat = (basis * lam.reshape(-1)[np.newaxis, :]) @ basis.conj().T
    return BipartiteOperator(n, n, mat)


def dft_support_size(lam, eps: float = 1e-8) -> int:
    """|{(a, b) : |lam_hat(a, b)| > eps}|, the predicted Schmidt rank of D_lambda."""
    return int(np.count_nonzero(np.abs(dft2(lam)) > eps))


def smallest_nondividing_prime(n: int) -> int:
    if n <= 2:
        raise ValueError("need n > 2")
    for p in range(2, n):
        if n % p and all(p % q for q in range(2, int(p ** 0.5) + 1)):
            return p
    raise AssertionError("unreachable for n > 2")


def exponent_table(n: int) -> dict[tuple[int, int], int]:
    """Distinct exponents M[i, j] = 1, 2, ... for i > j, lexicographic in (i, j)."""
    pairs = [(i, j) for i in range(n) for j in range(i)]
    return {pair: t for t, pair in enumerate(pairs, start=1)}


def _check_p(n: int, p: int):
    is_prime = p >= 2 and all(p % q for q in range(2, p))
    if not (is_prime and p < n and n % p):
        raise ValueError(f"p={p} must be a prime below {n} not dividing it")


def lambda_x(n: int, x: float, table=None, p: int | None = None) -> np.ndarray:
    """Phase matrix with lam_hat(0, 0) = 0 for every x."""
    if n <= 2:
        raise ValueError("need n > 2")
    table = exponent_table(n) if table is None else table
    p = smallest_nondividing_prime(n) if p is None else p
    _check_p(n, p)
    z = np.exp(2j * np.pi * x / n)
    lam = np.empty((n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            if a == b:
                lam[a, b] = np.exp(2j * np.pi * a / n)
            elif a > b:
                lam[a, b] = z ** table[a, b]
            elif (a, b) == (1, p):
                lam[a, b] = -z ** table[1, 0]
            elif (a, b) == (0, 1):
                lam[a, b] = -z ** table[p, 1]
            else:
                lam[a, b] = -z ** table[b, a]
    return lam


def find_x(
    n: int,
    eps: float = DEFAULT_EPS,
    seed: int = 0,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    table=None,
    p: int | None = None,
) -> FourierWitness:
    """Sample x until every lam_hat(a, b) with (a, b) != (0, 0) exceeds eps in modulus."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    p = smallest_nondividing_prime(n) if p is None else p
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        x = float(rng.uniform(0.0, 1.0)) * n
        mags = np.abs(dft2(lambda_x(n, x, table, p)))
        at_origin = float(mags[0, 0])
        mags[0, 0] = np.inf
        margin = float(mags.min())
        if margin > eps and at_origin < eps:
            return FourierWitness(x, p, margin, at_origin, attempt)
    raise FourierSearchError(
        f"no x found for n={n} with eps={eps} after {max_attempts} attempts"
    )


def rank_n2_minus_1(
    n: int, eps: float = DEFAULT_EPS, seed: int = 0, max_attempts: int = DEFAULT_MAX_ATTEMPTS
) -> tuple[BipartiteOperator, FourierWitness]:
    p = smallest_nondividing_prime(n)
    table = exponent_table(n)
    wit = find_x(n, eps, seed, max_attempts, table, p)
    return d_lambda(lambda_x(n, wit.x, table, p)), wit
