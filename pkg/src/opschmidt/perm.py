"""Permutation unitaries U_{alpha,beta} and the exact rank count N(alpha, beta).

A permutation is a tuple of images ``p[i]``; a tuple of permutations is an
n-tuple of such, so ``alpha[i][j]`` is alpha_i(j).
"""
from __future__ import annotations

import numpy as np

from .core import BipartiteOperator

Permutation = tuple[int, ...]
PermTuple = tuple[Permutation, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def cycle_power(n: int, k: int) -> Permutation:
    """c^k with c(i) = i + 1 mod n."""
    return tuple((i + k) % n for i in range(n))


def is_permutation(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def check_tuple(t, n: int | None = None) -> PermTuple:
    t = tuple(tuple(int(v) for v in p) for p in t)
    size = len(t) if n is None else n
    if len(t) != size or not all(is_permutation(p, size) for p in t):
        raise ValueError(f"not an {size}-tuple of permutations of range({size})")
    return t


def _check_pair(alpha, beta) -> tuple[PermTuple, PermTuple]:
    alpha = check_tuple(alpha)
    beta = check_tuple(beta)
    if len(alpha) != len(beta):
        raise ValueError(f"size mismatch: {len(alpha)} vs {len(beta)}")
    return alpha, beta


def pair_set(alpha, beta) -> set[tuple[int, int]]:
    n = len(alpha)
    return {(alpha[i][j], beta[j][i]) for i in range(n) for j in range(n)}


def count_n(alpha, beta) -> int:
    """N(alpha, beta) = |{(alpha_i(j), beta_j(i))}|, which equals the Schmidt rank."""
    alpha, beta = _check_pair(alpha, beta)
    return len(pair_set(alpha, beta))


def perm_unitary(alpha, beta) -> BipartiteOperator:
    """U = sum_ij e_i e_j^* (x) e_{alpha_i(j)} e_{beta_j(i)}^*."""
    alpha, beta = _check_pair(alpha, beta)
    n = len(alpha)
    u = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            u[i * n + alpha[i][j], j * n + beta[j][i]] = 1
    return BipartiteOperator(n, n, u)


def with_fixed_points(n: int, l: int) -> Permutation:
    """Fixed points 0..l-1, one cycle on the remaining n - l indices."""
    if not 0 <= l <= n or l == n - 1:
        raise ValueError(f"no permutation of {n} points has exactly {l} fixed points")
    rest = list(range(l, n))
    images = list(range(n))
    for pos, v in enumerate(rest):
        images[v] = rest[(pos + 1) % len(rest)]
    return tuple(images)


def construct_lemma1(n: int, r: int) -> tuple[PermTuple, PermTuple]:
    """alpha = (pi, c, ..., c^{n-1}), beta = (id, c, ..., c^{n-1}) with N = 2n - fix(pi)."""
    if n < 2 or not (n <= r <= 2 * n) or r == n + 1:
        raise ValueError(f"rank {r} not in {{n..2n}} minus {{n+1}} for n={n}")
    pi = with_fixed_points(n, 2 * n - r)
    alpha = (pi,) + tuple(cycle_power(n, k) for k in range(1, n))
    beta = (identity(n),) + tuple(cycle_power(n, k) for k in range(1, n))
    return alpha, beta


def lemma2_pi(n: int, r: int) -> Permutation:
    if r == 3 * n - 1:
        return cycle_power(n, 2)
    if r == 2 * n:
        return (1, 0) + tuple(range(2, n))
    if r == 2 * n + 1:
        return (1, 2, 0) + tuple(range(3, n))
    k = 3 * n - 1 - r
    images = [0] * n
    images[0] = 1
    images[1] = k + 1
    images[n - 1] = 0
    for i in range(k + 1, n - 1):
        images[i] = i + 1
    for i in range(2, k + 1):
        images[i] = i
    return tuple(images)


def construct_lemma2(n: int, r: int) -> tuple[PermTuple, PermTuple]:
    """alpha = (c, c, c^2, ..., c^{n-1}), beta = (pi, c, ..., c^{n-1}); N ranges over 2n..3n-1.

    alpha_0 = alpha_1 on purpose.
    """
    if n <= 3 or not (2 * n <= r <= 3 * n - 1):
        raise ValueError(f"need n > 3 and 2n <= r <= 3n-1, got n={n}, r={r}")
    alpha = (cycle_power(n, 1),) + tuple(cycle_power(n, k) for k in range(1, n))
    beta = (lemma2_pi(n, r),) + tuple(cycle_power(n, k) for k in range(1, n))
    return alpha, beta


def extend_perm(p: Permutation) -> Permutation:
    return tuple(p) + (len(p),)


def extend_tuple(alpha, beta, extra_alpha=None, extra_beta=None) -> tuple[PermTuple, PermTuple]:
    """Lift (n-1)-tuples to n-tuples; N grows by exactly 2n - 1.

    Every component fixes the new top index n-1 and the extra permutations
    (identity by default) become the last components.
    """
    alpha, beta = _check_pair(alpha, beta)
    size = len(alpha)
    extra_alpha = identity(size) if extra_alpha is None else tuple(extra_alpha)
    extra_beta = identity(size) if extra_beta is None else tuple(extra_beta)
    if not (is_permutation(extra_alpha, size) and is_permutation(extra_beta, size)):
        raise ValueError(f"extra permutations must act on range({size})")
    new_alpha = tuple(extend_perm(p) for p in alpha + (extra_alpha,))
    new_beta = tuple(extend_perm(p) for p in beta + (extra_beta,))
    return new_alpha, new_beta


def perm_ranks(n: int) -> list[int]:
    """Ranks reachable by :func:`construct_perm_rank`."""
    if n < 3:
        return []
    return [r for r in range(n, n * n + 1) if r not in (n + 1, n * n - 1)]


def construct_perm_rank(n: int, r: int) -> tuple[PermTuple, PermTuple]:
    """Tuples with N(alpha, beta) = r for n >= 3, r in {n..n^2} minus {n+1, n^2-1}."""
    if n < 3 or r not in perm_ranks(n):
        raise ValueError(f"rank {r} is not constructible from permutations for n={n}")
    if n == 3:
        if r in (3, 5, 6):
            return construct_lemma1(3, r)
        ident = identity(3)
        if r == 9:
            return (ident,) * 3, (ident,) * 3
        c = cycle_power(3, 1)
        t = (ident, ident, c)
        return t, t
    if r <= 2 * n:
        return construct_lemma1(n, r)
    if r <= 3 * n - 1:
        return construct_lemma2(n, r)
    alpha, beta = construct_perm_rank(n - 1, r - 2 * n + 1)
    return extend_tuple(alpha, beta)
