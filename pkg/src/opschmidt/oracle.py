"""Brute-force enumeration and cross-checks independent of the constructions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOL, BipartiteOperator, schmidt_rank
from .perm import count_n, perm_unitary
from .synth import (
    Certificate,
    Rank3Impossible,
    SynthesisRequest,
    achievable_ranks,
    certify,
    synthesize,
)


def all_perm_tuples(n: int):
    """Every n-tuple of permutations of range(n), in lexicographic order."""
    perms = list(itertools.permutations(range(n)))
    return itertools.product(perms, repeat=n)


def random_perm(n: int, rng: np.random.Generator) -> tuple[int, ...]:
    # Fisher-Yates
    p = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        p[i], p[j] = p[j], p[i]
    return tuple(p)


def random_perm_tuple(n: int, rng: np.random.Generator):
    return tuple(random_perm(n, rng) for _ in range(n))


def brute_force_perm_ranks(n: int, samples: int | None = None, seed: int = 0) -> dict:
    """Map each attained N(alpha, beta) to its lexicographically smallest witness pair.

    Exhaustive when ``samples`` is None (feasible up to n = 3); otherwise uses
    ``samples`` seeded random pairs, with the smallest sampled witness kept.
    """
    found: dict[int, tuple] = {}
    if samples is None:
        if n > 3:
            raise ValueError("exhaustive enumeration is limited to n <= 3; pass samples")
        tuples = list(all_perm_tuples(n))
        for alpha in tuples:
            for beta in tuples:
                found.setdefault(count_n(alpha, beta), (alpha, beta))
    else:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            alpha = random_perm_tuple(n, rng)
            beta = random_perm_tuple(n, rng)
            r = count_n(alpha, beta)
            if r not in found or (alpha, beta) < found[r]:
                found[r] = (alpha, beta)
    return dict(sorted(found.items()))


def numeric_perm_ranks(n: int, tol: float = DEFAULT_TOL) -> set[int]:
    """Attained Schmidt ranks over all permutation unitaries, by SVD (n <= 2 recommended)."""
    tuples = list(all_perm_tuples(n))
    return {schmidt_rank(perm_unitary(a, b), tol) for a in tuples for b in tuples}


@dataclass
class CrossCheckReport:
    n: int
    samples: int
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def cross_check_perm(samples: int, n: int, seed: int = 0, tol: float = DEFAULT_TOL,
                     pairs=None) -> CrossCheckReport:
    """Compare count_n with the numeric Schmidt rank on random (or given) tuple pairs."""
    if n > 8:
        raise ValueError("cross-check is limited to n <= 8")
    if pairs is None:
        rng = np.random.default_rng(seed)
        pairs = [(random_perm_tuple(n, rng), random_perm_tuple(n, rng)) for _ in range(samples)]
    pairs = list(pairs)
    report = CrossCheckReport(n, len(pairs))
    for alpha, beta in pairs:
        exact = count_n(alpha, beta)
        numeric = schmidt_rank(perm_unitary(alpha, beta), tol)
        if exact != numeric:
            report.disagreements.append((alpha, beta, exact, numeric))
    return report


def verify(u: BipartiteOperator, expected: int, tol: float = DEFAULT_TOL) -> Certificate:
    return certify(u, expected, "external", tol)


@dataclass
class SweepRow:
    n: int
    m: int
    r: int
    construction: str
    unitarity_residual: float | None
    numeric_rank: int | None
    exact_rank: int | None
    passed: bool
    operator: BipartiteOperator | None = field(default=None, repr=False)
    error: str | None = None


def sweep(n_range, m_range, tol: float = DEFAULT_TOL, seed: int = 0,
          eps: float | None = None) -> list[SweepRow]:
    """Synthesize and certify every achievable (n, m, r); errors become failing rows."""
    rows = []
    policy = {"tol": tol, "seed": seed}
    if eps is not None:
        policy["eps"] = eps
    for n in n_range:
        for m in m_range:
            ranks = sorted(achievable_ranks(n, m) | ({3} if (n, m) == (2, 2) else set()))
            for r in ranks:
                try:
                    u, cert = synthesize(SynthesisRequest(n, m, r, **policy))
                except Rank3Impossible:
                    rows.append(SweepRow(n, m, r, "rank3_impossible", None, None, None, True))
                    continue
                except Exception as exc:  # noqa: BLE001 - a sweep reports, never aborts
                    rows.append(SweepRow(n, m, r, "error", None, None, None, False, error=repr(exc)))
                    continue
                rows.append(SweepRow(
                    n, m, r, cert.construction, cert.unitarity_residual,
                    cert.numeric_rank, cert.exact_rank, cert.passed, operator=u,
                ))
    return rows
