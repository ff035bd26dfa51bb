"""Which values of N(alpha, beta) do permutation unitaries attain?

Exhaustive for n <= 3, sampled beyond. The n+1 and n^2-1 gaps of the
inductive construction are reported as observed, not asserted.
"""
import argparse

from opschmidt.oracle import brute_force_perm_ranks

parser = argparse.ArgumentParser()
parser.add_argument("--max-n", type=int, default=5)
parser.add_argument("--samples", type=int, default=20000)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

for n in range(2, args.max_n + 1):
    samples = None if n <= 3 else args.samples
    found = brute_force_perm_ranks(n, samples, args.seed)
    missing = sorted(set(range(n, n * n + 1)) - set(found))
    how = "exhaustive" if samples is None else f"{samples} samples"
    print(f"n={n} ({how}): attained {sorted(found)}; not seen {missing}")
