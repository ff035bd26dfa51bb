"""Synthesize every achievable rank over a dimension range and print a summary table."""
import argparse
import collections
import time

from opschmidt.oracle import sweep

parser = argparse.ArgumentParser()
parser.add_argument("--min", type=int, default=2)
parser.add_argument("--max", type=int, default=8)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

start = time.perf_counter()
rows = sweep(range(args.min, args.max + 1), range(args.min, args.max + 1), seed=args.seed)
elapsed = time.perf_counter() - start

by_tag = collections.Counter(row.construction for row in rows)
worst = max((row.unitarity_residual or 0.0) for row in rows)
print(f"{len(rows)} rows in {elapsed:.2f}s, {sum(not r.passed for r in rows)} failures")
print(f"worst unitarity residual {worst:.2e}")
for tag, count in sorted(by_tag.items()):
    print(f"  {tag:18s} {count}")
for row in rows:
    if not row.passed:
        print("FAIL", row)
