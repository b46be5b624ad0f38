#!/usr/bin/env python3
"""Exhaustively compare the region operations against a per-definition
brute-force oracle: every partition of every universe up to a given size,
against every subset.  Prints per-size case counts and timing."""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from roughmap.roughset import (  # noqa: E402
    ApproximationSpace,
    boundary,
    lower_approximation,
    regions,
    upper_approximation,
)


def naive_lower(blocks, subset):
    out = set()
    for block in blocks:
        if set(block) <= subset:
            out |= set(block)
    return out


def naive_upper(blocks, subset):
    out = set()
    for block in blocks:
        if set(block) & subset:
            out |= set(block)
    return out


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        yield [[first]] + part


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=6)
    args = parser.parse_args()

    total_cases = 0
    mismatches = 0
    started = time.perf_counter()
    for n in range(1, args.max_size + 1):
        elements = [f"x{i}" for i in range(n)]
        size_cases = 0
        n_partitions = 0
        for blocks in set_partitions(elements):
            n_partitions += 1
            space = ApproximationSpace.from_blocks([tuple(b) for b in blocks])
            for size in range(n + 1):
                for combo in itertools.combinations(elements, size):
                    subset = set(combo)
                    lo = naive_lower(blocks, subset)
                    up = naive_upper(blocks, subset)
                    got = regions(space, subset)
                    agree = (
                        set(lower_approximation(space, subset)) == lo
                        and set(upper_approximation(space, subset)) == up
                        and set(boundary(space, subset)) == up - lo
                        and set(got.pos) == lo
                        and set(got.neg) == set(elements) - up
                        and set(got.bnd) == up - lo
                    )
                    mismatches += 0 if agree else 1
                    size_cases += 1
        total_cases += size_cases
        print(f"size {n}: {n_partitions} partitions x {2 ** n} subsets "
              f"= {size_cases} cases")
    elapsed = time.perf_counter() - started
    print(f"total: {total_cases} cases, {mismatches} mismatches, {elapsed:.2f}s")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
