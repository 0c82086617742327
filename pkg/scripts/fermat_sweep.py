"""Classify the Fermat family x^r + y^r + z^r with (x, y, z^s) and print a table.

    python scripts/fermat_sweep.py --max-r 10
"""

import argparse
import time

from hypersection.cli import enumerate_fermat


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-r", type=int, default=8)
    args = parser.parse_args()

    start = time.perf_counter()
    results = enumerate_fermat(args.max_r)
    print(f"{'r':>3} {'s':>3} {'delta':>6} {'P(V)^2':>7}  label")
    for r, s, rep in results:
        print(f"{r:>3} {s:>3} {rep.delta:>6} {rep.self_intersection:>7}  {rep.label.value}")
    print(f"{len(results)} instances in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
