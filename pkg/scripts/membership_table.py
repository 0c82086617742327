"""Where does z^d0 enter (x^d1, y^d2, h) for Fermat h?  Prints a d0 x r grid.

Each cell is '.' for non-membership and '#' for membership, checked by both
Buchberger and the linear-algebra oracle.
"""

import argparse

from hypersection.groebner import ideal_membership, linear_membership_oracle
from hypersection.parse import parse_polynomial


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--d1", type=int, default=1)
    parser.add_argument("--d2", type=int, default=1)
    parser.add_argument("--max-r", type=int, default=8)
    args = parser.parse_args()

    f1 = parse_polynomial(f"x^{args.d1}")
    f2 = parse_polynomial(f"y^{args.d2}")
    rs = range(2, args.max_r + 1)
    print("d0\\r " + " ".join(f"{r:>2}" for r in rs))
    for d0 in range(1, args.max_r + 2):
        f0 = parse_polynomial(f"z^{d0}")
        row = []
        for r in rs:
            h = parse_polynomial(f"x^{r} + y^{r} + z^{r}")
            a = ideal_membership(f0, [f1, f2, h])
            b = linear_membership_oracle(f0, f1, f2, h)
            assert a == b, (d0, r)
            row.append("#" if a else ".")
        print(f"{d0:>4} " + " ".join(f"{c:>2}" for c in row))


if __name__ == "__main__":
    main()
