"""Recompute K0 and K1 of the Anzai crossed products for n = 1..max_n.

Prints a per-row comparison with the stored table and the time per row.
Optionally writes the computed reports as JSON lines.
"""
import argparse
import json
import time

from torus_ktheory.ktheory import anzai_matrix, k_groups
from torus_ktheory.table1 import TABLE1


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--out", help="write JSON lines here")
    args = parser.parse_args()

    sink = open(args.out, "w") if args.out else None
    mismatches = 0
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        rep = k_groups(anzai_matrix(n))
        elapsed = time.perf_counter() - start
        expected = TABLE1.get(n)
        status = "-"
        if expected is not None:
            good = (rep.k0, rep.k1) == expected
            mismatches += not good
            status = "match" if good else "MISMATCH"
        print(f"n={n:>2}  {elapsed:7.2f}s  {status:8}  K0 = {rep.k0}")
        print(f"{'':24}K1 = {rep.k1}")
        if expected is not None and status == "MISMATCH":
            print(f"{'':14}stored K0 = {expected[0]}")
            print(f"{'':14}stored K1 = {expected[1]}")
        if sink:
            sink.write(json.dumps(rep.to_json()) + "\n")
    if sink:
        sink.close()
    print(f"{mismatches} mismatching row(s)")


if __name__ == "__main__":
    main()
