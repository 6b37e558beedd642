"""Search for ascending Furstenberg matrices with coinciding K-theory.

Equal (K0, K1) pairs do not decide whether the crossed products are
isomorphic; the output lists candidates only.
"""
import argparse
import json

from torus_ktheory.ktheory import search_ascending


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[3, 4])
    parser.add_argument("--k-max", type=int, default=6)
    parser.add_argument("--json", help="write all results to this file")
    args = parser.parse_args()

    results = []
    for n in args.n:
        res = search_ascending(n, args.k_max)
        results.append(res.to_json())
        print(f"n = {n}: {len(res.groups)} tuples, {len(res.collisions)} collision group(s)")
        for c in res.collisions:
            g0, g1 = res.groups[c[0]]
            print(f"  {', '.join(map(str, c))}")
            print(f"    K0 = {g0}   K1 = {g1}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2)


if __name__ == "__main__":
    main()
