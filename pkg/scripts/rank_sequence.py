"""Tabulate a_n with the DP methods and compare with the asymptotic estimate.

The matrix method is included up to --matrix-cap.  Use --bfile to write the
sequence in OEIS b-file form.
"""
import argparse
import time

from torus_ktheory.ranks import a_n, asymptotic_estimate, van_lint_integral, write_bfile


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=100)
    parser.add_argument("--matrix-cap", type=int, default=12)
    parser.add_argument("--bfile")
    args = parser.parse_args()

    pairs = []
    print(f"{'n':>4} {'a_n':>32} {'a_n/estimate':>13} {'matrix':>8}")
    for n in range(1, args.max_n + 1):
        values = {a_n(n, m).value for m in ("partition", "constant_term", "subset_sum")}
        if len(values) != 1:
            raise SystemExit(f"methods disagree at n={n}: {sorted(values)}")
        (v,) = values
        matrix = ""
        if n <= args.matrix_cap:
            start = time.perf_counter()
            mv = a_n(n, "matrix").value
            matrix = f"{'ok' if mv == v else 'DIFF'} {time.perf_counter() - start:.1f}s"
        print(f"{n:>4} {v:>32} {v / asymptotic_estimate(n):>13.6f} {matrix:>8}")
        pairs.append((n, v))

    print("\nvan Lint quadrature against a_(2n+1):")
    for n in range(1, 8):
        est = van_lint_integral(n)
        print(f"  n={n}  {est.value:.6f}  exact {a_n(2 * n + 1).value}  (+/- {est.error_estimate:.1e})")
    if args.bfile:
        write_bfile(args.bfile, pairs)


if __name__ == "__main__":
    main()
