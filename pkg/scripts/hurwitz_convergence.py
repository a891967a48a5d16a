"""Partial sums of the Hurwitz-type series against the limit -p/(p+1)^2 as N grows."""

import argparse
from fractions import Fraction

from gradezeta.regularize import eisenstein_anomaly, hurwitz_partial


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-exp", type=int, default=6, help="largest N is 10**max_exp")
    args = ap.parse_args()
    for p in args.p:
        limit = float(Fraction(-p, (p + 1) ** 2))
        anomaly = eisenstein_anomaly(p)
        print(f"# p={p}  limit {limit:.8f}  (s = -1: Eisenstein {anomaly['eisenstein']}, "
              f"-q0 {anomaly['minus_q0']})")
        print(f"{'N':>9} {'partial':>14} {'error':>12} {'N*error':>10}")
        for k in range(1, args.max_exp + 1):
            N = 10 ** k
            v = hurwitz_partial(p, N)
            print(f"{N:>9} {v:14.9f} {v - limit:12.3e} {N * (v - limit):10.5f}")


if __name__ == "__main__":
    main()
