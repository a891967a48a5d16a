"""Degrees, regularized moments and reduced exponents of the Verlinde series."""

import argparse

from gradezeta import exponents, verlinde
from gradezeta.regularize import _reduced, regularized_invariants, verlinde_p1
from gradezeta.series import TruncSeries


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--genus", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--order", type=int, default=9, help="reduced exponents through this n")
    args = ap.parse_args()
    for g in args.genus:
        H = verlinde(g)
        inv = regularized_invariants(H, moments=2)
        P, _ = _reduced(H)
        red = exponents(TruncSeries(P.coeffs, args.order), args.order).as_ints()
        print(f"g={g} dim+1={inv.dim_plus_one} degree={inv.degree} closed form={verlinde_p1(g)} "
              f"z(-1)={inv.moment_one} z(-2)={inv.even_moments[1]} z(-4)={inv.even_moments[2]}")
        print(f"     reduced exponents {red}")


if __name__ == "__main__":
    main()
