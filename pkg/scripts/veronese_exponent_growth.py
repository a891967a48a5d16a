"""Print |a_n| and successive ratios for the Veronese rings."""

import argparse

from gradezeta import exponents, expand, veronese


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--order", type=int, default=40)
    args = ap.parse_args()
    for b in args.b:
        a = exponents(expand(veronese(b), args.order), args.order).as_ints()
        print(f"# veronese b={b}")
        print(f"{'n':>4} {'a_n':>24} {'|a_n/a_(n-1)|':>14}")
        for n, x in enumerate(a, 1):
            prev = a[n - 2] if n > 1 else 0
            ratio = f"{abs(x / prev):14.6f}" if prev else f"{'':>14}"
            print(f"{n:>4} {x:>24} {ratio}")


if __name__ == "__main__":
    main()
