"""Command-line front end.

Every subcommand computes a JSON-able payload once; ``--json`` prints it
compactly, otherwise it is rendered as a plain table. Exit codes: 0 success,
1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import combinat, eulerprod, fixtures, hilbert, regularize
from .series import LaurentPoly

SCHEMA_VERSION = 1
DEFAULT_ORDER = 30
MAX_ORDER = 2000

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _q(x) -> str:
    """Rationals as "p/q", bare integers when q = 1."""
    return str(Fraction(x))


def _order(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {value!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("order must be nonnegative")
    if n > MAX_ORDER:
        raise argparse.ArgumentTypeError(
            f"order {n} exceeds {MAX_ORDER}; exact arithmetic is O(N^2) per product, "
            "split the computation or raise MAX_ORDER deliberately"
        )
    return n


def _series(text: str) -> hilbert.HilbertSeries:
    try:
        return hilbert.parse_descriptor(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _table(rows: list[Sequence[Any]], header: Sequence[str]) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines)


# subcommands: each returns (payload, text, exit code)

def cmd_expand(args) -> tuple[dict, str, int]:
    H = _series(args.series)
    s = hilbert.expand(H, args.order)
    payload = {"order": args.order, "coeffs": [_q(c) for c in s.coeffs]}
    text = f"{H}\n" + _table([(n, c) for n, c in enumerate(payload["coeffs"])], ("n", "h_n"))
    return payload, text, EXIT_OK


def cmd_exponents(args) -> tuple[dict, str, int]:
    H = _series(args.series)
    src = H.reduced_numerator.to_series(args.order) if args.reduced else hilbert.expand(H, args.order)
    try:
        vec = eulerprod.exponents(src, args.order, strict=not args.lenient)
    except eulerprod.NonIntegralExponent as exc:
        raise UsageError(f"{exc} (pass --lenient to allow rational exponents)") from None
    ok = eulerprod.product_expand(vec, args.order) == src
    payload = vec.to_json(roundtrip_ok=ok)
    rows = [(e["n"], e["a"]) for e in payload["exponents"]]
    text = _table(rows, ("n", "a_n")) + f"\nroundtrip: {'ok' if ok else 'FAILED'}"
    return payload, text, EXIT_OK if ok else EXIT_MISMATCH


def cmd_regularize(args) -> tuple[dict, str, int]:
    H = _series(args.series)
    if not hilbert.check_star_condition(H.reduced_numerator):
        raise UsageError(f"{H.reduced_numerator} has a root in [0, 1]; regularization is undefined")
    inv = regularize.regularized_invariants(H, args.moments, args.odd_residues, args.precision)
    payload = inv.to_json()
    rows = [(k, v) for k, v in payload.items() if k != "odd_residues"]
    rows += [(f"residue s=-{2 * r['l'] + 1}", f"{r['value']:.{args.precision}g}") for r in payload["odd_residues"]]
    return payload, _table(rows, ("invariant", "value")), EXIT_OK


def cmd_necklace(args) -> tuple[dict, str, int]:
    n, b = args.n, args.colors
    value = combinat.necklace_poly(n, b) if args.primitive else combinat.phi_poly(n, b)
    payload: dict[str, Any] = {"n": n, "colors": b, "primitive": args.primitive, "value": _q(value)}
    code = EXIT_OK
    if args.brute_force:
        try:
            oracle = (combinat.brute_primitive_necklaces if args.primitive else combinat.brute_necklaces)(n, b)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        payload["oracle"] = str(oracle)
        payload["agree"] = oracle == value
        code = EXIT_OK if payload["agree"] else EXIT_MISMATCH
    label = "M" if args.primitive else "Phi"
    text = f"{label}_{n}({b}) = {payload['value']}"
    if "oracle" in payload:
        text += f"\nbrute force: {payload['oracle']} ({'agree' if payload['agree'] else 'DISAGREE'})"
    return payload, text, code


def cmd_witt(args) -> tuple[dict, str, int]:
    rows, code = [], EXIT_OK
    for n in range(1, args.max_degree + 1):
        row: dict[str, Any] = {"n": n, "dim": str(combinat.super_witt_dim(args.b, args.odd, n))}
        if args.brute_force:
            if args.odd:
                raise UsageError("--brute-force counts Lyndon words and needs --odd 0")
            try:
                count = combinat.count_lyndon_words(n, args.b)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            row["lyndon"] = str(count)
            row["agree"] = str(count) == row["dim"]
            if not row["agree"]:
                code = EXIT_MISMATCH
        rows.append(row)
    payload = {"even": args.b, "odd": args.odd, "dims": rows}
    header = list(rows[0]) if rows else ["n", "dim"]
    return payload, _table([[r[k] for k in header] for r in rows], header), code


def cmd_gauss(args) -> tuple[dict, str, int]:
    try:
        rows, code = [], EXIT_OK
        for d in range(1, args.max_degree + 1):
            row: dict[str, Any] = {"d": d, "count": str(combinat.count_irreducible(args.p, d))}
            if args.brute_force:
                brute = combinat.brute_irreducible(args.p, d)
                row["brute"] = str(brute)
                row["agree"] = row["brute"] == row["count"]
                if not row["agree"]:
                    code = EXIT_MISMATCH
            rows.append(row)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"p": args.p, "degrees": rows}
    header = list(rows[0]) if rows else ["d", "count"]
    return payload, _table([[r[k] for k in header] for r in rows], header), code


def cmd_cyclotomic(args) -> tuple[dict, str, int]:
    if args.f is None:
        ok = eulerprod.cyclotomic_check(args.b, args.order)
        payload = {"b": args.b, "order": args.order, "identity_ok": ok}
        text = f"prod (1-t^n)^M_n({args.b}) == 1 - {args.b}t mod t^{args.order + 1}: {ok}"
        return payload, text, EXIT_OK if ok else EXIT_MISMATCH
    try:
        f = LaurentPoly.parse(args.f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fam = eulerprod.multi_cyclotomic_exponents(f, args.order)
    ok = eulerprod.laurent_series_equal(eulerprod.q_product(fam, args.order), eulerprod.one_minus_ft(f, args.order))
    payload = {"f": str(f), "variables": list(f.variables), "order": args.order, **fam.to_json(), "identity_ok": ok}
    rows = [(n, fam[n]) for n in range(1, args.order + 1)]
    text = _table(rows, ("n", "M_n(f)")) + f"\nidentity: {ok}"
    return payload, text, EXIT_OK if ok else EXIT_MISMATCH


def cmd_equivariant(args) -> tuple[dict, str, int]:
    s = hilbert.veronese_q(args.b, args.order)
    fam = eulerprod.equivariant_exponents(s)
    ok = eulerprod.laurent_series_equal(eulerprod.equivariant_product(fam, args.order), list(s.coefficients))
    plain = eulerprod.exponents(hilbert.expand(hilbert.veronese(args.b), args.order)).as_ints()
    spec_ok = fam.specialize() == plain
    payload = {"b": args.b, "order": args.order, **fam.to_json(), "roundtrip_ok": ok, "specializes_ok": spec_ok}
    rows = [(n, fam[n], plain[n - 1]) for n in range(1, args.order + 1)]
    text = _table(rows, ("n", "a_n(q)", "a_n(1)")) + f"\nroundtrip: {ok}, q=1 specialization: {spec_ok}"
    return payload, text, EXIT_OK if ok and spec_ok else EXIT_MISMATCH


def cmd_verify(args) -> tuple[dict, str, int]:
    try:
        records = fixtures.load_fixtures(args.fixtures)
    except (fixtures.FixtureError, OSError) as exc:
        raise UsageError(str(exc)) from None
    if not args.all:
        wanted = set(args.id)
        unknown = wanted - {r.id for r in records}
        if unknown:
            raise UsageError(f"unknown fixture id(s): {', '.join(sorted(unknown))}")
        records = [r for r in records if r.id in wanted]
    try:
        reports = fixtures.verify_all(records)
    except fixtures.FixtureError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.ok for r in reports)
    payload = {"ok": ok, "fixtures": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.id}")
        for m in r.mismatches():
            lines.append(f"      {m.key}: expected {m.expected}, got {m.actual}")
    lines.append(f"{sum(r.ok for r in reports)}/{len(reports)} fixtures pass")
    return payload, "\n".join(lines), EXIT_OK if ok else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gradezeta", description="Euler-product exponents and regularized invariants of Hilbert series.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, description=help)
        sp.add_argument("--json", action="store_true", help="compact machine-readable output")
        sp.set_defaults(func=func)
        return sp

    series_help = ("veronese:B, purespinor, purespinor:unreduced, verlinde:G, ci:N=3,d=2,2, "
                   "or num=1,6,21;den=1^10,4 (each e^k is (1-t^e)^k)")

    sp = add("expand", cmd_expand, "Taylor coefficients h_0..h_N of a Hilbert series")
    sp.add_argument("--series", required=True, help=series_help)
    sp.add_argument("--order", type=_order, default=DEFAULT_ORDER)

    sp = add("exponents", cmd_exponents, "exponents a_n with H = prod (1 - t^n)^(-a_n)")
    sp.add_argument("--series", required=True, help=series_help)
    sp.add_argument("--order", type=_order, default=DEFAULT_ORDER)
    sp.add_argument("--reduced", action="store_true", help="use the reduced numerator P instead of H")
    sp.add_argument("--lenient", action="store_true", help="allow non-integral exponents")

    sp = add("regularize", cmd_regularize, "z(0), degree, z(-1), z(-2l) and odd residues")
    sp.add_argument("--series", required=True, help=series_help)
    sp.add_argument("--moments", type=int, default=2, help="even moments z(-2l) for l = 1..L")
    sp.add_argument("--odd-residues", type=int, default=0, help="residues at s = -2l-1 for l = 1..L")
    sp.add_argument("--precision", type=int, default=12, help="significant digits for floats (max 15)")

    sp = add("necklace", cmd_necklace, "necklace counts Phi_n(b), or M_n(b) with --primitive")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--colors", type=int, required=True)
    sp.add_argument("--primitive", action="store_true")
    sp.add_argument("--brute-force", action="store_true", help="compare with orbit enumeration")

    sp = add("witt", cmd_witt, "graded dimensions of a free Lie (super)algebra")
    sp.add_argument("--b", type=int, required=True, help="even generators")
    sp.add_argument("--odd", type=int, default=0, help="odd generators")
    sp.add_argument("--max-degree", type=int, default=10)
    sp.add_argument("--brute-force", action="store_true", help="compare with Lyndon word counts")

    sp = add("gauss", cmd_gauss, "monic irreducible polynomials over F_p by degree")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-degree", type=int, default=8)
    sp.add_argument("--brute-force", action="store_true", help="compare with sieving")

    sp = add("cyclotomic", cmd_cyclotomic, "check 1 - f t = prod (1 - t^n)^M_n(f)")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--b", type=int, help="integer f = b")
    g.add_argument("--f", help="Laurent polynomial f, e.g. 'q + q^-1' or 'q1 + q2'")
    sp.add_argument("--order", type=_order, default=DEFAULT_ORDER)

    sp = add("equivariant", cmd_equivariant, "q-character exponents of the Veronese ring A_b")
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--order", type=_order, default=10)

    sp = add("verify", cmd_verify, "recompute the fixture corpus")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--id", action="append", help="fixture id (repeatable)")
    sp.add_argument("--fixtures", help=f"fixture directory (default: ${fixtures.ENV_VAR} or the bundled corpus)")
    return p


def _validate(args) -> None:
    for name, lo, hi in (("moments", 0, 50), ("odd_residues", 0, 20), ("precision", 1, 15),
                         ("max_degree", 0, 64), ("n", 1, None)):
        v = getattr(args, name, None)
        if v is None:
            continue
        if v < lo or (hi is not None and v > hi):
            bound = f">= {lo}" if hi is None else f"in {lo}..{hi}"
            raise UsageError(f"--{name.replace('_', '-')} must be {bound}")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
        _validate(args)
        payload, text, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if args.json:
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command, **payload}
        out.write(json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
