"""Euler-product exponents by Moebius inversion.

Any series H with H(0) = 1 factors uniquely as prod_n (1 - t^n)^(-a_n).
Writing t H'/H = sum b_m t^m one has b_m = sum_{l | m} l a_l, which inverts
to m a_m = sum_{l | m} mu(m/l) b_l. The same inversion, twisted by
q -> q^d, handles series whose coefficients are q-characters.

Only factors with n <= N matter modulo t^(N+1): (1 - t^n)^k = 1 + O(t^n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import necklace_poly
from .hilbert import EquivariantSeries, expand, veronese
from .numtheory import divisors, mobius
from .series import LaurentPoly, TruncSeries

__all__ = [
    "ExponentVector",
    "NonIntegralExponent",
    "QExponentFamily",
    "cyclotomic_check",
    "equivariant_exponents",
    "equivariant_product",
    "exponents",
    "koszul_euler_check",
    "laurent_series_equal",
    "logderiv_coeffs",
    "multi_cyclotomic_exponents",
    "one_minus_ft",
    "product_expand",
    "q_cyclotomic_exponents",
    "q_product",
]


class NonIntegralExponent(ValueError):
    """Strict extraction met an exponent with denominator > 1."""


@dataclass(frozen=True)
class ExponentVector:
    """a_1, ..., a_N of H = prod (1 - t^n)^(-a_n)."""

    values: tuple[Fraction, ...]
    strict: bool = True

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.strict:
            for n, a in enumerate(vals, 1):
                if a.denominator != 1:
                    raise NonIntegralExponent(f"a_{n} = {a} is not an integer")

    @property
    def order(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        """a_n, 1-based."""
        if not 1 <= n <= len(self.values):
            raise IndexError(f"a_{n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def as_ints(self) -> list[int]:
        return [int(a) for a in self.values]

    def to_json(self, roundtrip_ok: bool | None = None) -> dict:
        out = {
            "exponents": [{"n": n, "a": str(a)} for n, a in enumerate(self.values, 1)],
            "strict": self.strict,
        }
        if roundtrip_ok is not None:
            out["roundtrip_ok"] = roundtrip_ok
        return out


def logderiv_coeffs(s: TruncSeries, order: int | None = None) -> list[Fraction]:
    """b_1..b_N with t s'/s = sum b_m t^m."""
    N = s.order if order is None else order
    if N > s.order:
        raise ValueError(f"series known to order {s.order}, asked for {N}")
    h = s.coeffs
    if h[0] != 1:
        raise ValueError("constant term must be 1")
    # t s' = s * B  =>  b_m = m h_m - sum_{k<m} b_k h_{m-k}
    b: list[Fraction] = [Fraction(0)]
    for m in range(1, N + 1):
        acc = m * h[m]
        for k in range(1, m):
            if b[k] and h[m - k]:
                acc -= b[k] * h[m - k]
        b.append(acc)
    return b[1:]


def exponents(s: TruncSeries, order: int | None = None, strict: bool = True) -> ExponentVector:
    """Exponents a_1..a_N with s = prod (1 - t^n)^(-a_n) mod t^(N+1)."""
    N = s.order if order is None else order
    b = logderiv_coeffs(s, N)
    a = []
    for m in range(1, N + 1):
        acc = sum((mobius(m // l) * b[l - 1] for l in divisors(m)), Fraction(0))
        a.append(acc / m)
    return ExponentVector(tuple(a), strict)


def _binomial_neg(a: Fraction, j: int) -> Fraction:
    """Coefficient of x^j in (1 - x)^(-a): a(a+1)...(a+j-1)/j!."""
    num = Fraction(1)
    for i in range(j):
        num *= a + i
    return num / math.factorial(j)


def product_expand(a: ExponentVector | Sequence, order: int | None = None) -> TruncSeries:
    """prod_{n <= N} (1 - t^n)^(-a_n) through t^N.

    A vector shorter than N is read as a finite product (missing a_n = 0).
    """
    vals = a.values if isinstance(a, ExponentVector) else tuple(Fraction(x) for x in a)
    N = len(vals) if order is None else order
    if N < 0:
        raise ValueError("order must be nonnegative")
    vals = vals + (Fraction(0),) * (N - len(vals))
    out = [Fraction(1)] + [Fraction(0)] * N
    for n in range(1, N + 1):
        an = vals[n - 1]
        if not an:
            continue
        factor = [_binomial_neg(an, j) for j in range(N // n + 1)]
        new = [Fraction(0)] * (N + 1)
        for i, c in enumerate(out):
            if not c:
                continue
            for j, f in enumerate(factor):
                k = i + j * n
                if k > N:
                    break
                if f:
                    new[k] += c * f
        out = new
    return TruncSeries(out)


def _necklace_values(x, N: int) -> list:
    return [necklace_poly(n, x) for n in range(1, N + 1)]


def cyclotomic_check(b: int, order: int) -> bool:
    """prod_{n <= N} (1 - t^n)^(M_n(b)) == 1 - b t mod t^(N+1)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    M = _necklace_values(Fraction(b), order)
    lhs = product_expand([-m for m in M], order)
    return lhs == TruncSeries([1, -b], order)


def koszul_euler_check(b: int, order: int) -> bool:
    """(1-t)^-2 prod (1-t^n)^(M_n(-b)) == (1 + b t)/(1 - t)^2 through t^N."""
    if order < 1:
        raise ValueError("order must be >= 1")
    M = _necklace_values(Fraction(-b), order)
    a = [-m for m in M]
    a[0] += 2
    return product_expand(a, order) == expand(veronese(b), order)


# q-analogues

@dataclass(frozen=True)
class QExponentFamily:
    """per_n[n-1] = sum_i a_{i,n} q^i (integer Laurent coefficients)."""

    per_n: tuple[LaurentPoly, ...]

    @property
    def order(self) -> int:
        return len(self.per_n)

    def __getitem__(self, n: int) -> LaurentPoly:
        if not 1 <= n <= len(self.per_n):
            raise IndexError(f"M_{n} outside 1..{len(self.per_n)}")
        return self.per_n[n - 1]

    def specialize(self) -> list[int]:
        return [m.at_one() for m in self.per_n]

    def to_json(self) -> dict:
        return {"exponents": [{"n": n, "terms": m.to_json()} for n, m in enumerate(self.per_n, 1)]}


def q_cyclotomic_exponents(f: LaurentPoly, order: int) -> QExponentFamily:
    """M_n(f; q) = (1/n) sum_{d | n} mu(d) f(q^d)^(n/d) for n = 1..N."""
    if f.nvars != 1:
        raise ValueError("use multi_cyclotomic_exponents for several variables")
    return _cyclotomic_family(f, order)


def multi_cyclotomic_exponents(f: LaurentPoly, order: int) -> QExponentFamily:
    """Several-variable version: f(q_1^d, ..., q_p^d) inside the Moebius sum."""
    return _cyclotomic_family(f, order)


def _cyclotomic_family(f: LaurentPoly, order: int) -> QExponentFamily:
    if f.is_zero():
        raise ValueError("f must be nonzero")
    try:
        return QExponentFamily(tuple(necklace_poly(n, f) for n in range(1, order + 1)))
    except ArithmeticError as exc:  # divisibility is a theorem; reaching here is a bug
        raise AssertionError(f"non-integral necklace coefficient: {exc}") from exc


def q_product(family: QExponentFamily, order: int, sign: int = 1) -> list[LaurentPoly]:
    """prod_{n, i} (1 - q^i t^n)^(sign * a_{i,n}) through t^order."""
    if order > family.order:
        raise ValueError(f"family only known through n = {family.order}")
    variables = family.per_n[0].variables
    # plain dicts exps -> int per t-degree; LaurentPoly objects only at the end
    out: list[dict] = [{(0,) * len(variables): 1}] + [{} for _ in range(order)]
    for n in range(1, order + 1):
        for exps, a in family[n].terms.items():
            _mul_monomial_factor(out, exps, n, sign * a, order)
    return [LaurentPoly(d, variables) for d in out]


def _mul_monomial_factor(series: list[dict], exps: tuple[int, ...], n: int, e: int,
                         order: int) -> None:
    """series *= (1 - q^exps t^n)^e in place."""
    terms = []
    for j in range(1, order // n + 1):
        c = math.comb(e, j) * (-1) ** j if e >= 0 else math.comb(-e + j - 1, j)
        if c:
            terms.append((j * n, tuple(j * x for x in exps), c))
    if not terms:
        return
    for i in range(order, -1, -1):
        # new[i] = sum_j c_j q^(j exps) old[i - j n]; descending i keeps old[i - jn] intact
        acc = series[i]
        for shift, mono, c in terms:
            if shift > i:
                break
            src = series[i - shift]
            for k, v in src.items():
                key = tuple(a + b for a, b in zip(k, mono))
                w = acc.get(key, 0) + c * v
                if w:
                    acc[key] = w
                else:
                    acc.pop(key, None)


def equivariant_exponents(s: EquivariantSeries, order: int | None = None) -> QExponentFamily:
    """Character-valued exponents with s = prod_{n,i} (1 - q^i t^n)^(-a_{i,n}).

    b_m(q) from t s'/s, then n a_n(q) = sum_{d | n} mu(d) b_{n/d}(q^d).
    """
    N = s.order if order is None else order
    if N > s.order:
        raise ValueError(f"series known to order {s.order}, asked for {N}")
    h = s.coefficients
    if h[0] != 1:
        raise ValueError("coefficient of t^0 must be 1")
    variables = h[0].variables
    b: list[LaurentPoly] = [LaurentPoly({}, variables)]
    for m in range(1, N + 1):
        acc = h[m] * m
        for k in range(1, m):
            if not b[k].is_zero() and not h[m - k].is_zero():
                acc = acc - b[k] * h[m - k]
        b.append(acc)
    bound = b[1].support_radius() if N >= 1 else 0
    out = []
    for n in range(1, N + 1):
        acc = LaurentPoly({}, variables)
        for d in divisors(n):
            mu = mobius(d)
            if mu:
                acc = acc + b[n // d].adams(d) * mu
        if acc.support_radius() > n * bound:
            raise ValueError(
                f"exponent support at n = {n} exceeds {n} * {bound}; "
                "the series is not generated in degree 1"
            )
        try:
            out.append(acc.exact_div(n))
        except ArithmeticError as exc:
            raise NonIntegralExponent(f"n = {n}: {exc}") from None
    return QExponentFamily(tuple(out))


def equivariant_product(family: QExponentFamily, order: int) -> list[LaurentPoly]:
    """prod_{n,i} (1 - q^i t^n)^(-a_{i,n}) through t^order."""
    return q_product(family, order, sign=-1)


def one_minus_ft(f: LaurentPoly, order: int) -> list[LaurentPoly]:
    zero = LaurentPoly({}, f.variables)
    out = [LaurentPoly.constant(1, f.variables), -f] + [zero] * order
    return out[: order + 1]


def laurent_series_equal(a: Sequence[LaurentPoly], b: Sequence[LaurentPoly]) -> bool:
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))

