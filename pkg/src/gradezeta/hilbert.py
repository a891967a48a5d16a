"""Hilbert series as factored rational functions.

A :class:`HilbertSeries` keeps the presentation it was built from,
``numerator / prod (1 - t^e)``, next to its canonical reduction
``P / (1 - t)^k`` with ``P(1) != 0``. Invariants (Krull dimension, degree,
e_i) are read off the canonical form, so two presentations of the same
rational function give identical answers.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .series import IntPoly, LaurentPoly, TruncSeries, laurent_series_mul, poly_derivative_at_one, ps_inverse

__all__ = [
    "EquivariantSeries",
    "HilbertSeries",
    "canonicalize",
    "check_star_condition",
    "degree",
    "expand",
    "from_complete_intersection",
    "hilbert_e",
    "parse_descriptor",
    "pure_spinor",
    "pure_spinor_unreduced",
    "sturm_root_count",
    "verlinde",
    "veronese",
    "veronese_q",
]

ONE_MINUS_T = IntPoly([1, -1])


def canonicalize(numerator: IntPoly, denom_factors: Sequence[int]) -> tuple[IntPoly, int]:
    """Reduce ``numerator / prod(1 - t^e)`` to ``(P, pole_order)``.

    Each factor 1 - t^e is (1 - t)(1 + t + ... + t^(e-1)); the cyclotomic
    parts must divide the numerator exactly, after which (1 - t) factors are
    cancelled until P(1) != 0.
    """
    if numerator.is_zero():
        raise ValueError("zero numerator")
    if any(e < 1 for e in denom_factors):
        raise ValueError(f"denominator exponents must be positive: {list(denom_factors)}")
    P = numerator
    for e in denom_factors:
        if e > 1:
            try:
                P = P.exact_div(IntPoly([1] * e))
            except ValueError:
                raise ValueError(
                    f"numerator {numerator} is not divisible by 1 + t + ... + t^{e - 1}; "
                    "the series is not of the form P/(1-t)^k"
                ) from None
    pole = len(denom_factors)
    while P(1) == 0:
        if pole == 0:
            raise ValueError(
                f"{numerator} / prod(1 - t^e) vanishes at t = 1; not a Hilbert series"
            )
        P = P.exact_div(ONE_MINUS_T)
        pole -= 1
    return P, pole


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / prod_{e in denom_factors} (1 - t^e), with H(0) = 1."""

    numerator: IntPoly
    denom_factors: tuple[int, ...]
    name: str = ""
    reduced_numerator: IntPoly = field(init=False, compare=False)
    pole_order: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "denom_factors", tuple(sorted(self.denom_factors)))
        if self.numerator.is_zero() or self.numerator.coeffs[0] != 1:
            raise ValueError("Hilbert series numerators must have constant term 1 (H(0) = 1)")
        P, pole = canonicalize(self.numerator, self.denom_factors)
        object.__setattr__(self, "reduced_numerator", P)
        object.__setattr__(self, "pole_order", pole)

    @classmethod
    def reduced(cls, P: IntPoly, pole_order: int, name: str = "") -> HilbertSeries:
        return cls(P, (1,) * pole_order, name)

    @property
    def krull_dim(self) -> int:
        return self.pole_order

    @property
    def projective_dim(self) -> int:
        return self.pole_order - 1

    def denominator(self) -> IntPoly:
        return IntPoly.from_roots_of_unity_factors(self.denom_factors)

    def same_function(self, other: HilbertSeries) -> bool:
        """Exact rational-function equality by cross multiplication."""
        return self.numerator * other.denominator() == other.numerator * self.denominator()

    def __str__(self) -> str:
        counts = Counter(self.denom_factors)
        den = "".join(
            f"(1-t^{e})" if k == 1 else f"(1-t^{e})^{k}" for e, k in sorted(counts.items())
        ).replace("t^1)", "t)")
        return f"({self.numerator})/{den or '1'}"


def from_complete_intersection(N: int, degrees: Sequence[int]) -> HilbertSeries:
    """prod (1 - t^d_l) / (1 - t)^(N+1) for a complete intersection in P^N."""
    degrees = list(degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("equation degrees must be >= 1")
    if len(degrees) > N + 1:
        raise ValueError(f"{len(degrees)} equations exceed N + 1 = {N + 1} variables")
    num = IntPoly.from_roots_of_unity_factors(degrees)
    label = ",".join(map(str, degrees))
    return HilbertSeries(num, (1,) * (N + 1), f"ci:N={N},d={label}")


def veronese(b: int) -> HilbertSeries:
    """(1 + b t)/(1 - t)^2, the homogeneous ring of the degree b+1 rational normal curve."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    return HilbertSeries(IntPoly([1, b]), (1, 1), f"veronese:{b}")


PURE_SPINOR_UNREDUCED = IntPoly([1, 0, -10, 16, 0, -16, 10, 0, -1])
PURE_SPINOR_FACTORED = IntPoly([1, 1]) * IntPoly([1, 4, 1])


def pure_spinor() -> HilbertSeries:
    """(1 + t)(1 + 4t + t^2)/(1 - t)^11, checked against the (1 - t)^16 form."""
    H = HilbertSeries(PURE_SPINOR_FACTORED, (1,) * 11, "purespinor")
    if not H.same_function(pure_spinor_unreduced()):
        raise AssertionError("the two pure spinor presentations disagree")
    return H


def pure_spinor_unreduced() -> HilbertSeries:
    """(1 - 10t^2 + 16t^3 - 16t^5 + 10t^6 - t^8)/(1 - t)^16."""
    return HilbertSeries(PURE_SPINOR_UNREDUCED, (1,) * 16, "purespinor:unreduced")


_VERLINDE = {
    2: (IntPoly([1]), (1,) * 4),
    3: (IntPoly([1, 0, 0, 0, -1]), (1,) * 8),
    4: (IntPoly([1, 6, 21, 40, 21, 6, 1]), (1,) * 10),
}


def verlinde(g: int) -> HilbertSeries:
    """Closed-form Hilbert series of the rank-2 moduli rings for g = 2, 3, 4."""
    if g not in _VERLINDE:
        raise ValueError(f"no closed form available for genus {g} (only 2, 3, 4)")
    num, den = _VERLINDE[g]
    return HilbertSeries(num, den, f"verlinde:{g}")


def expand(H: HilbertSeries, order: int) -> TruncSeries:
    """h_0, ..., h_order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    den = H.denominator().to_series(order)
    return H.numerator.to_series(order) * ps_inverse(den)


def degree(H: HilbertSeries) -> int:
    return H.reduced_numerator(1)


def hilbert_e(H: HilbertSeries, i: int) -> Fraction:
    """e_i = P^(i)(1)/i! of the reduced numerator."""
    P = H.reduced_numerator
    if not 0 <= i <= P.degree:
        raise ValueError(f"index {i} outside 0..{P.degree}")
    return Fraction(poly_derivative_at_one(P, i), math.factorial(i))


# Sturm sequences over Q

def _frac_poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(a):
        coef = a[-1] / b[-1]
        shift = len(a) - len(b)
        for j, c in enumerate(b):
            a[shift + j] -= coef * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _sturm_chain(P: IntPoly) -> list[list[Fraction]]:
    p0 = [Fraction(c) for c in P.coeffs]
    p1 = [Fraction(c) for c in P.derivative().coeffs]
    chain = [p0]
    if p1:
        chain.append(p1)
    while len(chain) > 1:
        r = _frac_poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = sum(c * x**k for k, c in enumerate(p))
        if v:
            signs.append(v > 0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_root_count(P: IntPoly, a, b) -> int:
    """Number of distinct real roots of P in the half-open interval (a, b]."""
    if P.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("need a < b")
    chain = _sturm_chain(P)
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def check_star_condition(P: IntPoly) -> bool:
    """True iff P has no real root in [0, 1]."""
    if P(0) == 0:
        return False
    return sturm_root_count(P, 0, 1) == 0


# Equivariant (sl2-character) series

@dataclass(frozen=True)
class EquivariantSeries:
    """t-series whose coefficients are q-characters (Laurent polynomials).

    ``closed_form`` optionally records ``(numerator_coeffs, denom_exps)`` with
    the series equal to ``sum_k numerator_coeffs[k] t^k / prod_a (1 - q^a t)``.
    """

    coefficients: tuple[LaurentPoly, ...]
    closed_form: tuple[tuple[LaurentPoly, ...], tuple[int, ...]] | None = None

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def specialize(self) -> TruncSeries:
        """q -> 1 in every coefficient."""
        return TruncSeries([c.at_one() for c in self.coefficients])


def _geometric_q(a: int, order: int) -> list[LaurentPoly]:
    return [LaurentPoly.monomial(a * n) for n in range(order + 1)]


def veronese_q(b: int, order: int) -> EquivariantSeries:
    """(1 + [b]_q t)/((1 - q^(b+1) t)(1 - q^-(b+1) t)) expanded through t^order."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    num = [LaurentPoly.constant(1), LaurentPoly.q_integer(b)]
    padded = (num + [LaurentPoly({})] * (order + 1))[: order + 1]
    coeffs = laurent_series_mul(padded, _geometric_q(b + 1, order), order)
    coeffs = laurent_series_mul(coeffs, _geometric_q(-(b + 1), order), order)
    return EquivariantSeries(tuple(coeffs), (tuple(num), (b + 1, -(b + 1))))


# Descriptors

_CI_RE = re.compile(r"ci:N=(\d+)(?:,d=([\d,]*))?")
_EXPLICIT_RE = re.compile(r"num=([-\d,\s]+);den=([\d^,\s]*)")


def parse_descriptor(text: str) -> HilbertSeries:
    """Resolve a series descriptor.

    Named fixtures: ``veronese:B``, ``purespinor``, ``purespinor:unreduced``,
    ``verlinde:G``, ``ci:N=3,d=2,2``. Explicit: ``num=1,6,21;den=1^10,4``
    where each den entry ``e^k`` stands for (1 - t^e)^k.
    """
    s = text.strip()
    if m := re.fullmatch(r"veronese:(\d+)", s):
        return veronese(int(m.group(1)))
    if s == "purespinor":
        return pure_spinor()
    if s == "purespinor:unreduced":
        return pure_spinor_unreduced()
    if m := re.fullmatch(r"verlinde:(\d+)", s):
        return verlinde(int(m.group(1)))
    if m := _CI_RE.fullmatch(s):
        degs = [int(x) for x in (m.group(2) or "").split(",") if x]
        return from_complete_intersection(int(m.group(1)), degs)
    if m := _EXPLICIT_RE.fullmatch(s):
        num = IntPoly(int(x) for x in m.group(1).split(","))
        den: list[int] = []
        for item in filter(None, (x.strip() for x in m.group(2).split(","))):
            e, _, k = item.partition("^")
            den.extend([int(e)] * int(k or 1))
        return HilbertSeries(num, tuple(den), s)
    raise ValueError(f"unrecognized series descriptor {text!r}")
