"""Regularized sums of Euler-product exponents.

For H = P/(1-t)^(d+1) = prod (1 - t^n)^(-a_n) the divergent sums
"sum a_n", "sum log(n) a_n" and "sum n^k a_n" are assigned values through
the Dirichlet series z(s) = "sum a_n n^-s". Everything reduces to exact
rationals built from the Taylor coefficients q_m of

    Q(t) = e^-t P'(e^-t) / P(e^-t) = q_0 + q_1 t/1! + q_2 t^2/2! + ...

and Bernoulli numbers. Log-valued results are returned as their exact
exponentials (z'(0) = log P(1) is reported as the integer P(1)).

Sign convention: z(-1) = (d+1) - 2 P'(1)/P(1). With a = (3, -1) for the
conic (1+t)/(1-t)^2 the literal sum 3*1 - 1*2 = 1 fixes the minus sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .eulerprod import ExponentVector, exponents, product_expand
from .hilbert import HilbertSeries, check_star_condition, degree, expand
from .numtheory import bernoulli, zeta_odd_numeric
from .series import IntPoly, TruncSeries, compose_exponential, poly_derivative_at_one, ps_log

__all__ = [
    "MomentSeries",
    "QTaylor",
    "RegularizedInvariants",
    "degree_via_zprime",
    "eisenstein_anomaly",
    "eisenstein_value",
    "finite_exponent_certificate",
    "hurwitz_partial",
    "lambert_moments",
    "lambert_series",
    "lambert_z0",
    "moment_even",
    "moment_one",
    "moment_series",
    "odd_residue",
    "q_taylor",
    "reciprocal_check",
    "regularized_invariants",
    "verlinde_p1",
    "z_zero",
]


@dataclass(frozen=True)
class QTaylor:
    """q_0..q_m in the normalization Q(t) = sum q_k t^k / k!."""

    values: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def q_taylor(P: IntPoly, m: int) -> QTaylor:
    """q_0..q_m for Q(t) = -d/dt log P(e^-t)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    p1 = P(1)
    if p1 == 0:
        raise ValueError("P(1) = 0: condition (*) fails at t = 1")
    s = compose_exponential(P, -1, m + 1) * Fraction(1, p1)
    Q = -ps_log(s).derivative()
    q = tuple(c * math.factorial(k) for k, c in enumerate(Q.coeffs))
    _check_closed_forms(P, q)
    return QTaylor(q)


def _check_closed_forms(P: IntPoly, q: tuple[Fraction, ...]) -> None:
    p1 = P(1)
    r = [Fraction(poly_derivative_at_one(P, i), p1) for i in range(4)]
    expected = [r[1]]
    expected.append(-r[1] + r[1] ** 2 - r[2])
    expected.append(r[1] - 3 * r[1] ** 2 + 2 * r[1] ** 3 + 3 * (1 - r[1]) * r[2] + r[3])
    for k, (got, want) in enumerate(zip(q, expected)):
        if got != want:
            raise AssertionError(f"q_{k} = {got} disagrees with closed form {want}")


def _reduced(H: HilbertSeries) -> tuple[IntPoly, int]:
    P = H.reduced_numerator
    if not check_star_condition(P):
        raise ValueError(f"{P} has a root in [0, 1]; regularization is undefined")
    return P, H.pole_order


def z_zero(H: HilbertSeries) -> int:
    """z(0) = d + 1: the regularized "sum a_n" is the Krull dimension."""
    return _reduced(H)[1]


def degree_via_zprime(H: HilbertSeries) -> int:
    """exp(z'(0)) = P(1), the degree."""
    P, _ = _reduced(H)
    return P(1)


def moment_one(H: HilbertSeries) -> Fraction:
    """z(-1) = (d+1) - 2 P'(1)/P(1), the regularized "sum n a_n"."""
    P, pole = _reduced(H)
    return pole - Fraction(2 * poly_derivative_at_one(P, 1), P(1))


def moment_even(H: HilbertSeries, l: int) -> Fraction:
    """z(-2l) = (d+1) + 2l q_(2l-1) / b_2l, the regularized "sum n^2l a_n"."""
    if l < 1:
        raise ValueError("l must be >= 1")
    P, pole = _reduced(H)
    q = q_taylor(P, 2 * l - 1)
    return pole + 2 * l * q[2 * l - 1] / bernoulli(2 * l)


@dataclass(frozen=True)
class MomentSeries:
    """Moments read off -log P(e^t).

    ``degree`` is P(1); the constant term of -log P(e^t) is -log(degree).
    ``odd`` holds the t^(2l+1) coefficients (l >= 1), which equal
    -q_2l/(2l+1)! and sit where z has poles.
    """

    degree: int
    M1: Fraction
    even: dict[int, Fraction]
    odd: dict[int, Fraction] = field(default_factory=dict)


def moment_series(P: IntPoly, L: int) -> MomentSeries:
    """Expand -log P(e^t) through t^(2L) and extract M_1 and M_2l, l <= L."""
    p1 = P(1)
    if p1 <= 0:
        raise ValueError("P(1) must be positive")
    if P(0) != 1:
        raise ValueError("P(0) must be 1")
    order = max(2 * L, 1)
    s = compose_exponential(P, 1, order) * Fraction(1, p1)
    c = (-ps_log(s)).coeffs
    even = {l: c[2 * l] * 2 * l * math.factorial(2 * l) / bernoulli(2 * l) for l in range(1, L + 1)}
    odd = {l: c[2 * l + 1] for l in range(1, (order - 1) // 2 + 1)}
    return MomentSeries(p1, 2 * c[1], even, odd)


def odd_residue(H: HilbertSeries, l: int, precision: int = 12) -> float:
    """Residue of z at s = -2l-1: (-1)^l (2 pi)^2l q_2l / ((2l+1)! zeta(2l+1))."""
    if l < 1:
        raise ValueError("l must be >= 1")
    P, _ = _reduced(H)
    q2l = q_taylor(P, 2 * l)[2 * l]
    if q2l == 0:
        return 0.0
    num = (-1) ** l * (2 * math.pi) ** (2 * l) * float(q2l)
    return num / (math.factorial(2 * l + 1) * zeta_odd_numeric(2 * l + 1, precision))


def hurwitz_partial(p: int, N: int) -> float:
    """sum_{n=0}^N {(-log p + (2n+1) pi i)^-2 + (-log p - (2n+1) pi i)^-2}.

    Tends to -p/(p+1)^2, with error of order 1/N.
    """
    if p < 2 or N < 1:
        raise ValueError("need p >= 2 and N >= 1")
    lp = math.log(p)
    terms = []
    for n in range(N + 1):
        w = complex(-lp, (2 * n + 1) * math.pi)
        terms.append(2.0 * (w ** -2).real)
    return math.fsum(terms)


def eisenstein_value(p: int) -> Fraction:
    """Eisenstein-summed s = -1 value -2(p-1)/(p+1)."""
    if p < 2:
        raise ValueError("p must be >= 2")
    return Fraction(-2 * (p - 1), p + 1)


def eisenstein_anomaly(p: int) -> dict:
    """Both s = -1 values for P = 1 + p t; they differ (no reconciliation attempted)."""
    q0 = q_taylor(IntPoly([1, p]), 0)[0]
    eis = eisenstein_value(p)
    return {"eisenstein": eis, "minus_q0": -q0, "differ": eis != -q0}


def lambert_series(H: HilbertSeries, order: int) -> TruncSeries:
    """Taylor series at t = 0 of f(t) = sum a_n n t e^-nt/(1 - e^-nt).

    f(t) = -t d/dt log H(e^-t), computed from the stored presentation:
    each factor A(e^-t) is split as t^v * (unit) before taking logs.
    """
    total = TruncSeries([0], order)
    factors = [(H.numerator, 1)] + [(IntPoly([1] + [0] * (e - 1) + [-1]), -1) for e in H.denom_factors]
    for poly, sign in factors:
        s = compose_exponential(poly, -1, order + poly.degree + 1)
        v = s.valuation()
        if v is None:
            raise ValueError("factor vanishes to the computed order")
        unit = TruncSeries(s.coeffs[v:]).truncate(order)
        unit = unit * (1 / unit[0])
        # -t d/dt log(t^v u) = -v - t u'/u
        tail = ps_log(unit).derivative()
        piece = TruncSeries([-v] + list(-c for c in tail.coeffs), order)
        total = total + piece * sign
    return total


def lambert_z0(H: HilbertSeries) -> int:
    """f(0) of the Lambert series: the regularized "sum a_n" by the Lambert route."""
    value = lambert_series(H, 0)[0]
    if value.denominator != 1:
        raise AssertionError(f"Lambert limit {value} is not an integer")
    return int(value)


def lambert_moments(H: HilbertSeries, L: int) -> dict:
    """Moments from Lambert Taylor coefficients: f_k = B_k M_k / k!.

    Returns ``{"M1": ..., "even": {l: M_2l}}``; B_1 = -1/2.
    """
    f = lambert_series(H, max(2 * L, 1))
    even = {l: f[2 * l] * math.factorial(2 * l) / bernoulli(2 * l) for l in range(1, L + 1)}
    return {"M1": -2 * f[1], "even": even}


def verlinde_p1(g: int) -> Fraction:
    """P_g(1) = (-1)^g 2^(g-1) (3g-3)!/(2g-2)! b_(2g-2).

    The factor 2^(g-1) comes from the leading Hilbert-polynomial coefficient
    2 zeta(2g-2)/(2 pi^2)^(g-1); without it g = 4 would give 12 instead of 96.
    """
    if g < 2:
        raise ValueError("g must be >= 2")
    return ((-1) ** g * 2 ** (g - 1) * Fraction(math.factorial(3 * g - 3), math.factorial(2 * g - 2))
            * bernoulli(2 * g - 2))


def reciprocal_check(P: IntPoly) -> dict:
    """Palindromic test; for palindromic P, 2 P'(1)/P(1) equals deg P."""
    if P(0) != 1:
        raise ValueError("P(0) must be 1")
    ratio = Fraction(2 * poly_derivative_at_one(P, 1), P(1))
    pal = P.is_palindromic()
    if pal and ratio != P.degree:
        raise AssertionError(f"palindromic {P} has 2P'(1)/P(1) = {ratio} != {P.degree}")
    return {"is_reciprocal": pal, "ratio": ratio}


def finite_exponent_certificate(H: HilbertSeries, search: int = 64) -> ExponentVector | None:
    """Exponents of H when H is a finite product of (1 - t^k)^(+-1) factors.

    Candidate exponents come from Moebius inversion; they are accepted only if
    prod_{a_k < 0} (1 - t^k)^(-a_k) == P * prod_{a_k > 0} (1 - t^k)^(a_k)
    (with (d+1) folded into a_1) holds as an exact polynomial identity.
    """
    P = H.reduced_numerator
    a = list(exponents(P.to_series(search)).values)
    while a and a[-1] == 0:
        a.pop()
    if len(a) > search // 2:
        return None
    lhs, rhs = IntPoly([1]), P
    for k, ak in enumerate(a, 1):
        f = IntPoly([1] + [0] * (k - 1) + [-1])
        if ak < 0:
            lhs = lhs * f ** int(-ak)
        elif ak > 0:
            rhs = rhs * f ** int(ak)
    if lhs != rhs:
        return None
    a = a or [Fraction(0)]
    a[0] += H.pole_order
    vec = ExponentVector(tuple(a))
    if product_expand(vec, search) != expand(H, search):
        raise AssertionError("certified exponents do not reproduce the series")
    return vec


@dataclass(frozen=True)
class RegularizedInvariants:
    dim_plus_one: int
    degree: int
    moment_one: Fraction
    even_moments: dict[int, Fraction]
    odd_residues: dict[int, float]

    @property
    def dim(self) -> int:
        return self.dim_plus_one - 1

    def to_json(self) -> dict:
        out = {
            "dim": self.dim,
            "dim_plus_one": self.dim_plus_one,
            "degree": str(self.degree),
            "z_minus_1": str(self.moment_one),
        }
        for l, v in sorted(self.even_moments.items()):
            out[f"z_minus_{2 * l}"] = str(v)
        out["odd_residues"] = [{"l": l, "value": v} for l, v in sorted(self.odd_residues.items())]
        return out


def regularized_invariants(H: HilbertSeries, moments: int = 2, odd_residues: int = 0,
                           precision: int = 12) -> RegularizedInvariants:
    inv = RegularizedInvariants(
        dim_plus_one=z_zero(H),
        degree=degree_via_zprime(H),
        moment_one=moment_one(H),
        even_moments={l: moment_even(H, l) for l in range(1, moments + 1)},
        odd_residues={l: odd_residue(H, l, precision) for l in range(1, odd_residues + 1)},
    )
    if inv.degree != degree(H):
        raise AssertionError("exp z'(0) disagrees with P(1)")
    return inv
