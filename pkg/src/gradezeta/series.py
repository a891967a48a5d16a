"""Truncated power series, integer polynomials and Laurent polynomials.

Everything here is exact. A :class:`TruncSeries` knows its truncation order
and arithmetic between series of different orders truncates to the smaller
one, so no result ever claims a coefficient its inputs did not determine.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "IntPoly",
    "LaurentPoly",
    "TruncSeries",
    "compose_exponential",
    "laurent_series_mul",
    "poly_derivative_at_one",
    "ps_exp",
    "ps_inverse",
    "ps_log",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact series")
    return Fraction(x)


@dataclass(frozen=True)
class TruncSeries:
    """c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls([1], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def __add__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        return TruncSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __neg__(self) -> TruncSeries:
        return TruncSeries(-c for c in self.coeffs)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def __mul__(self, other) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            k = _frac(other)
            return TruncSeries(k * c for c in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncSeries(out)

    __rmul__ = __mul__

    def derivative(self) -> TruncSeries:
        """Formal derivative; the order drops by one (order 0 gives [0])."""
        if self.order == 0:
            return TruncSeries([0])
        return TruncSeries(i * c for i, c in enumerate(self.coeffs) if i)

    def integral(self) -> TruncSeries:
        """Antiderivative with zero constant term; order rises by one."""
        return TruncSeries([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> TruncSeries:
        return cls([Fraction(c) for c in obj["coeffs"]], obj["order"])

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncSeries([{body}], order={self.order})"


def ps_inverse(s: TruncSeries) -> TruncSeries:
    """1/s up to the order of s."""
    c = s.coeffs
    if c[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv0 = 1 / c[0]
    u = [inv0]
    for n in range(1, s.order + 1):
        acc = sum((c[k] * u[n - k] for k in range(1, n + 1) if c[k]), Fraction(0))
        u.append(-acc * inv0)
    return TruncSeries(u)


def ps_log(s: TruncSeries) -> TruncSeries:
    """log s for s with constant term 1, as the integral of s'/s."""
    if s.coeffs[0] != 1:
        raise ValueError("ps_log needs constant term 1")
    if s.order == 0:
        return TruncSeries([0])
    # L' * s = s', solved coefficient by coefficient: n*l_n = n*c_n - sum k*l_k*c_{n-k}
    c = s.coeffs
    l = [Fraction(0)] * (s.order + 1)
    for n in range(1, s.order + 1):
        acc = n * c[n]
        for k in range(1, n):
            if l[k] and c[n - k]:
                acc -= k * l[k] * c[n - k]
        l[n] = acc / n
    return TruncSeries(l)


def ps_exp(s: TruncSeries) -> TruncSeries:
    """exp s for s with constant term 0, via E' = s' E."""
    if s.coeffs[0] != 0:
        raise ValueError("ps_exp needs constant term 0")
    c = s.coeffs
    e = [Fraction(1)] + [Fraction(0)] * s.order
    for n in range(1, s.order + 1):
        acc = sum((k * c[k] * e[n - k] for k in range(1, n + 1) if c[k]), Fraction(0))
        e[n] = acc / n
    return TruncSeries(e)


class IntPoly:
    """Polynomial with integer coefficients, index = degree.

    Stored trimmed: the highest coefficient is nonzero unless the polynomial
    is zero, in which case ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integral coefficient {c}")
                c = c.numerator
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficient expected, got {c!r}")
            cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def from_roots_of_unity_factors(cls, exps: Iterable[int]) -> IntPoly:
        """prod (1 - t^e) over ``exps``."""
        out = cls([1])
        for e in exps:
            out = out * cls([1] + [0] * (e - 1) + [-1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, i: int = 1) -> IntPoly:
        cs = list(self.coeffs)
        for _ in range(i):
            cs = [k * c for k, c in enumerate(cs)][1:]
        return IntPoly(cs)

    def divmod(self, other: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
        """Rational long division; returns (quotient, remainder) coefficient lists."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.coeffs[-1]
        for k in range(len(q) - 1, -1, -1):
            coef = rem[k + other.degree] / lead
            q[k] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= coef * b
        rem = rem[: other.degree] if other.degree > 0 else []
        while rem and rem[-1] == 0:
            rem.pop()
        return q, rem

    def exact_div(self, other: IntPoly) -> IntPoly:
        """Quotient self/other, raising ValueError unless it divides exactly over Z."""
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        if any(c.denominator != 1 for c in q):
            raise ValueError(f"{self} / {other} has non-integral coefficients")
        return IntPoly(c.numerator for c in q)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_series(self, order: int) -> TruncSeries:
        return TruncSeries(self.coeffs or (0,), order)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def compose_exponential(P: IntPoly, sign: int, order: int) -> TruncSeries:
    """Series of P(e^(sign*t)) in t through t^order.

    The monomial c_k x^k contributes c_k * sum_j (sign*k)^j t^j / j!.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = [Fraction(0)] * (order + 1)
    for k, c in enumerate(P.coeffs):
        if not c:
            continue
        step = sign * k
        power = 1
        for j in range(order + 1):
            out[j] += Fraction(c * power, math.factorial(j))
            power *= step
    return TruncSeries(out)


def poly_derivative_at_one(P: IntPoly, i: int) -> int:
    """P^(i)(1) exactly: sum_k c_k * k!/(k-i)!."""
    if i < 0:
        raise ValueError("derivative order must be nonnegative")
    return sum(c * math.perm(k, i) for k, c in enumerate(P.coeffs) if k >= i)


class LaurentPoly:
    """Integer Laurent polynomial in one or more named variables.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero ints.
    A single-variable polynomial is just the p = 1 case.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None,
                 variables: Sequence[str] = ("q",)):
        variables = tuple(variables)
        if not variables:
            raise ValueError("at least one variable is required")
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            if isinstance(exps, int):
                exps = (exps,)
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent vector {exps} does not match {variables}")
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integral coefficient {c}")
                c = c.numerator
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if clean[exps] == 0:
                    del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # constructors
    @classmethod
    def constant(cls, c: int, variables: Sequence[str] = ("q",)) -> LaurentPoly:
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def monomial(cls, exps, c: int = 1, variables: Sequence[str] = ("q",)) -> LaurentPoly:
        if isinstance(exps, int):
            exps = (exps,)
        return cls({tuple(exps): c}, variables)

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int], var: str = "q") -> LaurentPoly:
        """Single-variable shorthand: ``{exponent: coefficient}``."""
        return cls({(e,): c for e, c in coeffs.items()}, (var,))

    @classmethod
    def q_integer(cls, n: int, var: str = "q") -> LaurentPoly:
        """[n]_q = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
        if n < 0:
            return -cls.q_integer(-n, var)
        return cls({(n - 1 - 2 * k,): 1 for k in range(n)}, (var,))

    @classmethod
    def parse(cls, text: str, variables: Sequence[str] | None = None) -> LaurentPoly:
        """Parse strings such as ``"q^2 + 1 + q^-2"``, ``"-q"`` or ``"2*q1*q2^-1 - q2"``."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty Laurent polynomial")
        pieces = [p for p in re.split(r"(?<!\^)(?=[+-])", src) if p]
        parsed: list[tuple[int, dict[str, int]]] = []
        names: list[str] = []
        for piece in pieces:
            sign = -1 if piece.startswith("-") else 1
            body = piece.lstrip("+-")
            coef = 1
            powers: dict[str, int] = {}
            for factor in body.split("*"):
                if not factor:
                    raise ValueError(f"cannot parse term {piece!r}")
                m = re.fullmatch(r"(\d+)", factor)
                if m:
                    coef *= int(factor)
                    continue
                m = re.fullmatch(r"([A-Za-z_]\w*)(?:\^(-?\d+))?", factor)
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r}")
                name, exp = m.group(1), int(m.group(2) or 1)
                powers[name] = powers.get(name, 0) + exp
                if name not in names:
                    names.append(name)
            parsed.append((sign * coef, powers))
        if variables is None:
            variables = tuple(sorted(names)) or ("q",)
        variables = tuple(variables)
        unknown = set(names) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        terms: dict[tuple[int, ...], int] = {}
        for c, powers in parsed:
            exps = tuple(powers.get(v, 0) for v in variables)
            terms[exps] = terms.get(exps, 0) + c
        return cls(terms, variables)

    # structure
    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def _zero_exps(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        if isinstance(other, Fraction) and other.denominator == 1:
            other = other.numerator
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variables)
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.variables)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                if abs(c) == 1:
                    return LaurentPoly({tuple(-x * -k for x in e): c ** (-k)}, self.variables)
            raise ValueError("only unit monomials have Laurent inverses")
        result = LaurentPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Sequence[int], c: int = 1) -> LaurentPoly:
        """Multiply by the monomial c * q^exps."""
        exps = tuple(exps)
        return LaurentPoly({tuple(a + b for a, b in zip(e, exps)): c * v
                            for e, v in self.terms.items()}, self.variables)

    def adams(self, d: int) -> LaurentPoly:
        """f(q_1^d, ..., q_p^d)."""
        return LaurentPoly({tuple(d * x for x in e): c for e, c in self.terms.items()},
                           self.variables)

    def exact_div(self, n: int) -> LaurentPoly:
        bad = [c for c in self.terms.values() if c % n]
        if bad:
            raise ArithmeticError(f"coefficients {bad[:3]} not divisible by {n}")
        return LaurentPoly({e: c // n for e, c in self.terms.items()}, self.variables)

    def at_one(self) -> int:
        """Specialize every variable to 1."""
        return sum(self.terms.values())

    def evaluate(self, values: Sequence) -> Fraction:
        acc = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, x in zip(values, e):
                term *= Fraction(v) ** x
            acc += term
        return acc

    def coefficient(self, exps) -> int:
        if isinstance(exps, int):
            exps = (exps,)
        return self.terms.get(tuple(exps), 0)

    def support_radius(self) -> int:
        """max |exponent| over all variables and terms (0 for the zero polynomial)."""
        return max((abs(x) for e in self.terms for x in e), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(-x for x in kv[0]))

    def to_json(self) -> list[dict]:
        if self.nvars == 1:
            return [{"i": e[0], "c": str(c)} for e, c in self.sorted_terms()]
        return [{"i": list(e), "c": str(c)} for e, c in self.sorted_terms()]

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, variables={self.variables})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x)
            mag = abs(c)
            body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else str(mag))
            if idx == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


def laurent_series_mul(a: Sequence[LaurentPoly], b: Sequence[LaurentPoly],
                       order: int) -> list[LaurentPoly]:
    """Truncated product of two t-series with Laurent-polynomial coefficients."""
    variables = (a[0] if a else b[0]).variables
    out = [LaurentPoly({}, variables) for _ in range(order + 1)]
    for i, x in enumerate(a[: order + 1]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out
