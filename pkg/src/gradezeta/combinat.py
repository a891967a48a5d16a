"""Necklace and Witt combinatorics, with brute-force oracles.

The closed forms (necklace polynomials, Phi_n, cycle index) and the
enumerators (orbit counting, Lyndon words, sieving F_p[x]) are separate code
paths on purpose: the enumerators are used to check the closed forms.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .numtheory import divisors, euler_phi, is_prime, mobius
from .series import LaurentPoly, TruncSeries

__all__ = [
    "CycleIndex",
    "brute_irreducible",
    "brute_necklaces",
    "brute_primitive_necklaces",
    "count_irreducible",
    "count_lyndon_words",
    "cycle_index_cyclic",
    "hh0_dim",
    "hh0_dim_brute",
    "lyndon_words",
    "necklace_poly",
    "phi_poly",
    "super_witt_dim",
    "veronese_lie_dim",
    "witt_dim",
    "zeta_affine_line",
]

BRUTE_LIMIT = 2**24


def _adams(x, d: int):
    return x.adams(d) if isinstance(x, LaurentPoly) else x


def necklace_poly(n: int, x):
    """M_n(x) = (1/n) sum_{d | n} mu(d) x^(n/d).

    For a Laurent polynomial x = f(q) the d-th term uses f(q^d), which gives
    the q-necklace M_n(f; q); for plain numbers that substitution is a no-op.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(x, LaurentPoly):
        acc = LaurentPoly({}, x.variables)
        for d in divisors(n):
            mu = mobius(d)
            if mu:
                acc = acc + _adams(x, d) ** (n // d) * mu
        return acc.exact_div(n)
    x = Fraction(x)
    return sum((mobius(d) * x ** (n // d) for d in divisors(n)), Fraction(0)) / n


def phi_poly(n: int, x) -> Fraction:
    """Phi_n(x) = (1/n) sum_{d | n} phi(d) x^(n/d), the number of necklaces."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = Fraction(x)
    return sum((euler_phi(d) * x ** (n // d) for d in divisors(n)), Fraction(0)) / n


def _check_brute(n: int, b: int) -> None:
    if n < 1 or b < 1:
        raise ValueError("need n >= 1 and b >= 1")
    if b**n > BRUTE_LIMIT:
        raise ValueError(f"{b}^{n} strings exceed the brute-force limit {BRUTE_LIMIT}")


def _min_rotation(word: tuple[int, ...]) -> tuple[int, ...]:
    return min(word[i:] + word[:i] for i in range(len(word)))


def brute_necklaces(n: int, b: int) -> int:
    """Count Z/n-orbits on b-ary strings of length n by canonical rotation."""
    _check_brute(n, b)
    return len({_min_rotation(w) for w in itertools.product(range(b), repeat=n)})


def brute_primitive_necklaces(n: int, b: int) -> int:
    """Count orbits of size exactly n (aperiodic strings) by enumeration."""
    _check_brute(n, b)
    seen = set()
    for w in itertools.product(range(b), repeat=n):
        if all(w[i:] + w[:i] != w for i in range(1, n)):
            seen.add(_min_rotation(w))
    return len(seen)


def lyndon_words(n: int, b: int):
    """Lyndon words of length n over range(b), via Duval's generation order."""
    if n < 1 or b < 1:
        raise ValueError("need n >= 1 and b >= 1")
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == n:
            yield tuple(w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == b - 1:
            w.pop()


def count_lyndon_words(n: int, b: int) -> int:
    return sum(1 for _ in lyndon_words(n, b))


@dataclass(frozen=True)
class CycleIndex:
    """Average over a permutation group of prod x_i^(number of i-cycles).

    ``terms`` maps a monomial, given as sorted ``((i, multiplicity), ...)``,
    to its rational coefficient.
    """

    terms: dict
    group_order: int

    def evaluate(self, xs) -> Fraction:
        """Substitute x_i = xs(i) (callable) or the constant xs."""
        value = xs if callable(xs) else (lambda i: xs)
        acc = Fraction(0)
        for mono, c in self.terms.items():
            term = Fraction(c)
            for i, k in mono:
                term *= Fraction(value(i)) ** k
            acc += term
        return acc

    def __str__(self) -> str:
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda kv: [i for i, _ in kv[0]]):
            body = "*".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in mono)
            parts.append(f"{c}*{body}")
        return " + ".join(parts)


def _cycle_type(perm: list[int]) -> tuple[tuple[int, int], ...]:
    seen = [False] * len(perm)
    lengths = Counter()
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            k += 1
        lengths[k] += 1
    return tuple(sorted(lengths.items()))


def cycle_index_cyclic(n: int) -> CycleIndex:
    """Cycle index of Z/n acting on n points, built from the rotations themselves."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: Counter = Counter()
    for k in range(n):
        counts[_cycle_type([(i + k) % n for i in range(n)])] += 1
    return CycleIndex({mono: Fraction(c, n) for mono, c in counts.items()}, n)


def witt_dim(b: int, n: int) -> int:
    """dim of the degree-n part of the free Lie algebra on b generators."""
    if b < 1 or n < 1:
        raise ValueError("need b >= 1 and n >= 1")
    return int(necklace_poly(n, b))


def super_witt_dim(b: int, c: int, n: int) -> int:
    """Super-dimension of degree n in the free Lie superalgebra (b even, c odd generators)."""
    if b < 0 or c < 0 or n < 1:
        raise ValueError("need b, c >= 0 and n >= 1")
    return int(necklace_poly(n, b - c))


def veronese_lie_dim(b: int, n: int) -> int:
    """dim L_n of the Lie algebra Koszul dual to the Veronese ring A_b."""
    if b < 1 or n < 1:
        raise ValueError("need b >= 1 and n >= 1")
    if n == 1:
        return b + 2
    return int((-1) ** n * necklace_poly(n, -b))


def count_irreducible(p: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be >= 1")
    return int(necklace_poly(d, p))


def _monic_polys(p: int, d: int):
    # coefficient tuples low -> high, leading 1 implicit at index d
    for low in itertools.product(range(p), repeat=d):
        yield low + (1,)


def _mul_mod(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def brute_irreducible(p: int, d: int) -> int:
    """Count monic irreducibles of degree d over F_p by sieving out products."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be >= 1")
    if p**d > 2**20:
        raise ValueError(f"{p}^{d} polynomials exceed the brute-force limit")
    irreducible: dict[int, list[tuple[int, ...]]] = {}
    for k in range(1, d + 1):
        reducible = set()
        for i in range(1, k // 2 + 1):
            for f in irreducible[i]:
                for g in _monic_polys(p, k - i):
                    reducible.add(_mul_mod(f, g, p))
        irreducible[k] = [f for f in _monic_polys(p, k) if f not in reducible]
    return len(irreducible[d])


def zeta_affine_line(p: int, order: int) -> TruncSeries:
    """1/(1 - pT) through T^order: the zeta function of F_p[x] in T = p^-s."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return TruncSeries([p**k for k in range(order + 1)])


def hh0_dim(b: int, n: int) -> int:
    """dim HH_0 of the free algebra on b letters in degree n (cyclic words)."""
    if b < 1 or n < 1:
        raise ValueError("need b >= 1 and n >= 1")
    return int(phi_poly(n, b))


def hh0_dim_brute(b: int, n: int) -> int:
    """Cyclic words of length n over b letters, counted by enumeration."""
    return brute_necklaces(n, b)
