"""Exact number-theoretic kernel.

Scalars are :class:`fractions.Fraction`, always stored reduced with a
positive denominator. Factorizations use trial division, which is plenty for
the series indices this package works with (n up to ~1e4).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "BernoulliCache",
    "bernoulli",
    "divisors",
    "euler_phi",
    "factorize",
    "is_prime",
    "mobius",
    "zeta_even_coeff",
    "zeta_odd_numeric",
]


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as ``{prime: multiplicity}``."""
    _check_positive(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == {n: 1}


def mobius(n: int) -> int:
    _check_positive(n)
    f = factorize(n)
    if any(k > 1 for k in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    _check_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class BernoulliCache:
    """Memoized Bernoulli numbers B_0, B_1, ... (B_1 = -1/2).

    Filled by the recursion sum_{j<=m} C(m+1, j) B_j = 0, which is the
    coefficient identity for (S/(e^S - 1)) * ((e^S - 1)/S) = 1.
    Thread-safe: extension happens under a lock.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def _extend(self, k: int) -> None:
        vals = self._values
        for m in range(len(vals), k + 1):
            acc = sum(math.comb(m + 1, j) * vals[j] for j in range(m))
            vals.append(-acc / (m + 1))

    def raw(self, k: int) -> Fraction:
        """B_k for any k >= 0."""
        if k < 0:
            raise ValueError("index must be nonnegative")
        with self._lock:
            if k >= len(self._values):
                self._extend(k)
            return self._values[k]

    @property
    def values(self) -> dict[int, Fraction]:
        """Even-index values computed so far, ``{2l: b_2l}``."""
        with self._lock:
            return {k: v for k, v in enumerate(self._values) if k >= 2 and k % 2 == 0}


_BERNOULLI = BernoulliCache()


def bernoulli(k: int) -> Fraction:
    """b_k for even k >= 2, from S/(e^S - 1) = 1 - S/2 + sum b_2l S^2l/(2l)!."""
    if not isinstance(k, int) or k < 2 or k % 2:
        raise ValueError(f"bernoulli(k) needs an even k >= 2, got {k!r}")
    return _BERNOULLI.raw(k)


def zeta_even_coeff(k: int) -> Fraction:
    """Rational c with zeta(k) = c * pi**k, for even k >= 2 (Euler)."""
    if not isinstance(k, int) or k < 2 or k % 2:
        raise ValueError(f"zeta_even_coeff needs an even k >= 2, got {k!r}")
    l = k // 2
    sign = 1 if l % 2 == 1 else -1
    return sign * Fraction(2**k, 2 * math.factorial(k)) * bernoulli(k)


def zeta_odd_numeric(s: int, precision: int = 12) -> float:
    """zeta(s) for odd s >= 3 to within 10**-precision.

    Direct summation of N terms; the tail sum_{n>N} n^-s lies between
    (N+1)^(1-s)/(s-1) and N^(1-s)/(s-1), and the midpoint of that bracket is
    added. The bracket half-width is below N^-s / 2.
    """
    if not isinstance(s, int) or s < 3 or s % 2 == 0:
        raise ValueError(f"zeta_odd_numeric needs an odd s >= 3, got {s!r}")
    if not 0 <= precision <= 15:
        raise ValueError("precision must be between 0 and 15 decimal digits")
    n_terms = max(2, math.ceil(10 ** ((precision + 1) / s)) + 1)
    head = math.fsum(n ** -float(s) for n in range(1, n_terms + 1))
    upper = n_terms ** (1.0 - s) / (s - 1)
    lower = (n_terms + 1) ** (1.0 - s) / (s - 1)
    return head + 0.5 * (upper + lower)
