import threading
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from gradezeta.numtheory import (
    BernoulliCache,
    bernoulli,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mobius,
    zeta_even_coeff,
    zeta_odd_numeric,
)
from gradezeta.series import TruncSeries, ps_inverse


@pytest.mark.parametrize("n,mu", [(1, 1), (2, -1), (4, 0), (6, 1), (30, -1), (12, 0), (105, -1)])
def test_mobius_values(n, mu):
    assert mobius(n) == mu


@pytest.mark.parametrize("n,phi", [(1, 1), (6, 2), (7, 6), (12, 4), (36, 12)])
def test_euler_phi_values(n, phi):
    assert euler_phi(n) == phi


@pytest.mark.parametrize("n,divs", [(1, [1]), (6, [1, 2, 3, 6]), (9, [1, 3, 9]), (28, [1, 2, 4, 7, 14, 28])])
def test_divisors_values(n, divs):
    assert divisors(n) == divs


@pytest.mark.parametrize("f", [mobius, euler_phi, divisors, factorize])
@pytest.mark.parametrize("bad", [0, -3])
def test_nonpositive_rejected(f, bad):
    with pytest.raises(ValueError):
        f(bad)


def test_divisor_sums_up_to_10000():
    for n in range(1, 10001):
        ds = divisors(n)
        assert sum(mobius(d) for d in ds) == (1 if n == 1 else 0)
        assert sum(euler_phi(d) for d in ds) == n


@given(st.integers(1, 5000))
def test_divisors_exhaustive(n):
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


@given(st.integers(1, 2000))
def test_phi_counts_coprime_residues(n):
    assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@given(st.integers(2, 10**6))
def test_factorize_reconstructs(n):
    f = factorize(n)
    prod = 1
    for p, k in f.items():
        assert is_prime(p)
        prod *= p**k
    assert prod == n


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=200))
def test_mobius_inversion_round_trip(values):
    N = len(values)
    f = {n: v for n, v in enumerate(values, 1)}
    g = {m: sum(f[l] for l in divisors(m)) for m in range(1, N + 1)}
    back = {m: sum(mobius(m // l) * g[l] for l in divisors(m)) for m in range(1, N + 1)}
    assert back == f


@pytest.mark.parametrize("k,b", [(2, Fraction(1, 6)), (4, Fraction(-1, 30)), (6, Fraction(1, 42)),
                                 (8, Fraction(-1, 30)), (10, Fraction(5, 66)), (12, Fraction(-691, 2730))])
def test_bernoulli_values(k, b):
    assert bernoulli(k) == b


@pytest.mark.parametrize("k", [0, 1, 3, -2, 7])
def test_bernoulli_rejects(k):
    with pytest.raises(ValueError):
        bernoulli(k)


def test_bernoulli_matches_series_inverse():
    # (e^S - 1)/S = sum S^j/(j+1)!; its inverse has coefficient b_k/k!
    from math import factorial
    order = 30
    s = TruncSeries([Fraction(1, factorial(j + 1)) for j in range(order + 1)])
    inv = ps_inverse(s)
    for k in range(2, order + 1, 2):
        assert inv[k] * factorial(k) == bernoulli(k)
    assert inv[1] == Fraction(-1, 2)


def test_bernoulli_cache_is_thread_safe():
    cache = BernoulliCache()
    out = {}

    def work(k):
        out[k] = cache.raw(k)

    threads = [threading.Thread(target=work, args=(k,)) for k in range(40, 0, -1)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(out[k] == (bernoulli(k) if k >= 2 and k % 2 == 0 else out[k]) for k in out)
    assert out[3] == 0 and out[1] == Fraction(-1, 2)
    assert set(cache.values) >= {2, 4, 40}


@pytest.mark.parametrize("k,c", [(2, Fraction(1, 6)), (4, Fraction(1, 90)), (6, Fraction(1, 945)),
                                 (8, Fraction(1, 9450))])
def test_zeta_even_coeff(k, c):
    assert zeta_even_coeff(k) == c


@pytest.mark.parametrize("s,value", [(3, 1.2020569031595942), (5, 1.0369277551433699), (7, 1.0083492773819228)])
def test_zeta_odd_numeric(s, value):
    assert abs(zeta_odd_numeric(s, 6) - value) < 1e-6
    assert abs(zeta_odd_numeric(s, 12) - value) < 1e-12


def test_zeta_odd_more_precision_keeps_agreed_digits():
    prev = None
    for p in range(2, 13):
        v = zeta_odd_numeric(3, p)
        if prev is not None:
            assert abs(v - prev) < 10 ** -(p - 1)
        prev = v


@pytest.mark.parametrize("s", [1, 2, -1, 4])
def test_zeta_odd_rejects(s):
    with pytest.raises(ValueError):
        zeta_odd_numeric(s)
