from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gradezeta.combinat import (
    brute_irreducible,
    brute_necklaces,
    brute_primitive_necklaces,
    count_irreducible,
    count_lyndon_words,
    cycle_index_cyclic,
    hh0_dim,
    hh0_dim_brute,
    lyndon_words,
    necklace_poly,
    phi_poly,
    super_witt_dim,
    veronese_lie_dim,
    witt_dim,
    zeta_affine_line,
)
from gradezeta.eulerprod import exponents, product_expand
from gradezeta.numtheory import divisors
from gradezeta.series import LaurentPoly, TruncSeries


@pytest.mark.parametrize("n,x,value", [(3, 2, 2), (6, 2, 9), (2, -2, 3), (1, 7, 7), (5, 3, 48), (4, -1, 0)])
def test_necklace_values(n, x, value):
    assert necklace_poly(n, x) == value


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
@given(x=st.integers(-10, 10))
def test_necklace_at_prime(p, x):
    assert necklace_poly(p, x) == Fraction(x**p - x, p)


@pytest.mark.parametrize("n,x,value", [(3, 2, 4), (1, 5, 5), (6, 2, 14), (4, 3, 24)])
def test_phi_values(n, x, value):
    assert phi_poly(n, x) == value


def test_phi_is_sum_of_necklaces():
    for n in range(1, 31):
        for b in range(0, 6):
            assert phi_poly(n, b) == sum(necklace_poly(l, b) for l in divisors(n))


@pytest.mark.parametrize("n,b,value", [(3, 2, 4), (1, 3, 3), (6, 2, 14)])
def test_brute_necklaces_examples(n, b, value):
    assert brute_necklaces(n, b) == value


@pytest.mark.parametrize("n,b,value", [(3, 2, 2), (2, 2, 1), (4, 2, 3)])
def test_brute_primitive_examples(n, b, value):
    assert brute_primitive_necklaces(n, b) == value


def test_brute_limits():
    with pytest.raises(ValueError):
        brute_necklaces(13, 4)
    with pytest.raises(ValueError):
        brute_irreducible(5, 9)
    with pytest.raises(ValueError):
        count_irreducible(4, 2)


def test_lyndon_words_are_lyndon():
    words = list(lyndon_words(6, 2))
    assert len(words) == 9
    for w in words:
        rotations = [w[i:] + w[:i] for i in range(1, len(w))]
        assert all(w < r for r in rotations)
    assert list(lyndon_words(3, 2)) == [(0, 0, 1), (0, 1, 1)]


def test_cycle_index_examples():
    z6 = cycle_index_cyclic(6)
    assert z6.terms == {((1, 6),): Fraction(1, 6), ((2, 3),): Fraction(1, 6),
                        ((3, 2),): Fraction(1, 3), ((6, 1),): Fraction(1, 3)}
    assert cycle_index_cyclic(1).terms == {((1, 1),): 1}
    assert cycle_index_cyclic(4).terms == {((1, 4),): Fraction(1, 4), ((2, 2),): Fraction(1, 4),
                                           ((4, 1),): Fraction(1, 2)}


@pytest.mark.parametrize("n", range(1, 21))
def test_cycle_index_invariants(n):
    Z = cycle_index_cyclic(n)
    assert sum(Z.terms.values()) == 1
    for mono in Z.terms:
        assert sum(i * k for i, k in mono) == n
    for b in range(1, 6):
        assert Z.evaluate(b) == phi_poly(n, b)


def test_witt_examples():
    assert witt_dim(2, 3) == 2
    assert witt_dim(2, 1) == 2
    assert witt_dim(2, 4) == 3


def test_super_witt_examples():
    assert [super_witt_dim(0, 1, n) for n in (1, 2, 3, 4, 5)] == [-1, 1, 0, 0, 0]
    assert super_witt_dim(3, 1, 4) == witt_dim(2, 4)


def test_veronese_lie_examples():
    assert veronese_lie_dim(2, 1) == 4
    assert veronese_lie_dim(2, 2) == 3
    assert veronese_lie_dim(2, 3) == 2


def test_veronese_lie_nonnegative():
    for b in range(1, 6):
        for n in range(1, 31):
            assert veronese_lie_dim(b, n) >= 0


@pytest.mark.parametrize("p,d,value", [(2, 1, 2), (2, 4, 3), (3, 2, 3), (3, 3, 8), (5, 2, 10)])
def test_irreducible_counts(p, d, value):
    assert count_irreducible(p, d) == value
    assert brute_irreducible(p, d) == value


def test_zeta_affine_line():
    assert zeta_affine_line(2, 3) == TruncSeries([1, 2, 4, 8])
    assert zeta_affine_line(3, 2) == TruncSeries([1, 3, 9])
    assert exponents(zeta_affine_line(2, 6)).as_ints() == [2, 1, 2, 3, 6, 9]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_euler_product_of_affine_line(p):
    N = 20
    a = [necklace_poly(d, p) for d in range(1, N + 1)]
    assert product_expand(a, N) == zeta_affine_line(p, N)


def test_hh0():
    assert hh0_dim(2, 3) == 4
    assert hh0_dim(5, 1) == 5
    assert hh0_dim(2, 6) == hh0_dim_brute(2, 6) == 14


def test_laurent_necklace_integral():
    f = LaurentPoly.parse("q^2 - 3 + q^-1")
    for n in range(1, 9):
        m = necklace_poly(n, f)
        assert m.at_one() == necklace_poly(n, f.at_one())
