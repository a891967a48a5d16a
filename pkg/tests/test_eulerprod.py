from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gradezeta.combinat import necklace_poly
from gradezeta.eulerprod import (
    ExponentVector,
    NonIntegralExponent,
    cyclotomic_check,
    equivariant_exponents,
    equivariant_product,
    exponents,
    koszul_euler_check,
    laurent_series_equal,
    logderiv_coeffs,
    multi_cyclotomic_exponents,
    one_minus_ft,
    product_expand,
    q_cyclotomic_exponents,
    q_product,
)
from gradezeta.hilbert import (
    EquivariantSeries,
    expand,
    from_complete_intersection,
    pure_spinor,
    pure_spinor_unreduced,
    verlinde,
    veronese,
    veronese_q,
)
from gradezeta.series import LaurentPoly, TruncSeries

VERONESE_2 = [4, -3, 2, -3, 6, -11, 18, -30, 56, -105]
VERLINDE_4_P = [6, 0, -16, -9, 144, -360, 0, 2259, -3920]
FIXTURES = [veronese(1), veronese(2), veronese(3), pure_spinor(), pure_spinor_unreduced(),
            verlinde(2), verlinde(3), verlinde(4), from_complete_intersection(3, [2, 3])]

L = LaurentPoly.parse


def test_logderiv_examples():
    assert logderiv_coeffs(expand(veronese(1), 4), 4) == [3, 1, 3, 1]
    assert logderiv_coeffs(TruncSeries([1], 3)) == [0, 0, 0]
    assert logderiv_coeffs(TruncSeries([1, 1, 1, 1])) == [1, 1, 1]
    with pytest.raises(ValueError):
        logderiv_coeffs(TruncSeries([2, 1]))
    with pytest.raises(ValueError):
        logderiv_coeffs(TruncSeries([1, 1]), 3)


def test_exponent_examples():
    assert exponents(expand(veronese(2), 10), 10).as_ints() == VERONESE_2
    assert exponents(expand(veronese(1), 5), 5).as_ints() == [3, -1, 0, 0, 0]
    a = exponents(expand(pure_spinor(), 2))
    assert (a[1], a[2]) == (16, -10)


def test_verlinde_numerator_exponents():
    P = verlinde(4).reduced_numerator
    assert exponents(P.to_series(9), 9).as_ints() == VERLINDE_4_P
    # the full series adds the pole order to a_1
    assert exponents(expand(verlinde(4), 9)).as_ints() == [16] + VERLINDE_4_P[1:]


def test_strict_mode_rejects_rational_exponents():
    s = TruncSeries([1, Fraction(1, 2), 0, 0])
    with pytest.raises(NonIntegralExponent):
        exponents(s)
    a = exponents(s, strict=False)
    assert a[1] == Fraction(1, 2) and not a.strict
    assert product_expand(a) == s


def test_exponent_vector_indexing_and_json():
    a = ExponentVector((4, -3))
    assert a[1] == 4 and a[2] == -3 and a.order == 2
    with pytest.raises(IndexError):
        a[0]
    assert a.to_json(True) == {"exponents": [{"n": 1, "a": "4"}, {"n": 2, "a": "-3"}],
                               "strict": True, "roundtrip_ok": True}


def test_product_expand_examples():
    assert product_expand([1], 3) == TruncSeries([1, 1, 1, 1])
    assert product_expand(VERONESE_2) == expand(veronese(2), 10)
    assert product_expand([2, -1, 0, 0]) == TruncSeries([1, 2, 2, 2, 2])
    # short vectors are finite products
    assert product_expand([3, -1], 6) == expand(veronese(1), 6)


@pytest.mark.parametrize("H", FIXTURES, ids=lambda H: H.name)
def test_round_trip_and_integrality_on_fixtures(H):
    s = expand(H, 60)
    a = exponents(s, 60, strict=True)
    assert product_expand(a, 60) == s


def test_presentation_independence():
    assert exponents(expand(pure_spinor(), 40)) == exponents(expand(pure_spinor_unreduced(), 40))


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=40))
def test_exponents_inverts_product_expand(a):
    assert exponents(product_expand(a)).as_ints() == a


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=25))
def test_product_expand_inverts_exponents(tail):
    s = TruncSeries([1] + tail)
    assert product_expand(exponents(s, strict=False)) == s


@pytest.mark.parametrize("b,N", [(2, 30), (-2, 30), (0, 10), (5, 25), (-3, 25)])
def test_cyclotomic_identity(b, N):
    assert cyclotomic_check(b, N)


@pytest.mark.parametrize("b,N", [(2, 30), (1, 20), (0, 10), (3, 30)])
def test_koszul_euler_identity(b, N):
    assert koszul_euler_check(b, N)


def test_veronese_exponents_are_necklaces():
    # a_1 = 2 - M_1(-b), a_n = -M_n(-b) for n >= 2
    for b in range(0, 5):
        a = exponents(expand(veronese(b), 30))
        assert a[1] == 2 - necklace_poly(1, -b)
        assert all(a[n] == -necklace_poly(n, -b) for n in range(2, 31))


# q-analogues

def test_q_cyclotomic_minus_q():
    fam = q_cyclotomic_exponents(L("-q"), 6)
    assert fam[1] == L("-q") and fam[2] == L("q^2")
    assert all(fam[n].is_zero() for n in range(3, 7))


def test_q_cyclotomic_constant_one():
    fam = q_cyclotomic_exponents(L("1"), 5)
    assert fam[1] == L("1") and all(fam[n].is_zero() for n in range(2, 6))


def test_q_cyclotomic_q_plus_q_inverse():
    # ((q + q^-1)^2 - (q^2 + q^-2))/2 = 1; the d = 1 term carries mu(1) = +1
    fam = q_cyclotomic_exponents(L("q + q^-1"), 3)
    assert fam[2] == L("1")
    assert fam[3] == L("q + q^-1")


def test_multi_cyclotomic_two_variables():
    fam = multi_cyclotomic_exponents(L("q1 + q2"), 3)
    assert fam[2] == L("q1*q2")
    assert fam[3] == L("q1^2*q2 + q1*q2^2")
    single = multi_cyclotomic_exponents(L("q1"), 4)
    assert single[1] == L("q1") and all(single[n].is_zero() for n in (2, 3, 4))


def test_q_cyclotomic_single_variable_only():
    with pytest.raises(ValueError):
        q_cyclotomic_exponents(L("q1 + q2"), 3)
    with pytest.raises(ValueError):
        q_cyclotomic_exponents(LaurentPoly({}), 3)


laurent_f = st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), min_size=1, max_size=4).map(
    LaurentPoly.from_dict).filter(lambda f: not f.is_zero())


@given(laurent_f)
def test_q_product_identity(f):
    N = 10
    fam = q_cyclotomic_exponents(f, N)
    assert laurent_series_equal(q_product(fam, N), one_minus_ft(f, N))


@given(laurent_f)
def test_q_specialization_is_plain_necklace(f):
    fam = q_cyclotomic_exponents(f, 20)
    assert fam.specialize() == [necklace_poly(n, f.at_one()) for n in range(1, 21)]


@given(st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(-2, 2),
                       min_size=1, max_size=3))
def test_multi_product_identity(terms):
    f = LaurentPoly(terms, ("q1", "q2"))
    if f.is_zero():
        return
    fam = multi_cyclotomic_exponents(f, 6)
    assert laurent_series_equal(q_product(fam, 6), one_minus_ft(f, 6))


def test_equivariant_veronese_one():
    fam = equivariant_exponents(veronese_q(1, 4))
    assert fam[1] == L("q^2 + 1 + q^-2")
    assert fam[2] == L("-1")
    assert fam[3].is_zero() and fam[4].is_zero()
    assert fam.specialize() == [3, -1, 0, 0]


def test_equivariant_constant_series():
    one = LaurentPoly.constant(1)
    zero = LaurentPoly({})
    fam = equivariant_exponents(EquivariantSeries((one, zero, zero, zero)))
    assert all(m.is_zero() for m in fam.per_n)


@pytest.mark.parametrize("b", range(4))
def test_equivariant_round_trip_and_specialization(b):
    N = 10
    s = veronese_q(b, N)
    fam = equivariant_exponents(s)
    assert laurent_series_equal(equivariant_product(fam, N), list(s.coefficients))
    assert fam.specialize() == exponents(expand(veronese(b), N)).as_ints()


@pytest.mark.parametrize("b", range(4))
def test_equivariant_numerator_is_q_necklace(b):
    # numerator 1 + [b]_q t = 1 - f t with f = -[b]_q; the denominator only touches n = 1
    N = 10
    fam = equivariant_exponents(veronese_q(b, N))
    f = -LaurentPoly.q_integer(b) if b else LaurentPoly({})
    denom = LaurentPoly.monomial(b + 1) + LaurentPoly.monomial(-(b + 1))
    for n in range(1, N + 1):
        got = fam[n] - (denom if n == 1 else LaurentPoly({}))
        want = -necklace_poly(n, f) if b else LaurentPoly({})
        assert got == want


def test_equivariant_support_bound_enforced():
    # coefficients that jump in q-degree faster than n * radius(b_1) are rejected
    one, zero = LaurentPoly.constant(1), LaurentPoly({})
    s = EquivariantSeries((one, L("q"), L("q^9"), zero))
    with pytest.raises(ValueError, match="support"):
        equivariant_exponents(s)
