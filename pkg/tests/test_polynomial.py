from fractions import Fraction
from math import comb
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indpoly.polynomial import (Polynomial, PolynomialError, binomial_power, count_real_roots,
                                evaluate, format_poly, is_log_concave, is_real_rooted,
                                is_unimodal, poly_gcd, real_roots, sign_variations,
                                squarefree_part, sturm_sequence, unimodal_mode)

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=8)


def test_square():
    assert Polynomial([1, 1]) * Polynomial([1, 1]) == Polynomial([1, 2, 1])


def test_nonunimodal_product():
    p = Polynomial([1, 121, 147, 343]) * Polynomial([1, 141, 147, 343])
    assert p.coeffs == (1, 262, 17355, 39200, 111475, 100842, 117649)
    assert not is_unimodal(p)


@given(coeff_lists)
def test_identity(c):
    p = Polynomial(c)
    assert p * 1 == p and p * Polynomial([1]) == p and p + 0 == p


def test_trailing_zeros_trimmed():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0]).degree == -1


def test_sub_const_and_scale():
    assert Polynomial([1, 1]).scale(2) - 1 == Polynomial([1, 2])


def test_binomial_power():
    assert binomial_power(0) == Polynomial([1])
    assert binomial_power(7).coeffs == (1, 7, 21, 35, 35, 21, 7, 1)
    assert binomial_power(7) + Polynomial([0, 5]) == Polynomial([1, 12, 21, 35, 35, 21, 7, 1])
    for k in range(31):
        c = binomial_power(k).coeffs
        assert c == c[::-1]
        assert binomial_power(k) == Polynomial([1, 1]) ** k


def test_evaluate():
    assert evaluate(Polynomial([1, 3, 1]), 1) == 5 == 3 * 2 ** 1 - 1
    for n in range(1, 10):
        assert evaluate(Polynomial([1, n]), -1) == 1 - n
    p = Polynomial([7, -2, 5])
    assert evaluate(p, 0) == 7
    assert evaluate(p, Fraction(1, 2)) == Fraction(29, 4)


@settings(max_examples=200)
@given(coeff_lists, coeff_lists, st.fractions(max_denominator=20).filter(lambda t: abs(t) < 10))
def test_evaluate_multiplicative(a, b, t):
    p, q = Polynomial(a), Polynomial(b)
    assert evaluate(p * q, t) == evaluate(p, t) * evaluate(q, t)


def test_format():
    assert format_poly(Polynomial([1, 3, 1])) == "1 + 3x + x^2"
    assert format_poly(Polynomial([0, -1, 0, 2])) == "-x + 2x^3"
    assert format_poly(Polynomial()) == "0"


def test_unimodal_examples():
    assert not is_unimodal(Polynomial([1, 148, 147, 343]))
    assert is_unimodal(Polynomial([1, 64, 147, 343]))
    assert is_unimodal(Polynomial([1]))
    assert unimodal_mode(Polynomial([1, 5, 5, 2])) == 2
    # plateau then fall then plateau is fine; fall then rise is not
    assert is_unimodal(Polynomial([1, 3, 3, 2, 2]))
    assert not is_unimodal(Polynomial([2, 1, 0, 1]))


def test_log_concave_examples():
    assert 147 * 147 - 64 * 343 == -343
    assert not is_log_concave(Polynomial([1, 64, 147, 343]))
    assert is_log_concave(Polynomial([1, 63, 147, 343]))
    assert all(is_log_concave(binomial_power(k)) for k in range(31))


def test_negative_coefficients_rejected():
    with pytest.raises(PolynomialError):
        is_unimodal(Polynomial([1, -1]))
    with pytest.raises(PolynomialError):
        is_log_concave(Polynomial([1, -1]))


nonneg = st.lists(st.integers(1, 30), min_size=1, max_size=6)


@settings(max_examples=300)
@given(nonneg, nonneg)
def test_product_rules(a, b):
    p, q = Polynomial(a), Polynomial(b)
    if is_log_concave(p):
        assert is_unimodal(p)
        if is_log_concave(q):
            assert is_log_concave(p * q)
        if is_unimodal(q):
            assert is_unimodal(p * q)


def test_gcd_and_squarefree():
    p = Polynomial([1, 1]) ** 3 * Polynomial([-2, 0, 1])
    assert poly_gcd(p, p.derivative()) == Polynomial([1, 1]) ** 2
    assert squarefree_part(p) == Polynomial([1, 1]) * Polynomial([-2, 0, 1])


def test_sturm_sequence_known():
    # x^3 - 2x^2 + 3x - 5 has chain [f, 3x^2 - 4x + 3, -10/9 x + 13/3, -3303/100];
    # ours agrees up to positive scaling
    seq = sturm_sequence(Polynomial([-5, 3, -2, 1]))
    assert seq[1] == Polynomial([3, -4, 3])
    assert seq[2] == Polynomial([39, -10])
    assert seq[3] == Polynomial([-1])


def test_roots_a6():
    rep = real_roots(Polynomial([1, 6, 6, 2]))
    assert rep.count == 1
    lo, hi = rep.intervals[0]
    assert -1 < lo < hi < 0 and hi - lo <= Fraction(1, 1024)
    # -1 + 2^(-1/3) lies in (lo, hi]  <=>  (1+lo)^3 < 1/2 <= (1+hi)^3
    assert (1 + lo) ** 3 < Fraction(1, 2) <= (1 + hi) ** 3


def test_roots_a8():
    rep = real_roots(Polynomial([1, 8, 12, 8, 2]))
    assert rep.count == 2
    assert rep.interval_inside(0, -2, -1) and rep.interval_inside(1, -1, 0)


def test_roots_linear_exact():
    rep = real_roots(Polynomial([1, 2]))
    assert rep.count == 1 and rep.exact_roots == [Fraction(-1, 2)]
    assert rep.intervals[0][1] == Fraction(-1, 2)


def test_roots_with_multiplicity():
    p = Polynomial([1, 1]) ** 3 * Polynomial([-2, 0, 1])
    rep = real_roots(p)
    assert rep.count == 3
    assert Fraction(-1) in rep.exact_roots
    assert is_real_rooted(p)
    assert not is_real_rooted(Polynomial([1, 0, 1]))
    assert real_roots(Polynomial([1, 0, 1])).count == 0
    assert real_roots(Polynomial([5])).count == 0


def test_zero_polynomial():
    with pytest.raises(PolynomialError):
        real_roots(Polynomial())


def _roots_invariants(p):
    rep = real_roots(p)
    chain = sturm_sequence(squarefree_part(p))
    total = sign_variations(chain, None, positive=False) - sign_variations(chain, None)
    assert total == rep.count == count_real_roots(p)
    prev_hi = None
    for lo, hi in rep.intervals:
        assert lo < hi and hi - lo <= Fraction(1, 1024)
        if prev_hi is not None:
            assert prev_hi <= lo
        prev_hi = hi
        a, b = evaluate(p, lo), evaluate(p, hi)
        if hi in rep.exact_roots:
            assert b == 0
        else:
            sq = squarefree_part(p)
            assert evaluate(sq, lo) * evaluate(sq, hi) < 0
        assert a != 0
        assert count_real_roots(p, lo, hi) == 1


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_root_report_invariants(c):
    _roots_invariants(Polynomial(c))


def test_root_report_invariants_products_of_linears():
    r = Random(4)
    for _ in range(30):
        p = Polynomial([1])
        for _ in range(r.randint(1, 5)):
            p = p * Polynomial([r.randint(-6, 6), r.randint(1, 4)])
        _roots_invariants(p)
        assert is_real_rooted(p)


def test_close_roots_separated():
    # roots 0 and 1/4096 are closer than the isolation width
    p = Polynomial([0, -1, 4096])
    rep = real_roots(p)
    assert rep.count == 2 and sorted(rep.exact_roots) == [0, Fraction(1, 4096)]
