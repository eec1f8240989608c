import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multval import (
    AllZeroCoefficients, RatFunc, RationalFunctionShift, RationalIdentity, ResiduePoly,
    ZeroPolynomial,
)

ID = RationalIdentity()
SH = RationalFunctionShift()
s = RatFunc.symbol()


def x_minus_sx(n=2):
    return ResiduePoly(n, {(1, 0): 1, (0, 1): -1})


def test_identity_solver():
    assert ID.solve_linear([2, 3]) == Fraction(-1, 5)
    assert ID.solve_linear([-1, 1]) is None


def test_shift_solver_example():
    u = SH.solve_linear([-1, 1])
    assert u == -s
    assert SH.check_linear([-1, 1], u) == 0


def test_shift_solver_polynomial_solution():
    # 1 + (s+1)*u - s*sigma(u) = 0 is solved by u = -1
    alphas = [s + 1, -s]
    u = SH.solve_linear(alphas)
    assert u == -1
    assert SH.check_linear(alphas, u) == 0
    # 1 + u - sigma(u) = 0 needs u = s + c
    u = SH.solve_linear([1, -1])
    assert SH.check_linear([1, -1], u) == 0 and not u.is_constant


def test_shift_solver_single_term_rational():
    alphas = [0, 1 / (s ** 2 + 1)]
    u = SH.solve_linear(alphas)
    assert SH.check_linear(alphas, u) == 0


def test_all_zero_coefficients():
    with pytest.raises(AllZeroCoefficients):
        ID.solve_linear([0, 0])
    with pytest.raises(AllZeroCoefficients):
        SH.solve_linear([RatFunc([]), 0])


def test_nonfixed_witness():
    assert SH.nonfixed_witness(3) == s
    assert SH.nonfixed_witness(1) == s
    assert SH.sigma_bar_pow(s, 3) != s
    assert ID.nonfixed_witness(4) is None


def test_nonvanishing_point_examples():
    x0 = ResiduePoly(1, {(1,): 1})
    assert ID.nonvanishing_point(x0) == 1
    assert SH.nonvanishing_point(x0) == 1
    assert SH.nonvanishing_point(x_minus_sx()) == s
    assert ID.nonvanishing_point(x_minus_sx()) is None
    with pytest.raises(ZeroPolynomial):
        ID.nonvanishing_point(ResiduePoly(1, {}))


def test_candidate_order():
    first = [c for _, c in zip(range(7), SH.candidates())]
    assert first[:3] == [0, 1, s]
    assert all(isinstance(c, RatFunc) for c in first)
    assert len(set(first)) == len(first)


def test_ratfunc_normal_form():
    a = RatFunc([-1, 0, 1], [-1, 1])  # (s^2-1)/(s-1)
    assert a == s + 1
    assert (s / s) == 1
    assert str(RatFunc([1], [2, 2])) == "(1/2)/(s + 1)"
    assert hash(RatFunc([Fraction(3, 2)])) == hash(Fraction(3, 2))


seeds = st.integers(0, 10 ** 9)


@given(seeds)
def test_sigma_bar_is_automorphism(seed):
    rng = random.Random(seed)
    for K in (ID, SH):
        a = K.random_element(rng, nonzero=True)
        b = K.random_element(rng)
        assert K.sigma_bar(K.invert(a)) == K.invert(K.sigma_bar(a))
        assert K.sigma_bar(a * b) == K.sigma_bar(a) * K.sigma_bar(b)
        assert K.sigma_bar(a + b) == K.sigma_bar(a) + K.sigma_bar(b)
        assert K.sigma_bar_inv(K.sigma_bar(a)) == a


def test_sigma_bar_inverse_200():
    rng = random.Random(11)
    for _ in range(200):
        for K in (ID, SH):
            a = K.random_element(rng, nonzero=True)
            assert K.sigma_bar(K.invert(a)) == K.invert(K.sigma_bar(a))


@given(seeds)
def test_solver_answers_verify(seed):
    rng = random.Random(seed)
    for K in (ID, SH):
        alphas = [K.random_element(rng) for _ in range(rng.randint(1, 3))]
        if not any(alphas):
            continue
        u = K.solve_linear(alphas)
        if u is not None:
            assert K.check_linear(alphas, u) == 0


@given(seeds)
def test_nonvanishing_point_verifies(seed):
    rng = random.Random(seed)
    for K in (ID, SH):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            idx = (rng.randint(0, 2), rng.randint(0, 2))
            terms[idx] = K.random_element(rng, nonzero=True)
        f = ResiduePoly(2, terms)
        if not f:
            continue
        y = K.nonvanishing_point(f)
        if y is not None:
            assert f.evaluate_orbit(K, y) != 0
