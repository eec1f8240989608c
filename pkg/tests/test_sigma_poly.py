import random
from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from generators import SQRT2, fields, rand_gamma, rand_nonzero_series, rand_series, rand_sigmapoly
from multval import (
    HahnField, LinOp, RatFunc, Rational, RationalFunctionShift, RationalIdentity, SigmaPoly,
    ZeroArgument, ZeroPolynomial, is_generic_for, make_generic, parse_sigmapoly,
    residue_poly_for,
)
from multval import value_group as VG

NEG_INF = float("-inf")
r = LinOp.rho_power(1)
F = HahnField(SQRT2, RationalIdentity())
S = HahnField(SQRT2, RationalFunctionShift())
t = F.t()


def P_(text, field=F):
    return parse_sigmapoly(text, field)


def a_n(n, field=F):
    return field.series([(VG.divide(field.gamma(-1), r ** i), 1) for i in range(1, n + 1)])


def test_eval_example_sequence():
    P = P_("s(x) - x - t^((-1)/(1))")
    for n in range(1, 11):
        # sigma(a_n) - a_n - t^-1 telescopes to -t^(-rho^-n)
        assert P.eval(a_n(n)) == -F.monomial(1, VG.divide(F.gamma(-1), r ** n))


def test_eval_examples():
    x = rand_nonzero_series(random.Random(3), F)
    assert P_("x").eval(x) == x
    assert P_("x*s(x)").eval(t) == F.monomial(1, F.gamma(1 + r))


def test_taylor_examples():
    P = P_("x*s(x)")
    assert P.taylor_coeff((1, 0)) == P_("s(x)")
    assert P.taylor_coeff((0, 1)) == P_("x").extend(1)
    assert P.taylor_coeff((1, 1)) == SigmaPoly.constant(F, 1, 1)
    assert P.taylor_coeff((0, 0)) == P
    f = P_("x^3")
    assert f.taylor_coeff((1,)).taylor_coeff((1,)) == P_("6*x")
    assert comb(2, 1) * f.taylor_coeff((2,)) == P_("6*x")


def test_complexity_examples():
    assert P_("s(x) - x - t^((-1)/(1))").complexity() == (1, 1, 1)
    assert P_("5").complexity() == (NEG_INF, 0, 0)
    assert P_("0").complexity() == (NEG_INF, NEG_INF, NEG_INF)
    assert P_("x^2*s^2(x) + s(x)^3").complexity() == (2, 1, 3)


def test_generic_examples():
    assert is_generic_for(P_("s(x) - x"), t)
    iso = HahnField(Rational(1, 1), RationalIdentity())
    assert not is_generic_for(P_("s(x) - x", iso), iso.one)
    assert is_generic_for(P_("x"), F.monomial(5, F.gamma(r - 3)))
    with pytest.raises(ZeroArgument):
        is_generic_for(P_("x"), F.zero)


def test_residue_poly_examples():
    assert residue_poly_for(P_("s(x) - x"), t).terms == {(1, 0): -1}
    assert residue_poly_for(P_("x"), t).terms == {(1,): 1}
    assert residue_poly_for(P_("x + s(x)"), F.one).terms == {(1, 0): 1, (0, 1): 1}
    with pytest.raises(ZeroPolynomial):
        residue_poly_for(P_("0"), t)


def test_make_generic_examples():
    assert make_generic([P_("x")], F.gamma(1)) == t
    assert make_generic([P_("s(x) - x", S)], S.gamma_zero) == S.const(RatFunc.symbol())
    assert make_generic([P_("s(x) - x")], F.gamma_zero) is None
    with pytest.raises(ZeroPolynomial):
        make_generic([P_("0")], F.gamma_zero)


def test_translate_is_taylor_shift():
    P = P_("x*s(x) - 2*s(x) + t")
    a = 1 + t
    Q = P.translate(a)
    for y in (F.zero, t, F.const(3) - t ** 2):
        assert Q.eval(y) == P.eval(y + a)


# -- properties

seeds = st.integers(0, 10 ** 9)
fields_st = st.sampled_from([f for _, f in fields()])


def _multi_indices(n, deg):
    return [I for I in product(range(deg + 1), repeat=n + 1) if sum(I) <= deg]


def _orbit_power(orb, I, K):
    out = K.one
    for v, e in zip(orb, I):
        out = out * v ** e
    return out


def check_taylor_identity(P, a, b):
    K = P.field
    lhs = P.eval(a + b)
    orb = P.orbit(b)
    rhs = K.zero
    for I, val in P.taylor_at(a).items():
        rhs = rhs + val * _orbit_power(orb, I, K)
    return lhs == rhs


def check_binomial_identity(P):
    d = P.degree()
    if d == NEG_INF:
        return True
    for I in _multi_indices(P.n, d):
        PI = P.taylor_coeff(I)
        for J in _multi_indices(P.n, d - sum(I)):
            IJ = tuple(i + j for i, j in zip(I, J))
            c = 1
            for i, j in zip(I, J):
                c *= comb(i + j, i)
            if PI.taylor_coeff(J) != c * P.taylor_coeff(IJ):
                return False
    return True


@given(seeds, fields_st)
def test_taylor_identity(seed, K):
    rng = random.Random(seed)
    P = rand_sigmapoly(rng, K)
    a, b = rand_series(rng, K, max_terms=2, small=True), rand_series(rng, K, max_terms=2, small=True)
    assert check_taylor_identity(P, a, b)


@given(seeds, fields_st)
def test_binomial_identity(seed, K):
    assert check_binomial_identity(rand_sigmapoly(random.Random(seed), K))


@given(seeds, fields_st)
def test_complexity_drops_under_taylor(seed, K):
    P = rand_sigmapoly(random.Random(seed), K)
    if P.is_constant():
        return
    for I in P.taylor_indices():
        if any(I):
            assert P.taylor_coeff(I).complexity() < P.complexity()


@given(seeds, fields_st)
def test_make_generic_contract(seed, K):
    rng = random.Random(seed)
    Ps = [rand_sigmapoly(rng, K, max_terms=3) for _ in range(rng.randint(1, 2))]
    Ps = [P for P in Ps if P]
    if not Ps:
        return
    g = rand_gamma(rng, K.rho, small=True)
    a = make_generic(Ps, g)
    if a is None:
        return
    assert a.valuation() == g
    assert all(is_generic_for(P, a) for P in Ps)
