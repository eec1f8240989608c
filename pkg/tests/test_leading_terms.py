import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from generators import (
    INFINITE, SQRT2, SQRT2_PLUS, THREE_HALVES, fields, rand_coeff, rand_gamma, rand_nonzero_series,
    rand_series,
)
from multval import (
    INF, HahnField, InfinityDecode, InfinityInverse, LinOp, Rational, RationalFunctionShift,
    RationalIdentity, ZeroCoefficient,
)
from multval import value_group as VG
from multval.leading_terms import (
    RV_INF, RVElem, WitnessStatus, apply_operator_multiplicatively, axiom4_witness, cross_section,
    rv, rv_decode, rv_encode, rv_inv, rv_mul, rv_sigma, rv_sum,
)

r = LinOp.rho_power(1)
F = HahnField(SQRT2, RationalIdentity())
t = F.t()


def test_rv_examples():
    assert rv(1 + t) == rv(1 + t ** 2) == RVElem(F.gamma_zero, 1)
    assert rv(F.zero) is RV_INF
    assert rv(3 * t) == RVElem(F.gamma(1), 3)


def test_rv_group_examples():
    g = F.gamma(r - 1, 3)
    assert rv_inv(rv(F.monomial(1, g))) == rv(F.monomial(1, -g))
    assert rv_mul(rv(t), RV_INF) is RV_INF
    with pytest.raises(InfinityInverse):
        rv_inv(RV_INF)


def test_rv_sum_examples():
    assert rv_sum([rv(F.one), rv(t)]) == RVElem(F.gamma_zero, 1)
    assert rv_sum([rv(t), rv(-t)]) is None
    assert rv_sum([rv(t), rv(t)]) == RVElem(F.gamma(1), 2)
    assert rv_sum([RV_INF, RV_INF]) is RV_INF
    assert rv_sum([RV_INF, rv(t)]) == rv(t)


def test_rv_sigma_examples():
    S = HahnField(SQRT2, RationalFunctionShift())
    s = S.residue.nonfixed_witness(1)
    assert rv_sigma(RV_INF, S.residue) is RV_INF
    assert rv_sigma(RVElem(S.gamma_zero, s), S.residue) == RVElem(S.gamma_zero, s + 1)
    assert rv_sigma(rv(t), F.residue) == rv(t.sigma())


def test_cross_section_examples():
    g1, g2 = F.gamma(1, 2), F.gamma(r - 1)
    assert cross_section(F, g1 + g2) == cross_section(F, g1) * cross_section(F, g2)
    # tau = 2 + sigma with multi-index (2, 1)
    sg = cross_section(F, g1)
    assert cross_section(F, VG.scalar_mul(2 + r, g1)) == sg ** 2 * sg.sigma()
    assert cross_section(F, g2).valuation() == g2


def test_axiom4_witness_examples():
    w, status = axiom4_witness(F, F.gamma(1))
    assert w == t and status == WitnessStatus.VERIFIED
    # sigma^2(t) / t^2 = t^(rho^2 - 2) = 1
    assert t.sigma().sigma() * (t ** -2) == F.one
    assert axiom4_witness(F, F.gamma_zero)[0] == F.one
    one = HahnField(Rational(1, 1), RationalIdentity())
    w, status = axiom4_witness(one, one.gamma(1))
    assert w.sigma() / w == one.one and status == WitnessStatus.VERIFIED


def test_axiom4_witness_not_applicable():
    for rho in (SQRT2_PLUS, INFINITE):
        K = HahnField(rho, RationalIdentity())
        w, status = axiom4_witness(K, K.gamma(1))
        assert w == K.t() and status == WitnessStatus.NOT_APPLICABLE


def test_encode_decode_examples():
    assert rv_encode(F.gamma_zero, 0) is RV_INF
    assert rv_decode(rv(3 * t)) == (F.gamma(1), 3)
    with pytest.raises(ZeroCoefficient):
        rv_encode(F.gamma(1), 0)
    with pytest.raises(InfinityDecode):
        rv_decode(RV_INF)


def test_rv_text_form():
    assert str(rv(3 * t)) == "rv(γ=(1)/(1), lc=3)"
    assert str(RV_INF) == "rv(inf)"


# -- properties

seeds = st.integers(0, 10 ** 9)
fields_st = st.sampled_from([f for _, f in fields()])


@given(seeds, fields_st)
def test_rv_is_homomorphism(seed, K):
    rng = random.Random(seed)
    x, y = rand_series(rng, K), rand_series(rng, K)
    assert rv_mul(rv(x), rv(y)) == rv(x * y)
    if x:
        assert rv_mul(rv(x), rv_inv(rv(x))) == RVElem(K.gamma_zero, 1)


def rv_equivalence_clauses(x, y):
    """The three equivalent statements for nonzero x, y."""
    a = rv(x) == rv(y)
    b = VG.compare((x - y).valuation(), y.valuation()) > 0
    if VG.compare(x.valuation(), y.valuation()) < 0:
        c = False
    else:
        # relative precision 0 is enough to read off the residue of x / y
        c = (x * y.invert(x.field.gamma_zero)).residue_pi() == 1
    return a, b, c


@given(seeds, fields_st)
def test_rv_equivalence(seed, K):
    rng = random.Random(seed)
    y = rand_nonzero_series(rng, K, small=True)
    x = y * (1 + rand_series(rng, K, positive=True, small=True)) if rng.random() < 0.5 \
        else rand_nonzero_series(rng, K, small=True)
    a, b, c = rv_equivalence_clauses(x, y)
    assert a == b == c


def rv_sum_sound(xs):
    r = rv_sum([rv(x) for x in xs])
    total = xs[0].field.zero
    for x in xs:
        total = total + x
    m = INF
    for x in xs:
        if VG.compare(x.valuation(), m) < 0:
            m = x.valuation()
    if r is None:
        return VG.compare(total.valuation(), m) > 0
    return r == rv(total) and VG.compare(total.valuation(), m) == 0


@given(seeds, fields_st)
def test_rv_sum_soundness(seed, K):
    rng = random.Random(seed)
    xs = [rand_series(rng, K, small=True) for _ in range(rng.randint(1, 4))]
    if rng.random() < 0.4 and xs[0]:
        xs.append(-xs[0] + rand_series(rng, K, positive=True, small=True))
    assert rv_sum_sound(xs)


@given(seeds, fields_st)
def test_encode_decode_round_trip(seed, K):
    rng = random.Random(seed)
    g, c = rand_gamma(rng, K.rho), rand_coeff(rng, K.residue)
    e = rv_encode(g, c)
    assert rv_decode(e) == (g, c)
    assert e.valuation() == g
    assert rv(K.monomial(c, g)) == e


@given(seeds, fields_st)
def test_rv_sigma_multiplicative(seed, K):
    rng = random.Random(seed)
    x = rand_series(rng, K)
    s = rv_sigma(rv(x), K.residue)
    assert s == rv(x.sigma())
    assert VG.compare(s.valuation(), VG.sigma_gamma(rv(x).valuation())) == 0


def rand_multi_index(rng):
    return [rng.randint(0, 3) for _ in range(rng.randint(1, 3))]


def cross_section_law(K, idx, g):
    tau = LinOp([(j, i) for j, i in enumerate(idx)])
    lhs = cross_section(K, VG.scalar_mul(tau, g))
    rhs = K.one
    s = cross_section(K, g)
    for j, i in enumerate(idx):
        rhs = rhs * s.sigma_pow(j) ** i
    return lhs == rhs


@given(seeds, fields_st)
def test_cross_section_law(seed, K):
    rng = random.Random(seed)
    assert cross_section_law(K, rand_multi_index(rng), rand_gamma(rng, K.rho))


@pytest.mark.parametrize("rho", [THREE_HALVES, SQRT2], ids=["3/2", "sqrt2"])
def test_axiom4_witness_random(rho):
    rng = random.Random(5)
    K = HahnField(rho, RationalIdentity())
    for _ in range(50):
        g = rand_gamma(rng, rho)
        w, status = axiom4_witness(K, g)
        assert status == WitnessStatus.VERIFIED and w.valuation() == g


def test_apply_operator_multiplicatively():
    g = F.gamma(1, 3)
    w = F.monomial(1, g)
    op = LinOp([(0, -2), (2, 1)])
    assert apply_operator_multiplicatively(w, op) == F.monomial(1, VG.scalar_mul(op, g))
    assert apply_operator_multiplicatively(F.const(Fraction(2)), LinOp.const(3)) == 8
