import random

import pytest

from generators import INFINITE, RHOS, SQRT2, rand_gamma, rand_nonzero_linop
from multval import (
    HahnField, LinOp, LiftStatus, NoNonzeroTerm, Rational, RatFunc, RationalFunctionShift,
    RationalIdentity, SolverFailed, TooShort, dominant_index, eventual_order, hensel_config,
    hensel_lift, hensel_step, is_pseudo_limit, parse_sigmapoly, pc_check,
)
from multval import value_group as VG
from multval.hensel import residue_equation

r = LinOp.rho_power(1)
F = HahnField(SQRT2, RationalIdentity())
S = HahnField(SQRT2, RationalFunctionShift())
t = F.t()
ONE_ROOT = "s(x)+x-(t^((r)/(1))+t^((1)/(1)))"


def P_(text, field=F):
    return parse_sigmapoly(text, field)


def a_n(n, field=F):
    return field.series([(VG.divide(field.gamma(-1), r ** i), 1) for i in range(1, n + 1)])


def test_config_one_step_root():
    cfg = hensel_config(P_(ONE_ROOT), F.zero)
    assert cfg.gamma == F.gamma(1) and cfg.strict and cfg.i_value == 0


def test_config_none_at_root():
    assert hensel_config(P_("s(x) - x"), F.zero) is None
    assert hensel_config(P_("t"), F.zero) is None


def test_positive_value_unit_coefficients():
    # v(P(a)) > 0 and unit Taylor coefficients
    P = P_("x + s(x) + x*s(x) - t^((1)/(2))")
    cfg = hensel_config(P, F.zero)
    assert cfg.gamma == F.gamma(1, 2) and cfg.strict and cfg.i_value == 0
    b = hensel_step(P, F.zero, cfg)
    assert b == F.monomial(1, F.gamma(1, 2))
    assert VG.compare(P.eval(b).valuation(), P.eval(F.zero).valuation()) > 0


def test_step_one_step_root():
    P = P_(ONE_ROOT)
    cfg = hensel_config(P, F.zero)
    assert residue_equation(P, F.zero, cfg) == [-1, 0]
    b = hensel_step(P, F.zero, cfg)
    assert b == t and not P.eval(b)


def test_step_solver_failed_identity():
    Q = P_("s(x) - x + 1")
    with pytest.raises(SolverFailed) as info:
        hensel_step(Q, F.zero)
    assert info.value.alphas == (-1, 1)
    assert info.value.equation == "1 - x + s(x) = 0"


def test_step_solved_under_shift():
    Q = P_("s(x) - x + 1", S)
    b = hensel_step(Q, S.zero)
    assert b == S.const(-RatFunc.symbol())
    assert not Q.eval(b)


def test_step_example_sequence_advances():
    # at a_n the configuration is strict with i = 1 and one step gives a_(n+1)
    P = P_("s(x) - x - t^((-1)/(1))")
    for n in range(1, 6):
        cfg = hensel_config(P, a_n(n))
        assert cfg.strict and cfg.i_value == 1
        assert cfg.gamma == VG.divide(F.gamma(-1), r ** (n + 1))
        assert hensel_step(P, a_n(n), cfg) == a_n(n + 1)


def test_lift_examples():
    rep = hensel_lift(P_(ONE_ROOT), F.zero, F.gamma(5), 10)
    assert rep.status == LiftStatus.ROOT_FOUND and rep.final == t and len(rep.trace) == 1
    rep = hensel_lift(P_("x^2 - t^2"), F.zero, F.gamma(5), 3)
    assert rep.status == LiftStatus.NOT_IN_CONFIGURATION and rep.final == F.zero
    rep = hensel_lift(P_("s(x) - x + 1"), F.zero, F.gamma(5), 3)
    assert rep.status == LiftStatus.SOLVER_FAILED
    rep = hensel_lift(P_("s(x) - x - t^((-1)/(1))"), a_n(1), F.gamma(5), 4)
    assert rep.status == LiftStatus.ITERATION_LIMIT and rep.final == a_n(5)
    rep = hensel_lift(P_("s(x) - x - t^((-1)/(1))"), a_n(1), F.gamma(-1, r ** 4), 10)
    # v(P(a_n)) = -rho^-n first exceeds -rho^-4 at n = 5
    assert rep.status == LiftStatus.PRECISION_REACHED and rep.final == a_n(5)
    with pytest.raises(ValueError):
        hensel_lift(P_(ONE_ROOT), F.zero, None, 0)


def test_eventual_order_examples():
    perm, thr = eventual_order([(F.gamma(10), LinOp.const(1)), (F.gamma(0), r)], SQRT2)
    assert perm == [0, 1] and thr == VG.divide(F.gamma(10), r - 1)
    assert eventual_order([(F.gamma(3), r)], SQRT2) == ([0], F.gamma_zero)
    perm, thr = eventual_order([(F.gamma(0), LinOp.const(1)), (F.gamma(0), r)], SQRT2)
    assert perm == [0, 1] and thr == F.gamma_zero
    from multval import DuplicateSlope
    with pytest.raises(DuplicateSlope):
        eventual_order([(F.gamma(0), r ** 2), (F.gamma(1), LinOp.const(2))], SQRT2)


def _brute_force_sorted(fns, x):
    vals = [c + VG.scalar_mul(n, x) for c, n in fns]
    return all(vals[i] < vals[i + 1] for i in range(len(vals) - 1))


@pytest.mark.parametrize("name", sorted(RHOS))
def test_eventual_order_brute_force(name):
    rho = RHOS[name]
    rng = random.Random(sorted(RHOS).index(name))
    for _ in range(20):
        fns = []
        while len(fns) < rng.randint(1, 6):
            n = rand_nonzero_linop(rng, rho, max_terms=2, lo=-1, hi=2, coeff=4)
            from multval import sign
            if all(sign(n - m, rho) != 0 for _, m in fns):
                fns.append((rand_gamma(rng, rho), n))
        perm, thr = eventual_order(fns, rho)
        ordered = [fns[i] for i in perm]
        one = VG.frac(1, 1, rho)
        for x in (thr + one, thr + one + one, thr + thr + one):
            assert _brute_force_sorted(ordered, x)


def test_dominant_index_examples():
    P = P_("s(x) - x")
    assert dominant_index(P, F.one, F.gamma(1)) == {(1, 0)}
    assert dominant_index(P, F.one, F.gamma(0)) == {(1, 0), (0, 1)}
    iso = HahnField(Rational(1, 1), RationalIdentity())
    assert dominant_index(P_("s(x) - x", iso), iso.one, iso.gamma(1)) == {(1, 0), (0, 1)}
    with pytest.raises(NoNonzeroTerm):
        dominant_index(P_("t"), F.one, F.gamma(1))


def test_pc_check_example_sequence():
    seq = [a_n(n) for n in range(1, 9)]
    rep = pc_check(seq)
    assert rep.is_pc and not rep.violations
    assert rep.gammas == [VG.divide(F.gamma(-1), r ** k) for k in range(2, 9)]
    assert all(rep.gammas[i] < rep.gammas[i + 1] for i in range(len(rep.gammas) - 1))


def test_pc_check_other_examples():
    assert not pc_check([t, t, t]).is_pc
    seq = [F.series([(F.gamma(i), 1) for i in range(1, n + 1)]) for n in range(1, 6)]
    rep = pc_check(seq)
    assert rep.is_pc and rep.gammas == [F.gamma(n + 1) for n in range(1, 5)]
    with pytest.raises(TooShort):
        pc_check([t, t])
    with pytest.raises(TooShort):
        pc_check([t, t, t], eta0=1)


def test_pseudo_limit_examples():
    seq = [a_n(n) for n in range(1, 9)]
    assert is_pseudo_limit(a_n(10), seq)
    assert not is_pseudo_limit(a_n(5), seq)
    assert not is_pseudo_limit(F.const(7), [t, t ** 2, t ** 3])
    with pytest.raises(TooShort):
        is_pseudo_limit(t, [t])


def test_lift_trace_invariants_on_example():
    P = P_("s(x) - x - t^((-1)/(1))")
    rep = hensel_lift(P, a_n(1), None, 6)
    vals = [v for _, v in rep.trace]
    gams = [g for g, _ in rep.trace]
    assert all(vals[i] < vals[i + 1] for i in range(len(vals) - 1))
    assert all(gams[i] < gams[i + 1] for i in range(len(gams) - 1))
    idx = [c.i_value for c in rep.configs]
    assert all(idx[i] >= idx[i + 1] for i in range(len(idx) - 1))


def test_infinite_rho_step():
    G = HahnField(INFINITE, RationalIdentity())
    P = parse_sigmapoly(ONE_ROOT, G)
    rep = hensel_lift(P, G.zero, None, 3)
    assert rep.status == LiftStatus.ROOT_FOUND and rep.final == G.t()
