"""sigma-Hensel configurations, Newton-type improvement steps and lifting.

Also the finite kernels used alongside them: the eventual order of affine
functions on the value group and pseudo-convergence diagnostics.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from . import value_group as VG
from .errors import DuplicateSlope, NoNonzeroTerm, SolverFailed, TooShort
from .rho_order import LinOp, Sign, rho_length, sign
from .sigma_poly import _leq, _unit
from .value_group import INF


class LiftStatus(Enum):
    ROOT_FOUND = "RootFound"
    PRECISION_REACHED = "PrecisionReached"
    SOLVER_FAILED = "SolverFailed"
    NOT_IN_CONFIGURATION = "NotInConfiguration"
    ITERATION_LIMIT = "IterationLimit"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class HenselConfig:
    gamma: object
    minimizing_indices: frozenset
    strict: bool
    i_value: object = None
    value: object = None  # v(P(a))


@dataclass
class LiftReport:
    final: object
    status: LiftStatus
    trace: list = field(default_factory=list)  # (gamma, v(P(b))) per step
    configs: list = field(default_factory=list)
    failure: object = None


def _lt(a, b):
    return VG.compare(a, b) < 0


def _le(a, b):
    return VG.compare(a, b) <= 0


def _weight(value, idx, gamma):
    """``v(value) + |idx|_rho * gamma`` (INF for a zero value)."""
    if not value:
        return INF
    return value.valuation() + VG.scalar_mul(rho_length(idx), gamma)


def _check_config(P, taylor, vpa, i, gamma):
    """Direct test of conditions (i) and (ii) for the candidate ``(i, gamma)``."""
    n = P.n
    target = _weight(taylor[_unit(n, i)], _unit(n, i), gamma)
    if VG.compare(target, vpa) != 0:
        return None
    minimizers = set()
    strict = True
    for j in range(n + 1):
        u = _unit(n, j)
        w = _weight(taylor.get(u, P.field.zero), u, gamma)
        c = VG.compare(vpa, w)
        if c > 0:
            return None
        if c == 0:
            minimizers.add(j)
            if j != i:
                strict = False
    zero = (0,) * (n + 1)
    weights = {}
    for J, val in taylor.items():
        if J != zero:
            weights[J] = _weight(val, J, gamma)
    for J, wJ in weights.items():
        if wJ is INF:
            return None
        for L, wL in weights.items():
            if L != J and _leq(J, L) and not _lt(wJ, wL):
                return None
    return minimizers, strict


def hensel_config(P, a):
    """The sigma-Hensel configuration of ``(P, a)``, or None."""
    if not P or P.is_constant():
        return None
    taylor = P.taylor_at(a)
    pa = taylor[(0,) * (P.n + 1)]
    if not pa:
        return None
    vpa = pa.valuation()
    found = None
    for i in range(P.n + 1):
        d = taylor.get(_unit(P.n, i))
        if not d:
            continue
        gamma = VG.divide(vpa - d.valuation(), LinOp.rho_power(i))
        res = _check_config(P, taylor, vpa, i, gamma)
        if res is None:
            continue
        if found is None:
            minimizers, strict = res
            found = HenselConfig(
                gamma=gamma,
                minimizing_indices=frozenset(minimizers),
                strict=strict and len(minimizers) == 1,
                i_value=min(minimizers) if len(minimizers) == 1 else None,
                value=vpa,
            )
        else:
            assert gamma == found.gamma, "configuration gamma is not unique"
    return found


def residue_equation(P, a, cfg):
    """The coefficients ``c_j`` of ``1 + sum c_j sigma_bar^j(x) = 0`` for a step at ``a``."""
    F = P.field
    pa = P.eval(a)
    lead_inv = F.residue.invert(pa.lead())
    alphas = []
    for j in range(P.n + 1):
        d = P.taylor_coeff(_unit(P.n, j)).eval(a)
        if d and VG.compare(_weight(d, _unit(P.n, j), cfg.gamma), cfg.value) == 0:
            alphas.append(d.lead() * lead_inv)
        else:
            alphas.append(F.residue.zero)
    return alphas


def hensel_step(P, a, cfg=None):
    """One improvement ``b = a + t^gamma * u``; raises SolverFailed if the residue equation is unsolved."""
    if cfg is None:
        cfg = hensel_config(P, a)
        if cfg is None:
            raise ValueError("(P, a) is not in sigma-Hensel configuration")
    F = P.field
    alphas = residue_equation(P, a, cfg)
    u = F.residue.solve_linear(alphas)
    if u is None:
        raise SolverFailed(alphas, F.residue)
    return a + F.monomial(1, cfg.gamma) * F.const(u)


def hensel_lift(P, a, target, max_iter=32):
    """Iterate hensel_step until a root, ``v(P(b)) > target``, failure, or ``max_iter`` steps."""
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    b = a
    report = LiftReport(final=a, status=LiftStatus.ITERATION_LIMIT)
    for _ in range(max_iter):
        pb = P.eval(b)
        if not pb:
            report.status = LiftStatus.ROOT_FOUND
            break
        if target is not None and VG.compare(pb.valuation(), target) > 0:
            report.status = LiftStatus.PRECISION_REACHED
            break
        cfg = hensel_config(P, b)
        if cfg is None:
            report.status = LiftStatus.NOT_IN_CONFIGURATION
            break
        try:
            b = hensel_step(P, b, cfg)
        except SolverFailed as exc:
            report.status = LiftStatus.SOLVER_FAILED
            report.failure = exc
            break
        report.configs.append(cfg)
        report.trace.append((cfg.gamma, P.eval(b).valuation()))
        report.final = b
    else:
        pb = P.eval(b)
        if not pb:
            report.status = LiftStatus.ROOT_FOUND
        elif target is not None and VG.compare(pb.valuation(), target) > 0:
            report.status = LiftStatus.PRECISION_REACHED
    report.final = b
    return report


# -- affine functions on the value group

def eventual_order(fns, rho):
    """Permutation sorting ``c_i + n_i*x`` for every ``x > threshold``.

    ``fns`` is a list of ``(c, n)`` with ``c`` a GammaElem and ``n`` a LinOp.
    """
    fns = list(fns)
    if not fns:
        raise ValueError("need at least one affine function")
    zero = VG.zero(rho)
    threshold = zero
    for (i, (ci, ni)), (j, (cj, nj)) in combinations(enumerate(fns), 2):
        diff = nj - ni
        s = sign(diff, rho)
        if s == Sign.ZERO:
            raise DuplicateSlope(f"functions {i} and {j} have the same slope")
        # c_i + n_i x = c_j + n_j x  <=>  (n_j - n_i) x = c_i - c_j
        cross = VG.divide(ci - cj, diff)
        if cross > threshold:
            threshold = cross
    perm = sorted(range(len(fns)), key=_slope_key(fns, rho))
    return perm, threshold


def _slope_key(fns, rho):
    from functools import cmp_to_key

    return cmp_to_key(lambda i, j: int(sign(fns[i][1] - fns[j][1], rho)))


def dominant_index(P, a, gamma):
    """Argmin over ``|I| >= 1`` of ``v(P_(I)(a)) + |I|_rho * gamma``."""
    best = INF
    arg = set()
    for I, val in P.taylor_at(a).items():
        if not any(I) or not val:
            continue
        w = _weight(val, I, gamma)
        c = VG.compare(w, best)
        if c < 0:
            best, arg = w, {I}
        elif c == 0:
            arg.add(I)
    if not arg:
        raise NoNonzeroTerm("no Taylor coefficient of positive order is nonzero at a")
    return arg


# -- pseudo-convergence

@dataclass
class PCReport:
    is_pc: bool
    gammas: list
    violations: list


def pc_check(seq, eta0=0):
    """Finite-prefix pseudo-convergence check from index ``eta0``."""
    seq = list(seq)
    if len(seq) - eta0 < 3:
        raise TooShort("a pc check needs at least three terms past eta0")
    tail = seq[eta0:]
    gammas = [(tail[k + 1] - tail[k]).valuation() for k in range(len(tail) - 1)]
    violations = []
    for k, g in enumerate(gammas):
        if g is INF:
            violations.append(f"a_{eta0 + k + 1} = a_{eta0 + k}")
    for k in range(len(gammas) - 1):
        if not _lt(gammas[k], gammas[k + 1]):
            violations.append(f"gamma_{eta0 + k} >= gamma_{eta0 + k + 1}")
    if not violations:
        # gamma_eta = v(a_eta' - a_eta) for every eta' > eta
        for k in range(len(tail)):
            for m in range(k + 2, len(tail)):
                if VG.compare((tail[m] - tail[k]).valuation(), gammas[k]) != 0:
                    violations.append(f"v(a_{eta0 + m} - a_{eta0 + k}) != gamma_{eta0 + k}")
    return PCReport(is_pc=not violations, gammas=gammas, violations=violations)


def is_pseudo_limit(a, seq, eta0=0):
    seq = list(seq)
    if len(seq) - eta0 < 2:
        raise TooShort("a pseudo-limit check needs at least two terms past eta0")
    vals = [(a - x).valuation() for x in seq[eta0:]]
    return all(_lt(vals[k], vals[k + 1]) for k in range(len(vals) - 1))
