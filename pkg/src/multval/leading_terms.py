"""Leading terms: RV = K^x / (1 + m) realised as (valuation, leading coefficient)."""
from dataclasses import dataclass
from enum import Enum

from . import value_group as VG
from .errors import InfinityDecode, InfinityInverse, ZeroCoefficient
from .rho_order import LinOp, minimal_polynomial
from .value_group import INF, GammaElem


@dataclass(frozen=True)
class RVElem:
    """``(gamma, lead)``; the element at infinity has both fields None."""

    gamma: object = None
    lead: object = None

    @property
    def is_infinite(self):
        return self.gamma is None

    def valuation(self):
        return INF if self.gamma is None else self.gamma

    def __str__(self):
        from .parsing import format_rv
        return format_rv(self)


RV_INF = RVElem()


def rv(x):
    if not x:
        return RV_INF
    return RVElem(x.valuation(), x.lead())


def rv_mul(r1, r2):
    if r1.is_infinite or r2.is_infinite:
        return RV_INF
    return RVElem(r1.gamma + r2.gamma, r1.lead * r2.lead)


def rv_inv(r):
    if r.is_infinite:
        raise InfinityInverse("rv(0) has no inverse")
    return RVElem(-r.gamma, 1 / r.lead)


def rv_sum(rs):
    """The well-defined sum of leading terms, or None when the leads cancel."""
    finite = [r for r in rs if not r.is_infinite]
    if not finite:
        return RV_INF
    m = finite[0].gamma
    for r in finite[1:]:
        if r.gamma < m:
            m = r.gamma
    total = None
    for r in finite:
        if r.gamma == m:
            total = r.lead if total is None else total + r.lead
    if not total:
        return None
    return RVElem(m, total)


def rv_sigma(r, residue):
    if r.is_infinite:
        return RV_INF
    return RVElem(VG.sigma_gamma(r.gamma), residue.sigma_bar(r.lead))


def cross_section(field, gamma):
    """``s(gamma) = t^gamma``."""
    return field.monomial(1, gamma)


class WitnessStatus(Enum):
    VERIFIED = "verified"
    NOT_APPLICABLE = "not-applicable"

    def __str__(self):
        return self.value


def apply_operator_multiplicatively(x, op):
    """``prod sigma^k(x)^{c_k}`` for ``op = sum c_k rho^k`` (x must be a monomial if some c_k < 0)."""
    out = x.field.one
    for e, c in op.terms:
        y = x.sigma_pow(e)
        out = out * (y ** c)
    return out


def axiom4_witness(field, gamma):
    """``(t^gamma, status)``: for algebraic rho, checks ``(P^sigma)(t^gamma) = 1``."""
    w = cross_section(field, gamma)
    rho = field.rho
    if not rho.is_algebraic:
        return w, WitnessStatus.NOT_APPLICABLE
    p = LinOp.from_dense(0, list(minimal_polynomial(rho)))
    if apply_operator_multiplicatively(w, p) != field.one:
        raise AssertionError(f"Axiom 4 identity fails for t^{gamma}")
    return w, WitnessStatus.VERIFIED


def rv_encode(gamma, c):
    """``(gamma, c) -> rv(c * t^gamma)``; the pair ``(0, 0)`` encodes infinity."""
    if not c:
        if isinstance(gamma, GammaElem) and gamma.is_zero or gamma == 0:
            return RV_INF
        raise ZeroCoefficient("only the pair (0, 0) may carry a zero coefficient")
    return RVElem(gamma, c)


def rv_decode(r):
    if r.is_infinite:
        raise InfinityDecode("rv(0) has no (gamma, lead) decoding")
    return r.gamma, r.lead
