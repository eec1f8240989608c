"""The prime-model value group: fractions ``[(g, L)]`` of operators over Z[rho].

For algebraic rho every class is stored as ``(polynomial of degree <
deg minpoly) / (positive integer)``; for transcendental rho as a reduced
fraction of integer Laurent polynomials with a positive denominator.  In
both cases structural equality coincides with equality of classes.
"""
from fractions import Fraction
from functools import cmp_to_key
from math import gcd

from . import kernels as K
from . import qpoly
from .errors import NonPositiveDenominator, ZeroOperator
from .rho_order import (
    LinOp, Ordering, Sign, _sign_terms, minimal_polynomial, reduce_q, sign,
)


class _Infinity:
    """The value of zero: larger than every element of the value group."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("multval.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INF = _Infinity()


def _algebraic_normal(num_q, rho):
    """Integer numerator and positive integer denominator of a Q[rho] element."""
    ints, m = qpoly.to_integer(num_q)
    g = gcd(K.content(ints), m) if ints else m
    return LinOp.from_dense(0, [c // g for c in ints]), LinOp.const(m // g)


def _normalize(num, den, rho):
    if rho.is_algebraic:
        f = qpoly.as_q(minimal_polynomial(rho))
        qn = reduce_q(num, rho)
        qd = reduce_q(den, rho)
        if not qn:
            return LinOp(), LinOp.const(1)
        if len(qd) == 1:
            value = [c / qd[0] for c in qn]
        else:
            value = qpoly.rem(qpoly.mul(qn, qpoly.inverse_mod(qd, f)), f)
        return _algebraic_normal(value, rho)
    if not num.terms:
        return LinOp(), LinOp.const(1)
    ln, n = num.dense()
    ld, d = den.dense()
    g = K.gcd(n, d)
    if len(g) > 1:
        n = K.exact_quo(n, g)
        d = K.exact_quo(d, g)
    c = gcd(K.content(n), K.content(d))
    if c != 1:
        n = [x // c for x in n]
        d = [x // c for x in d]
    den_op = LinOp.from_dense(0, d)
    num_op = LinOp.from_dense(ln - ld, n)
    if _sign_terms(den_op.terms, rho) < 0:
        num_op, den_op = -num_op, -den_op
    return num_op, den_op


class GammaElem:
    """An element ``num/den`` of the value group for a fixed order type of rho."""

    __slots__ = ("num", "den", "rho", "_hash")

    def __init__(self, num, den, rho, _normalized=False):
        if not _normalized:
            num, den = _normalize(num, den, rho)
        self.num = num
        self.den = den
        self.rho = rho
        self._hash = None

    # -- construction helpers
    @classmethod
    def zero(cls, rho):
        return cls(LinOp(), LinOp.const(1), rho, _normalized=True)

    @classmethod
    def integer(cls, n, rho):
        return frac(LinOp.const(n), LinOp.const(1), rho)

    # -- structure
    def __eq__(self, other):
        if not isinstance(other, GammaElem):
            return NotImplemented
        return (self.rho == other.rho and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den, self.rho))
        return self._hash

    def __repr__(self):
        from .parsing import format_gamma
        return f"GammaElem({format_gamma(self)!r})"

    def __str__(self):
        from .parsing import format_gamma
        return format_gamma(self)

    def __bool__(self):
        return bool(self.num.terms)

    @property
    def is_zero(self):
        return not self.num.terms

    def _check(self, other):
        if self.rho != other.rho:
            raise ValueError("value-group elements over different rho")

    def _fast(self, other):
        # algebraic canonical forms carry constant denominators
        return self.rho.is_algebraic and len(self.den.terms) == 1 and len(other.den.terms) == 1

    # -- group operations
    def __add__(self, other):
        if other is INF:
            return INF
        if not isinstance(other, GammaElem):
            return NotImplemented
        self._check(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self._fast(other):
            d1 = self.den.terms[0][1]
            d2 = other.den.terms[0][1]
            _, a = self.num.dense() if self.num.terms[0][0] == 0 else (0, _pad(self.num))
            _, b = other.num.dense() if other.num.terms[0][0] == 0 else (0, _pad(other.num))
            s = K.add(K.scale(a, d2), K.scale(b, d1))
            dd = d1 * d2
            g = gcd(K.content(s), dd) if s else dd
            return GammaElem(LinOp.from_dense(0, [x // g for x in s]),
                             LinOp.const(dd // g), self.rho, _normalized=True)
        return GammaElem(self.num * other.den + other.num * self.den,
                         self.den * other.den, self.rho)

    def __neg__(self):
        return GammaElem(-self.num, self.den, self.rho, _normalized=True)

    def __sub__(self, other):
        if not isinstance(other, GammaElem):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, op):
        if isinstance(op, int):
            op = LinOp.const(op)
        if not isinstance(op, LinOp):
            return NotImplemented
        return scalar_mul(op, self)

    # -- order
    def _cmp(self, other):
        if other is INF:
            return -1
        self._check(other)
        if self.num == other.num and self.den == other.den:
            return 0
        diff = self.num * other.den - other.num * self.den
        return _sign_terms(diff.terms, self.rho)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def sign(self):
        return Sign(_sign_terms(self.num.terms, self.rho))


def _pad(l):
    low, coeffs = l.dense()
    return [0] * low + coeffs


def frac(g, l, rho):
    """The class ``[(g, l)]``; ``l`` must be a positive operator."""
    if isinstance(g, int):
        g = LinOp.const(g)
    if isinstance(l, int):
        l = LinOp.const(l)
    if sign(l, rho) != Sign.POSITIVE:
        raise NonPositiveDenominator(f"denominator {l} is not positive")
    return GammaElem(g, l, rho)


def zero(rho):
    return GammaElem.zero(rho)


def add(g1, g2):
    return g1 + g2


def neg(g):
    return -g


def compare(g1, g2):
    """Total order of the value group (INF above everything)."""
    if g1 is INF:
        return Ordering.EQUAL if g2 is INF else Ordering.GREATER
    return Ordering(g1._cmp(g2))


def sort_key():
    return cmp_to_key(lambda a, b: compare(a, b))


def scalar_mul(l, gamma):
    """The operator ``l`` applied to ``gamma``."""
    if isinstance(l, int):
        l = LinOp.const(l)
    if gamma is INF:
        return INF
    if not l.terms or not gamma.num.terms:
        return GammaElem.zero(gamma.rho)
    return GammaElem(l * gamma.num, gamma.den, gamma.rho)


def divide(gamma, l):
    """The unique ``delta`` with ``l . delta == gamma``."""
    if isinstance(l, int):
        l = LinOp.const(l)
    s = sign(l, gamma.rho)
    if s == Sign.ZERO:
        raise ZeroOperator(f"operator {l} vanishes for this rho")
    if not gamma.num.terms:
        return gamma
    num, den = gamma.num, gamma.den * l
    if s == Sign.NEGATIVE:
        num, den = -num, -den
    return GammaElem(num, den, gamma.rho)


_RHO = LinOp.rho_power(1)
_RHO_INV = LinOp.rho_power(-1)


def sigma_gamma(gamma):
    """``rho . gamma``."""
    return scalar_mul(_RHO, gamma)


def sigma_inv_gamma(gamma):
    """``rho^-1 . gamma`` (rho^-1 is a unit of the operator ring)."""
    return scalar_mul(_RHO_INV, gamma)


class ValueGroup:
    """Convenience handle binding the value-group operations to one rho."""

    def __init__(self, rho):
        self.rho = rho

    def frac(self, g, l=1):
        return frac(g, l, self.rho)

    def __call__(self, g, l=1):
        return frac(g, l, self.rho)

    @property
    def zero(self):
        return GammaElem.zero(self.rho)

    def __repr__(self):
        return f"ValueGroup({self.rho!r})"

    def as_fraction(self, gamma):
        """Rational value of ``gamma`` when rho is rational, else None."""
        if gamma.rho.is_algebraic and len(minimal_polynomial(gamma.rho)) == 2:
            c = gamma.num.terms[0][1] if gamma.num.terms else 0
            return Fraction(c, gamma.den.terms[0][1])
        return None
