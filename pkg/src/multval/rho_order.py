"""The ordered ring Z[rho, rho^-1] and the sign oracle for a chosen order type of rho.

A :class:`LinOp` is an integer Laurent polynomial in ``rho``; acting on a
value group it is a linear difference operator.  The order type of rho is
one of the :class:`RhoSpec` kinds below, and :func:`sign` decides the sign
every such operator takes on positive elements.
"""
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from math import gcd

import sympy

from . import kernels as K
from . import qpoly
from .errors import InvalidRhoSpec


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __str__(self):
        return self.name.lower()


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self):
        return self.name.lower()


# ---------------------------------------------------------------- LinOp

class LinOp:
    """Integer Laurent polynomial ``sum c_e rho^e`` in canonical form.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs with strictly
    increasing exponents and nonzero coefficients.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        acc = {}
        for e, c in terms:
            if c:
                acc[e] = acc.get(e, 0) + c
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _canonical(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        return cls._canonical(((0, c),) if c else ())

    @classmethod
    def rho_power(cls, e, c=1):
        return cls._canonical(((e, c),) if c else ())

    @classmethod
    def from_dense(cls, low, coeffs):
        return cls._canonical(tuple((low + i, c) for i, c in enumerate(coeffs) if c))

    def dense(self):
        """``(low, coeffs)`` with ``self == rho^low * sum coeffs[i] rho^i``."""
        if not self.terms:
            return 0, []
        low = self.terms[0][0]
        out = [0] * (self.terms[-1][0] - low + 1)
        for e, c in self.terms:
            out[e - low] = c
        return low, out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LinOp.const(other)
        if not isinstance(other, LinOp):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("LinOp", self.terms))
        return self._hash

    def __repr__(self):
        from .parsing import format_linop
        return f"LinOp({format_linop(self)!r})"

    def __str__(self):
        from .parsing import format_linop
        return format_linop(self)

    def __neg__(self):
        return LinOp._canonical(tuple((e, -c) for e, c in self.terms))

    def __add__(self, other):
        if isinstance(other, int):
            other = LinOp.const(other)
        if not isinstance(other, LinOp):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        return LinOp(self.terms + other.terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LinOp.const(other)
        if not isinstance(other, LinOp):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LinOp._canonical(tuple((e, c * other) for e, c in self.terms) if other else ())
        if not isinstance(other, LinOp):
            return NotImplemented
        if not self.terms or not other.terms:
            return LinOp()
        la, a = self.dense()
        lb, b = other.dense()
        return LinOp.from_dense(la + lb, K.mul(a, b))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("negative powers exist only for unit monomials")
            e, c = self.terms[0]
            return LinOp.rho_power(e * n, c ** (-n))
        out = LinOp.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @property
    def is_zero(self):
        return not self.terms

    def leading_coefficient(self):
        return self.terms[-1][1] if self.terms else 0


RHO = LinOp.rho_power(1)
ONE = LinOp.const(1)
ZERO = LinOp()


def add(l1, l2):
    return l1 + l2


def neg(l):
    return -l


def mul(l1, l2):
    return l1 * l2


def rho_length(index):
    """``i_0 + i_1 rho + ... + i_n rho^n`` for a multi-index."""
    return LinOp((j, i) for j, i in enumerate(index))


# ---------------------------------------------------------------- order types

class RhoSpec:
    """Base class of the order types of rho."""

    is_algebraic = False

    @property
    def is_transcendental(self):
        return not self.is_algebraic

    def exceeds_one(self):
        """True when rho > 1 (strictly)."""
        return sign(RHO - ONE, self) == Sign.POSITIVE


@dataclass(frozen=True)
class Rational(RhoSpec):
    p: int
    q: int = 1

    is_algebraic = True

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if q <= 0:
            raise InvalidRhoSpec("rational rho needs a positive denominator")
        g = gcd(p, q)
        p, q = p // g, q // g
        if p < q:
            raise InvalidRhoSpec("rho must be >= 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def minpoly(self):
        return (-self.p, self.q)

    @property
    def degree(self):
        return 1

    @property
    def value(self):
        return Fraction(self.p, self.q)


def _count_roots(coeffs, lo, hi):
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x)
    return poly.count_roots(sympy.Rational(lo.numerator, lo.denominator),
                            sympy.Rational(hi.numerator, hi.denominator))


@dataclass(frozen=True)
class AlgebraicReal(RhoSpec):
    """Real algebraic rho isolated by ``minpoly`` (constant-first) in ``[lo, hi]``.

    On construction the polynomial is replaced by its irreducible factor
    vanishing at the isolated root, so that exact remainders decide zero.
    """

    minpoly: tuple
    lo: Fraction
    hi: Fraction
    given: tuple = field(default=None, compare=False, repr=False)

    is_algebraic = True

    def __post_init__(self):
        coeffs = K.strip([int(c) for c in self.minpoly])
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if len(coeffs) < 2:
            raise InvalidRhoSpec("minimal polynomial must have degree >= 1")
        if coeffs[-1] < 0:
            raise InvalidRhoSpec("minimal polynomial needs a positive leading coefficient")
        if K.content(coeffs) != 1:
            raise InvalidRhoSpec("minimal polynomial must be primitive")
        if lo > hi:
            raise InvalidRhoSpec("isolating interval has lo > hi")
        x = sympy.Symbol("x")
        poly = sympy.Poly(list(reversed(coeffs)), x)
        if sympy.degree(sympy.gcd(poly, poly.diff(x))) > 0:
            raise InvalidRhoSpec("minimal polynomial must be squarefree")
        if _count_roots(coeffs, lo, hi) != 1:
            raise InvalidRhoSpec("interval must isolate exactly one real root")
        if hi < 1 or _count_roots(coeffs, max(lo, Fraction(1)), hi) != 1:
            raise InvalidRhoSpec("the isolated root must be >= 1")
        lo = max(lo, Fraction(1))
        factor = None
        for fac, _ in poly.factor_list()[1]:
            fc = [int(c) for c in reversed(fac.all_coeffs())]
            if fc[-1] < 0:
                fc = [-c for c in fc]
            if _count_roots(fc, lo, hi) == 1:
                factor = fc
                break
        assert factor is not None
        object.__setattr__(self, "given", tuple(coeffs))
        object.__setattr__(self, "minpoly", tuple(factor))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def degree(self):
        return len(self.minpoly) - 1

    @property
    def rational_value(self):
        """The root when the minimal polynomial is linear, else None."""
        if self.degree == 1:
            return Fraction(-self.minpoly[0], self.minpoly[1])
        return None


@dataclass(frozen=True)
class AlgebraicPlusEps(RhoSpec):
    """rho infinitesimally above a real algebraic number >= 1."""

    base: AlgebraicReal


@dataclass(frozen=True)
class AlgebraicMinusEps(RhoSpec):
    """rho infinitesimally below a real algebraic number > 1."""

    base: AlgebraicReal

    def __post_init__(self):
        if self.base.rational_value == 1:
            raise InvalidRhoSpec("rho = a - eps needs a > 1")


@dataclass(frozen=True)
class Infinite(RhoSpec):
    """rho larger than every integer (the contractive case)."""


ISOMETRIC = Rational(1, 1)


def minimal_polynomial(rho):
    """Integer minimal polynomial (constant-first) of an algebraic rho."""
    if isinstance(rho, (Rational, AlgebraicReal)):
        return tuple(rho.minpoly)
    raise ValueError("rho is transcendental")


# ---------------------------------------------------------------- sign oracle

_intervals = {}


def _root_interval(spec):
    cached = _intervals.get(spec)
    if cached is None:
        lo, hi = spec.lo, spec.hi
        den = lo.denominator * hi.denominator // gcd(lo.denominator, hi.denominator)
        cached = (int(lo * den), int(hi * den), den)
        _intervals[spec] = cached
    return cached


def _sign_dense_algebraic(coeffs, spec):
    """Sign at the root of ``spec`` of an integer polynomial (constant-first)."""
    if not coeffs:
        return 0
    if isinstance(spec, Rational):
        return K.sign_at_rational(coeffs, spec.p, spec.q)
    root = spec.rational_value
    if root is not None:
        return K.sign_at_rational(coeffs, root.numerator, root.denominator)
    f = list(spec.minpoly)
    r, _ = K.pseudo_rem(coeffs, f)
    if not r:
        return 0
    lo, hi, den = _root_interval(spec)
    s, lo, hi, den = K.sign_at_root(r, f, lo, hi, den)
    _intervals[spec] = (lo, hi, den)
    return s


def _derivative(coeffs):
    return K.strip([i * coeffs[i] for i in range(1, len(coeffs))])


@lru_cache(maxsize=1 << 16)
def _sign_terms(terms, spec):
    if not terms:
        return 0
    if isinstance(spec, Infinite):
        c = terms[-1][1]
        return 1 if c > 0 else -1
    _, coeffs = LinOp._canonical(terms).dense()
    # rho^low > 0, so clearing negative exponents keeps the sign
    if isinstance(spec, (Rational, AlgebraicReal)):
        return _sign_dense_algebraic(coeffs, spec)
    flip = -1 if isinstance(spec, AlgebraicMinusEps) else 1
    k_sign = 1
    p = coeffs
    while p:
        s = _sign_dense_algebraic(p, spec.base)
        if s:
            return s * k_sign
        p = _derivative(p)
        k_sign *= flip
    raise AssertionError("nonzero Laurent polynomial with all derivatives zero")


def sign(l, rho):
    """Sign of the operator ``l`` on positive elements (Axiom OM trichotomy)."""
    return Sign(_sign_terms(l.terms, rho))


def compare(l1, l2, rho):
    return Ordering(_sign_terms((l1 - l2).terms, rho))


# ---------------------------------------------------------------- Z[rho]/Ker

@lru_cache(maxsize=64)
def _rho_inverse(spec):
    f = qpoly.as_q(minimal_polynomial(spec))
    return tuple(qpoly.inverse_mod([Fraction(0), Fraction(1)], f))


def reduce_q(l, rho):
    """Exact image of ``l`` in Q[rho]/(minpoly) as a Fraction list of length < deg."""
    f = qpoly.as_q(minimal_polynomial(rho))
    if not l.terms:
        return []
    low, coeffs = l.dense()
    r = qpoly.rem(qpoly.as_q(coeffs), f)
    if low > 0:
        r = qpoly.rem(qpoly.mul(r, qpoly.rem([Fraction(0)] * low + [Fraction(1)], f)), f)
    elif low < 0:
        inv = list(_rho_inverse(rho))
        power = [Fraction(1)]
        base = inv
        n = -low
        while n:
            if n & 1:
                power = qpoly.rem(qpoly.mul(power, base), f)
            base = qpoly.rem(qpoly.mul(base, base), f)
            n >>= 1
        r = qpoly.rem(qpoly.mul(r, power), f)
    return r


def reduce(l, rho):
    """Canonical integral representative of ``l`` in Z[rho]/Ker.

    For algebraic rho the result is the remainder modulo the minimal
    polynomial, scaled by the least positive integer that makes it
    integral (a positive rescaling, so signs are unchanged).  For
    transcendental rho the kernel is trivial and ``l`` is returned.
    """
    if not rho.is_algebraic:
        return l
    ints, _ = qpoly.to_integer(reduce_q(l, rho))
    return LinOp.from_dense(0, ints)
