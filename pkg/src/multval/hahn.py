"""Finite-support twisted Hahn series k((t^Gamma)) with sigma(t) = t^rho."""
from functools import cmp_to_key

from . import value_group as VG
from .errors import DivisionByZero, NegativeValuation, PrecisionUnreachable, ZeroCoefficient
from .value_group import INF, GammaElem

_term_key = cmp_to_key(lambda a, b: a[0]._cmp(b[0]))

# the doubling search for n with n*v(h) > cutoff gives up here
_ARCHIMEDEAN_LIMIT = 64


class HahnField:
    """The Hahn field attached to an order type of rho and a residue field."""

    def __init__(self, rho, residue):
        self.rho = rho
        self.residue = residue

    def __eq__(self, other):
        return (isinstance(other, HahnField) and self.rho == other.rho
                and self.residue == other.residue)

    def __hash__(self):
        return hash((self.rho, self.residue))

    def __repr__(self):
        return f"HahnField({self.rho!r}, {self.residue!r})"

    def gamma(self, g, l=1):
        return VG.frac(g, l, self.rho)

    @property
    def gamma_zero(self):
        return GammaElem.zero(self.rho)

    @property
    def zero(self):
        return HahnSeries(self, ())

    @property
    def one(self):
        return self.monomial(1, self.gamma_zero)

    def monomial(self, c, gamma):
        """``c * t^gamma``."""
        c = self.residue.coerce(c)
        if not c:
            raise ZeroCoefficient("monomial with zero coefficient")
        if isinstance(gamma, int):
            gamma = GammaElem.integer(gamma, self.rho)
        return HahnSeries(self, ((gamma, c),))

    def t(self, gamma=1):
        return self.monomial(1, gamma)

    def const(self, c):
        c = self.residue.coerce(c)
        return HahnSeries(self, ((self.gamma_zero, c),) if c else ())

    def series(self, pairs):
        """Build a series from ``(exponent, coefficient)`` pairs, merging repeats."""
        acc = {}
        for g, c in pairs:
            if isinstance(g, int):
                g = GammaElem.integer(g, self.rho)
            c = self.residue.coerce(c)
            acc[g] = acc[g] + c if g in acc else c
        return HahnSeries(self, sorted(((g, c) for g, c in acc.items() if c), key=_term_key))

    def coerce(self, x):
        if isinstance(x, HahnSeries):
            return x
        return self.const(x)


class HahnSeries:
    """An element of k((t^Gamma)) with finite support, terms in increasing exponent."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field, terms):
        self.field = field
        self.terms = tuple(terms)
        self._hash = None

    # -- inspection
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def valuation(self):
        return self.terms[0][0] if self.terms else INF

    def lead(self):
        """Leading coefficient (None for zero)."""
        return self.terms[0][1] if self.terms else None

    def leading_term(self):
        return HahnSeries(self.field, self.terms[:1])

    def coefficient(self, gamma):
        for g, c in self.terms:
            if g == gamma:
                return c
        return self.field.residue.zero

    @property
    def is_monomial(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, HahnSeries):
            return self.field == other.field and self.terms == other.terms
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self):
        from .parsing import format_series
        return f"HahnSeries({format_series(self)!r})"

    def __str__(self):
        from .parsing import format_series
        return format_series(self)

    # -- ring structure
    def _lift(self, other):
        if isinstance(other, HahnSeries):
            if other.field != self.field:
                raise ValueError("series over different Hahn fields")
            return other
        try:
            return self.field.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        a, b = self.terms, other.terms
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            c = a[i][0]._cmp(b[j][0])
            if c < 0:
                out.append(a[i])
                i += 1
            elif c > 0:
                out.append(b[j])
                j += 1
            else:
                s = a[i][1] + b[j][1]
                if s:
                    out.append((a[i][0], s))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return HahnSeries(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return HahnSeries(self.field, [(g, -c) for g, c in self.terms])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.field.zero
        if len(other.terms) == 1:
            g0, c0 = other.terms[0]
            if not g0 and c0 == 1:
                return self
            # a monomial factor preserves the order of exponents
            return HahnSeries(self.field, [(g + g0, c * c0) for g, c in self.terms])
        if len(self.terms) == 1:
            return other * self
        acc = {}
        for g1, c1 in self.terms:
            for g2, c2 in other.terms:
                g = g1 + g2
                c = c1 * c2
                acc[g] = acc[g] + c if g in acc else c
        return HahnSeries(self.field, sorted(((g, c) for g, c in acc.items() if c), key=_term_key))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only for monomials; use invert")
            return self.monomial_inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def monomial_inverse(self):
        if len(self.terms) != 1:
            raise ValueError("not a monomial")
        g, c = self.terms[0]
        return HahnSeries(self.field, ((-g, self.field.residue.invert(c)),))

    def __truediv__(self, other):
        """Exact division by a monomial."""
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            raise DivisionByZero("division by the zero series")
        return self * other.monomial_inverse()

    # -- difference structure
    def sigma(self):
        sb = self.field.residue.sigma_bar
        return HahnSeries(self.field, [(VG.sigma_gamma(g), sb(c)) for g, c in self.terms])

    def sigma_inv(self):
        sbi = self.field.residue.sigma_bar_inv
        return HahnSeries(self.field, [(VG.sigma_inv_gamma(g), sbi(c)) for g, c in self.terms])

    def sigma_pow(self, k):
        x = self
        step = HahnSeries.sigma if k >= 0 else HahnSeries.sigma_inv
        for _ in range(abs(k)):
            x = step(x)
        return x

    def residue_pi(self):
        if not self.terms:
            return self.field.residue.zero
        g0 = self.terms[0][0]
        s = g0.sign()
        if s < 0:
            raise NegativeValuation(f"residue map needs v(x) >= 0, got {g0}")
        if s == 0:
            return self.terms[0][1]
        return self.field.residue.zero

    def truncate(self, cutoff):
        """Drop terms with exponent above ``cutoff``."""
        if cutoff is INF:
            return self
        return HahnSeries(self.field, [(g, c) for g, c in self.terms if g._cmp(cutoff) <= 0])

    def invert(self, cutoff):
        """A finite ``y`` with ``v(self*y - 1) > cutoff`` and ``v(y) = -v(self)``."""
        if not self.terms:
            raise DivisionByZero("the zero series has no inverse")
        F = self.field
        g0, c0 = self.terms[0]
        lead_inv = HahnSeries(F, ((-g0, F.residue.invert(c0)),))
        h = (self * lead_inv) - F.one
        if not h.terms:
            return lead_inv
        if cutoff is INF:
            raise PrecisionUnreachable("an infinite cutoff needs an exact inverse")
        if cutoff.sign() >= 0:
            _check_reachable(h.valuation(), cutoff)
        neg_h = -h
        w = F.one
        p = F.one
        while True:
            p = (p * neg_h).truncate(cutoff)
            if not p.terms:
                break
            w = w + p
        return w * lead_inv


def _check_reachable(delta, cutoff):
    """Find n <= 2^64 with n*delta > cutoff by doubling, else give up."""
    n = 1
    for _ in range(_ARCHIMEDEAN_LIMIT + 1):
        if VG.scalar_mul(n, delta)._cmp(cutoff) > 0:
            return n
        n *= 2
    raise PrecisionUnreachable(
        f"cutoff {cutoff} is not reached by multiples of {delta}; "
        "the value group is not archimedean here")


def valuation(x):
    return x.valuation()


def monomial(field, c, gamma):
    return field.monomial(c, gamma)


def sigma(x):
    return x.sigma()


def sigma_inv(x):
    return x.sigma_inv()


def residue_pi(x):
    return x.residue_pi()


def invert(x, cutoff):
    return x.invert(cutoff)


def truncate(x, cutoff):
    return x.truncate(cutoff)
