"""sigma-polynomials P(x, sigma(x), ..., sigma^n(x)) over a Hahn field."""
from itertools import product
from math import comb

from . import value_group as VG
from .errors import ZeroArgument, ZeroPolynomial
from .residue import ResiduePoly
from .rho_order import rho_length
from .value_group import INF

NEG_INF = float("-inf")


def _leq(i, j):
    return all(a <= b for a, b in zip(i, j))


def _unit(n, j):
    return tuple(1 if k == j else 0 for k in range(n + 1))


class SigmaPoly:
    """Sparse table ``{multi-index: coefficient}`` with explicit order bound ``n``."""

    __slots__ = ("field", "n", "table", "_hash")

    def __init__(self, field, n, table):
        self.field = field
        self.n = n
        clean = {}
        for idx, c in dict(table).items():
            idx = tuple(idx)
            if len(idx) != n + 1:
                raise ValueError(f"multi-index {idx} does not have length {n + 1}")
            if any(e < 0 for e in idx):
                raise ValueError(f"negative exponent in multi-index {idx}")
            c = field.coerce(c)
            if c:
                clean[idx] = c
        self.table = clean
        self._hash = None

    # -- constructors
    @classmethod
    def x(cls, field, j=0, n=None):
        """The variable ``sigma^j(x)``."""
        n = j if n is None else n
        return cls(field, n, {_unit(n, j): field.one})

    @classmethod
    def constant(cls, field, c, n=0):
        c = field.coerce(c)
        return cls(field, n, {(0,) * (n + 1): c} if c else {})

    def extend(self, n):
        if n == self.n:
            return self
        if n < self.n:
            raise ValueError("cannot shrink the order bound")
        pad = (0,) * (n - self.n)
        return SigmaPoly(self.field, n, {i + pad: c for i, c in self.table.items()})

    # -- structure
    def __bool__(self):
        return bool(self.table)

    def __eq__(self, other):
        if not isinstance(other, SigmaPoly):
            return NotImplemented
        n = max(self.n, other.n)
        return self.field == other.field and self.extend(n).table == other.extend(n).table

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.trimmed().table.items()))
        return self._hash

    def __repr__(self):
        from .parsing import format_sigmapoly
        return f"SigmaPoly({format_sigmapoly(self)!r})"

    def __str__(self):
        from .parsing import format_sigmapoly
        return format_sigmapoly(self)

    def trimmed(self):
        """Same polynomial with order bound equal to its order (at least 0)."""
        d = max(self.order(), 0)
        return SigmaPoly(self.field, d, {i[: d + 1]: c for i, c in self.table.items()})

    def order(self):
        """Largest d with x_d occurring; -inf for constants."""
        d = NEG_INF
        for idx in self.table:
            for j in range(self.n, -1, -1):
                if idx[j]:
                    if j > d:
                        d = j
                    break
        return d

    def degree(self):
        if not self.table:
            return NEG_INF
        return max(sum(i) for i in self.table)

    def is_constant(self):
        return all(not any(i) for i in self.table)

    def complexity(self):
        if not self.table:
            return (NEG_INF, NEG_INF, NEG_INF)
        d = self.order()
        if d == NEG_INF:
            return (NEG_INF, 0, 0)
        return (d, max(i[d] for i in self.table), self.degree())

    def constant_term(self):
        return self.table.get((0,) * (self.n + 1), self.field.zero)

    # -- arithmetic
    def _align(self, other):
        if not isinstance(other, SigmaPoly):
            other = SigmaPoly.constant(self.field, other, self.n)
        n = max(self.n, other.n)
        return self.extend(n), other.extend(n)

    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.table)
        for i, c in b.table.items():
            out[i] = out[i] + c if i in out else c
        return SigmaPoly(a.field, a.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SigmaPoly(self.field, self.n, {i: -c for i, c in self.table.items()})

    def __sub__(self, other):
        a, b = self._align(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._align(other)
        out = {}
        for i, c in a.table.items():
            for j, d in b.table.items():
                k = tuple(x + y for x, y in zip(i, j))
                v = c * d
                out[k] = out[k] + v if k in out else v
        return SigmaPoly(a.field, a.n, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a sigma-polynomial")
        out = SigmaPoly.constant(self.field, 1, self.n)
        for _ in range(e):
            out = out * self
        return out

    # -- evaluation
    def orbit(self, a):
        out = [a]
        for _ in range(self.n):
            out.append(out[-1].sigma())
        return out

    def eval(self, a):
        """``P(a, sigma(a), ..., sigma^n(a))``."""
        return evaluate_at_orbit(self.table, self.orbit(a), self.field)

    __call__ = eval

    def taylor_coeff(self, J):
        """``P_(J) = d_J P / J!``."""
        J = tuple(J)
        if len(J) != self.n + 1:
            raise ValueError(f"multi-index {J} does not have length {self.n + 1}")
        out = {}
        for idx, c in self.table.items():
            if _leq(J, idx):
                m = 1
                for a, b in zip(idx, J):
                    m *= comb(a, b)
                out[tuple(a - b for a, b in zip(idx, J))] = c * m
        return SigmaPoly(self.field, self.n, out)

    def taylor_indices(self):
        """Every J with ``P_(J) != 0`` (the multi-indices below some stored index)."""
        seen = set()
        for idx in self.table:
            for J in product(*(range(e + 1) for e in idx)):
                seen.add(J)
        return sorted(seen, key=lambda j: (sum(j), j))

    def taylor_at(self, a):
        """``{J: P_(J)(a)}`` for every J with ``P_(J) != 0``; values may be zero."""
        orb = self.orbit(a)
        return {J: evaluate_at_orbit(self.taylor_coeff(J).table, orb, self.field)
                for J in self.taylor_indices()}

    def translate(self, a):
        """``P(x + a)``, via the Taylor expansion at ``a``."""
        return SigmaPoly(self.field, self.n, self.taylor_at(a))

    def scale_argument(self, a):
        """The coefficient table of ``P(a*x)``."""
        orb = self.orbit(a)
        out = {}
        for idx, c in self.table.items():
            out[idx] = c * _orbit_power(orb, idx, self.field)
        return SigmaPoly(self.field, self.n, out)


def _orbit_power(orb, idx, field):
    term = field.one
    for v, e in zip(orb, idx):
        if e:
            term = term * v ** e
    return term


def evaluate_at_orbit(table, orb, field):
    total = field.zero
    powers = {}
    for idx, c in table.items():
        term = c
        for j, e in enumerate(idx):
            if e:
                key = (j, e)
                if key not in powers:
                    powers[key] = orb[j] ** e
                term = term * powers[key]
        total = total + term
    return total


def monomial_valuation_min(P, a):
    """``min_I v(b_I) + |I|_rho * v(a)`` over the stored coefficients."""
    va = a.valuation()
    best = INF
    for idx, c in P.table.items():
        w = c.valuation() + VG.scalar_mul(rho_length(idx), va)
        if VG.compare(w, best) < 0:
            best = w
    return best


def is_generic_for(P, a):
    if not a:
        raise ZeroArgument("genericity needs a nonzero argument")
    return VG.compare(P.eval(a).valuation(), monomial_valuation_min(P, a)) == 0


def residue_poly_for(P, a):
    """The residue sigma-polynomial of ``P(a*x) / d`` with ``v(d)`` minimal and ``d`` monic."""
    if not a:
        raise ZeroArgument("residue polynomial needs a nonzero argument")
    if not P:
        raise ZeroPolynomial("residue polynomial of the zero sigma-polynomial")
    m = monomial_valuation_min(P, a)
    inv_d = P.field.monomial(1, -m)
    scaled = P.scale_argument(a)
    return ResiduePoly(P.n + 1, {idx: (c * inv_d).residue_pi() for idx, c in scaled.table.items()})


def make_generic(Ps, gamma):
    """An element of valuation ``gamma`` generic for every polynomial in ``Ps``."""
    Ps = list(Ps)
    if not Ps:
        raise ValueError("need at least one sigma-polynomial")
    field = Ps[0].field
    for P in Ps:
        if not P:
            raise ZeroPolynomial("cannot make an element generic for the zero polynomial")
    base = field.monomial(1, gamma)
    # the factor x_0 keeps the residue point, hence v(a) = gamma, away from zero
    f = ResiduePoly(1, {(1,): field.residue.one})
    for P in Ps:
        f = f * residue_poly_for(P, base)
    y = field.residue.nonvanishing_point(f)
    if y is None:
        return None
    return base * field.const(y)


def eval_poly(P, a):
    return P.eval(a)


def taylor_coeff(P, J):
    return P.taylor_coeff(J)


def complexity(P):
    return P.complexity()
