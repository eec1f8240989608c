"""Residue difference fields: the contract plus two concrete instances.

``RationalIdentity`` is Q with the identity automorphism (it fails the
non-fixed-point and linear-solvability axioms, which exercises failure
paths).  ``RationalFunctionShift`` is Q(s) with s -> s + 1.
"""
from fractions import Fraction
from itertools import count, product

from . import qpoly
from .errors import AllZeroCoefficients, ZeroPolynomial


class RatFunc:
    """A rational function in ``s`` over Q, reduced with a monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _normalized=False):
        num = qpoly.as_q(num) if not _normalized else num
        den = [Fraction(1)] if den is None else (qpoly.as_q(den) if not _normalized else den)
        if not _normalized:
            if not den:
                raise ZeroDivisionError("rational function with zero denominator")
            if not num:
                den = [Fraction(1)]
            else:
                g = qpoly.gcd(num, den)
                if len(g) > 1:
                    num = qpoly.divmod_(num, g)[0]
                    den = qpoly.divmod_(den, g)[0]
                lc = den[-1]
                num = [c / lc for c in num]
                den = [c / lc for c in den]
        self.num = tuple(num)
        self.den = tuple(den)
        self._hash = None

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return cls([Fraction(x)] if x else [], None)
        return NotImplemented

    @classmethod
    def symbol(cls):
        return cls([Fraction(0), Fraction(1)])

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if len(self.den) == 1 and len(self.num) <= 1:
                # agree with Fraction hashing for constants
                self._hash = hash(self.num[0] if self.num else Fraction(0))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        from .parsing import format_carrier
        return f"RatFunc({format_carrier(self)!r})"

    __str__ = lambda self: __import__("multval.parsing", fromlist=["x"]).format_carrier(self)

    def __neg__(self):
        return RatFunc([-c for c in self.num], list(self.den), _normalized=True)

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(qpoly.add(list(self.num), list(other.num)), list(self.den))
        return RatFunc(qpoly.add(qpoly.mul(list(self.num), list(other.den)),
                                 qpoly.mul(list(other.num), list(self.den))),
                       qpoly.mul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __sub__(self, other):
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(qpoly.mul(list(self.num), list(other.num)),
                       qpoly.mul(list(self.den), list(other.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(qpoly.mul(list(self.num), list(other.den)),
                       qpoly.mul(list(self.den), list(other.num)))

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc.coerce(1) / (self ** (-n))
        out = RatFunc.coerce(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, c):
        """``f(s + c)``."""
        return RatFunc(qpoly.compose_shift(list(self.num), c),
                       qpoly.compose_shift(list(self.den), c))

    def degree_bound(self):
        return max(len(self.num), len(self.den)) - 1

    @property
    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        return self.num[0] if self.num else Fraction(0)


class ResiduePoly:
    """A polynomial in ``x_0..x_n`` over a residue carrier: ``{multi-index: coeff}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms):
        self.nvars = nvars
        self.terms = {tuple(i): c for i, c in terms.items() if c}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ResiduePoly):
            return NotImplemented
        a, b = self._widen(other)
        return a.terms == b.terms

    def _widen(self, other):
        n = max(self.nvars, other.nvars)
        return self.extend(n), other.extend(n)

    def extend(self, n):
        if n == self.nvars:
            return self
        pad = (0,) * (n - self.nvars)
        return ResiduePoly(n, {i + pad: c for i, c in self.terms.items()})

    def __mul__(self, other):
        a, b = self._widen(other)
        out = {}
        for i, c in a.terms.items():
            for j, d in b.terms.items():
                k = tuple(x + y for x, y in zip(i, j))
                out[k] = out.get(k, 0) + c * d
        return ResiduePoly(a.nvars, out)

    def __add__(self, other):
        a, b = self._widen(other)
        out = dict(a.terms)
        for j, d in b.terms.items():
            out[j] = out.get(j, 0) + d
        return ResiduePoly(a.nvars, out)

    def __neg__(self):
        return ResiduePoly(self.nvars, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def evaluate(self, point):
        total = 0
        for idx, c in self.terms.items():
            term = c
            for v, e in zip(point, idx):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def evaluate_orbit(self, field, y):
        """``f(y, sigma(y), ..., sigma^n(y))``."""
        orbit = [y]
        for _ in range(self.nvars - 1):
            orbit.append(field.sigma_bar(orbit[-1]))
        return self.evaluate(orbit)

    def __repr__(self):
        from .parsing import format_residue_poly
        return f"ResiduePoly({format_residue_poly(self)!r})"


def _gauss_solve(rows, rhs):
    """A particular solution of ``rows . u = rhs`` over Q, or None."""
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = a[i][ncols]
    return sol


class ResidueField:
    """Contract for residue difference fields."""

    name = "abstract"
    symbol = None

    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def invert(self, a):
        if not a:
            raise ZeroDivisionError("zero has no inverse")
        return self.one / a

    def eq(self, a, b):
        return a == b

    def sigma_bar(self, a):
        raise NotImplementedError

    def sigma_bar_inv(self, a):
        raise NotImplementedError

    def sigma_bar_pow(self, a, k):
        step = self.sigma_bar if k >= 0 else self.sigma_bar_inv
        for _ in range(abs(k)):
            a = step(a)
        return a

    def solve_linear(self, alphas):
        raise NotImplementedError

    def nonfixed_witness(self, d):
        raise NotImplementedError

    def candidates(self):
        raise NotImplementedError

    def check_linear(self, alphas, u):
        """``1 + sum alpha_i sigma^i(u)``, evaluated exactly."""
        total = self.one
        v = u
        for i, a in enumerate(alphas):
            if i:
                v = self.sigma_bar(v)
            total = total + a * v
        return total

    def nonvanishing_point(self, f, budget=1000):
        """A point ``y`` with ``f(y, sigma(y), ...) != 0``, searched up to ``budget``."""
        if not f:
            raise ZeroPolynomial("cannot find a nonvanishing point of the zero polynomial")
        for _, y in zip(range(budget), self.candidates()):
            if f.evaluate_orbit(self, y):
                return y
        return None

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self).__name__)

    def __repr__(self):
        return f"{type(self).__name__}()"


def _integers():
    yield 0
    for n in count(1):
        yield n
        yield -n


class RationalIdentity(ResidueField):
    """Q with the identity automorphism."""

    name = "rational-id"

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if not x.is_constant:
                raise ValueError("rational functions are not elements of Q")
            return x.constant_value()
        return Fraction(x)

    def sigma_bar(self, a):
        return a

    def sigma_bar_inv(self, a):
        return a

    def solve_linear(self, alphas):
        alphas = [self.coerce(a) for a in alphas]
        if not any(alphas):
            raise AllZeroCoefficients("all coefficients of the linear equation are zero")
        total = sum(alphas, Fraction(0))
        if total == 0:
            return None
        return -1 / total

    def nonfixed_witness(self, d):
        if d < 1:
            raise ValueError("d must be positive")
        return None

    def candidates(self):
        for n in _integers():
            yield Fraction(n)

    def random_element(self, rng, nonzero=False):
        while True:
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            if a or not nonzero:
                return a


class RationalFunctionShift(ResidueField):
    """Q(s) with the automorphism s -> s + 1."""

    name = "rational-shift"
    symbol = "s"

    def coerce(self, x):
        r = RatFunc.coerce(x)
        if r is NotImplemented:
            raise TypeError(f"cannot coerce {x!r} into Q(s)")
        return r

    def sigma_bar(self, a):
        return a.shift(1)

    def sigma_bar_inv(self, a):
        return a.shift(-1)

    def solve_linear(self, alphas):
        """Search for a polynomial solution of ``1 + sum alpha_i sigma^i(u) = 0``."""
        alphas = [self.coerce(a) for a in alphas]
        if not any(alphas):
            raise AllZeroCoefficients("all coefficients of the linear equation are zero")
        support = [i for i, a in enumerate(alphas) if a]
        if len(support) == 1:
            # alpha_j sigma^j(u) = -1 has the exact solution sigma^-j(-1/alpha_j)
            j = support[0]
            return self.sigma_bar_pow(-1 / alphas[j], -j)
        den = [Fraction(1)]
        for a in alphas:
            g = qpoly.gcd(den, list(a.den))
            den = qpoly.mul(den, qpoly.divmod_(list(a.den), g)[0])
        betas = [qpoly.divmod_(qpoly.mul(list(a.num), den), list(a.den))[0] for a in alphas]
        bound = max(10, 2 * max(a.degree_bound() for a in alphas))
        cols = []
        for j in range(bound + 1):
            col = []
            for i, b in enumerate(betas):
                if b:
                    shifted = qpoly.compose_shift([Fraction(0)] * j + [Fraction(1)], i)
                    col = qpoly.add(col, qpoly.mul(b, shifted))
            cols.append(col)
        nrows = max([len(c) for c in cols] + [len(den)])
        rows = [[(c[r] if r < len(c) else Fraction(0)) for c in cols] for r in range(nrows)]
        rhs = [-(den[r] if r < len(den) else Fraction(0)) for r in range(nrows)]
        sol = _gauss_solve(rows, rhs)
        if sol is None:
            return None
        u = RatFunc(sol)
        if self.check_linear(alphas, u):
            return None
        return u

    def nonfixed_witness(self, d):
        if d < 1:
            raise ValueError("d must be positive")
        return RatFunc.symbol()

    def candidates(self):
        """Constants and polynomials ``s^e + c``, interleaved."""
        s = RatFunc.symbol()

        def polys():
            for total in count(1):
                for e, k in product(range(1, total + 1), range(total)):
                    if e + k == total:
                        c = (k + 1) // 2 * (1 if k % 2 else -1) if k else 0
                        yield s ** e + c

        consts = (RatFunc.coerce(n) for n in _integers())
        ps = polys()
        yield next(consts)
        yield next(consts)
        while True:
            yield next(ps)
            yield next(consts)

    def random_element(self, rng, nonzero=False):
        while True:
            num = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
            den = [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(0, 2))] + [Fraction(1)]
            if rng.random() < 0.5:
                den = [Fraction(1)]
            a = RatFunc(num, den)
            if a or not nonzero:
                return a


RESIDUE_FIELDS = {
    RationalIdentity.name: RationalIdentity,
    RationalFunctionShift.name: RationalFunctionShift,
}


def residue_field(name):
    try:
        return RESIDUE_FIELDS[name]()
    except KeyError:
        raise ValueError(f"unknown residue field {name!r}; choose from "
                         + ", ".join(sorted(RESIDUE_FIELDS))) from None
