"""Text syntax: printers and recursive-descent parsers for every object.

Reserved symbols: ``r`` is rho, ``t`` the series variable, ``x`` the
sigma-polynomial variable and ``s`` either sigma applied to ``x`` (``s(x)``,
``s^2(x)``) or the residue symbol of Q(s).
"""
import os
import re
from fractions import Fraction

from . import value_group as VG
from .errors import ParseError
from .residue import RatFunc, residue_field
from .rho_order import (
    AlgebraicMinusEps, AlgebraicPlusEps, AlgebraicReal, Infinite, LinOp, Rational,
)

# ---------------------------------------------------------------- printing


def _join(pieces):
    """``[(negative, body), ...]`` -> ``a - b + c``."""
    if not pieces:
        return "0"
    out = []
    for k, (negative, body) in enumerate(pieces):
        if k == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _monomial_body(coeff_abs, factors):
    """Body of ``coeff * f1 * f2 ...`` with a unit coefficient suppressed."""
    if not factors:
        return coeff_abs
    if coeff_abs == "1":
        return "*".join(factors)
    return "*".join([coeff_abs] + factors)


def _power(name, e):
    return name if e == 1 else f"{name}^{e}"


def format_linop(l):
    pieces = []
    for e, c in sorted(l.terms, reverse=True):
        f = [] if e == 0 else [_power("r", e)]
        pieces.append((c < 0, _monomial_body(str(abs(c)), f)))
    return _join(pieces)


def format_gamma(g):
    if g is VG.INF:
        return "inf"
    if g.is_zero:
        return "0"
    return f"({format_linop(g.num)})/({format_linop(g.den)})"


def format_qpoly(coeffs, var="s"):
    pieces = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[e])
        if c:
            f = [] if e == 0 else [_power(var, e)]
            pieces.append((c < 0, _monomial_body(format_rational(abs(c)), f)))
    return _join(pieces)


def _as_rational(c):
    """The rational value of a carrier element, or None."""
    if isinstance(c, RatFunc):
        return c.constant_value() if c.is_constant else None
    return Fraction(c)


def format_carrier(c):
    q = _as_rational(c)
    if q is not None:
        return format_rational(q)
    if c.den == (Fraction(1),):
        return format_qpoly(c.num)
    return f"({format_qpoly(c.num)})/({format_qpoly(c.den)})"


def _term_piece(c, factors):
    """``(negative, body)`` for ``c * factors`` with c a carrier element."""
    q = _as_rational(c)
    if q is not None:
        return q < 0, _monomial_body(format_rational(abs(q)), factors)
    return False, _monomial_body(f"({format_carrier(c)})", factors)


def _t_factor(g):
    return [] if g.is_zero else [f"t^({format_gamma(g)})"]


def format_series(x):
    return _join([_term_piece(c, _t_factor(g)) for g, c in x.terms])


def _sigma_name(j):
    if j == 0:
        return "x"
    if j == 1:
        return "s(x)"
    return f"s^{j}(x)"


def _mono_factors(idx):
    return [_power(_sigma_name(j), e) for j, e in enumerate(idx) if e]


def _mono_order(idx):
    return tuple(reversed(idx))


def format_sigmapoly(P):
    pieces = []
    for idx in sorted(P.table, key=_mono_order, reverse=True):
        mono = _mono_factors(idx)
        for g, c in P.table[idx].terms:
            pieces.append(_term_piece(c, _t_factor(g) + mono))
    return _join(pieces)


def format_residue_poly(f):
    pieces = []
    for idx in sorted(f.terms, key=_mono_order, reverse=True):
        pieces.append(_term_piece(f.terms[idx], _mono_factors(idx)))
    return _join(pieces)


def format_linear_equation(alphas):
    """``1 + a_0*x + a_1*s(x) + ... = 0`` (``s`` standing for the residue automorphism)."""
    pieces = [(False, "1")]
    for j, a in enumerate(alphas):
        if a:
            pieces.append(_term_piece(a, [_sigma_name(j)]))
    return _join(pieces) + " = 0"


def format_rv(r):
    if r.is_infinite:
        return "rv(inf)"
    return f"rv(γ={format_gamma(r.gamma)}, lc={format_carrier(r.lead)})"


def format_rho(rho):
    if isinstance(rho, Rational):
        return f"rational {format_rational(Fraction(rho.p, rho.q))}"
    if isinstance(rho, AlgebraicReal):
        coeffs = ",".join(str(c) for c in rho.minpoly)
        return f"algebraic [{coeffs}] in ({format_rational(rho.lo)},{format_rational(rho.hi)})"
    if isinstance(rho, AlgebraicPlusEps):
        return format_rho(rho.base) + " plus-eps"
    if isinstance(rho, AlgebraicMinusEps):
        return format_rho(rho.base) + " minus-eps"
    if isinstance(rho, Infinite):
        return "infinite"
    raise TypeError(f"unknown rho spec {rho!r}")


# ---------------------------------------------------------------- tokens

_TOKEN = re.compile(r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<int>\d+)|(?P<name>[^\W\d_]+)"
                    r"|(?P<op>[-+*/^()\[\],=|])")


class Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.col})"


def tokenize(text):
    out = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tok = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind != "ws":
                out.append(Token(kind, tok, line, col))
            col += len(tok)
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


def _describe(tok):
    return "end of input" if tok.kind == "eof" else repr(tok.text)


class _Parser:
    def __init__(self, text, field=None, rho=None, poly=False):
        self.toks = tokenize(text)
        self.pos = 0
        self.field = field
        self.rho = rho if rho is not None else (field.rho if field is not None else None)
        self.poly = poly

    # -- helpers
    @property
    def tok(self):
        return self.toks[self.pos]

    def peek(self, k=1):
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def at(self, text):
        return self.tok.text == text and self.tok.kind in ("op", "name")

    def advance(self):
        t = self.tok
        self.pos += 1
        return t

    def fail(self, expected, tok=None, message=None):
        tok = tok or self.tok
        raise ParseError(message or f"unexpected {_describe(tok)}", tok.line, tok.col, expected)

    def expect(self, text):
        if not self.at(text):
            self.fail([repr(text)])
        return self.advance()

    def expect_int(self):
        if self.tok.kind != "int":
            self.fail(["integer"])
        return int(self.advance().text)

    def signed_int(self):
        neg = False
        if self.at("-"):
            self.advance()
            neg = True
        elif self.at("+"):
            self.advance()
        n = self.expect_int()
        return -n if neg else n

    def rational(self):
        n = self.signed_int()
        if self.at("/"):
            self.advance()
            d = self.expect_int()
            if d == 0:
                self.fail(["nonzero integer"], self.toks[self.pos - 1], "zero denominator")
            return Fraction(n, d)
        return Fraction(n)

    def end(self):
        if self.tok.kind != "eof":
            self.fail(["end of input"])

    # -- LinOp
    def linop(self):
        neg = False
        if self.at("-") or self.at("+"):
            neg = self.advance().text == "-"
        acc = self.lin_term()
        if neg:
            acc = -acc
        while self.at("+") or self.at("-"):
            op = self.advance().text
            t = self.lin_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def lin_term(self):
        acc = self.lin_factor()
        while self.at("*"):
            self.advance()
            acc = acc * self.lin_factor()
        return acc

    def lin_factor(self):
        start = self.tok
        base = self.lin_atom()
        if self.at("^"):
            self.advance()
            e = self.signed_int()
            try:
                return base ** e
            except (ValueError, ZeroDivisionError) as exc:
                self.fail(["nonnegative exponent"], start, str(exc))
        return base

    def lin_atom(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            return LinOp.const(int(t.text))
        if self.at("r"):
            self.advance()
            return LinOp.rho_power(1)
        if self.at("("):
            self.advance()
            v = self.linop()
            self.expect(")")
            return v
        self.fail(["integer", "'r'", "'('"])

    # -- GammaElem
    def gamma(self):
        if self.rho is None:
            raise ValueError("parsing a value-group element needs a rho spec")
        num = self.linop()
        den = LinOp.const(1)
        if self.at("/"):
            self.advance()
            den = self.lin_factor()
        return VG.frac(num, den, self.rho)

    # -- series and sigma-polynomials
    def _const(self, series):
        if self.poly:
            from .sigma_poly import SigmaPoly
            return SigmaPoly.constant(self.field, series)
        return series

    def _var(self, j):
        from .sigma_poly import SigmaPoly
        return SigmaPoly.x(self.field, j)

    def expr(self):
        neg = False
        if self.at("-") or self.at("+"):
            neg = self.advance().text == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.at("+") or self.at("-"):
            op = self.advance().text
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.at("*") or self.at("/"):
            op = self.advance()
            rhs_tok = self.tok
            rhs = self.factor()
            if op.text == "*":
                acc = acc * rhs
            else:
                acc = acc * self._invert_monomial(rhs, rhs_tok)
        return acc

    def _invert_monomial(self, v, tok):
        series = v
        if self.poly:
            if not v.is_constant():
                self.fail(["monomial divisor"], tok, "division by a non-constant sigma-polynomial")
            series = v.constant_term()
        if len(series.terms) != 1:
            self.fail(["monomial divisor"], tok, "division is only defined by a nonzero monomial")
        return self._const(series.monomial_inverse())

    def factor(self):
        start = self.tok
        base = self.atom()
        if self.at("^"):
            self.advance()
            e = self.signed_int()
            if e < 0:
                base = self._invert_monomial(base, start)
                e = -e
            base = base ** e
        return base

    def _sigma_application(self):
        """Length of an ``s(x)`` / ``s^k(x)`` token run at the cursor, else 0."""
        if self.peek(1).text == "(" and self.peek(2).text == "x":
            return 1
        if (self.peek(1).text == "^" and self.peek(2).kind == "int"
                and self.peek(3).text == "("):
            return 2
        return 0

    def atom(self):
        t = self.tok
        F = self.field
        if t.kind == "int":
            self.advance()
            return self._const(F.const(int(t.text)))
        if self.at("("):
            self.advance()
            v = self.expr()
            self.expect(")")
            return v
        if self.at("t"):
            self.advance()
            if self.at("^") and self.peek(1).text == "(":
                self.advance()
                self.advance()
                g = self.gamma()
                self.expect(")")
                return self._const(F.monomial(1, g))
            return self._const(F.monomial(1, F.gamma(1)))
        if self.at("x"):
            if not self.poly:
                self.fail(["integer", "'t'", "'('"], t,
                          "the variable x is sigma-polynomial syntax, not a series")
            self.advance()
            return self._var(0)
        if self.at("s"):
            kind = self._sigma_application()
            if kind:
                if not self.poly:
                    self.fail(["integer", "'t'", "'('"], t,
                              "s(...) is sigma-polynomial syntax, not a series")
                self.advance()
                j = 1
                if kind == 2:
                    self.advance()
                    j = self.expect_int()
                self.expect("(")
                self.expect("x")
                self.expect(")")
                return self._var(j)
            if F.residue.symbol != "s":
                self.fail(["integer", "'t'", "'('"], t,
                          f"the residue field {F.residue.name} has no symbol s")
            self.advance()
            return self._const(F.const(RatFunc.symbol()))
        expected = ["integer", "'t'", "'('"]
        if F.residue.symbol:
            expected.append("'s'")
        if self.poly:
            expected += ["'x'", "'s(x)'"]
        self.fail(expected)

    def carrier(self):
        start = self.tok
        saved = self.poly
        self.poly = False
        v = self.expr()
        self.poly = saved
        if not v:
            return self.field.residue.zero
        if len(v.terms) != 1 or not v.terms[0][0].is_zero:
            self.fail(["residue element"], start, "expected an element of the residue field")
        return v.terms[0][1]

    def rv(self):
        from .leading_terms import RV_INF, RVElem
        self.expect("rv")
        self.expect("(")
        if self.at("inf"):
            self.advance()
            self.expect(")")
            return RV_INF
        if not (self.at("γ") or self.at("gamma")):
            self.fail(["'inf'", "'γ'"])
        self.advance()
        self.expect("=")
        g = self.gamma()
        self.expect(",")
        self.expect("lc")
        self.expect("=")
        tok = self.tok
        c = self.carrier()
        if not c:
            self.fail(["nonzero residue element"], tok, "leading coefficient must be nonzero")
        self.expect(")")
        return RVElem(g, c)

    def rho_spec(self):
        t = self.tok
        if self.at("rational"):
            self.advance()
            q = self.rational()
            return Rational(q.numerator, q.denominator)
        if self.at("infinite"):
            self.advance()
            return Infinite()
        if self.at("algebraic"):
            self.advance()
            self.expect("[")
            coeffs = [self.signed_int()]
            while self.at(","):
                self.advance()
                coeffs.append(self.signed_int())
            self.expect("]")
            self.expect("in")
            self.expect("(")
            lo = self.rational()
            self.expect(",")
            hi = self.rational()
            self.expect(")")
            base = AlgebraicReal(tuple(coeffs), lo, hi)
            if self.at("plus") or self.at("minus"):
                which = self.advance().text
                self.expect("-")
                self.expect("eps")
                return AlgebraicPlusEps(base) if which == "plus" else AlgebraicMinusEps(base)
            return base
        self.fail(["'rational'", "'algebraic'", "'infinite'"], t)


def _run(text, method, **kw):
    p = _Parser(text, **kw)
    v = getattr(p, method)()
    p.end()
    return v


def parse_linop(text):
    return _run(text, "linop")


def parse_gamma(text, rho):
    return _run(text, "gamma", rho=rho)


def parse_series(text, field):
    return _run(text, "expr", field=field)


def parse_sigmapoly(text, field):
    from .sigma_poly import SigmaPoly
    v = _run(text, "expr", field=field, poly=True)
    return v if isinstance(v, SigmaPoly) else SigmaPoly.constant(field, v)


def parse_carrier(text, field):
    return _run(text, "carrier", field=field)


def parse_rv(text, field):
    return _run(text, "rv", field=field)


def parse_rho(text):
    return _run(text, "rho_spec")


def parse_residue(text):
    name = text.strip()
    try:
        return residue_field(name)
    except ValueError:
        raise ParseError(f"unknown residue field {name!r}", 1, 1,
                         ["rational-id", "rational-shift"]) from None


def parse_affine(text, rho):
    """``gamma | L`` -> ``(gamma, L)``."""
    p = _Parser(text, rho=rho)
    g = p.gamma()
    p.expect("|")
    l = p.linop()
    p.end()
    return g, l


def parse_sequence(text, field):
    """One series per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            out.append(parse_series(line, field))
        except ParseError as exc:
            raise ParseError(exc.message, lineno, exc.column, exc.expected) from None
    return out


# ---------------------------------------------------------------- config

CONFIG_ENV = "MULTVAL_CONFIG"
CONFIG_KEYS = ("rho", "residue", "target", "max_iter")


def parse_config(text):
    """``key = value`` lines (``#`` comments, optional quotes) -> dict."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno, 1, ["'='"])
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise ParseError(f"unknown key {key!r}", lineno, 1, CONFIG_KEYS)
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
            value = value[1:-1]
        out[key] = value
    return out


def load_config(path=None):
    """Read the config at ``path``, else at ``$MULTVAL_CONFIG``, else nothing."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
