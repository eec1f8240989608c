"""Dense univariate polynomials over Q (lists of Fractions, lowest degree first)."""
from fractions import Fraction
from math import lcm


def strip(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def as_q(a):
    return strip([Fraction(x) for x in a])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return strip(out)


def neg(a):
    return [-x for x in a]


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip(out)


def scale(a, c):
    if not c:
        return []
    return [x * c for x in a]


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [], strip(r)
    q = [Fraction(0)] * (len(r) - db)
    for shift in range(len(r) - 1 - db, -1, -1):
        c = r[shift + db] / lb
        q[shift] = c
        if c:
            for i in range(db + 1):
                r[i + shift] -= c * b[i]
    return strip(q), strip(r[:db])


def rem(a, b):
    return divmod_(a, b)[1]


def monic(a):
    if not a:
        return []
    lc = a[-1]
    return [x / lc for x in a]


def gcd(a, b):
    """Monic gcd."""
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def inverse_mod(a, f):
    """Inverse of ``a`` modulo ``f``; raises ZeroDivisionError if not a unit."""
    r0, r1 = list(f), rem(a, f)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo the given polynomial")
    return rem(scale(s0, 1 / r0[0]), f)


def evaluate(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def compose_shift(a, c):
    """``a(s + c)`` by Horner's rule."""
    out = []
    lin = [Fraction(c), Fraction(1)]
    for coeff in reversed(a):
        out = add(mul(out, lin), [Fraction(coeff)] if coeff else [])
    return out


def derivative(a):
    return strip([i * a[i] for i in range(1, len(a))])


def denominator_lcm(a):
    m = 1
    for x in a:
        m = lcm(m, Fraction(x).denominator)
    return m


def to_integer(a):
    """Scale by the least positive integer that clears all denominators."""
    m = denominator_lcm(a)
    return [int(x * m) for x in a], m
