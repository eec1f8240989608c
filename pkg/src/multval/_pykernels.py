"""Pure-Python integer polynomial kernels.

Polynomials are lists of Python ints, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.  ``_ckernels.pyx`` is a
line-for-line Cython twin of this module; keep them in step.
"""
from math import gcd as _igcd

IMPLEMENTATION = "python"


def strip(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return strip(out)


def sub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] -= b[i]
    return strip(out)


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(len(b)):
            out[i + j] += ai * b[j]
    return strip(out)


def scale(a, c):
    if c == 0:
        return []
    return [x * c for x in a]


def content(a):
    g = 0
    for x in a:
        g = _igcd(g, x)
        if g == 1:
            break
    return g


def primitive(a):
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def pseudo_rem(a, f):
    """Return ``(r, k)`` with ``lc(f)**k * a == q*f + r`` and ``deg r < deg f``."""
    r = list(a)
    df = len(f) - 1
    lf = f[-1]
    k = 0
    while len(r) - 1 >= df and r:
        lr = r[-1]
        shift = len(r) - 1 - df
        if lf != 1:
            r = [x * lf for x in r]
            k += 1
        for i in range(df + 1):
            r[i + shift] -= lr * f[i]
        r = strip(r)
    return r, k


def exact_quo(a, b):
    """Quotient of integer polynomials when ``b`` divides ``a`` exactly over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return []
    q = [0] * (len(r) - db)
    for shift in range(len(r) - 1 - db, -1, -1):
        c = r[shift + db]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        q[shift] = c
        if c:
            for i in range(db + 1):
                r[i + shift] -= c * b[i]
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return strip(q)


def gcd(a, b):
    """Primitive gcd over Z[x] with positive leading coefficient."""
    a = primitive(a)
    b = primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return a


def sign_at_rational(a, p, q):
    """Sign of ``a(p/q)`` for ``q > 0``."""
    d = len(a) - 1
    if d < 0:
        return 0
    # q^d * a(p/q) = sum a_i p^i q^(d-i)
    acc = a[d]
    qpow = 1
    for i in range(d - 1, -1, -1):
        qpow *= q
        acc = acc * p + a[i] * qpow
    return (acc > 0) - (acc < 0)


def interval_sign(a, lo, hi, den):
    """Certified sign of ``a`` on ``[lo/den, hi/den]``; 0 when undetermined.

    Interval Horner evaluation carried out on integers: after processing
    the coefficient of degree i the enclosure is scaled by ``den**(d-i)``.
    """
    d = len(a) - 1
    if d < 0:
        return 0
    elo = a[d]
    ehi = a[d]
    scale_pow = 1
    for i in range(d - 1, -1, -1):
        p1 = elo * lo
        p2 = elo * hi
        p3 = ehi * lo
        p4 = ehi * hi
        scale_pow *= den
        c = a[i] * scale_pow
        elo = min(p1, p2, p3, p4) + c
        ehi = max(p1, p2, p3, p4) + c
    if elo > 0:
        return 1
    if ehi < 0:
        return -1
    return 0


def bisect_root(f, lo, hi, den):
    """Halve the isolating interval ``[lo/den, hi/den]`` of the root of ``f``."""
    slo = sign_at_rational(f, lo, den)
    mid = lo + hi
    lo2 = 2 * lo
    hi2 = 2 * hi
    den2 = 2 * den
    smid = sign_at_rational(f, mid, den2)
    if smid == 0:
        return mid, mid, den2
    if smid == slo:
        return mid, hi2, den2
    return lo2, mid, den2


def sign_at_root(r, f, lo, hi, den, max_steps=100000):
    """Sign of ``r`` at the unique root of ``f`` in ``[lo/den, hi/den]``.

    ``r`` must not vanish at that root.  Returns ``(sign, lo, hi, den)``
    with the refined interval so callers can cache it.
    """
    for _ in range(max_steps):
        if lo == hi:
            return sign_at_rational(r, lo, den), lo, hi, den
        s = interval_sign(r, lo, hi, den)
        if s:
            return s, lo, hi, den
        lo, hi, den = bisect_root(f, lo, hi, den)
    raise ArithmeticError("sign determination did not terminate")
