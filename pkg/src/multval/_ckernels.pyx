# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels (twin of ``_pykernels``).

Coefficients stay Python ints (exact, unbounded); the speedup comes from
typed loop indices and avoiding interpreter dispatch in the inner loops.
"""
from math import gcd as _igcd

IMPLEMENTATION = "cython"


cpdef list strip(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


cpdef list add(list a, list b):
    cdef Py_ssize_t i
    cdef list out
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return strip(out)


cpdef list sub(list a, list b):
    cdef Py_ssize_t i, n = max(len(a), len(b))
    cdef list out = [0] * n
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return strip(out)


cpdef list mul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    cdef list out
    cdef object ai
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + ai * b[j]
    return strip(out)


cpdef list scale(list a, object c):
    if c == 0:
        return []
    return [x * c for x in a]


cpdef object content(list a):
    cdef object g = 0
    for x in a:
        g = _igcd(g, x)
        if g == 1:
            break
    return g


cpdef list primitive(list a):
    cdef object g
    if not a:
        return []
    g = content(a)
    if a[len(a) - 1] < 0:
        g = -g
    return [x // g for x in a]


cpdef tuple pseudo_rem(list a, list f):
    cdef list r = list(a)
    cdef Py_ssize_t df = len(f) - 1, i, shift
    cdef object lf = f[df], lr
    cdef long k = 0
    while r and len(r) - 1 >= df:
        lr = r[len(r) - 1]
        shift = len(r) - 1 - df
        if lf != 1:
            r = [x * lf for x in r]
            k += 1
        for i in range(df + 1):
            r[i + shift] = r[i + shift] - lr * f[i]
        r = strip(r)
    return r, k


cpdef list exact_quo(list a, list b):
    cdef list r = list(a), q
    cdef Py_ssize_t db = len(b) - 1, shift, i
    cdef object lb = b[db], c
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return []
    q = [0] * (len(r) - db)
    for shift in range(len(r) - 1 - db, -1, -1):
        c = r[shift + db]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c = c // lb
        q[shift] = c
        if c:
            for i in range(db + 1):
                r[i + shift] = r[i + shift] - c * b[i]
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return strip(q)


cpdef list gcd(list a, list b):
    cdef list r
    a = primitive(a)
    b = primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)[0]
        a, b = b, primitive(r)
    return a


cpdef int sign_at_rational(list a, object p, object q):
    cdef Py_ssize_t d = len(a) - 1, i
    cdef object acc, qpow = 1
    if d < 0:
        return 0
    acc = a[d]
    for i in range(d - 1, -1, -1):
        qpow = qpow * q
        acc = acc * p + a[i] * qpow
    return (acc > 0) - (acc < 0)


cpdef int interval_sign(list a, object lo, object hi, object den):
    cdef Py_ssize_t d = len(a) - 1, i
    cdef object elo, ehi, p1, p2, p3, p4, c, scale_pow = 1, mn, mx
    if d < 0:
        return 0
    elo = a[d]
    ehi = a[d]
    for i in range(d - 1, -1, -1):
        p1 = elo * lo
        p2 = elo * hi
        p3 = ehi * lo
        p4 = ehi * hi
        scale_pow = scale_pow * den
        c = a[i] * scale_pow
        mn = p1
        mx = p1
        if p2 < mn: mn = p2
        if p2 > mx: mx = p2
        if p3 < mn: mn = p3
        if p3 > mx: mx = p3
        if p4 < mn: mn = p4
        if p4 > mx: mx = p4
        elo = mn + c
        ehi = mx + c
    if elo > 0:
        return 1
    if ehi < 0:
        return -1
    return 0


cpdef tuple bisect_root(list f, object lo, object hi, object den):
    cdef int slo = sign_at_rational(f, lo, den), smid
    cdef object mid = lo + hi, den2 = 2 * den
    smid = sign_at_rational(f, mid, den2)
    if smid == 0:
        return mid, mid, den2
    if smid == slo:
        return mid, 2 * hi, den2
    return 2 * lo, mid, den2


cpdef tuple sign_at_root(list r, list f, object lo, object hi, object den,
                         long max_steps=100000):
    cdef long step
    cdef int s
    for step in range(max_steps):
        if lo == hi:
            return sign_at_rational(r, lo, den), lo, hi, den
        s = interval_sign(r, lo, hi, den)
        if s:
            return s, lo, hi, den
        lo, hi, den = bisect_root(f, lo, hi, den)
    raise ArithmeticError("sign determination did not terminate")
