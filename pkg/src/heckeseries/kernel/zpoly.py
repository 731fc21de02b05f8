"""Dense univariate integer polynomials as tuples, lowest degree first.

These are the raw helpers behind :class:`LaurentP` and :class:`RatFnP`.
A polynomial is a tuple of ints with no trailing zeros; ``()`` is zero.
"""
from math import gcd

from .errors import InexactDivision

ZERO = ()
ONE = (1,)


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return trim(out)


def neg(a):
    return tuple(-v for v in a)


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return ZERO
    if len(a) == 1:
        s = a[0]
        return tuple(s * v for v in b)
    if len(b) == 1:
        s = b[0]
        return tuple(s * v for v in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return tuple(out)


def scale(a, s):
    if not s:
        return ZERO
    return tuple(s * v for v in a)


def divmod_exact_lead(a, b):
    """Long division of ``a`` by ``b``; every leading-coefficient quotient
    must be an exact integer division, otherwise InexactDivision."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return ZERO, tuple(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            raise InexactDivision("non-integral quotient coefficient")
        q[k - db] = qc
        for j in range(db + 1):
            r[k - db + j] -= qc * b[j]
    return trim(q), trim(r)


def divexact(a, b):
    q, r = divmod_exact_lead(a, b)
    if r:
        raise InexactDivision("nonzero remainder in polynomial division")
    return q


def content(a):
    g = 0
    for v in a:
        g = gcd(g, v)
    return g


def primitive(a):
    g = content(a)
    if g in (0, 1):
        return tuple(a)
    return tuple(v // g for v in a)


def pseudo_rem(a, b):
    # prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod b
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r = list(trim(r))
    return tuple(r)


def gcd_poly(a, b):
    """Primitive gcd over Z[p], leading coefficient positive."""
    if not a:
        return _positive(primitive(b))
    if not b:
        return _positive(primitive(a))
    ca, cb = content(a), content(b)
    g = gcd(ca, cb)
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    a = _positive(a)
    return scale(a, g)


def _positive(a):
    if a and a[-1] < 0:
        return neg(a)
    return a


def evaluate(a, x):
    acc = 0
    for v in reversed(a):
        acc = acc * x + v
    return acc
