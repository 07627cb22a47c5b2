# Dense univariate polynomials over Z as tuples of ints, ascending degree.
# The zero polynomial is the empty tuple; trailing zeros are never stored.
#
# These kernels back RatFuncQ.  Working over Z with an explicit rational
# content is much cheaper than carrying Fraction coefficients around.

from math import gcd, isqrt

ZPoly = tuple

ONE = (1,)


def strip(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] += c
    return strip(res)


def sub(a, b):
    return add(a, neg(b))


def neg(a):
    return tuple(-c for c in a)


def scale(a, k):
    if not k:
        return ()
    return tuple(k * c for c in a)


def mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    if len(a) < len(b):
        a, b = b, a
    res = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                res[i + j] += ai * bj
    return tuple(res)


def shift(a, k):
    """Multiply by q**k."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a):
    """Return (c, pp) with a = c*pp, pp primitive and positive leading coefficient."""
    if not a:
        return 0, ()
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, tuple(a)
    return c, tuple(x // c for x in a)


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def divexact(a, b):
    """Quotient a/b in Z[q], or None when b does not divide a over Z."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(b) == 1:
        d = b[0]
        if d == 1:
            return a
        if any(c % d for c in a):
            return None
        return tuple(c // d for c in a)
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    q = [0] * (len(a) - db) if len(a) > db else []
    for k in range(len(a) - 1 - db, -1, -1):
        top = r[k + db]
        if top:
            c, rem = divmod(top, lb)
            if rem:
                return None
            q[k] = c
            for i in range(db + 1):
                r[k + i] -= c * b[i]
    if any(r[:db]):
        return None
    return strip(q)


def _prem(a, b):
    """Pseudo-remainder of a by b."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [lb * c for c in r]
        for i in range(db + 1):
            r[k + i] -= lr * b[i]
        r = list(strip(r))
    return tuple(r)


def _gcd_prs(a, b):
    """Primitive polynomial remainder sequence.  Slow but always correct."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, primitive(r)[1]
    return primitive(a)[1]


def _norm(a):
    return max(abs(c) for c in a)


def _interpolate(h, x):
    coeffs = []
    half = x // 2
    while h:
        c = h % x
        if c > half:
            c -= x
        coeffs.append(c)
        h = (h - c) // x
    return strip(coeffs)


def _gcd_heu(f, g):
    # Heuristic gcd: evaluate at a large integer, take the integer gcd and
    # read the polynomial back from its balanced base-x digits.  Any
    # candidate that divides both inputs is the true gcd.
    bound = 2 * min(_norm(f), _norm(g)) + 29
    x = max(min(bound, 99 * isqrt(bound)),
            2 * min(_norm(f) // abs(f[-1]), _norm(g) // abs(g[-1])) + 2)
    for _ in range(6):
        fx = evaluate(f, x)
        gx = evaluate(g, x)
        if fx and gx:
            h = _interpolate(gcd(fx, gx), x)
            if h:
                h = primitive(h)[1]
                if divexact(f, h) is not None and divexact(g, h) is not None:
                    return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def pgcd(a, b):
    """Primitive gcd of two polynomials, positive leading coefficient."""
    if not a:
        return primitive(b)[1] if b else ONE
    if not b:
        return primitive(a)[1]
    if len(a) == 1 or len(b) == 1:
        return ONE
    a = primitive(a)[1]
    b = primitive(b)[1]
    if a == b:
        return a
    # common power of q first, cheap and frequent
    za = next(i for i, c in enumerate(a) if c)
    zb = next(i for i, c in enumerate(b) if c)
    z = min(za, zb)
    if z:
        a, b = a[za:], b[zb:]
        return shift(pgcd(a, b), z)
    if za or zb:
        a, b = a[za:], b[zb:]
        if len(a) == 1 or len(b) == 1:
            return ONE
    h = _gcd_heu(a, b)
    if h is None:
        h = _gcd_prs(a, b)
    return h
