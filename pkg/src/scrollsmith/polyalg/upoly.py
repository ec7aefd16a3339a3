"""Dense univariate polynomials over GF(p) or GF(p^2).

Polynomials are lists of field elements, lowest degree first, with no
trailing zeros; [] is zero.  Over a prime field the work is delegated to
the compiled kernel, otherwise the generic code below runs on the field
object's arithmetic.
"""

from __future__ import annotations

from .. import _kernels as K
from .fields import PrimeField


def _prime(F) -> bool:
    return isinstance(F, PrimeField)


def trim(F, a):
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def degree(a) -> int:
    return len(a) - 1


def add(F, a, b):
    if _prime(F):
        return K.poly_add(a, b, F.p)
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def sub(F, a, b):
    if _prime(F):
        return K.poly_sub(a, b, F.p)
    out = list(a) + [F.zero] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = F.sub(out[i], c)
    return trim(F, out)


def scale(F, a, c):
    if _prime(F):
        return K.poly_scale(a, c, F.p)
    if F.is_zero(c):
        return []
    return [F.mul(x, c) for x in a]


def mul(F, a, b):
    if _prime(F):
        return K.poly_mul(a, b, F.p)
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def divmod_(F, a, b):
    if _prime(F):
        return K.poly_divmod(a, b, F.p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], trim(F, r)
    inv = F.inv(b[-1])
    q = [F.zero] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        if F.is_zero(r[k]):
            continue
        c = F.mul(r[k], inv)
        q[k - db] = c
        for j in range(db + 1):
            r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b[j]))
    return trim(F, q), trim(F, r[:db])


def rem(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if _prime(F):
        return K.poly_monic(a, F.p)
    if not a or a[-1] == F.one:
        return list(a)
    inv = F.inv(a[-1])
    return [F.mul(c, inv) for c in a]


def gcd(F, a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    if _prime(F):
        return K.poly_gcd(a, b, F.p)
    a, b = trim(F, a), trim(F, b)
    while b:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def powmod(F, a, e: int, m):
    if _prime(F):
        return K.poly_powmod(a, e, m, F.p)
    if len(m) == 1:
        return []
    result = [F.one]
    base = rem(F, a, m)
    while e:
        if e & 1:
            result = rem(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = rem(F, mul(F, base, base), m)
    return result


def evaluate(F, a, x):
    if _prime(F):
        return K.poly_eval(a, x, F.p)
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def derivative(F, a):
    return trim(F, [F.mul(F.embed(k), a[k]) for k in range(1, len(a))])


def from_roots(F, roots):
    out = [F.one]
    for r in roots:
        out = mul(F, out, [F.neg(r), F.one])
    return out
