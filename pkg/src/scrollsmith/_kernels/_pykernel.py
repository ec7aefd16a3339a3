"""Pure-Python reference kernels for dense polynomials over GF(p).

A polynomial a_0 + a_1 s + ... + a_n s^n is the list [a_0, ..., a_n] of
integers in range(p) with a_n != 0; [] is the zero polynomial.  Every
function returns a fresh, trimmed list and never mutates its arguments.
"""

from __future__ import annotations


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n]


def poly_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def poly_scale(a, c, p):
    c %= p
    if not c:
        return []
    return [(x * c) % p for x in a]


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim([c % p for c in out])


def poly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], trim(r)
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] % p
        if not c:
            continue
        c = (c * inv) % p
        q[k - db] = c
        off = k - db
        for j in range(db + 1):
            r[off + j] = (r[off + j] - c * b[j]) % p
    return trim(q), trim(r[:db])


def poly_monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def poly_gcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    return poly_monic(a, p)


def poly_powmod(a, e, m, p):
    if e < 0:
        raise ValueError("negative exponent")
    if len(m) == 1:
        return []
    result = [1]
    base = poly_divmod(a, m, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, base, p), m, p)[1]
        e >>= 1
        if e:
            base = poly_divmod(poly_mul(base, base, p), m, p)[1]
    return result


def poly_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def pivot_product(rows, p):
    """Product of the Hermite pivots of a polynomial matrix.

    ``rows`` is an N x c matrix of polynomials.  Unimodular row operations
    triangularise it column by column; the product of the c diagonal
    pivots is the monic gcd of all maximal minors.  Returns None when the
    matrix has rank < c over GF(p)(s).
    """
    m = [[list(e) for e in row] for row in rows]
    if not m:
        return None
    ncols = len(m[0])
    active = list(range(len(m)))
    prod = [1]
    for col in range(ncols):
        cand = [r for r in active if m[r][col]]
        if not cand:
            return None
        while True:
            piv = min(cand, key=lambda r: len(m[r][col]))
            others = [r for r in cand if r != piv]
            if not others:
                break
            prow = m[piv]
            pe = prow[col]
            for r in others:
                row = m[r]
                q, rem = poly_divmod(row[col], pe, p)
                row[col] = rem
                if q:
                    for cc in range(col + 1, ncols):
                        if prow[cc]:
                            row[cc] = poly_sub(row[cc], poly_mul(q, prow[cc], p), p)
            cand = [piv] + [r for r in others if m[r][col]]
        prod = poly_mul(prod, poly_monic(m[piv][col], p), p)
        active.remove(piv)
    return prod
