# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense polynomials over GF(p), p < 2**31.

Same interface and semantics as ``_pykernel``: polynomials are trimmed
lists of ints, low degree first.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

ctypedef long long i64

cdef struct poly_t:
    i64* c
    Py_ssize_t n
    Py_ssize_t cap


cdef int _reserve(poly_t* a, Py_ssize_t cap) except -1:
    cdef i64* buf
    if cap <= a.cap:
        return 0
    if cap < 8:
        cap = 8
    buf = <i64*> realloc(a.c, cap * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    a.c = buf
    a.cap = cap
    return 0


cdef inline void _trim(poly_t* a) noexcept nogil:
    while a.n > 0 and a.c[a.n - 1] == 0:
        a.n -= 1


cdef inline void _init(poly_t* a) noexcept nogil:
    a.c = NULL
    a.n = 0
    a.cap = 0


cdef inline void _release(poly_t* a) noexcept nogil:
    if a.c != NULL:
        free(a.c)
    a.c = NULL
    a.n = 0
    a.cap = 0


cdef i64 _inv(i64 a, i64 p) except -1:
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    if newr == 0:
        raise ZeroDivisionError("inverse of zero")
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int _from_list(poly_t* a, object lst, i64 p) except -1:
    cdef Py_ssize_t n = len(lst), i
    cdef i64 v
    _reserve(a, n)
    for i in range(n):
        v = (<i64> lst[i]) % p
        if v < 0:
            v += p
        a.c[i] = v
    a.n = n
    _trim(a)
    return 0


cdef list _to_list(poly_t* a):
    cdef Py_ssize_t i
    return [a.c[i] for i in range(a.n)]


cdef int _copy(poly_t* dst, poly_t* src) except -1:
    _reserve(dst, src.n)
    if src.n:
        memcpy(dst.c, src.c, src.n * sizeof(i64))
    dst.n = src.n
    return 0


cdef int _mul(poly_t* out, poly_t* a, poly_t* b, i64 p) except -1:
    # out must not alias a or b
    cdef Py_ssize_t i, j, n
    cdef i64 x
    if a.n == 0 or b.n == 0:
        out.n = 0
        return 0
    n = a.n + b.n - 1
    _reserve(out, n)
    for i in range(n):
        out.c[i] = 0
    for i in range(a.n):
        x = a.c[i]
        if x == 0:
            continue
        for j in range(b.n):
            out.c[i + j] = (out.c[i + j] + x * b.c[j]) % p
    out.n = n
    _trim(out)
    return 0


cdef int _divmod(poly_t* q, poly_t* r, poly_t* b, i64 p) except -1:
    # r <- r mod b, q <- r div b (q may be NULL); b nonzero, not aliased
    cdef Py_ssize_t db = b.n - 1, k, j, off
    cdef i64 inv, c
    if b.n == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if q != NULL:
        q.n = 0
    if r.n <= db:
        return 0
    inv = _inv(b.c[db], p)
    if q != NULL:
        _reserve(q, r.n - db)
        for k in range(r.n - db):
            q.c[k] = 0
        q.n = r.n - db
    for k in range(r.n - 1, db - 1, -1):
        c = r.c[k]
        if c == 0:
            continue
        c = (c * inv) % p
        off = k - db
        if q != NULL:
            q.c[off] = c
        for j in range(db + 1):
            r.c[off + j] = (r.c[off + j] - c * b.c[j]) % p
            if r.c[off + j] < 0:
                r.c[off + j] += p
    r.n = db
    _trim(r)
    if q != NULL:
        _trim(q)
    return 0


cdef int _make_monic(poly_t* a, i64 p) except -1:
    cdef i64 inv
    cdef Py_ssize_t i
    if a.n == 0 or a.c[a.n - 1] == 1:
        return 0
    inv = _inv(a.c[a.n - 1], p)
    for i in range(a.n):
        a.c[i] = (a.c[i] * inv) % p
    return 0


cdef int _submul(poly_t* r, poly_t* q, poly_t* s, i64 p) except -1:
    # r <- r - q*s
    cdef Py_ssize_t i, j, n
    cdef i64 x
    if q.n == 0 or s.n == 0:
        return 0
    n = q.n + s.n - 1
    if n > r.n:
        _reserve(r, n)
        for i in range(r.n, n):
            r.c[i] = 0
        r.n = n
    for i in range(q.n):
        x = q.c[i]
        if x == 0:
            continue
        for j in range(s.n):
            r.c[i + j] = (r.c[i + j] - x * s.c[j]) % p
            if r.c[i + j] < 0:
                r.c[i + j] += p
    _trim(r)
    return 0


def poly_mul(a, b, p):
    cdef poly_t x, y, z
    cdef i64 pp = p
    _init(&x); _init(&y); _init(&z)
    try:
        _from_list(&x, a, pp)
        _from_list(&y, b, pp)
        _mul(&z, &x, &y, pp)
        return _to_list(&z)
    finally:
        _release(&x); _release(&y); _release(&z)


def poly_divmod(a, b, p):
    cdef poly_t q, r, d
    cdef i64 pp = p
    _init(&q); _init(&r); _init(&d)
    try:
        _from_list(&r, a, pp)
        _from_list(&d, b, pp)
        _divmod(&q, &r, &d, pp)
        return _to_list(&q), _to_list(&r)
    finally:
        _release(&q); _release(&r); _release(&d)


def poly_gcd(a, b, p):
    cdef poly_t x, y
    cdef poly_t tmp
    cdef i64 pp = p
    _init(&x); _init(&y)
    try:
        _from_list(&x, a, pp)
        _from_list(&y, b, pp)
        while y.n:
            _divmod(NULL, &x, &y, pp)
            tmp = x
            x = y
            y = tmp
        _make_monic(&x, pp)
        return _to_list(&x)
    finally:
        _release(&x); _release(&y)


def poly_powmod(a, e, m, p):
    cdef poly_t base, res, mod, tmp
    cdef i64 pp = p
    if e < 0:
        raise ValueError("negative exponent")
    _init(&base); _init(&res); _init(&mod); _init(&tmp)
    try:
        _from_list(&mod, m, pp)
        if mod.n == 0:
            raise ZeroDivisionError("polynomial division by zero")
        if mod.n == 1:
            return []
        _from_list(&base, a, pp)
        _divmod(NULL, &base, &mod, pp)
        _reserve(&res, 1)
        res.c[0] = 1
        res.n = 1
        e = int(e)
        while e:
            if e & 1:
                _mul(&tmp, &res, &base, pp)
                _divmod(NULL, &tmp, &mod, pp)
                _copy(&res, &tmp)
            e >>= 1
            if e:
                _mul(&tmp, &base, &base, pp)
                _divmod(NULL, &tmp, &mod, pp)
                _copy(&base, &tmp)
        return _to_list(&res)
    finally:
        _release(&base); _release(&res); _release(&mod); _release(&tmp)


def poly_eval(a, x, p):
    cdef i64 pp = p, xx = x % p, acc = 0
    cdef Py_ssize_t i
    if xx < 0:
        xx += pp
    for i in range(len(a) - 1, -1, -1):
        acc = (acc * xx + (<i64> a[i]) % pp) % pp
    if acc < 0:
        acc += pp
    return acc


def pivot_product(rows, p):
    """Product of Hermite pivots; see ``_pykernel.pivot_product``."""
    cdef Py_ssize_t nrows = len(rows), ncols, r, cc, col, k, piv, best
    cdef i64 pp = p
    cdef poly_t* m
    cdef poly_t q, prod, tmp
    cdef int* active
    cdef Py_ssize_t nactive, ncand
    cdef Py_ssize_t* cand
    if nrows == 0:
        return None
    ncols = len(rows[0])
    m = <poly_t*> malloc(nrows * ncols * sizeof(poly_t))
    active = <int*> malloc(nrows * sizeof(int))
    cand = <Py_ssize_t*> malloc(nrows * sizeof(Py_ssize_t))
    if m == NULL or active == NULL or cand == NULL:
        free(m); free(active); free(cand)
        raise MemoryError()
    for k in range(nrows * ncols):
        _init(&m[k])
    _init(&q); _init(&prod); _init(&tmp)
    try:
        for r in range(nrows):
            row = rows[r]
            for cc in range(ncols):
                _from_list(&m[r * ncols + cc], row[cc], pp)
            active[r] = 1
        _reserve(&prod, 1)
        prod.c[0] = 1
        prod.n = 1
        for col in range(ncols):
            while True:
                ncand = 0
                best = -1
                for r in range(nrows):
                    if active[r] and m[r * ncols + col].n:
                        cand[ncand] = r
                        ncand += 1
                        if best < 0 or m[r * ncols + col].n < m[best * ncols + col].n:
                            best = r
                if ncand == 0:
                    return None
                if ncand == 1:
                    break
                piv = best
                for k in range(ncand):
                    r = cand[k]
                    if r == piv:
                        continue
                    _divmod(&q, &m[r * ncols + col], &m[piv * ncols + col], pp)
                    if q.n:
                        for cc in range(col + 1, ncols):
                            if m[piv * ncols + cc].n:
                                _submul(&m[r * ncols + cc], &q, &m[piv * ncols + cc], pp)
            piv = best
            _copy(&tmp, &m[piv * ncols + col])
            _make_monic(&tmp, pp)
            _mul(&q, &prod, &tmp, pp)
            _copy(&prod, &q)
            active[piv] = 0
        return _to_list(&prod)
    finally:
        for k in range(nrows * ncols):
            _release(&m[k])
        free(m); free(active); free(cand)
        _release(&q); _release(&prod); _release(&tmp)

