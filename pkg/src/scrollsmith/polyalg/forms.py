"""Binary forms in (t0 : t1) and forms that are polynomial in fiber variables.

A :class:`BinaryForm` of degree n stores n + 1 coefficients, index k
holding the coefficient of t0^(n-k) t1^k.  Working in the chart t1 = 1
with s = t0 turns it into the polynomial whose coefficient list (low
degree first) is the reversed coefficient tuple.  The point (1 : 0) lies
outside that chart and is always handled separately.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

from . import upoly as U
from .fields import PrimeField, QElem, QuadraticField


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class BinaryForm:
    field: object
    degree: int
    coeffs: tuple

    def __post_init__(self):
        n = self.degree
        if n < 0:
            if self.coeffs:
                raise ValueError("a form of negative degree must be Zero")
        elif len(self.coeffs) != n + 1:
            raise ValueError(f"degree {n} form needs {n + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, field, degree: int) -> BinaryForm:
        return cls(field, degree, (field.zero,) * (degree + 1) if degree >= 0 else ())

    @classmethod
    def constant(cls, field, c) -> BinaryForm:
        return cls(field, 0, (field(c),))

    @classmethod
    def t0(cls, field) -> BinaryForm:
        return cls(field, 1, (field.one, field.zero))

    @classmethod
    def t1(cls, field) -> BinaryForm:
        return cls(field, 1, (field.zero, field.one))

    @classmethod
    def from_coeffs(cls, field, coeffs: Iterable) -> BinaryForm:
        c = tuple(field(x) for x in coeffs)
        return cls(field, len(c) - 1, c)

    @classmethod
    def random(cls, field, degree: int, rng: random.Random) -> BinaryForm:
        if degree < 0:
            return cls.zero(field, degree)
        return cls(field, degree, tuple(field.random(rng) for _ in range(degree + 1)))

    @classmethod
    def from_dehomogenized(cls, field, poly, degree: int) -> BinaryForm:
        """Homogenize a polynomial in s = t0/t1 to the given degree."""
        if len(poly) > degree + 1:
            raise DegreeMismatch(f"polynomial of degree {len(poly) - 1} exceeds {degree}")
        c = list(poly) + [field.zero] * (degree + 1 - len(poly))
        return cls(field, degree, tuple(reversed(c)))

    @property
    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other: BinaryForm) -> BinaryForm:
        return form_add(self, other)

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        return form_add(self, other.scale(self.field.neg(self.field.one)))

    def __mul__(self, other: BinaryForm) -> BinaryForm:
        return form_mul(self, other)

    def __call__(self, t0, t1):
        return form_eval(self, (t0, t1))

    def scale(self, c) -> BinaryForm:
        F = self.field
        return BinaryForm(F, self.degree, tuple(F.mul(c, x) for x in self.coeffs))

    def dehomogenize(self) -> list:
        """Coefficients of f(s, 1), lowest degree first, trimmed."""
        return U.trim(self.field, reversed(self.coeffs))

    def at_infinity(self):
        """The value f(1, 0)."""
        return self.coeffs[0] if self.degree >= 0 else self.field.zero

    def t1_valuation(self) -> int:
        """Multiplicity of the root (1 : 0); the degree for the Zero form."""
        for k, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                return k
        return max(self.degree, 0)

    def map_field(self, G) -> BinaryForm:
        return BinaryForm(G, self.degree, tuple(G.embed(c) for c in self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        n = self.degree
        terms = []
        for k, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            mono = "*".join(m for m in (_pw("t0", n - k), _pw("t1", k)) if m)
            terms.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)


def _pw(v, e):
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")


def _check_field(f: BinaryForm, g: BinaryForm):
    if f.field != g.field:
        raise ValueError(f"field mismatch: {f.field!r} vs {g.field!r}")


def form_add(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    _check_field(f, g)
    if f.degree != g.degree:
        if g.is_zero:
            return f
        if f.is_zero:
            return g
        raise DegreeMismatch(f"cannot add forms of degree {f.degree} and {g.degree}")
    F = f.field
    return BinaryForm(F, f.degree, tuple(F.add(a, b) for a, b in zip(f.coeffs, g.coeffs)))


def form_mul(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    _check_field(f, g)
    F = f.field
    n = f.degree + g.degree
    if f.degree < 0 or g.degree < 0:
        return BinaryForm.zero(F, n)
    out = [F.zero] * (n + 1)
    for i, a in enumerate(f.coeffs):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return BinaryForm(F, n, tuple(out))


def lift_field(F, *values):
    """F, or GF(p^2) when any of the values is an extension element."""
    if isinstance(F, PrimeField) and any(isinstance(v, QElem) for v in values):
        return QuadraticField(F.p)
    return F


def form_eval(f: BinaryForm, pt):
    """Homogeneous evaluation at (t0, t1).  The point may lie over GF(p^2)
    when the form is defined over GF(p)."""
    G = lift_field(f.field, *pt)
    t0, t1 = G.embed(pt[0]), G.embed(pt[1])
    n = f.degree
    if n < 0:
        return G.zero
    acc = G.zero
    p0 = G.one
    # sum of c_k t0^(n-k) t1^k, t0 powers accumulated from the top index down
    t1p = [G.one]
    for _ in range(n):
        t1p.append(G.mul(t1p[-1], t1))
    for k in range(n, -1, -1):
        acc = G.add(acc, G.mul(G.embed(f.coeffs[k]), G.mul(p0, t1p[k])))
        p0 = G.mul(p0, t0)
    return acc


def form_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic greatest common divisor of two binary forms.

    Shared powers of t1 (the root (1 : 0)) are split off before working in
    the chart t1 = 1.  The t1-free part is normalised to have coefficient 1
    on its top power of t0.
    """
    _check_field(f, g)
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero forms is undefined")
    F = f.field
    vals = [h.t1_valuation() for h in (f, g) if not h.is_zero]
    v = min(vals)
    polys = [h.dehomogenize() for h in (f, g)]
    G = U.gcd(F, polys[0], polys[1])
    e = len(G) - 1
    coeffs = [F.zero] * v + list(reversed(G))
    return BinaryForm(F, v + e, tuple(coeffs))


def form_divides(g: BinaryForm, f: BinaryForm) -> bool:
    """True when g divides f in the graded ring."""
    _check_field(f, g)
    if g.is_zero:
        return f.is_zero
    if f.is_zero:
        return True
    if g.degree > f.degree or g.t1_valuation() > f.t1_valuation():
        return False
    # t1-free parts divide iff their dehomogenizations do
    return not U.rem(f.field, f.dehomogenize(), g.dehomogenize())


def form_quotient(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if not form_divides(g, f):
        raise ValueError("form does not divide")
    F = f.field
    if f.is_zero:
        return BinaryForm.zero(F, f.degree - g.degree)
    q, _ = U.divmod_(F, f.dehomogenize(), g.dehomogenize())
    return BinaryForm.from_dehomogenized(F, q, f.degree - g.degree)


def sylvester_matrix(f: BinaryForm, g: BinaryForm) -> list[list]:
    F = f.field
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    for i in range(n):
        rows.append([F.zero] * i + list(f.coeffs) + [F.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([F.zero] * i + list(g.coeffs) + [F.zero] * (size - n - 1 - i))
    return rows


def determinant(F, rows) -> object:
    a = [list(r) for r in rows]
    n = len(a)
    det = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if not F.is_zero(a[r][c])), None)
        if piv is None:
            return F.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = F.neg(det)
        det = F.mul(det, a[c][c])
        inv = F.inv(a[c][c])
        for r in range(c + 1, n):
            if F.is_zero(a[r][c]):
                continue
            factor = F.mul(a[r][c], inv)
            a[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(a[r], a[c])]
    return det


def rank(F, rows) -> int:
    a = [list(r) for r in rows]
    if not a:
        return 0
    rk = 0
    ncols = len(a[0])
    for c in range(ncols):
        piv = next((r for r in range(rk, len(a)) if not F.is_zero(a[r][c])), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = F.inv(a[rk][c])
        for r in range(rk + 1, len(a)):
            if F.is_zero(a[r][c]):
                continue
            factor = F.mul(a[r][c], inv)
            a[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(a[r], a[rk])]
        rk += 1
    return rk


def kernel(F, rows, ncols: int) -> list[list]:
    """Basis of the right null space of a matrix over F."""
    a = [list(r) for r in rows]
    pivots = []
    rk = 0
    for c in range(ncols):
        piv = next((r for r in range(rk, len(a)) if not F.is_zero(a[r][c])), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = F.inv(a[rk][c])
        a[rk] = [F.mul(x, inv) for x in a[rk]]
        for r in range(len(a)):
            if r != rk and not F.is_zero(a[r][c]):
                factor = a[r][c]
                a[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(a[r], a[rk])]
        pivots.append(c)
        rk += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * ncols
        v[fc] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(a[r][fc])
        basis.append(v)
    return basis


def resultant(f: BinaryForm, g: BinaryForm):
    """Homogeneous resultant: the Sylvester determinant of the full
    coefficient vectors.  Zero exactly when f and g share a root on P^1
    over the algebraic closure, (1 : 0) included."""
    _check_field(f, g)
    if f.degree < 1 or g.degree < 1:
        raise ValueError("resultant needs forms of positive degree")
    return determinant(f.field, sylvester_matrix(f, g))


def monomials(nvars: int, deg: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``deg``, in lexicographically
    decreasing order (x1^deg first)."""
    out = []
    for combo in combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


class BihomForm:
    """A form of degree ``xdeg`` in fiber variables whose coefficients are
    binary forms in (t0 : t1).

    Coefficient degrees may differ between monomials: on a scroll the
    fiber coordinate x_j carries t-weight -d_j.  ``terms`` maps exponent
    vectors to nonzero :class:`BinaryForm` coefficients.  With two fiber
    variables and a uniform t-degree this is a bihomogeneous form of
    bidegree (a, b).
    """

    __slots__ = ("field", "nvars", "xdeg", "terms")

    def __init__(self, field, nvars: int, xdeg: int, terms: Mapping[tuple, BinaryForm]):
        self.field = field
        self.nvars = nvars
        self.xdeg = xdeg
        clean = {}
        for e, c in terms.items():
            if len(e) != nvars or sum(e) != xdeg:
                raise ValueError(f"monomial {e} does not have degree {xdeg} in {nvars} variables")
            if c.field != field:
                raise ValueError("coefficient field mismatch")
            if not c.is_zero:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def from_grid(cls, field, grid) -> BihomForm:
        """Two-variable form from an (a+1) x (b+1) grid; entry [i][j] is the
        coefficient of t0^(a-i) t1^i x^(b-j) y^j."""
        a = len(grid) - 1
        b = len(grid[0]) - 1
        terms = {}
        for j in range(b + 1):
            col = [grid[i][j] for i in range(a + 1)]
            terms[(b - j, j)] = BinaryForm.from_coeffs(field, col)
        return cls(field, 2, b, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def bidegree(self) -> tuple[int, int]:
        degs = {c.degree for c in self.terms.values()}
        if len(degs) > 1:
            raise ValueError("coefficients have mixed t-degrees")
        return (degs.pop() if degs else 0, self.xdeg)

    @property
    def grid(self) -> list[list]:
        a, b = self.bidegree
        if self.nvars != 2:
            raise ValueError("grid view needs two fiber variables")
        F = self.field
        out = [[F.zero] * (b + 1) for _ in range(a + 1)]
        for (ex, ey), c in self.terms.items():
            for i in range(a + 1):
                out[i][ey] = c.coeffs[i]
        return out

    def specialize(self, pt) -> dict:
        """Evaluate the t-coefficients at a point: exponent -> field element."""
        G = lift_field(self.field, *pt)
        out = {}
        for e, c in self.terms.items():
            v = form_eval(c, pt)
            if not G.is_zero(v):
                out[e] = v
        return out

    def evaluate(self, pt, x):
        """Value at the t-point ``pt`` and fiber point ``x``."""
        G = lift_field(self.field, *pt, *x)
        acc = G.zero
        for e, c in self.specialize(pt).items():
            term = G.embed(c)
            for xi, k in zip(x, e):
                if k:
                    term = G.mul(term, G.pow(G.embed(xi), k))
            acc = G.add(acc, term)
        return acc

    def __repr__(self):
        return f"BihomForm(nvars={self.nvars}, xdeg={self.xdeg}, terms={len(self.terms)})"


def bihom_add(f: BihomForm, g: BihomForm) -> BihomForm:
    if f.nvars != g.nvars or (f.xdeg != g.xdeg and not (f.is_zero or g.is_zero)):
        raise DegreeMismatch("cannot add forms of different fiber degree")
    if f.is_zero:
        return g
    terms = dict(f.terms)
    for e, c in g.terms.items():
        terms[e] = form_add(terms[e], c) if e in terms else c
    return BihomForm(f.field, f.nvars, f.xdeg, terms)


def bihom_neg(f: BihomForm) -> BihomForm:
    F = f.field
    m1 = F.neg(F.one)
    return BihomForm(F, f.nvars, f.xdeg, {e: c.scale(m1) for e, c in f.terms.items()})


def bihom_mul(f: BihomForm, g: BihomForm) -> BihomForm:
    if f.nvars != g.nvars:
        raise ValueError("variable count mismatch")
    terms: dict = {}
    for ea, ca in f.terms.items():
        for eb, cb in g.terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            prod = form_mul(ca, cb)
            terms[e] = form_add(terms[e], prod) if e in terms else prod
    return BihomForm(f.field, f.nvars, f.xdeg + g.xdeg, terms)
