"""Common zeros of forms in fiber variables over the t-line.

The degeneracy locus of a system of fiber forms is the set of t where the
specialized system has a projective zero.  It is computed exactly (over the
algebraic closure) from a Macaulay matrix: the forms have no common zero at
t iff their degree-D multiples span all degree-D monomials, for D at the
Lazard bound.  The t values where that fails are the roots of the gcd of
maximal minors, read off from a Hermite-style triangularisation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .. import _kernels as K
from . import upoly as U
from .fields import PrimeField, QuadraticField
from .forms import BihomForm, BinaryForm, form_gcd, kernel, lift_field, monomials, rank
from .roots import roots, roots_in_extension

INFINITY = "inf"


def lazard_degree(degrees: list[int], nvars: int) -> int:
    """Degree D at which a system with no common zero in P^(nvars-1) spans
    every monomial; the nvars largest degrees enter the bound."""
    top = sorted(degrees, reverse=True)[:nvars]
    return sum(e - 1 for e in top) + 1


def macaulay_rows(forms: list[BihomForm], D: int):
    """Rows of monomial multiples of ``forms`` in degree D, entries being the
    BinaryForm coefficient (or None) per degree-D monomial."""
    n = forms[0].nvars
    cols = monomials(n, D)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for f in forms:
        for mu in monomials(n, D - f.xdeg):
            row = [None] * len(cols)
            for e, c in f.terms.items():
                row[index[tuple(a + b for a, b in zip(e, mu))]] = c
            rows.append(row)
    return rows, cols


@dataclass(frozen=True)
class DegeneracyLocus:
    """Where on the t-line a system of fiber forms has a common zero.

    ``everywhere`` means every fiber; otherwise ``affine`` is the monic
    polynomial in s = t0/t1 whose roots are the bad affine points and
    ``at_infinity`` records the point (1 : 0).
    """

    everywhere: bool
    affine: tuple = (1,)
    at_infinity: bool = False
    reason: str = ""

    @property
    def empty(self) -> bool:
        return not self.everywhere and len(self.affine) == 1 and not self.at_infinity

    @property
    def degree(self) -> int:
        return len(self.affine) - 1


def degeneracy_locus(forms: list[BihomForm]) -> DegeneracyLocus:
    """Exact bad-t locus of a system of forms over GF(p)."""
    forms = [f for f in forms if not f.is_zero]
    if not forms:
        return DegeneracyLocus(True, reason="all forms vanish identically")
    n = forms[0].nvars
    F = forms[0].field
    if not isinstance(F, PrimeField):
        raise TypeError("degeneracy loci are computed over a prime field")
    if len(forms) < n:
        return DegeneracyLocus(
            True, reason=f"{len(forms)} of the {n} equations needed to cut P^{n - 1} "
                         "down to nothing")
    D = lazard_degree([f.xdeg for f in forms], n)
    rows, cols = macaulay_rows(forms, D)
    p = F.p
    poly_rows = [[c.dehomogenize() if c is not None else [] for c in row] for row in rows]
    prod = K.pivot_product(poly_rows, p)
    if prod is None:
        return DegeneracyLocus(True, reason="Macaulay matrix has deficient generic rank")
    inf_rows = [[c.at_infinity() if c is not None else 0 for c in row] for row in rows]
    at_inf = rank(F, inf_rows) < len(cols)
    return DegeneracyLocus(False, tuple(prod), at_inf)


def locus_points(locus: DegeneracyLocus, F: PrimeField, extension: bool = True, seed: int = 0):
    """t-points of a finite locus over GF(p) (and GF(p^2) when asked).

    Returns (points, complete) where complete is False when some bad
    points lie outside the searched fields.
    """
    if locus.everywhere:
        raise ValueError("locus is the whole line")
    pts = []
    if locus.at_infinity:
        pts.append((F.one, F.zero))
    poly = list(locus.affine)
    found = 0
    if len(poly) > 1:
        base = roots(F, poly, seed)
        pts.extend((r, F.one) for r in base)
        found = len(base)
        if extension:
            ext = roots_in_extension(F, poly, seed)
            G = QuadraticField(F)
            pts.extend((r, G.one) for r in ext)
            found += len(ext)
    sqfree = _squarefree_degree(F, poly)
    return pts, found == sqfree


def _squarefree_degree(F, poly) -> int:
    if len(poly) <= 1:
        return 0
    g = U.gcd(F, poly, U.derivative(F, poly))
    return len(poly) - len(g)


# -- multivariate helpers over a field ---------------------------------------

def _mv_mul(G, a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = G.add(out.get(e, G.zero), G.mul(ca, cb))
    return {e: c for e, c in out.items() if not G.is_zero(c)}


def _substitute(G, poly: dict, images: list[dict], nnew: int) -> dict:
    """poly(x) with x_i replaced by the linear polynomial images[i]."""
    out: dict = {}
    for e, c in poly.items():
        term = {(0,) * nnew: G.embed(c)}
        for i, k in enumerate(e):
            for _ in range(k):
                term = _mv_mul(G, term, images[i])
        for ee, cc in term.items():
            out[ee] = G.add(out.get(ee, G.zero), cc)
    return {e: c for e, c in out.items() if not G.is_zero(c)}


def _normalize(G, v):
    for c in v:
        if not G.is_zero(c):
            inv = G.inv(c)
            return tuple(G.mul(inv, x) for x in v)
    raise ValueError("zero vector is not a projective point")


def binary_roots(G, coeffs, extension: bool = False, seed: int = 0) -> list:
    """Projective roots (x : y) of sum coeffs[k] x^(n-k) y^k over G, plus
    GF(p^2) roots when G is prime and ``extension`` is set.  A zero form
    raises ValueError."""
    coeffs = list(coeffs)
    if all(G.is_zero(c) for c in coeffs):
        raise ValueError("zero form")
    pts = []
    if G.is_zero(coeffs[0]):
        pts.append((G.one, G.zero))
    # chart y = 1: sum coeffs[k] x^(n-k), reversed list is low-degree first
    poly = U.trim(G, reversed(coeffs))
    if len(poly) > 1:
        pts.extend((r, G.one) for r in roots(G, poly, seed))
        if extension and isinstance(G, PrimeField):
            G2 = QuadraticField(G)
            pts.extend((r, G2.one) for r in roots_in_extension(G, poly, seed))
    return pts


def solve_fiber(forms: list[BihomForm], pt, extension: bool = True,
                rng: random.Random | None = None, attempts: int = 8):
    """A common zero of the forms in the fiber over ``pt``, or None.

    Linear forms are solved exactly.  The remaining forms are restricted to
    the resulting linear space: a point is checked, a line is reduced to
    one binary form by gcd, and a larger space is cut by random planes that
    are swept by lines through a point.
    """
    rng = rng or random.Random(0)
    F = forms[0].field
    n = forms[0].nvars
    G = lift_field(F, *pt)
    restr = [(f.xdeg, f.specialize(pt)) for f in forms]
    restr = [(d, s) for d, s in restr if s]
    linear = [s for d, s in restr if d == 1]
    rest = [s for d, s in restr if d != 1]
    if any(d == 0 for d, _ in restr):
        return None
    mat = []
    for s in linear:
        row = [G.zero] * n
        for e, c in s.items():
            row[e.index(1)] = G.embed(c)
        mat.append(row)
    basis = kernel(G, mat, n) if mat else [[G.one if i == j else G.zero for i in range(n)]
                                           for j in range(n)]
    r = len(basis)
    if r == 0:
        return None
    if r == 1:
        x = basis[0]
        return _normalize(G, x) if _all_vanish(G, rest, x) else None

    def lift(y):
        return tuple(_lin_comb(G, basis, y))

    if r == 2:
        cand = _line_zeros(G, rest, basis, extension)
        return cand
    for _ in range(attempts):
        # a random plane; when r == 3 this is the whole space
        plane = [lift([G.random(rng) for _ in range(r)]) for _ in range(3)]
        if rank(G, plane) < 3:
            continue
        cand = _plane_zeros(G, rest, plane, extension, rng)
        if cand is not None:
            return cand
    return None


def _plane_zeros(G, polys, plane, extension, rng):
    """A common zero of ``polys`` in the projective plane spanned by three
    vectors O, A, B.  Every point other than O lies on one line through O,
    namely the span of O and lam0*A + lam1*B; the bad lam are the roots of
    the gcd of pairwise resultants in the line coordinate."""
    O, A, B = plane
    n = len(O)
    if _all_vanish(G, polys, O):
        return _normalize(G, O)
    images = [{e: c for e, c in (((1, 0, 0), O[i]), ((0, 1, 0), A[i]), ((0, 0, 1), B[i]))
               if not G.is_zero(c)} for i in range(n)]
    pencil = []
    for s in polys:
        sub = _substitute(G, s, images, 3)
        k = sum(next(iter(s)))
        # coefficient of mu0^(k-a) mu1^a, as a polynomial in lam0 / lam1
        coeffs = []
        for a in range(k + 1):
            coeffs.append(U.trim(G, [sub.get((k - a, a - j, j), G.zero) for j in range(a, -1, -1)]))
        if any(coeffs):
            pencil.append(coeffs)
    if not pencil:
        return _normalize(G, O)
    lams = [(G.one, G.zero)]
    res = None
    for i in range(len(pencil)):
        for j in range(i + 1, len(pencil)):
            r = _generic_res(G, pencil[i], pencil[j])
            if r:
                res = r if res is None else U.gcd(G, res, r)
    if res is None:
        # zero set contains a curve, which every line through O meets
        A2 = [G.random(rng) for _ in range(n)]
        return _line_zeros(G, polys, [O, _lin_comb(G, [A, B], A2[:2])], extension)
    if len(res) > 1:
        lams += [(x, G.one) for x in roots(G, res)]
        if extension and isinstance(G, PrimeField):
            G2 = QuadraticField(G)
            lams += [(x, G2.one) for x in roots_in_extension(G, res)]
    for lam in lams:
        H = lift_field(G, *lam)
        Q = [H.add(H.mul(H.embed(lam[0]), H.embed(a)), H.mul(H.embed(lam[1]), H.embed(b)))
             for a, b in zip(A, B)]
        cand = _line_zeros(H, polys, [[H.embed(c) for c in O], Q], extension)
        if cand is not None:
            return cand
    return None


def _generic_res(G, f, g) -> list:
    """Resultant in (mu0 : mu1) of two forms whose coefficients are
    polynomials in one variable over G."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    if size == 0:
        return [G.one]
    rows = [[[]] * i + list(f) + [[]] * (size - m - 1 - i) for i in range(n)]
    rows += [[[]] * i + list(g) + [[]] * (size - n - 1 - i) for i in range(m)]
    return _poly_det_generic(G, rows)


def _poly_det_generic(G, rows) -> list:
    a = [[list(e) for e in row] for row in rows]
    n = len(a)
    sign = False
    prev = [G.one]
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return []
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = not sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = U.sub(G, U.mul(G, a[i][j], a[k][k]), U.mul(G, a[i][k], a[k][j]))
                a[i][j] = U.divmod_(G, num, prev)[0]
            a[i][k] = []
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return U.scale(G, det, G.neg(G.one)) if sign else det


def _lin_comb(G, basis, y):
    n = len(basis[0])
    out = [G.zero] * n
    for coef, vec in zip(y, basis):
        for i in range(n):
            out[i] = G.add(out[i], G.mul(coef, vec[i]))
    return out


def _all_vanish(G, polys, x) -> bool:
    for s in polys:
        acc = G.zero
        for e, c in s.items():
            term = G.embed(c)
            for xi, k in zip(x, e):
                if k:
                    term = G.mul(term, G.pow(xi, k))
            acc = G.add(acc, term)
        if not G.is_zero(acc):
            return False
    return True


def _line_zeros(G, polys, line, extension):
    """A common zero of ``polys`` on the projective line spanned by two
    vectors, or None."""
    n = len(line[0])
    images = [{(1, 0): line[0][i], (0, 1): line[1][i]} for i in range(n)]
    images = [{e: c for e, c in im.items() if not G.is_zero(c)} for im in images]
    g = None
    for s in polys:
        sub = _substitute(G, s, images, 2)
        deg = sum(next(iter(s)))
        bf = BinaryForm(G, deg, tuple(sub.get((deg - k, k), G.zero) for k in range(deg + 1)))
        if bf.is_zero:
            continue
        g = bf if g is None else form_gcd(g, bf)
    if g is None:
        y = (G.one, G.zero)
    else:
        if g.degree == 0:
            return None
        pts = binary_roots(G, g.coeffs, extension)
        if not pts:
            return None
        y = pts[0]
    H = lift_field(G, *y)
    x = [H.zero] * n
    for coef, vec in zip(y, line):
        for i in range(n):
            x[i] = H.add(x[i], H.mul(H.embed(coef), H.embed(vec[i])))
    return _normalize(H, x)


# -- the two-variable case -----------------------------------------------------

def _poly_det(p: int, rows) -> list:
    """Determinant of a square matrix over GF(p)[s] (fraction-free Bareiss)."""
    a = [[list(e) for e in row] for row in rows]
    n = len(a)
    sign = 1
    prev = [1]
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return []
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = K.poly_sub(K.poly_mul(a[i][j], a[k][k], p),
                                 K.poly_mul(a[i][k], a[k][j], p), p)
                q, r = K.poly_divmod(num, prev, p)
                assert not r
                a[i][j] = q
            a[i][k] = []
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else K.poly_scale(det, p - 1, p)


def _xres(f: BihomForm, g: BihomForm, p: int) -> list:
    """Resultant in (x : y) of two two-variable forms, as a polynomial in s."""
    m, n = f.xdeg, g.xdeg
    fc = [f.terms[(m - j, j)].dehomogenize() if (m - j, j) in f.terms else [] for j in range(m + 1)]
    gc = [g.terms[(n - j, j)].dehomogenize() if (n - j, j) in g.terms else [] for j in range(n + 1)]
    size = m + n
    rows = [[[]] * i + fc + [[]] * (size - m - 1 - i) for i in range(n)]
    rows += [[[]] * i + gc + [[]] * (size - n - 1 - i) for i in range(m)]
    return _poly_det(p, rows)


def common_zeros_bihom(forms: list[BihomForm], extension: bool = False, seed: int = 0) -> list:
    """Common zeros ((t0 : t1), (x : y)) of two-variable forms.

    Candidate t values are the roots of the gcd of pairwise x-resultants
    (and of the coefficients of x-degree-0 forms), plus (1 : 0); each
    candidate is substituted and the resulting binary forms in (x : y) are
    reduced by gcd.  Complete over GF(p), and over GF(p^2) when
    ``extension`` is set; components filling whole t-lines or whole fibers
    are enumerated point by point over the searched field.
    """
    if not forms:
        raise ValueError("common_zeros_bihom needs at least one form")
    F = forms[0].field
    if any(f.nvars != 2 for f in forms):
        raise ValueError("common_zeros_bihom works with two fiber variables")
    if not isinstance(F, PrimeField):
        raise TypeError("forms must be defined over a prime field")
    p = F.p
    live = [f for f in forms if not f.is_zero]
    constraints = []
    for f in live:
        if f.xdeg == 0:
            constraints.append(f.terms[(0, 0)].dehomogenize())
    pos = [f for f in live if f.xdeg > 0]
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            res = _xres(pos[i], pos[j], p)
            if res:
                constraints.append(res)
    tpts = [(F.one, F.zero)]
    if constraints:
        E = constraints[0]
        for c in constraints[1:]:
            E = K.poly_gcd(E, c, p)
        E = K.poly_monic(E, p)
        if len(E) > 1:
            tpts += [(r, F.one) for r in roots(F, E, seed)]
            if extension:
                G2 = QuadraticField(F)
                tpts += [(r, G2.one) for r in roots_in_extension(F, E, seed)]
    else:
        tpts += [(s, F.one) for s in F.elements()]
        if extension:
            G2 = QuadraticField(F)
            tpts += [(s, G2.one) for s in G2.elements() if s.b]
    out = []
    for tp in tpts:
        G = lift_field(F, *tp)
        g = None
        dead = False
        for f in live:
            vals = f.specialize(tp)
            if f.xdeg == 0:
                if vals:
                    dead = True
                    break
                continue
            bf = BinaryForm(G, f.xdeg, tuple(G.embed(vals.get((f.xdeg - k, k), 0))
                                             for k in range(f.xdeg + 1)))
            if bf.is_zero:
                continue
            g = bf if g is None else form_gcd(g, bf)
        if dead:
            continue
        if g is None:
            xs = [(G.one, G.zero)] + [(a, G.one) for a in G.elements()]
            if extension and isinstance(G, PrimeField):
                G2 = QuadraticField(G)
                xs += [(a, G2.one) for a in G2.elements() if a.b]
        elif g.degree == 0:
            continue
        else:
            xs = binary_roots(G, g.coeffs, extension, seed)
        out.extend((tp, x) for x in xs)
    return out
