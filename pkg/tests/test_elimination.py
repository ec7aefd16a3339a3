import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollsmith.polyalg import (
    BihomForm,
    BinaryForm,
    PrimeField,
    common_zeros_bihom,
    degeneracy_locus,
    form_gcd,
    lazard_degree,
    locus_points,
    monomials,
    solve_fiber,
)
from scrollsmith.polyalg import upoly as U

SMALL = PrimeField(13)
BIG = PrimeField(10007)


def rand_form(F, nvars, xdeg, tdeg, rng):
    return BihomForm(F, nvars, xdeg,
                     {e: BinaryForm.random(F, tdeg, rng) for e in monomials(nvars, xdeg)})


def planted(F, nvars, xdeg, tdeg, rng, t, x):
    """Random form forced to vanish at (t, x) by fixing one coefficient."""
    f = rand_form(F, nvars, xdeg, tdeg, rng)
    e0 = next(e for e in monomials(nvars, xdeg) if all(
        xi or not k for xi, k in zip(x, e)))
    val = f.evaluate(t, x)
    mono = F.one
    for xi, k in zip(x, e0):
        mono = F.mul(mono, F.pow(xi, k))
    # subtract val / (mono * t-weight) times a form that is 1 at t
    c = f.terms.get(e0, BinaryForm.zero(F, tdeg))
    w = BinaryForm.from_coeffs(F, [0] * tdeg + [1]) if t[1] else BinaryForm.from_coeffs(F, [1] + [0] * tdeg)
    wt = w(*t)
    corr = w.scale(F.div(val, F.mul(mono, wt)))
    terms = dict(f.terms)
    terms[e0] = c - corr
    return BihomForm(F, nvars, xdeg, terms)


def bad_t_by_gcd(forms, F):
    """Exact bad set over P^1(F_p) for two fiber variables via binary gcds."""
    bad = []
    for t in [(F.one, F.zero)] + [(a, F.one) for a in F.elements()]:
        g = None
        for f in forms:
            s = f.specialize(t)
            bf = BinaryForm(F, f.xdeg, tuple(s.get((f.xdeg - k, k), 0) for k in range(f.xdeg + 1)))
            if bf.is_zero:
                continue
            g = bf if g is None else form_gcd(g, bf)
        if g is None or g.degree > 0:
            bad.append(t)
    return bad


def vanishes(v):
    # GF(p) values are ints, GF(p^2) values are (a, b) pairs
    return v in (0, (0, 0))


def in_locus(locus, t, F):
    if locus.everywhere:
        return True
    if F.is_zero(t[1]):
        return locus.at_infinity
    s = F.div(t[0], t[1])
    return U.evaluate(F, list(locus.affine), s) == 0


def test_lazard_degree():
    assert lazard_degree([1, 1], 2) == 1
    assert lazard_degree([2, 2, 2], 2) == 3
    assert lazard_degree([1, 1, 1, 2], 3) == 2


@given(st.integers(0, 10 ** 6), st.integers(2, 4), st.integers(1, 2), st.integers(0, 2))
def test_two_variable_locus_matches_gcd_scan(seed, nforms, xdeg, tdeg):
    rng = random.Random(seed)
    forms = [rand_form(SMALL, 2, rng.randint(1, xdeg), rng.randint(0, tdeg), rng)
             for _ in range(nforms)]
    loc = degeneracy_locus(forms)
    bad = bad_t_by_gcd(forms, SMALL)
    allpts = [(SMALL.one, SMALL.zero)] + [(a, SMALL.one) for a in SMALL.elements()]
    assert [t for t in allpts if in_locus(loc, t, SMALL)] == bad


@given(st.integers(0, 10 ** 6), st.integers(2, 3))
def test_planted_zero_is_in_locus(seed, nvars):
    rng = random.Random(seed)
    F = BIG
    t = (rng.randrange(F.p), F.one)
    x = [rng.randrange(F.p) for _ in range(nvars)]
    x[0] = 1
    forms = [planted(F, nvars, rng.randint(1, 2), rng.randint(0, 2), rng, t, x)
             for _ in range(nvars + 1)]
    assert all(f.evaluate(t, x) == 0 for f in forms)
    loc = degeneracy_locus(forms)
    assert in_locus(loc, t, F)
    if not loc.everywhere:
        pts, _ = locus_points(loc, F)
        assert t in pts
    z = solve_fiber(forms, t, rng=rng)
    assert z is not None and all(f.evaluate(t, z) == 0 for f in forms)


@given(st.integers(0, 10 ** 6))
def test_solve_fiber_on_surface_in_p3(seed):
    # two forms in P^3 cut a curve, so a random plane meets it
    rng = random.Random(seed)
    F = BIG
    t = (rng.randrange(F.p), F.one)
    forms = [rand_form(F, 4, rng.randint(1, 2), 1, rng) for _ in range(2)]
    z = solve_fiber(forms, t, rng=rng)
    assert z is not None
    assert all(vanishes(f.evaluate(t, z)) for f in forms)


def test_generic_square_system_has_finite_locus():
    rng = random.Random(4)
    forms = [rand_form(BIG, 3, 1, 1, rng) for _ in range(3)]
    loc = degeneracy_locus(forms)
    # three linear forms in P^2 with linear t-coefficients: det has degree 3
    assert not loc.everywhere and loc.degree + loc.at_infinity == 3
    pts, complete = locus_points(loc, BIG)
    for t in pts:
        x = solve_fiber(forms, t, rng=rng)
        assert x is not None
        assert all(vanishes(f.evaluate(t, x)) for f in forms)


def test_overdetermined_generic_system_is_empty():
    rng = random.Random(5)
    forms = [rand_form(BIG, 3, 2, 2, rng) for _ in range(4)]
    assert degeneracy_locus(forms).empty


def test_dimension_rule():
    rng = random.Random(6)
    loc = degeneracy_locus([rand_form(BIG, 4, 1, 1, rng) for _ in range(3)])
    assert loc.everywhere
    assert degeneracy_locus([BihomForm(BIG, 2, 1, {})]).everywhere


def test_point_at_infinity():
    F = BIG
    t1 = BinaryForm.t1(F)
    one = BinaryForm.constant(F, 1)
    # x*t1 and y*t1 + x*t0: at t = (1:0) they are 0 and x, common zero (0:1)
    f = BihomForm(F, 2, 1, {(1, 0): t1})
    g = BihomForm(F, 2, 1, {(0, 1): t1, (1, 0): BinaryForm.t0(F)})
    loc = degeneracy_locus([f, g])
    assert loc.at_infinity
    assert (F.one, F.zero) in locus_points(loc, F)[0]
    # a constant coefficient keeps the point at infinity good
    h = BihomForm(F, 2, 1, {(0, 1): one, (1, 0): t1})
    assert not degeneracy_locus([h, g]).at_infinity


def test_common_zeros_single_form():
    F = PrimeField(7)
    f = BihomForm(F, 2, 1, {(1, 0): BinaryForm.t0(F)})  # x * t0
    zs = common_zeros_bihom([f])
    p1 = [(1, 0)] + [(a, 1) for a in range(7)]
    expected = {((0, 1), x) for x in p1} | {(t, (0, 1)) for t in p1}
    assert set(zs) == expected and len(zs) == len(expected)


def test_common_zeros_x_and_y():
    F = PrimeField(7)
    one = BinaryForm.constant(F, 1)
    assert common_zeros_bihom([BihomForm(F, 2, 1, {(1, 0): one}),
                               BihomForm(F, 2, 1, {(0, 1): one})]) == []


def test_common_zeros_empty_list():
    with pytest.raises(ValueError):
        common_zeros_bihom([])


@given(st.integers(0, 10 ** 6))
def test_common_zeros_planted(seed):
    rng = random.Random(seed)
    F = BIG
    t = (rng.randrange(F.p), F.one)
    x = (rng.randrange(F.p), F.one)
    forms = [planted(F, 2, rng.randint(1, 2), rng.randint(1, 2), rng, t, x) for _ in range(3)]
    zs = common_zeros_bihom(forms, extension=True)
    assert (t, x) in zs
    # every reported zero is a zero, and sits over a t in the degeneracy locus
    loc = degeneracy_locus(forms)
    for tz, xz in zs:
        assert all(vanishes(f.evaluate(tz, xz)) for f in forms)
        if not isinstance(tz[0], tuple):
            assert in_locus(loc, tz, F)


@given(st.integers(0, 10 ** 6))
def test_common_zeros_agree_with_locus(seed):
    rng = random.Random(seed)
    forms = [rand_form(SMALL, 2, rng.randint(1, 2), rng.randint(0, 2), rng) for _ in range(2)]
    loc = degeneracy_locus(forms)
    zs = common_zeros_bihom(forms, extension=True)
    ts = {t for t, _ in zs if not isinstance(t[0], tuple)}
    if loc.everywhere:
        return
    pts, _ = locus_points(loc, SMALL, extension=False)
    assert ts == set(pts)
