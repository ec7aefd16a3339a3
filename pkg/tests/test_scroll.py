import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollsmith.criterion import classify
from scrollsmith.scroll import (
    RATIONAL_CHI,
    BaseLocus,
    DivisorClass,
    InvalidParameters,
    L,
    M,
    ScrollParams,
    base_locus,
    canonicalize,
    coeff_degrees,
    euler_characteristic,
    intersection_number,
    iter_params,
    quadric_class,
    rationality_verdict,
)

from .strategies import params

X1 = ScrollParams((0, 0, 0, 0), 0, 1)
X2 = ScrollParams((2, 1, 1, 1), -2, -1)
X3 = ScrollParams((4, 3, 2, 1), -4, -3)


def test_canonicalize_common_twist():
    assert canonicalize((1, 1, 1, 1, 1), -2, -1) == X1


def test_canonicalize_sorts_and_swaps():
    assert canonicalize((1, 1, 1, 2, 0), -1, -2) == X2


def test_canonicalize_four_degrees():
    assert canonicalize((1, 2, 3, 4), -4, -3) == X3


def test_canonicalize_rejects_empty_system():
    with pytest.raises(InvalidParameters):
        canonicalize((0, 0, 0, 0, 0), -1, 0)


@pytest.mark.parametrize("d, b1, b2", [
    ((1, 2, 0, 0), 0, 0),   # unsorted
    ((1, 1, 1, 1), 1, 0),   # b1 > b2
    ((1, 1, 1, -1), 0, 0),  # negative degree
    ((1, 1, 1), 0, 0),      # too short
])
def test_params_validation(d, b1, b2):
    with pytest.raises(InvalidParameters):
        ScrollParams(d, b1, b2)


def test_coeff_degrees_examples():
    m = coeff_degrees(X2, -2)
    assert (m.entry(1, 1), m.entry(1, 5), m.entry(2, 3), m.entry(5, 5)) == (2, 0, 0, -2)
    assert m.vanishes(5, 5) and not m.vanishes(1, 5)
    one = coeff_degrees(X1, 1)
    assert {one.entry(i, j) for i in range(1, 6) for j in range(1, 6)} == {1}
    m = coeff_degrees(X3, -4)
    assert (m.entry(4, 5), m.entry(3, 4), m.entry(1, 4)) == (-3, -1, 1)


@given(params(), st.integers(-16, 8))
def test_coeff_degrees_symmetric_and_monotone(p, b):
    m = coeff_degrees(p, b)
    for i in range(1, 6):
        for j in range(1, 6):
            assert m.entry(i, j) == m.entry(j, i)
            if i < 5:
                assert m.entry(i, j) >= m.entry(i + 1, j)
            if j < 5:
                assert m.entry(i, j) >= m.entry(i, j + 1)


def test_base_locus_examples():
    assert base_locus(X2, -2) is BaseLocus.Y5
    assert base_locus(X3, -4) is BaseLocus.Y4
    assert base_locus(X3, 0) is BaseLocus.EMPTY
    assert base_locus(ScrollParams((1, 0, 0, 0), -1, 0), -1) is BaseLocus.TOO_LARGE


@given(params(), st.integers(-16, 8), st.integers(0, 6))
def test_base_locus_monotone(p, b, step):
    # larger twist, smaller base locus
    assert base_locus(p, b + step) <= base_locus(p, b)


@given(params())
def test_second_base_locus_inside_first(p):
    assert base_locus(p, p.b2) <= base_locus(p, p.b1)


def test_first_free_coordinate():
    assert [s.first_free for s in (BaseLocus.EMPTY, BaseLocus.Y5, BaseLocus.Y4, BaseLocus.Y3)] \
        == [6, 5, 4, 3]


def test_euler_examples():
    assert [euler_characteristic(x) for x in (X1, X2, X3)] == [-4, -4, -4]
    assert euler_characteristic(ScrollParams((0, 0, 0, 0), 0, 0)) == 16


@given(params())
def test_euler_divisible_by_four(p):
    assert euler_characteristic(p) % 4 == 0


@given(params(), st.integers(-3, 3), st.permutations(range(5)))
def test_twist_invariance(p, c, perm):
    raw = [x + c for x in p.degrees]
    raw = [raw[i] for i in perm]
    q = canonicalize(raw, p.b2 - 2 * c, p.b1 - 2 * c)
    assert q == p
    assert canonicalize(q.degrees, q.b1, q.b2) == q
    assert euler_characteristic(q) == euler_characteristic(p)
    assert classify(q) == classify(p)


def test_rationality():
    v = rationality_verdict(X2)
    assert v.rational and v.chi == -4 and v.verdict == "Rational"
    v = rationality_verdict(ScrollParams((0, 0, 0, 0), 0, 0))
    assert not v.rational and v.chi == 16 and v.verdict == "Nonrational"


@given(params())
def test_rationality_matches_chi(p):
    v = rationality_verdict(p)
    assert v.rational == (euler_characteristic(p) in RATIONAL_CHI)


def test_rational_chi_minus_eight():
    # chi = -8: sum(d) + 5*(b1+b2)/4 ... pick one directly
    p = next(q for q in iter_params(3, -6, 3) if euler_characteristic(q) == -8)
    assert rationality_verdict(p).rational


def test_divisor_algebra():
    D = 2 * M + (-3) * L
    assert D == quadric_class(-3) == DivisorClass(2, -3)
    assert D - M == DivisorClass(1, -3)
    assert str(M + L) == "1M+1L"


def test_intersection_number_basics():
    # M^4 L = sum of degrees on the scroll; M^5 likewise by the Grothendieck relation
    d = (2, 1, 1, 1, 0)
    assert intersection_number(d, [M, M, M, M, L]) == 1
    assert intersection_number(d, [M] * 5) == sum(d)
    assert intersection_number(d, [M, M, M, L, L]) == 0


def test_iter_params_lex_and_valid():
    ps = list(iter_params(2, -4, 2))
    assert ps == sorted(ps)
    assert all(2 * p.d[0] + p.b1 >= 0 for p in ps)
    assert len(set(ps)) == len(ps)
