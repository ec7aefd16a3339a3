import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollsmith.polyalg import PrimeField, QElem, QuadraticField, is_prime

P = 10007
F = PrimeField(P)
F2 = QuadraticField(P)

fp = st.integers(0, P - 1)
fp2 = st.builds(QElem, fp, fp)


def test_is_prime_against_sieve():
    n = 2000
    sieve = [True] * n
    sieve[0] = sieve[1] = False
    for i in range(2, n):
        if sieve[i]:
            for j in range(i * i, n, i):
                sieve[j] = False
    assert [k for k in range(n) if is_prime(k)] == [k for k in range(n) if sieve[k]]
    assert is_prime(2147483647) and not is_prime(2147483649)


@pytest.mark.parametrize("p", [2, 9, 2 ** 31 + 11, 1])
def test_prime_field_rejects(p):
    with pytest.raises(ValueError):
        PrimeField(p)


def test_nonresidue_is_verified():
    for p in (3, 5, 7, 11, 13, 10007):
        n = QuadraticField(p).n
        assert pow(n, (p - 1) // 2, p) == p - 1
        assert all(pow(k, (p - 1) // 2, p) == 1 for k in range(1, n))


def test_quadratic_u_squared():
    u = F2.u
    assert F2.mul(u, u) == F2(F2.n)


@pytest.mark.parametrize("G, elem", [(F, fp), (F2, fp2)])
@given(data=st.data())
def test_field_axioms(G, elem, data):
    a, b, c = (G.embed(data.draw(elem)) for _ in range(3))
    assert G.add(a, G.add(b, c)) == G.add(G.add(a, b), c)
    assert G.mul(a, G.mul(b, c)) == G.mul(G.mul(a, b), c)
    assert G.mul(a, G.add(b, c)) == G.add(G.mul(a, b), G.mul(a, c))
    assert G.add(a, b) == G.add(b, a) and G.mul(a, b) == G.mul(b, a)
    assert G.add(a, G.neg(a)) == G.zero
    assert G.sub(a, b) == G.add(a, G.neg(b))
    assert G.mul(a, G.one) == a
    if not G.is_zero(a):
        assert G.mul(a, G.inv(a)) == G.one
        assert G.div(b, a) == G.mul(b, G.inv(a))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F2.inv(F2.zero)


@given(fp2, st.integers(0, 3 * P * P))
def test_pow_matches_repeated_squaring_and_frobenius(a, e):
    a = F2.embed(a)
    ref = F2.one
    base, k = a, e
    while k:
        if k & 1:
            ref = F2.mul(ref, base)
        base = F2.mul(base, base)
        k >>= 1
    assert F2.pow(a, e) == ref
    # Frobenius is conjugation
    assert F2.pow(a, P) == F2.conj(a)


@given(fp2)
def test_norm_is_multiplicative_and_in_base(a):
    b = F2.mul(a, F2.u)
    assert F2.norm(F2.mul(a, b)) == F.mul(F2.norm(a), F2.norm(b))
    assert F2.in_base(F2.mul(a, F2.conj(a)))


@given(fp)
def test_sqrt_prime(a):
    if F.is_square(a):
        r = F.sqrt(a)
        assert F.mul(r, r) == a
    else:
        assert pow(a, (P - 1) // 2, P) == P - 1


@given(fp2)
def test_every_element_has_sqrt_in_extension(a):
    a = F2.embed(a)
    sq = F2.mul(a, a)
    assert F2.is_square(sq)
    r = F2.sqrt(sq)
    assert F2.mul(r, r) == sq
    # every base-field element is a square in GF(p^2)
    r = F2.sqrt(F2.embed(a.a))
    assert F2.mul(r, r) == F2.embed(a.a)


def test_small_field_enumeration():
    G = QuadraticField(5)
    els = list(G.elements())
    assert len(els) == 25 == len(set(els))
    # the multiplicative group is cyclic of order 24
    assert all(G.pow(x, 24) == G.one for x in els if not G.is_zero(x))
    rng = random.Random(1)
    assert all(0 <= F.random(rng) < P for _ in range(100))
