"""Root finding for univariate polynomials over GF(p) and GF(p^2).

Distinct-degree splitting by gcd with s^q - s, then Cantor-Zassenhaus
equal-degree splitting for the linear factors.  Roots are returned
sorted and without multiplicity.
"""

from __future__ import annotations

import random

from . import upoly as U
from .fields import PrimeField, QuadraticField


def _linear_part(F, f):
    """Product of the distinct linear factors of f over F (monic)."""
    f = U.monic(F, U.trim(F, f))
    if len(f) <= 1:
        return [F.one]
    xq = U.powmod(F, [F.zero, F.one], F.order, f)
    return U.gcd(F, f, U.sub(F, xq, [F.zero, F.one]))


def _split(F, h, rng, out):
    # h monic, squarefree, product of linear factors
    if len(h) <= 1:
        return
    if len(h) == 2:
        out.append(F.neg(h[0]))
        return
    half = (F.order - 1) // 2
    while True:
        a = F.random(rng)
        g = U.powmod(F, [a, F.one], half, h)
        g = U.gcd(F, h, U.sub(F, g, [F.one]))
        if 1 < len(g) < len(h):
            break
    _split(F, g, rng, out)
    _split(F, U.divmod_(F, h, g)[0], rng, out)


def _sort_key(x):
    return x if isinstance(x, tuple) else (x, 0)


def roots(F, f, seed: int = 0) -> list:
    """Distinct roots in F of the nonzero polynomial f (coefficients in F)."""
    f = U.trim(F, f)
    if not f:
        raise ValueError("the zero polynomial has every element as a root")
    out: list = []
    if F.is_zero(f[0]):
        out.append(F.zero)
        while f and F.is_zero(f[0]):
            f = f[1:]
    h = _linear_part(F, f)
    _split(F, h, random.Random(seed), out)
    return sorted(out, key=_sort_key)


def roots_in_extension(Fp: PrimeField, f, seed: int = 0) -> list:
    """Roots of an F_p polynomial lying in GF(p^2) but not in GF(p)."""
    f = U.monic(Fp, U.trim(Fp, f))
    if not f:
        raise ValueError("the zero polynomial has every element as a root")
    if len(f) <= 2:
        return []
    x = [0, 1]
    xp = U.powmod(Fp, x, Fp.p, f)
    xp2 = U.powmod(Fp, x, Fp.p**2, f)
    h2 = U.gcd(Fp, f, U.sub(Fp, xp2, x))
    h1 = U.gcd(Fp, f, U.sub(Fp, xp, x))
    quad = U.divmod_(Fp, h2, h1)[0]
    if len(quad) <= 1:
        return []
    F2 = QuadraticField(Fp)
    out: list = []
    _split(F2, [F2.embed(c) for c in quad], random.Random(seed), out)
    return sorted(out, key=_sort_key)


def roots_upto_quadratic(Fp: PrimeField, f, seed: int = 0) -> tuple[list, list]:
    """(roots in GF(p), roots in GF(p^2) minus GF(p)) of an F_p polynomial."""
    return roots(Fp, f, seed), roots_in_extension(Fp, f, seed)
