"""Prime fields GF(p) and their quadratic extensions GF(p^2).

Elements are plain Python values: ints in range(p) for GF(p) and pairs
(a, b) meaning a + b*u with u^2 = n for GF(p^2), where n is the least
quadratic non-residue mod p.  The field object carries all arithmetic.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, NamedTuple


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """GF(p) for an odd prime p below 2**31 (the kernel's word-size limit)."""

    degree = 1

    def __init__(self, p: int):
        if p % 2 == 0 or p >= 2**31 or not is_prime(p):
            raise ValueError(f"need an odd prime below 2**31, got {p}")
        self.p = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x: int) -> int:
        return int(x) % self.p

    def embed(self, x: int) -> int:
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def random(self, rng: random.Random):
        return rng.randrange(self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def is_square(self, a) -> bool:
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        """A square root of ``a``, or None when ``a`` is a non-residue."""
        return _tonelli_shanks(self, a % self.p)

    @property
    def nonresidue(self) -> int:
        return _least_nonresidue(self.p)


@lru_cache(maxsize=None)
def _least_nonresidue(p: int) -> int:
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            return n
    raise ValueError(f"no non-residue mod {p}")


class QElem(NamedTuple):
    """a + b*u in GF(p^2)."""

    a: int
    b: int

    def __str__(self):
        return f"{self.a}+{self.b}u" if self.b else str(self.a)


class QuadraticField:
    """GF(p^2) = GF(p)[u] / (u^2 - n) with n the least non-residue mod p."""

    degree = 2

    def __init__(self, p: int | PrimeField):
        self.base = p if isinstance(p, PrimeField) else PrimeField(p)
        self.p = self.base.p
        self.n = _least_nonresidue(self.p)
        self.order = self.p * self.p
        self.zero = QElem(0, 0)
        self.one = QElem(1, 0)
        self.u = QElem(0, 1)

    def __repr__(self):
        return f"GF({self.p}^2)"

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.p == self.p

    def __hash__(self):
        return hash(("GF2", self.p))

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x):
        if isinstance(x, tuple):
            return QElem(x[0] % self.p, x[1] % self.p)
        return QElem(int(x) % self.p, 0)

    def embed(self, x):
        if isinstance(x, QElem):
            return x
        return QElem(int(x) % self.p, 0)

    def add(self, a, b):
        p = self.p
        return QElem((a[0] + b[0]) % p, (a[1] + b[1]) % p)

    def sub(self, a, b):
        p = self.p
        return QElem((a[0] - b[0]) % p, (a[1] - b[1]) % p)

    def neg(self, a):
        p = self.p
        return QElem((-a[0]) % p, (-a[1]) % p)

    def mul(self, a, b):
        p = self.p
        return QElem((a[0] * b[0] + self.n * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)

    def norm(self, a) -> int:
        return (a[0] * a[0] - self.n * a[1] * a[1]) % self.p

    def conj(self, a):
        return QElem(a[0], (-a[1]) % self.p)

    def inv(self, a):
        nrm = self.norm(a)
        if nrm == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        ni = pow(nrm, self.p - 2, self.p)
        return QElem((a[0] * ni) % self.p, (-a[1] * ni) % self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_zero(self, a) -> bool:
        return a[0] % self.p == 0 and a[1] % self.p == 0

    def in_base(self, a) -> bool:
        return a[1] % self.p == 0

    def random(self, rng: random.Random):
        return QElem(rng.randrange(self.p), rng.randrange(self.p))

    def elements(self) -> Iterator[tuple[int, int]]:
        return (QElem(a, b) for b in range(self.p) for a in range(self.p))

    def is_square(self, a) -> bool:
        # x is a square in GF(p^2) iff its norm is a square in GF(p)
        return self.is_zero(a) or self.base.is_square(self.norm(a))

    def sqrt(self, a):
        return _tonelli_shanks(self, a)


def _tonelli_shanks(F, a):
    if F.is_zero(a):
        return F.zero
    q = F.order
    if F.pow(a, (q - 1) // 2) != F.one:
        return None
    s, t = 0, q - 1
    while t % 2 == 0:
        s, t = s + 1, t // 2
    z = _nonsquare(F)
    m, c = s, F.pow(z, t)
    x, b = F.pow(a, (t + 1) // 2), F.pow(a, t)
    while b != F.one:
        i, bb = 0, b
        while bb != F.one:
            bb = F.mul(bb, bb)
            i += 1
        g = c
        for _ in range(m - i - 1):
            g = F.mul(g, g)
        x = F.mul(x, g)
        c = F.mul(g, g)
        b = F.mul(b, c)
        m = i
    return x


def _nonsquare(F):
    if isinstance(F, PrimeField):
        return F.nonresidue
    # deterministic scan; (a + u) runs through non-squares quickly
    for a in range(F.p):
        z = QElem(a, 1)
        if not F.is_square(z):
            return z
    raise ValueError("no non-square found")


Field = PrimeField | QuadraticField
