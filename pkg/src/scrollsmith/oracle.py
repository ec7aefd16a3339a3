"""Randomized check of the smoothness criterion on explicit pencils.

An instance draws every coefficient form alpha_ij, beta_ij uniformly over
a prime field.  X = D1 n D2 is smooth iff

  (*)  no point of Sing D1 inside Bs|D1| lies on D2, and
  (**) grad_x f1 and grad_x f2 are nowhere proportional on Bs|D2|.

Both conditions reduce to "a system of fiber forms has no common zero
over any t", decided exactly by the elimination in polyalg.  Only the
genericity of the sample is probabilistic.

Two deliberate simplifications: points of Sing D1 that lie in Bs|D2| are
not excluded from (*), since grad_x f1 vanishes there and (**) already
fails; and strata where the equations are fewer than the fiber dimension
are decided by the dimension count instead of being rejected.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from typing import Optional

from .polyalg import (
    BihomForm,
    BinaryForm,
    PrimeField,
    QuadraticField,
    bihom_add,
    bihom_mul,
    bihom_neg,
    binary_roots,
    degeneracy_locus,
    form_eval,
    kernel,
    lift_field,
    locus_points,
    solve_fiber,
)
from .polyalg.elimination import DegeneracyLocus
from .scroll import BaseLocus, ScrollParams, base_locus, coeff_degrees

DEFAULT_PRIME = 10007
MAX_RESAMPLES = 16


class NonGeneric(RuntimeError):
    """Every resample hit a degenerate instance."""


class StratumError(ValueError):
    """The base locus is outside what the check is defined on."""


def derive_seed(seed: int, *parts) -> int:
    """Independent 63-bit seed from a base seed and labels."""
    h = hashlib.sha256(repr((int(seed),) + tuple(str(x) for x in parts)).encode())
    return int.from_bytes(h.digest()[:8], "big") >> 1


@dataclass(frozen=True)
class PencilInstance:
    params: ScrollParams
    alpha: tuple  # 5 x 5, symmetric, BinaryForm entries
    beta: tuple
    field: PrimeField
    seed: int

    def quadric(self, which: int) -> tuple:
        return self.alpha if which == 1 else self.beta


def _random_grid(F, degs, rng):
    grid = [[None] * 5 for _ in range(5)]
    for i in range(5):
        for j in range(i, 5):
            n = degs.entry(i + 1, j + 1)
            f = BinaryForm.random(F, n, rng)
            tries = 0
            while n >= 0 and f.is_zero:
                tries += 1
                if tries > MAX_RESAMPLES:
                    raise NonGeneric(f"coefficient form of degree {n} sampled as zero")
                f = BinaryForm.random(F, n, rng)
            grid[i][j] = grid[j][i] = f
    return tuple(tuple(r) for r in grid)


def sample_instance(p: ScrollParams, field: PrimeField | int | None = None,
                    seed: int = 0) -> PencilInstance:
    """Uniformly random pencil with the given parameters, deterministic in seed."""
    F = _as_field(field)
    rng = random.Random(derive_seed(seed, p, F.p))
    alpha = _random_grid(F, coeff_degrees(p, p.b1), rng)
    beta = _random_grid(F, coeff_degrees(p, p.b2), rng)
    return PencilInstance(p, alpha, beta, F, seed)


def _as_field(field) -> PrimeField:
    if field is None:
        return PrimeField(DEFAULT_PRIME)
    if isinstance(field, int):
        return PrimeField(field)
    return field


# -- fiber forms on a stratum ---------------------------------------------------

def _start(locus: BaseLocus) -> int:
    """0-based index of the first coordinate that is free on the stratum."""
    return locus.first_free - 1


def _coef(grid, i, j):
    c = grid[i][j]
    return c.scale(2) if i == j else c


def gradient_on_stratum(grid, s0: int) -> list[BihomForm]:
    """Components d f / d x_i (i = 0..4) restricted to x_0 = ... = x_{s0-1} = 0,
    as linear forms in the remaining 5 - s0 coordinates."""
    F = grid[0][0].field
    n = 5 - s0
    out = []
    for i in range(5):
        terms = {}
        for j in range(s0, 5):
            e = [0] * n
            e[j - s0] = 1
            terms[tuple(e)] = _coef(grid, i, j)
        out.append(BihomForm(F, n, 1, terms))
    return out


def quadric_on_stratum(grid, s0: int) -> BihomForm:
    F = grid[0][0].field
    n = 5 - s0
    terms = {}
    for i in range(s0, 5):
        for j in range(i, 5):
            e = [0] * n
            e[i - s0] += 1
            e[j - s0] += 1
            terms[tuple(e)] = grid[i][j]
    return BihomForm(F, n, 2, terms)


def gradient_minors(inst: PencilInstance, s0: int) -> list[BihomForm]:
    g1 = gradient_on_stratum(inst.alpha, s0)
    g2 = gradient_on_stratum(inst.beta, s0)
    out = []
    for i in range(5):
        for j in range(i + 1, 5):
            m = bihom_add(bihom_mul(g1[i], g2[j]), bihom_neg(bihom_mul(g1[j], g2[i])))
            out.append(m)
    return out


# -- verdict types ----------------------------------------------------------------

@dataclass(frozen=True)
class Confidence:
    kind: str  # "exact" or "probabilistic"
    trials: Optional[int] = None
    field: Optional[str] = None

    def __str__(self):
        if self.kind == "exact":
            return "exact"
        return f"probabilistic(trials={self.trials}, field={self.field})"

    def as_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind != "exact":
            d.update(trials=self.trials, field=self.field)
        return d


EXACT = Confidence("exact")


@dataclass(frozen=True)
class Witness:
    """A failing point, or the failing t-locus when no point is located.

    ``x`` lists all five fiber coordinates; coordinates outside the stratum
    are zero.  Elements of GF(p^2) are (a, b) pairs meaning a + b*u.
    """

    condition: str  # "star" or "dstar"
    stratum: str
    t: Optional[tuple]
    x: Optional[tuple]
    locus: str
    seed: int

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "stratum": self.stratum,
            "t": _jsonable(self.t),
            "x": _jsonable(self.x),
            "locus": self.locus,
            "seed": self.seed,
        }


def _jsonable(v):
    if v is None:
        return None
    return [list(c) if isinstance(c, tuple) else c for c in v]


@dataclass(frozen=True)
class ConditionCheck:
    condition: str
    ok: bool
    stratum: BaseLocus
    locus: Optional[DegeneracyLocus]
    witnesses: tuple = ()
    confidence: Confidence = EXACT


@dataclass(frozen=True)
class OracleVerdict:
    params: ScrollParams
    star_ok: bool
    dstar_ok: bool
    witnesses: tuple
    confidence: Confidence
    trials_run: int
    passing_seed: Optional[int] = None
    field: str = ""

    @property
    def smooth_capable(self) -> bool:
        return self.star_ok and self.dstar_ok

    @property
    def verdict(self) -> str:
        return "smooth-capable" if self.smooth_capable else "singular-evidence"

    def as_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "verdict": self.verdict,
            "star_ok": self.star_ok,
            "dstar_ok": self.dstar_ok,
            "trials_run": self.trials_run,
            "passing_seed": self.passing_seed,
            "field": self.field,
            "confidence": self.confidence.as_dict(),
            "witnesses": [w.as_dict() for w in self.witnesses],
        }


# -- the two conditions -------------------------------------------------------------

def _describe(locus: DegeneracyLocus) -> str:
    if locus.everywhere:
        return "every fiber: " + locus.reason
    parts = []
    if len(locus.affine) > 1:
        parts.append("roots of s-polynomial " + str(list(locus.affine)) + " (s = t0/t1)")
    if locus.at_infinity:
        parts.append("t = (1:0)")
    return "; ".join(parts)


def _field_name(F) -> str:
    return f"GF({F.p})"


def _witnesses(inst, condition, stratum, forms, locus, s0, locate, max_points=4):
    F = inst.field
    desc = _describe(locus)
    if not locate:
        return (Witness(condition, str(stratum), None, None, desc, inst.seed),)
    rng = random.Random(derive_seed(inst.seed, inst.params, condition, "witness"))
    if locus.everywhere:
        tpts = [(F(rng.randrange(F.p)), F.one) for _ in range(3)]
    else:
        tpts, _ = locus_points(locus, F, extension=True, seed=inst.seed)
    out = []
    for tp in tpts:
        x = solve_fiber(forms, tp, extension=True, rng=rng)
        if x is None:
            continue
        G = lift_field(F, *tp, *x)
        full = tuple([G.zero] * s0 + [G.embed(c) for c in x])
        out.append(Witness(condition, str(stratum), tuple(G.embed(c) for c in tp), full,
                           desc, inst.seed))
        if len(out) >= max_points:
            break
    if not out:
        out.append(Witness(condition, str(stratum), None, None, desc, inst.seed))
    return tuple(out)


def _star(inst: PencilInstance, locate: bool, allow_too_large: bool) -> ConditionCheck:
    p = inst.params
    stratum = base_locus(p, p.b1)
    if stratum is BaseLocus.EMPTY:
        return ConditionCheck("star", True, stratum, None)
    if stratum is BaseLocus.TOO_LARGE and not allow_too_large:
        raise StratumError(f"Bs|D1| contains Y2 for {p}; the star check needs a smaller base locus")
    s0 = _start(stratum)
    grads = gradient_on_stratum(inst.alpha, s0)[:s0]
    forms = grads + [quadric_on_stratum(inst.beta, s0)]
    locus = degeneracy_locus(forms)
    if locus.empty:
        return ConditionCheck("star", True, stratum, locus)
    wit = _witnesses(inst, "star", stratum, forms, locus, s0, locate)
    return ConditionCheck("star", False, stratum, locus, wit)


def check_star(inst: PencilInstance, locate: bool = True) -> ConditionCheck:
    """Condition (*) on the instance; exact over the algebraic closure."""
    return _star(inst, locate, allow_too_large=False)


def check_dstar(inst: PencilInstance, locate: bool = True) -> ConditionCheck:
    """Condition (**): all 2x2 minors of the restricted gradient matrix."""
    p = inst.params
    stratum = base_locus(p, p.b2)
    if stratum is BaseLocus.EMPTY:
        return ConditionCheck("dstar", True, stratum, None)
    s0 = _start(stratum)
    forms = gradient_minors(inst, s0)
    locus = degeneracy_locus(forms)
    if locus.empty:
        return ConditionCheck("dstar", True, stratum, locus)
    wit = _witnesses(inst, "dstar", stratum, [f for f in forms if not f.is_zero] or forms,
                     locus, s0, locate)
    return ConditionCheck("dstar", False, stratum, locus, wit)


def oracle_smooth(p: ScrollParams, trials: int = 5, field: PrimeField | int | None = None,
                  seed: int = 0, locate: bool = True) -> OracleVerdict:
    """Sample up to ``trials`` instances; one passing instance certifies that
    the general member passes, since both conditions are open."""
    if trials < 1:
        raise ValueError("trials must be positive")
    F = _as_field(field)
    star_ok = dstar_ok = True
    witnesses: list = []
    for trial in range(trials):
        tseed = derive_seed(seed, "trial", trial)
        inst = sample_instance(p, F, tseed)
        s = _star(inst, locate, allow_too_large=True)
        d = check_dstar(inst, locate)
        if s.ok and d.ok:
            return OracleVerdict(p, True, True, (), EXACT, trial + 1, tseed, _field_name(F))
        star_ok &= s.ok
        dstar_ok &= d.ok
        witnesses.extend(s.witnesses)
        witnesses.extend(d.witnesses)
    conf = Confidence("probabilistic", trials, _field_name(F))
    return OracleVerdict(p, star_ok, dstar_ok, tuple(witnesses), conf, trials, None,
                         _field_name(F))


# -- witness re-substitution ---------------------------------------------------------

def _gradient_values(grid, t, x, G):
    vals = []
    coefs = [[G.embed(form_eval(_coef(grid, i, j), t)) for j in range(5)] for i in range(5)]
    for i in range(5):
        acc = G.zero
        for j in range(5):
            acc = G.add(acc, G.mul(coefs[i][j], G.embed(x[j])))
        vals.append(acc)
    return vals


def quadric_value(grid, t, x):
    F = grid[0][0].field
    G = lift_field(F, *t, *x)
    acc = G.zero
    for i in range(5):
        for j in range(i, 5):
            c = G.embed(form_eval(grid[i][j], t))
            acc = G.add(acc, G.mul(c, G.mul(G.embed(x[i]), G.embed(x[j]))))
    return acc


def witness_is_valid(inst: PencilInstance, w: Witness) -> bool:
    """Re-substitute a located witness into the equations it claims to solve."""
    if w.t is None or w.x is None:
        return False
    F = inst.field
    G = lift_field(F, *w.t, *w.x)
    if all(G.is_zero(G.embed(c)) for c in w.x) or all(G.is_zero(G.embed(c)) for c in w.t):
        return False
    p = inst.params
    b = p.b1 if w.condition == "star" else p.b2
    s0 = _start(base_locus(p, b))
    if any(not G.is_zero(G.embed(w.x[i])) for i in range(min(s0, 5))):
        return False
    g1 = _gradient_values(inst.alpha, w.t, w.x, G)
    if w.condition == "star":
        return all(G.is_zero(v) for v in g1) and G.is_zero(quadric_value(inst.beta, w.t, w.x))
    g2 = _gradient_values(inst.beta, w.t, w.x, G)
    for i in range(5):
        for j in range(i + 1, 5):
            if not G.is_zero(G.sub(G.mul(g1[i], g2[j]), G.mul(g1[j], g2[i]))):
                return False
    return True


# -- contracted lines on the X2 family ---------------------------------------------------

X2_PARAMS = ScrollParams((2, 1, 1, 1), -2, -1)


@dataclass(frozen=True)
class ContractedLine:
    """Direction v = (0, v2, v3, v4) in the chart x5 = 1 and the fiber t."""

    v: tuple
    t: tuple


@dataclass(frozen=True)
class X2Lines:
    count: int
    lines: tuple
    seed: int
    attempts: int = 1

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "attempts": self.attempts,
            "lines": [{"v": _jsonable(l.v), "t": _jsonable(l.t)} for l in self.lines],
        }


def contracted_lines_x2(inst: PencilInstance) -> X2Lines:
    """Lines through Y5 inside fibers of X2, via the conic, the constant
    line and the t-linear quadric.  Raises NonGeneric on degenerate input."""
    if inst.params != X2_PARAMS:
        raise ValueError(f"contracted lines are defined for {X2_PARAMS}, got {inst.params}")
    F = inst.field
    a, b = inst.alpha, inst.beta
    if a[0][4].is_zero:
        raise NonGeneric("alpha_15 vanishes")
    idx = (1, 2, 3)  # x2, x3, x4
    line = [b[i][4].coeffs[0] for i in idx]
    if all(F.is_zero(c) for c in line):
        raise NonGeneric("the linear condition on v is identically zero")
    basis = kernel(F, [line], 3)
    P, Q = basis

    def conic_at(v):
        acc = F.zero
        for ii, i in enumerate(idx):
            for jj in range(ii, 3):
                j = idx[jj]
                acc = F.add(acc, F.mul(a[i][j].coeffs[0], F.mul(v[ii], v[jj])))
        return acc

    # restrict the conic to the line u*P + w*Q: c0 u^2 + c1 u w + c2 w^2
    c0 = conic_at(P)
    c2 = conic_at(Q)
    c1 = F.sub(F.sub(conic_at([F.add(x, y) for x, y in zip(P, Q)]), c0), c2)
    if all(F.is_zero(c) for c in (c0, c1, c2)):
        raise NonGeneric("the conic contains the line")
    disc = F.sub(F.mul(c1, c1), F.mul(4, F.mul(c0, c2)))
    if F.is_zero(disc):
        raise NonGeneric("the line is tangent to the conic")
    out = []
    for (u, w) in binary_roots(F, [c0, c1, c2], extension=True):
        G = lift_field(F, u, w)
        v = [G.add(G.mul(G.embed(u), G.embed(P[k])), G.mul(G.embed(w), G.embed(Q[k])))
             for k in range(3)]
        # beta quadric in x2..x4 is linear in t: q0 * t0 + q1 * t1
        q = [G.zero, G.zero]
        for ii, i in enumerate(idx):
            for jj in range(ii, 3):
                j = idx[jj]
                m = G.mul(v[ii], v[jj])
                for k in range(2):
                    q[k] = G.add(q[k], G.mul(G.embed(b[i][j].coeffs[k]), m))
        if G.is_zero(q[0]) and G.is_zero(q[1]):
            raise NonGeneric("the t-linear equation vanishes identically")
        t = (q[1], G.neg(q[0]))
        vv = (G.zero,) + tuple(v)
        out.append(ContractedLine(_proj_normalize(G, vv), _proj_normalize(G, t)))
    return X2Lines(len(out), tuple(out), inst.seed)


def _proj_normalize(G, v):
    for c in v:
        if not G.is_zero(c):
            inv = G.inv(c)
            return tuple(G.mul(inv, x) for x in v)
    return tuple(v)


def x2_lines(field: PrimeField | int | None = None, seed: int = 0,
             retries: int = MAX_RESAMPLES) -> X2Lines:
    """Sample X2 instances from ``seed`` until one is generic."""
    F = _as_field(field)
    last = None
    for attempt in range(retries):
        s = seed if attempt == 0 else derive_seed(seed, "resample", attempt)
        try:
            res = contracted_lines_x2(sample_instance(X2_PARAMS, F, s))
        except NonGeneric as exc:
            last = exc
            continue
        return X2Lines(res.count, res.lines, res.seed, attempt + 1)
    raise NonGeneric(f"no generic X2 instance in {retries} samples: {last}")


def line_in_pencil(inst: PencilInstance, line: ContractedLine) -> bool:
    """Whether the points (s*v, 1) over t lie on both quadrics for all s."""
    F = inst.field
    G = lift_field(F, *line.t, *line.v)
    for s in (1, 2, 3):
        x = tuple(G.mul(G.embed(s), G.embed(c)) for c in line.v[:4]) + (G.one,)
        if not (G.is_zero(quadric_value(inst.alpha, line.t, x))
                and G.is_zero(quadric_value(inst.beta, line.t, x))):
            return False
    return True
