import dataclasses

import pytest

from scrollsmith.criterion import classify
from scrollsmith.oracle import (
    X2_PARAMS,
    NonGeneric,
    StratumError,
    check_dstar,
    check_star,
    contracted_lines_x2,
    derive_seed,
    line_in_pencil,
    oracle_smooth,
    quadric_value,
    sample_instance,
    witness_is_valid,
    x2_lines,
)
from scrollsmith.polyalg import BinaryForm, PrimeField
from scrollsmith.scroll import BaseLocus, ScrollParams, canonicalize, coeff_degrees, iter_params

X1 = ScrollParams((0, 0, 0, 0), 0, 1)
X2 = ScrollParams((2, 1, 1, 1), -2, -1)
X3 = ScrollParams((4, 3, 2, 1), -4, -3)
F = PrimeField(10007)


def test_derive_seed_is_stable_and_separating():
    assert derive_seed(0, "a") == derive_seed(0, "a")
    assert derive_seed(0, "a") != derive_seed(1, "a") != derive_seed(0, "b")
    assert 0 <= derive_seed(123, 4, 5) < 2 ** 63


def test_sample_degrees():
    inst = sample_instance(X1, F, 3)
    assert all(inst.alpha[i][j].degree == 0 for i in range(5) for j in range(5))
    assert all(inst.beta[i][j].degree == 1 for i in range(5) for j in range(5))
    inst = sample_instance(X2, F, 3)
    assert inst.alpha[4][4].is_zero and inst.alpha[4][4].degree == -2
    assert inst.alpha[0][4].degree == 0 and not inst.alpha[0][4].is_zero


def test_sample_matches_degree_grid_and_is_symmetric():
    for p in (X2, X3, ScrollParams((3, 2, 1, 0), -3, 0)):
        inst = sample_instance(p, F, 9)
        for grid, b in ((inst.alpha, p.b1), (inst.beta, p.b2)):
            m = coeff_degrees(p, b)
            for i in range(5):
                for j in range(5):
                    assert grid[i][j] is grid[j][i]
                    assert grid[i][j].degree == m.entry(i + 1, j + 1)


def test_sample_deterministic():
    assert sample_instance(X3, F, 5) == sample_instance(X3, F, 5)
    assert sample_instance(X3, F, 5) != sample_instance(X3, F, 6)


def test_star_vacuous_when_first_system_free():
    inst = sample_instance(ScrollParams((2, 1, 0, 0), 0, 3), F, 1)
    c = check_star(inst)
    assert c.ok and c.stratum is BaseLocus.EMPTY


def test_star_on_2a_tuple():
    p = ScrollParams((2, 2, 2, 2), -4, 0)
    assert classify(p).case.value == "2a"
    c = check_star(sample_instance(p, F, 2))
    assert c.ok


def test_star_rejects_too_large():
    with pytest.raises(StratumError):
        check_star(sample_instance(ScrollParams((3, 1, 1, 0), -3, 0), F, 1))


def test_dstar_on_known_families():
    for p in (X2, X3):
        assert check_dstar(sample_instance(p, F, 4)).ok


def test_dstar_fails_off_criterion():
    p = canonicalize((4, 3, 2, 1), -4, -4)
    inst = sample_instance(p, F, 4)
    c = check_dstar(inst)
    assert not c.ok and c.witnesses
    located = [w for w in c.witnesses if w.t is not None]
    assert located and all(witness_is_valid(inst, w) for w in located)


@pytest.mark.parametrize("p", [X1, X2, X3])
def test_known_families_smooth_capable(p):
    v = oracle_smooth(p, trials=3, field=F, seed=0)
    assert v.smooth_capable and v.witnesses == () and v.trials_run <= 3
    assert v.confidence.kind == "exact"


@pytest.mark.parametrize("p", [X1, X2, X3])
def test_open_condition_pass_rate(p):
    passes = sum(check_star(i).ok and check_dstar(i).ok
                 for i in (sample_instance(p, F, s) for s in range(20)))
    assert passes >= 18


def test_too_large_singular_every_trial():
    v = oracle_smooth(ScrollParams((1, 0, 0, 0), -1, 0), trials=4, field=F, seed=1)
    assert v.verdict == "singular-evidence" and not v.star_ok
    assert v.confidence.kind == "probabilistic" and v.confidence.trials == 4
    assert v.witnesses


def test_verdict_witness_invariant():
    for p in list(iter_params(2, -4, 1))[::7]:
        v = oracle_smooth(p, trials=2, field=F, seed=3)
        assert (v.star_ok and v.dstar_ok) == (not v.witnesses)


def test_witnesses_resubstitute_exactly():
    checked = 0
    for p in iter_params(3, -6, 2):
        if classify(p).smooth:
            continue
        inst = sample_instance(p, F, 8)
        for c in (check_dstar(inst),) + (() if classify(p).reason.value == "BaseLocusTooLarge"
                                         else (check_star(inst),)):
            for w in c.witnesses:
                if w.t is not None:
                    assert witness_is_valid(inst, w), (p, w)
                    checked += 1
    assert checked > 500


def test_forged_witness_rejected():
    p = ScrollParams((2, 2, 1, 1), -3, -3)  # Bs|D2| = Y3, isolated bad points
    inst = sample_instance(p, F, 4)
    w = next(w for w in check_dstar(inst).witnesses if w.t is not None)
    assert witness_is_valid(inst, w)
    off_stratum = dataclasses.replace(w, x=(1,) + tuple(w.x[1:]))
    assert not witness_is_valid(inst, off_stratum)
    moved = [dataclasses.replace(w, x=(0, 0, 1, r, 1)) for r in range(1, 6)]
    assert not any(witness_is_valid(inst, m) for m in moved)


def test_verdict_json_shape():
    d = oracle_smooth(X2, trials=1, field=F).as_dict()
    assert set(d) >= {"verdict", "star_ok", "dstar_ok", "confidence", "witnesses", "field"}


# -- contracted lines on X2 -------------------------------------------------------

def test_x2_lines_seed_7():
    res = x2_lines(10007, 7)
    assert res.count == 2
    inst = sample_instance(X2_PARAMS, F, res.seed)
    assert all(line_in_pencil(inst, ln) for ln in res.lines)


def test_x2_lines_resubstitution_many_seeds():
    for seed in range(10):
        res = x2_lines(10007, seed)
        inst = sample_instance(X2_PARAMS, F, res.seed if res.attempts == 1 else
                               derive_seed(seed, "resample", res.attempts - 1))
        assert res.count == 2
        for ln in res.lines:
            assert line_in_pencil(inst, ln)
            # the line passes through Y5 = (0:0:0:0:1) and has x1 = 0
            assert ln.v[0] in (0, (0, 0))


def _with_alpha(inst, updates):
    grid = [list(r) for r in inst.alpha]
    for (i, j), c in updates.items():
        grid[i][j] = grid[j][i] = BinaryForm.constant(inst.field, c)
    return dataclasses.replace(inst, alpha=tuple(tuple(r) for r in grid))


def test_x2_planted_tangency_is_nongeneric():
    inst = sample_instance(X2_PARAMS, F, 7)
    # conic = (m . v)^2 meets every line in a double point
    m = (3, 5, 11)
    idx = (1, 2, 3)
    upd = {}
    for a in range(3):
        for b in range(a, 3):
            upd[(idx[a], idx[b])] = m[a] * m[b] * (1 if a == b else 2)
    with pytest.raises(NonGeneric):
        contracted_lines_x2(_with_alpha(inst, upd))


def test_x2_vanishing_alpha15_is_nongeneric():
    inst = sample_instance(X2_PARAMS, F, 7)
    grid = [list(r) for r in inst.alpha]
    grid[0][4] = grid[4][0] = BinaryForm.zero(F, 0)
    with pytest.raises(NonGeneric):
        contracted_lines_x2(dataclasses.replace(inst, alpha=tuple(tuple(r) for r in grid)))


def test_x2_requires_x2_params():
    with pytest.raises(ValueError):
        contracted_lines_x2(sample_instance(X3, F, 1))


def test_quadric_value_zero_on_y5_for_x2():
    # x = (0,0,0,0,1) lies on both quadrics since alpha_55, beta_55 vanish
    inst = sample_instance(X2_PARAMS, F, 2)
    pt = (0, 0, 0, 0, 1)
    assert quadric_value(inst.alpha, (5, 1), pt) == 0
    assert quadric_value(inst.beta, (5, 1), pt) == 0
