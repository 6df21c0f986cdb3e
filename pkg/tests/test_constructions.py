from fractions import Fraction as Q

import pytest

from plgroups.constructions import (
    bump,
    dyadic_fgh,
    gs_family,
    homothety,
    independent_pair,
    interpolate,
    lemma72_pair,
    multibump,
    prime_family,
    reflection,
)
from plgroups.plmap import Compact, HalfLine, Line, compose, evaluate, fix_support, germ, slope_left, slope_right
from plgroups.thompson import check_two_bump_conditions, verify_f_relations

from oracles import map_eval

UNIT = Compact(1)


def test_bump_formula_on_both_branches():
    s, b = Q(3), Q(5, 4)
    f = bump(s, b)
    knee = s * b / (s + 1)
    for t in (Q(1, 10), knee / 2, knee):
        assert evaluate(f, t) == t / s
    for t in (knee, (knee + b) / 2, b):
        assert evaluate(f, t) == s * (t - knee) + b / (s + 1)


def test_bump_rejects_slope_one():
    with pytest.raises(ValueError):
        bump(1, 1)


def test_gs_family_f_values():
    f, g, h = gs_family(2, 2, 2)
    assert evaluate(f, Q(1, 2)) == Q(1, 4)
    assert fix_support(f).support_components == ((0, Q(3, 4)),)
    assert fix_support(g).support_components == ((Q(1, 4), 1),)


def test_dyadic_h_breakpoint():
    _, _, h = dyadic_fgh(2)
    s3 = Q(2)
    knee = 3 * s3 / (4 * (s3 + 1)) + Q(1, 4)
    assert knee == Q(3, 4)
    assert (knee, Q(1, 2)) in h.points


def test_dyadic_h_for_s3_three():
    _, _, h = dyadic_fgh(3)
    knee = Q(3) * Q(3, 4) / 4 + Q(1, 4)
    assert evaluate(h, knee) == Q(3, 4) / 4 + Q(1, 4)


def test_dyadic_requires_s3_at_least_two():
    with pytest.raises(ValueError):
        dyadic_fgh(Q(3, 2))


def test_gs_family_requires_parameters_above_one():
    with pytest.raises(ValueError):
        gs_family(2, Q(1, 2), 3)


def test_multibump_components_lie_in_region():
    f = multibump(4, 0, Q(1, 2))
    comps = fix_support(f).support_components
    assert len(comps) == 4
    assert all(0 <= lo and hi <= Q(1, 2) for lo, hi in comps)


def test_lemma72_pair_default_example():
    f, g = lemma72_pair(Q(1, 2), 2, 0, Q(1, 4), Q(3, 4), 1)
    # nodes t1..t4 = 1/8, 3/8, 1/2, 7/8
    assert evaluate(f, Q(1, 8)) == Q(1, 16)
    assert evaluate(g, Q(3, 4)) == Q(3, 8)
    assert evaluate(f, evaluate(g, Q(3, 4))) == Q(3, 16) <= Q(1, 4)
    assert slope_right(f, 0) == Q(1, 2)
    assert slope_left(g, 1) == 2
    assert check_two_bump_conditions(f, g).ok


@pytest.mark.parametrize("args", [
    (Q(1, 2), 2, 0, Q(1, 4), Q(3, 4), 1),
    (Q(1, 3), 3, 0, Q(1, 3), Q(2, 3), 1),
    (Q(2, 5), Q(5, 2), -1, 0, 2, 5),
])
def test_lemma72_pair_relators(args):
    f, g = lemma72_pair(*args)
    assert verify_f_relations(f, g).ok


def test_lemma72_pair_parameter_checks():
    with pytest.raises(ValueError):
        lemma72_pair(2, Q(1, 2), 0, Q(1, 4), Q(3, 4), 1)
    with pytest.raises(ValueError):
        lemma72_pair(Q(1, 2), 2, 0, Q(3, 4), Q(1, 4), 1)
    with pytest.raises(ValueError):
        lemma72_pair(Q(1, 2), 2, 0, Q(1, 4), Q(3, 4), 1, nodes=(Q(1, 2), Q(3, 8), Q(1, 2), Q(7, 8)))


@pytest.mark.parametrize("s3", [2, 3, Q(5, 2)])
def test_dyadic_pair_relators(s3):
    f, _, h = dyadic_fgh(s3)
    rep = verify_f_relations(f, h)
    assert rep.hypotheses.ok
    assert rep.chain1_holds and rep.chain2_holds and rep.presentation_holds


def test_relator_hypotheses_reject_right_moving_bump():
    f = bump(Q(1, 2), Q(1, 4))  # moves points right
    g = bump(2, Q(1, 4), Q(3, 4))
    rep = verify_f_relations(f, g)
    assert not rep.hypotheses.ok


def test_relator_chains_agree_with_grid_evaluation():
    f, g = lemma72_pair(Q(1, 2), 2, 0, Q(1, 4), Q(3, 4), 1)
    rep = verify_f_relations(f, g)
    h = compose(f, g)
    lhs = rep.chain1[0]
    # (h^2 f h^-2) ∘ h^2 = h^2 ∘ f, checked pointwise
    for t in (Q(k, 64) for k in range(-8, 72)):
        assert map_eval(lhs, map_eval(h, map_eval(h, t))) == map_eval(h, map_eval(h, map_eval(f, t)))


def test_independent_pair_germs():
    f, g = independent_pair(2, 3)
    assert germ(f, "left", UNIT).slope == Q(1, 2) and germ(f, "right", UNIT).slope == 1
    assert germ(g, "left", UNIT).slope == 1 and germ(g, "right", UNIT).slope == 3


def test_prime_family_slopes():
    gens = prime_family([2, 3])
    assert germ(gens["f2"], "left", UNIT).slope == 2
    assert germ(gens["f2"], "right", UNIT).slope == 1
    assert germ(gens["g3"], "left", UNIT).slope == 1
    assert germ(gens["g3"], "right", UNIT).slope == 3


def test_reflections():
    assert evaluate(reflection(UNIT), Q(1, 3)) == Q(2, 3)
    assert evaluate(reflection(Compact(3, 1)), Q(3, 2)) == Q(5, 2)
    assert evaluate(reflection(Line()), 5) == -5
    with pytest.raises(ValueError):
        reflection(HalfLine())


def test_homothety_and_interpolate():
    assert evaluate(homothety(3), Q(1, 2)) == Q(3, 2)
    with pytest.raises(ValueError):
        interpolate([(0, 0), (0, 1)])
    with pytest.raises(ValueError):
        interpolate([(0, 0), (1, 2), (2, 1)])
