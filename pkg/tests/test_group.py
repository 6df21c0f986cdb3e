import math
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings

from plgroups.constructions import bump, dyadic_fgh, interpolate, multibump, reflection, translation
from plgroups.families import (
    UNIT,
    dyadic_gs_group,
    dyadic_reflection_group,
    gnu_group,
    gnu_map,
    gs_group,
    independent_group,
    single_bump_group,
)
from plgroups.group import (
    BudgetExceeded,
    ConstraintSpec,
    FGGroup,
    ModuleSpec,
    ball,
    char_image,
    constraint_check,
    format_word,
    in_bounded,
    independence,
    irreducible,
    membership,
    orbit_sum_character,
    parse_word,
    psi,
    psi_invariance,
    word_eval,
)
from plgroups.plmap import Compact, Line, compose, conjugate, germ, identity, invert
from plgroups.slopegroup import CharacterSpec, RationalGens
from plgroups.thompson import verify_f_relations

from oracles import map_eval, refined_grid
from strategies import unit_maps

DYADIC = FGGroup(UNIT, RationalGens((2,)), ModuleSpec.dyadic_like(2), ())


# -- words --------------------------------------------------------------------------

def test_word_parse_and_format():
    w = parse_word("f g^-1 h")
    assert w == (("f", 1), ("g", -1), ("h", 1))
    assert format_word(w) == "f g^-1 h"
    assert parse_word("") == () == parse_word("1")


def test_empty_word_and_cancelling_pair():
    G = dyadic_gs_group()
    assert word_eval(G, ()) == identity()
    assert word_eval(G, parse_word("f f^-1")) == identity()


def test_word_product_against_pointwise_oracle():
    G = dyadic_gs_group()
    f, h = G.generator("f"), G.generator("h")
    fh = word_eval(G, parse_word("f h"))
    for t in refined_grid(f, h, fh):
        assert map_eval(fh, t) == map_eval(f, map_eval(h, t))
    assert verify_f_relations(f, h).ok


def test_unknown_generator():
    with pytest.raises(KeyError):
        word_eval(dyadic_gs_group(), parse_word("q"))


def test_generator_validation():
    with pytest.raises(ValueError):
        FGGroup(UNIT, RationalGens((2,)), ModuleSpec.rationals(), (("f", bump(2, 1)), ("f", bump(2, 1))))
    with pytest.raises(ValueError):
        FGGroup(UNIT, RationalGens((2,)), ModuleSpec.rationals(), {"t": translation(1)})
    with pytest.raises(ValueError):
        FGGroup(UNIT, RationalGens((2,)), ModuleSpec.rationals(), {"r": reflection(UNIT)})


# -- balls --------------------------------------------------------------------------

def test_cyclic_ball():
    B = ball(single_bump_group(), 2)
    assert len(B) == 5
    assert B.counts_by_length() == [1, 2, 2]


def test_radius_zero_is_identity():
    B = ball(gs_group(), 0)
    assert B.elements == [identity()]
    assert B.words == [()]


def test_dyadic_ball_regression():
    B = ball(dyadic_gs_group(2), 3)
    # g and h coincide for s3 = 2, so the ball is that of a 2-generator group
    assert len(B) == 53
    assert B.counts_by_length() == [1, 4, 12, 36]
    assert dyadic_gs_group(2).generator("g") == dyadic_gs_group(2).generator("h")


def test_ball_regressions():
    assert len(ball(dyadic_gs_group(3), 3)) == 187
    assert len(ball(dyadic_reflection_group(), 4)) == 161
    assert [len(ball(gs_group(), r)) for r in range(4)] == [1, 7, 37, 187]


def test_ball_first_word_is_shortlex():
    B = ball(dyadic_reflection_group(), 2)
    assert B.words[:5] == [(), (("f", 1),), (("f", -1),), (("fbar", 1),), (("fbar", -1),)]
    for g, w in zip(B.elements, B.words):
        assert word_eval(dyadic_reflection_group(), w) == g


def test_ball_nested():
    G = dyadic_reflection_group()
    small, big = ball(G, 2), ball(G, 3)
    assert all(g in big for g in small)


def test_budget():
    with pytest.raises(BudgetExceeded):
        ball(gs_group(), 4, budget=100)


def test_ball_elements_are_members():
    G = dyadic_reflection_group()
    assert all(membership(G, g).verdict for g in ball(G, 3))


# -- membership ---------------------------------------------------------------------------

def test_membership_examples():
    assert membership(DYADIC, bump(2, 1)).verdict is False
    g = interpolate([(0, 0), (Q(1, 2), Q(1, 4)), (Q(3, 4), Q(1, 2)), (1, 1)], 1, 1)
    m = membership(DYADIC, g)
    assert m.verdict is True
    assert any("certified" in r for r in m.reasons)
    assert membership(DYADIC, identity()).verdict is True


def test_membership_slope_outside():
    assert membership(DYADIC, bump(3, 1)).verdict is False


def test_membership_unchecked_module():
    G = FGGroup(UNIT, RationalGens((2,)), ModuleSpec.unchecked(), ())
    assert membership(G, bump(2, 1)).verdict is None


def test_modules():
    assert ModuleSpec.dyadic_like(2).contains(Q(3, 8))
    assert not ModuleSpec.dyadic_like(2).contains(Q(1, 3))
    assert ModuleSpec.rationals().contains(Q(1, 3))


def test_in_bounded_examples():
    G = FGGroup(Line(), RationalGens((2,)), ModuleSpec.rationals(), ())
    assert not in_bounded(single_bump_group(), bump(2, 1))
    assert in_bounded(gs_group(), multibump(2, Q(1, 4), Q(1, 2)))
    assert not in_bounded(G, translation(1))


def test_irreducible_examples():
    ok, _ = irreducible(dyadic_reflection_group())
    assert ok
    f, _, _ = dyadic_fgh()
    g = bump(2, Q(3, 4), Q(1, 4))
    assert irreducible(DYADIC.with_generators({"f": f, "g": g}))[0]
    assert irreducible(DYADIC.with_generators({"f": bump(2, Q(1, 2))})) == (False, Q(3, 4))
    assert irreducible(DYADIC) == (False, Q(1, 2))


def test_irreducible_isolated_common_fixed_point():
    G = DYADIC.with_generators({"a": bump(2, Q(1, 2)), "b": bump(2, Q(1, 2), Q(1, 2))})
    assert irreducible(G) == (False, Q(1, 2))


# -- characters and independence ----------------------------------------------------------

def test_independence_examples():
    rep = independence(independent_group(2, 3))
    assert rep.kind == "independent" and rep.index == 1
    assert independence(single_bump_group()).kind == "neither"
    rep = independence(gnu_group())
    assert rep.kind == "neither" and rep.index == math.inf


def test_gnu_generators_satisfy_constraint():
    for _, g in gnu_group().generators:
        assert constraint_check(g, ConstraintSpec.Gnu(2), UNIT)
    assert germ(gnu_map(), "left", UNIT).slope == 2


def test_almost_independent_example():
    # chi_l and chi_r of a, b: (1, 1) and (1, -1) generate an index-2 subgroup of Z^2
    R = dyadic_reflection_group()
    c, d = invert(R.generator("f")), invert(R.generator("fbar"))
    a, b = compose(c, d), compose(c, invert(d))
    G = DYADIC.with_generators({"a": a, "b": b})
    rep = independence(G)
    assert rep.kind == "almost_independent" and rep.index == 2


def test_independence_needs_nonzero_characters():
    with pytest.raises(ValueError):
        independence(DYADIC.with_generators({"m": multibump(2, Q(1, 4), Q(1, 2))}))


@pytest.mark.parametrize("factory", [independent_group, single_bump_group, gnu_group])
def test_independence_invariant_under_ball_generators(factory):
    G = factory()
    B = ball(G, 2)
    H = G.with_generators((f"x{i}", g) for i, g in enumerate(B.elements[1:]))
    a, b = independence(G), independence(H)
    assert (a.kind, a.index, a.joint) == (b.kind, b.index, b.joint)


def test_char_image_index_five():
    f = bump(2, 1)
    f5 = identity()
    for _ in range(5):
        f5 = compose(f5, f)
    G = FGGroup(UNIT, RationalGens((2,)), ModuleSpec.rationals(), {"f5": f5})
    L = char_image(G, CharacterSpec.chi_left())
    assert L.basis == ((5,),)
    full = char_image(single_bump_group(), CharacterSpec.chi_left())
    assert full.index(L) == 5


# -- psi ----------------------------------------------------------------------------------------

def test_psi_examples():
    assert psi(single_bump_group(), bump(2, 1)) == 1
    G = dyadic_gs_group()
    assert psi(G, G.generator("f")) == Q(1, 2)


def test_psi_invariance_under_reflection():
    G = dyadic_reflection_group()
    theta = reflection(UNIT)
    rep = psi_invariance(G, lambda g: conjugate(theta, g), 3)
    assert rep.ok and rep.checked == len(ball(G, 3))


def test_psi_invariance_reports_failures():
    G = gs_group()
    theta = reflection(UNIT)
    rep = psi_invariance(G, lambda g: compose(g, g), 1)
    assert not rep.ok
    assert psi_invariance(G, lambda g: conjugate(theta, g), 1).membership_failures == []


@settings(max_examples=50)
@given(unit_maps(), unit_maps())
def test_decreasing_conjugation_swaps_end_slopes(f, g):
    theta = reflection(UNIT)
    for x in (f, compose(f, g)):
        y = conjugate(theta, x)
        assert germ(y, "right", UNIT).slope == germ(x, "left", UNIT).slope
        assert germ(y, "left", UNIT).slope == germ(x, "right", UNIT).slope


def test_ball_homomorphism_laws():
    G = dyadic_reflection_group()
    elems = ball(G, 2).elements
    rng = random.Random(5)
    for _ in range(100):
        x, y = rng.choice(elems), rng.choice(elems)
        xy = compose(x, y)
        for side in ("left", "right"):
            assert germ(xy, side, UNIT) == germ(x, side, UNIT).after(germ(y, side, UNIT))


# -- constraints ----------------------------------------------------------------------------

def test_constraint_examples():
    f = bump(2, 1)
    assert constraint_check(identity(), ConstraintSpec.G1(), UNIT)
    assert constraint_check(f, ConstraintSpec.G3(), UNIT)
    assert not constraint_check(f, ConstraintSpec.G1(), UNIT)
    assert not constraint_check(f, ConstraintSpec.G2(), UNIT)


@given(unit_maps())
def test_gnu_special_cases(g):
    assert constraint_check(g, ConstraintSpec.Gnu(1), UNIT) == constraint_check(g, ConstraintSpec.G2(), UNIT)
    assert constraint_check(g, ConstraintSpec.Gnu(-1), UNIT) == constraint_check(g, ConstraintSpec.G3(), UNIT)


def test_qpair_and_translations():
    c = ConstraintSpec.QPair(RationalGens((2,)), RationalGens((3,)))
    assert constraint_check(bump(2, 1), ConstraintSpec.QPair(RationalGens((2,)), RationalGens((2,))), UNIT)
    assert not constraint_check(bump(2, 1), c, UNIT)
    t = ConstraintSpec.Translations(ModuleSpec.dyadic_like(2))
    assert constraint_check(translation(Q(3, 4)), t, Line())
    assert not constraint_check(translation(Q(1, 3)), t, Line())


# -- orbit sums ------------------------------------------------------------------------------

def test_orbit_sum_examples():
    G = single_bump_group()
    theta = reflection(UNIT)
    chi_l = CharacterSpec.chi_left()
    eta = orbit_sum_character(G, [(chi_l, lambda g: g), (chi_l, lambda g: conjugate(theta, g))])
    f = bump(2, 1)
    assert eta(f).exponents == (0,)
    assert eta.sign(f) == 0
    single = orbit_sum_character(G, [(chi_l, lambda g: g)])
    assert single(f).exponents == (-1,)
    assert single.sign(invert(f)) == 1


def test_orbit_sum_is_psi_log():
    G = dyadic_gs_group()
    theta = reflection(UNIT)
    chi_l = CharacterSpec.chi_left()
    eta = orbit_sum_character(G, [(chi_l, lambda g: g), (chi_l, lambda g: conjugate(theta, g))])
    for g in ball(G, 2):
        assert Q(2) ** eta(g).exponents[0] == psi(G, g)


def test_orbit_sum_rejects_fractional_coefficients():
    with pytest.raises(ValueError):
        orbit_sum_character(single_bump_group(), [(CharacterSpec("slope", Q(1, 2), 0), lambda g: g)])


def test_compact_generalised():
    G = FGGroup(Compact(3, 1), RationalGens((2,)), ModuleSpec.rationals(), {"f": bump(2, 2, 1)})
    assert irreducible(G)[0]
