import random
from fractions import Fraction as Q

import pytest

from plgroups.constructions import bump, interpolate, multibump
from plgroups.families import dyadic_reflection_group, gs_group
from plgroups.group import FGGroup, ModuleSpec
from plgroups.plmap import HalfLine, compose, conjugate, fix_support, germ, identity, invert
from plgroups.slopegroup import RationalGens
from plgroups.twisted import (
    Automorphism,
    NotAnAutomorphism,
    homothety_pullback_check,
    order2_invariant,
    separate_classes,
    twist,
    verify_order2,
)

from strategies import random_dyadic_map

HALF = FGGroup(HalfLine(), RationalGens((2, 3)), ModuleSpec.dyadic_like(6), ())


def test_twist_with_identity_is_conjugacy():
    G = gs_group()
    a = Automorphism.identity(G)
    z, x = G.generator("f"), G.generator("g")
    assert twist(z, x, a) == compose(compose(z, x), invert(z))


def test_twist_trivial_cases():
    G = dyadic_reflection_group()
    beta = Automorphism.reflection(G)
    rng = random.Random(1)
    for _ in range(20):
        z, x = random_dyadic_map(rng), random_dyadic_map(rng)
        assert twist(identity(), x, beta) == x
        assert twist(z, identity(), beta) == compose(z, invert(beta(z)))


def test_twist_is_an_action():
    G = dyadic_reflection_group()
    beta = Automorphism.reflection(G)
    rng = random.Random(2)
    for _ in range(40):
        z1, z2, x = (random_dyadic_map(rng) for _ in range(3))
        assert twist(z2, twist(z1, x, beta), beta) == twist(compose(z2, z1), x, beta)


def test_twist_check_rejects_outsiders():
    beta = Automorphism.reflection(dyadic_reflection_group())
    with pytest.raises(ValueError):
        twist(bump(2, 1), identity(), beta, check=True)


def test_automorphism_validation():
    G = dyadic_reflection_group()
    assert not Automorphism.reflection(G).increasing
    assert Automorphism.identity(G).increasing
    with pytest.raises(NotAnAutomorphism):
        Automorphism(bump(2, Q(1, 2)), G)
    # conjugating by a non-dyadic bump pushes generators out of G([0,1]; Z[1/2], <2>)
    with pytest.raises(NotAnAutomorphism):
        Automorphism(bump(3, 1), G)


def test_order2_invariant_identity():
    beta = Automorphism.reflection(gs_group())
    assert order2_invariant(identity(), beta) == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_order2_invariant_multibump(n):
    beta = Automorphism.reflection(gs_group())
    assert order2_invariant(multibump(n, 0, Q(1, 2)), beta) == 2 * n


def test_order2_invariant_constant_on_twists():
    G = dyadic_reflection_group()
    beta = Automorphism.reflection(G)
    rng = random.Random(4)
    for n in (1, 2, 3):
        x = multibump(n, 0, Q(1, 2))
        for _ in range(10):
            z = random_dyadic_map(rng)
            assert order2_invariant(twist(z, x, beta), beta) == 2 * n


def test_verify_order2_rejects_homothety():
    G = FGGroup(HalfLine(), RationalGens((2,)), ModuleSpec.dyadic_like(2), {"t": interpolate([(0, 0), (1, 2)], 1, 1)})
    with pytest.raises(ValueError):
        verify_order2(Automorphism.homothety(G, 2))
    with pytest.raises(ValueError):
        order2_invariant(identity(), Automorphism.homothety(G, 2))


def test_separate_multibumps_under_reflection():
    beta = Automorphism.reflection(gs_group())
    rep = separate_classes([multibump(n, 0, Q(1, 2)) for n in (1, 2, 3)], beta)
    assert rep.certified_classes == 3
    assert "order2_components" in rep.invariant_names
    assert all(c.label == "certified-distinct" for c in rep.cells)


def test_separate_same_orbit_is_inconclusive():
    G = dyadic_reflection_group()
    beta = Automorphism.reflection(G)
    x = multibump(2, 0, Q(1, 2))
    z = G.generator("f")
    rep = separate_classes([x, twist(z, x, beta)], beta)
    assert rep.certified_classes == 1
    assert rep.cells[0].label == "inconclusive"


def test_separate_falls_back_to_end_slopes():
    alpha = Automorphism.identity(gs_group())
    rep = separate_classes([bump(2, 1), bump(4, 1)], alpha)
    assert {"psi", "sigma_l", "sigma_r"} <= set(rep.invariant_names)
    assert rep.certified_classes == 2
    assert any("sigma_l=1/2" in line for line in rep.lines())


def test_reflection_excludes_swapped_slopes():
    rep = separate_classes([identity()], Automorphism.reflection(dyadic_reflection_group()))
    assert "psi" in rep.invariant_names
    assert "sigma_l" not in rep.invariant_names


@pytest.mark.parametrize("p, shift, expected", [(2, 1, 2), (1, 1, 1), (Q(1, 2), 4, 2), (3, 1, 3)])
def test_homothety_eigen_relation(p, shift, expected):
    g = interpolate([(0, 0), (2, 2 + shift)], 1, 1)
    assert germ(g, "right", HalfLine()).amplitude == shift
    G = HALF.with_generators({"g": g})
    alpha = Automorphism.homothety(G, p)
    assert germ(alpha(g), "right", HalfLine()).amplitude == expected
    rep = homothety_pullback_check(G, p, radius=3)
    assert rep.ok and rep.checked == 7


def test_homothety_check_requires_half_line():
    with pytest.raises(ValueError):
        homothety_pullback_check(gs_group(), 2)


def test_conjugation_preserves_component_count_on_orbit():
    G = dyadic_reflection_group()
    beta = Automorphism.reflection(G)
    rng = random.Random(9)
    for _ in range(20):
        z, x = random_dyadic_map(rng), random_dyadic_map(rng)
        y = twist(z, x, beta)
        a = compose(x, beta(x))
        b = compose(y, beta(y))
        assert b == conjugate(z, a)
        assert fix_support(a).count == fix_support(b).count
