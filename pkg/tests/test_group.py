"""The BSGS kernel against exhaustive-closure oracles."""

import random

import pytest

from centerbound.errors import CapExceeded, DegreeMismatch
from centerbound.group import Group, Subgroup, subgroup_from_elements
from centerbound.perm import Perm, identity, parse_perm

from _oracles import closure

SMALL_GROUPS = {
    "sym4": (4, ["(1 2)", "(1 2 3 4)"], 24),
    "alt5": (5, ["(1 2 3)", "(3 4 5)"], 60),
    "sym3": (3, ["(1 2)", "(1 2 3)"], 6),
    "dih4": (4, ["(1 2 3 4)", "(1 3)"], 8),
    "cyc5": (5, ["(1 2 3 4 5)"], 5),
    "klein": (4, ["(1 2)(3 4)", "(1 3)(2 4)"], 4),
    "trivial": (5, [], 1),
    "sym3_skew_gens": (3, ["(1 2)", "(2 3)"], 6),
    "alt4": (4, ["(1 2 3)", "(2 3 4)"], 12),
    "dih6_on_6": (6, ["(1 2 3 4 5 6)", "(2 6)(3 5)"], 12),
}


def build(name):
    degree, gens, _ = SMALL_GROUPS[name]
    return Group(degree, [parse_perm(s, degree) for s in gens])


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_order_matches_closure(name):
    degree, gens, expected = SMALL_GROUPS[name]
    G = build(name)
    assert G.order() == expected
    assert len(closure(degree, G.generators)) == expected


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_membership_matches_closure(name):
    degree, _, _ = SMALL_GROUPS[name]
    G = build(name)
    members = closure(degree, G.generators)
    for p in members:
        assert G.contains(p)
    rng = random.Random(name)
    for _ in range(50):
        images = list(range(1, degree + 1))
        rng.shuffle(images)
        p = Perm(images)
        assert G.contains(p) == (p in members)


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_elements_each_exactly_once(name):
    degree, _, expected = SMALL_GROUPS[name]
    G = build(name)
    elems = G.elements()
    assert len(elems) == expected
    assert len(set(elems)) == expected
    assert set(elems) == closure(degree, G.generators)


def test_identity_always_contained():
    for name in SMALL_GROUPS:
        G = build(name)
        assert G.contains(identity(G.degree))


def test_alt4_excludes_transposition():
    G = build("alt4")
    assert not G.contains(parse_perm("(1 2)", 4))
    assert G.contains(parse_perm("(1 2)(3 4)", 4))


def test_sym3_contains_transposition():
    assert build("sym3").contains(parse_perm("(1 3)", 3))


def test_elements_deterministic_order():
    a = build("sym4").elements()
    b = build("sym4").elements()
    assert a == b


def test_bsgs_idempotent():
    G = build("alt5")
    G.build_bsgs()
    first = G.order()
    G.build_bsgs()
    assert G.order() == first


def test_trivial_group_and_degree_zero():
    assert Group(0).order() == 1
    assert Group(0).elements() == (identity(0),)
    assert build("trivial").elements() == (identity(5),)


def test_enumeration_cap_is_loud():
    degree = 9
    G = Group(degree, [parse_perm("(1 2)", degree),
                       parse_perm("(1 2 3 4 5 6 7 8 9)", degree)])
    with pytest.raises(CapExceeded) as exc:
        G.elements(cap=1000)
    assert exc.value.value == 362880
    assert exc.value.limit == 1000


def test_generator_degree_checked():
    with pytest.raises(DegreeMismatch):
        Group(4, [parse_perm("(1 2)", 3)])
    G = build("sym3")
    with pytest.raises(DegreeMismatch):
        G.contains(parse_perm("(1 2)", 4))


def test_random_element_uniform_and_seeded():
    G = build("sym3")
    rng = random.Random("seed")
    draws = [G.random_element(rng) for _ in range(3000)]
    assert all(G.contains(p) for p in draws)
    counts = {}
    for p in draws:
        counts[p] = counts.get(p, 0) + 1
    assert len(counts) == 6
    assert min(counts.values()) > 350  # roughly uniform over 6 elements
    rng2 = random.Random("seed")
    assert draws[:10] == [G.random_element(rng2) for _ in range(10)]


def test_subgroup_handle_checks_parent_membership():
    G = build("sym4")
    H = Subgroup(G, [parse_perm("(1 2 3)", 4)])
    assert H.order() == 3
    assert H.parent is G
    with pytest.raises(ValueError):
        Subgroup(build("alt4"), [parse_perm("(1 2)", 4)])


def test_subgroup_order_divides_parent():
    G = build("sym4")
    for gens in (["(1 2)"], ["(1 2 3)"], ["(1 2)(3 4)", "(1 3)(2 4)"]):
        H = Subgroup(G, [parse_perm(s, 4) for s in gens])
        assert G.order() % H.order() == 0


def test_subgroup_from_elements_reduces_generators():
    G = build("sym4")
    rotations = sorted(closure(4, [parse_perm("(1 2 3 4)", 4)]))
    H = subgroup_from_elements(G, rotations)
    assert H.order() == 4
    assert len(H.generators) <= 2
    assert set(H.elements()) == set(rotations)


def test_subgroup_from_elements_whole_group_shortcut():
    G = build("dih4")
    H = subgroup_from_elements(G, list(G.elements()))
    assert H.order() == 8
    assert H.generators == G.generators


def test_base_points_are_one_based():
    G = build("sym3")
    assert all(1 <= b <= 3 for b in G.base)
