import random

import pytest

from cmkit import (
    ElementNotInGroup,
    FiniteGroup,
    GroupTooLarge,
    NotNormal,
    Permutation,
    SubgroupMismatch,
    build_gm,
)
from conftest import gm_bundle, klein_4, symmetric_3


def test_from_generators_examples(v4):
    assert v4.order == 4
    assert build_gm(6).group.order == 24
    assert FiniteGroup.from_generators(3, []).order == 1


def test_order_bound():
    with pytest.raises(GroupTooLarge):
        FiniteGroup.from_generators(10, [Permutation.from_cycles(10, [tuple(range(10))])],
                                    max_order=5)


def test_closure_and_lagrange(s3):
    for G in (s3, klein_4(), build_gm(6).group):
        els = set(G.elements)
        rng = random.Random(7)
        for _ in range(50):
            x, y = rng.choice(G.elements), rng.choice(G.elements)
            assert x * y in els
        for H in G.all_subgroups():
            assert G.order % H.order == 0


def test_conjugacy_classes_examples(s3, v4):
    assert [c.size for c in v4.conjugacy_classes()] == [1, 1, 1, 1]
    assert [c.size for c in s3.conjugacy_classes()] == [1, 3, 2]
    # class count equals irreducible count for gm(6)
    inst, _, T = gm_bundle(6)
    assert len(inst.group.conjugacy_classes()) == len(T.irreducibles)


def test_class_equation(s3):
    for G in (s3, build_gm(8).group):
        assert sum(c.size for c in G.conjugacy_classes()) == G.order
        assert G.conjugacy_classes()[0].representative.is_identity()


def test_classes_are_conjugation_orbits(s3):
    G = build_gm(6).group
    for cls in G.conjugacy_classes():
        members = set(cls.members)
        for g in G.generators:
            gi = g.inverse()
            assert {g * x * gi for x in members} == members


def test_all_subgroups_counts(v4):
    assert len(v4.all_subgroups()) == 5
    assert len(FiniteGroup.cyclic(6).all_subgroups()) == 4


def test_all_subgroups_against_pair_closure_oracle():
    # every subgroup generated by a pair (or triple) must already be listed
    G = build_gm(8).group
    listed = {H.element_set for H in G.all_subgroups()}
    for x in G.elements:
        for y in G.elements:
            assert G.subgroup_generated([x, y]).element_set in listed
    rng = random.Random(3)
    for _ in range(150):
        trip = [rng.choice(G.elements) for _ in range(3)]
        assert G.subgroup_generated(trip).element_set in listed


def test_all_subgroups_oracle_up_to_order_64():
    rng = random.Random(17)
    for G in (build_gm(12).group, build_gm(16).group):
        listed = {H.element_set for H in G.all_subgroups()}
        for _ in range(200):
            seed = [rng.choice(G.elements) for _ in range(rng.randint(1, 3))]
            assert G.subgroup_generated(seed).element_set in listed


def test_subgroup_enumeration_bound():
    G = build_gm(6).group
    with pytest.raises(GroupTooLarge):
        G.all_subgroups(bound=10)


def test_is_normal_examples(s3):
    inst = build_gm(10)
    assert inst.group.is_normal(inst.subgroup_a())
    H = s3.subgroup_generated([Permutation([1, 0, 2])])
    assert not s3.is_normal(H)
    assert s3.is_normal(s3.full_subgroup())


def test_subgroup_mismatch(s3, v4):
    H = v4.subgroup_generated([v4.generators[0]])
    with pytest.raises(SubgroupMismatch):
        s3.is_normal(H)


def test_normalizer_examples(s3):
    H = s3.subgroup_generated([Permutation([1, 0, 2])])
    assert s3.normalizer(H) == H
    inst = build_gm(8)
    Nb = inst.group.normalizer(inst.subgroup_b())
    assert Nb.order == 16
    # t^2 normalizes <b> while t does not
    t = inst.t
    assert t * t in Nb and t not in Nb
    # a normal subgroup's normalizer is the whole group
    assert inst.group.normalizer(inst.subgroup_a()).order == inst.group.order


def test_quotient_group_examples(v4):
    inst = build_gm(6)
    Q = inst.group.quotient_group(inst.subgroup_a())
    assert Q.order == 12 and Q.is_abelian()
    assert v4.quotient_group(v4.full_subgroup()).order == 1
    C2 = v4.quotient_group(v4.subgroup_generated([v4.generators[0]]))
    assert C2.order == 2


def test_quotient_requires_normality(s3):
    H = s3.subgroup_generated([Permutation([1, 0, 2])])
    with pytest.raises(NotNormal):
        s3.quotient_group(H)


def test_quotient_order_times_kernel(s3):
    G = build_gm(8).group
    for H in G.all_subgroups():
        if G.is_normal(H):
            assert G.quotient_group(H).order * H.order == G.order


def test_is_abelian(v4):
    assert v4.is_abelian()
    assert not build_gm(6).group.is_abelian()
    assert FiniteGroup.trivial().is_abelian()


def test_coset_action_examples(s3, v4):
    # trivial subgroup: regular action
    act = s3.coset_action(s3.trivial_subgroup())
    assert act[s3.generators[0]].degree == 6
    # full subgroup: everything collapses to one point
    act = s3.coset_action(s3.full_subgroup())
    assert all(p.degree == 1 for p in act.values())
    # index-3 subgroup of S3 recovers the natural action
    H = s3.subgroup_generated([Permutation([1, 0, 2])])
    act = s3.coset_action(H)
    images = set(act.values())
    assert len(images) == 6 and all(p.degree == 3 for p in images)


def test_coset_action_is_homomorphism_exhaustively(s3):
    # exhaustive on groups of modest order
    inst = build_gm(6)
    for G, H in ((s3, s3.subgroup_generated([Permutation([1, 0, 2])])),
                 (inst.group, inst.subgroup_a())):
        act = G.coset_action(H)
        for x in G.elements:
            for y in G.elements:
                assert act[x * y] == act[x] * act[y]


def test_element_order_examples():
    inst6, inst8 = build_gm(6), build_gm(8)
    assert inst6.group.element_order(inst6.group.identity) == 1
    assert inst6.group.element_order(inst6.b * inst6.t) == 12
    assert inst8.group.element_order(inst8.b * inst8.t) == 8
    with pytest.raises(ElementNotInGroup):
        inst6.group.element_order(Permutation.identity(3))


def test_abelian_invariants():
    inst = build_gm(6)
    Q = inst.group.quotient_group(inst.subgroup_a())
    assert Q.abelian_invariants() == (2, 6)
    assert FiniteGroup.cyclic(12).abelian_invariants() == (12,)
    assert klein_4().abelian_invariants() == (2, 2)
    with pytest.raises(ValueError):
        symmetric_3().abelian_invariants()
