import random

import pytest

from roughtol import (
    ApproximationSpace,
    CapExceededError,
    Concept,
    Context,
    Universe,
    bridge_context,
    concept_lattice,
    concepts,
    condition_dagger,
    characterize_irredundant,
    enumerate_down_family,
    fc_representation,
    weak_negation,
    weak_opposition,
)
from roughtol.completions import disjoint_poset, disjoint_representation
from roughtol.fca import fc_phi, fc_poset, read_burmeister, write_burmeister

from _sweeps import all_tolerances, random_tolerance


def test_derive_is_complement_of_upper(r5, r5_space):
    ctx = bridge_context(r5)
    u = r5.universe
    assert ctx.derive_objects(u.mask("a")) == u.mask("cde")
    assert ctx.derive_objects(0) == u.full
    assert ctx.derive_attributes(0) == u.full
    for x in u.all_subsets():
        assert ctx.derive_objects(x) == u.complement(r5_space.upper(x))
        double = ctx.derive_attributes(ctx.derive_objects(x))
        assert double == r5_space.closure_updown(x)


def test_derive_side_dispatch(r5):
    ctx = bridge_context(r5)
    u = r5.universe
    assert ctx.derive(u.mask("a"), "objects") == ctx.derive_objects(u.mask("a"))
    assert ctx.derive(u.mask("a"), "attributes") == ctx.derive_attributes(u.mask("a"))
    with pytest.raises(ValueError):
        ctx.derive(0, "sideways")


def test_concepts_bridge_r5(r5, r5_space):
    ctx = bridge_context(r5)
    found = concepts(ctx)
    assert len(found) == 10
    assert {c.extent for c in found} == set(enumerate_down_family(r5_space))
    for c in found:
        assert ctx.derive_objects(c.extent) == c.intent
        assert ctx.derive_attributes(c.intent) == c.extent


def test_concepts_trivial_context():
    objects = Universe(["g"])
    attributes = Universe(["m"])
    empty = Context(objects, attributes, [0])
    found = concepts(empty)
    assert len(found) == 2
    assert Concept(0, 1) in found and Concept(1, 0) in found


def test_concepts_cap(simplex3):
    with pytest.raises(CapExceededError):
        concepts(bridge_context(simplex3), cap=3)
    assert len(concepts(bridge_context(simplex3))) == 8


def test_concept_lattice_is_complete(r5):
    poset = concept_lattice(bridge_context(r5))
    cls = poset.classify()
    assert cls.is_lattice and cls.is_complete


def test_weak_operations_produce_concepts(r5):
    ctx = bridge_context(r5)
    for c in concepts(ctx):
        for image in (weak_negation(ctx, c), weak_opposition(ctx, c)):
            assert ctx.derive_objects(image.extent) == image.intent
            assert ctx.derive_attributes(image.intent) == image.extent


def test_weak_opposition_adjunction(r5):
    ctx = bridge_context(r5)
    found = concepts(ctx)
    for alpha in found:
        for beta in found:
            left = beta.extent | weak_opposition(ctx, alpha).extent == weak_opposition(ctx, alpha).extent
            right = alpha.extent | weak_opposition(ctx, beta).extent == weak_opposition(ctx, beta).extent
            assert left == right


def test_bridge_orthocomplement_is_swap(r5, r5_space):
    ctx = bridge_context(r5)
    for c in concepts(ctx):
        swapped = Concept(c.intent, c.extent)
        assert ctx.derive_objects(swapped.extent) == swapped.intent
        # and it agrees with the ortho operation of the down family
        assert r5_space.ortho_down(c.extent) == c.intent


def test_weak_ops_reduce_to_approximations_on_bridge(r5, r5_space):
    ctx = bridge_context(r5)
    for c in concepts(ctx):
        neg = weak_negation(ctx, c)
        low = r5_space.lower(c.extent)
        assert neg.intent == low
        assert neg.extent == r5_space.ortho_down(low)
        opp = weak_opposition(ctx, c)
        low_b = r5_space.lower(c.intent)
        assert opp.extent == low_b
        assert opp.intent == r5_space.ortho_down(low_b)


def test_condition_dagger(r5, simplex3, equivalence5):
    assert not condition_dagger(bridge_context(r5))
    assert condition_dagger(bridge_context(simplex3))
    assert condition_dagger(bridge_context(equivalence5))


def test_dagger_agrees_with_chord_clause():
    rng = random.Random(71)
    relations = list(all_tolerances("abcd")) + [
        random_tolerance(rng, "abcde") for _ in range(60)
    ]
    for r in relations:
        assert condition_dagger(bridge_context(r)) == characterize_irredundant(r).chord_pairs


def test_fc_representation_matches_disjoint(r5_space):
    fc_pairs = fc_representation(r5_space)
    rep = disjoint_representation(r5_space)
    assert len(fc_pairs) == len(rep)
    poset = fc_poset(r5_space)
    d_poset = disjoint_poset(r5_space, rep)
    mapping = {p: fc_phi(r5_space, p) for p in d_poset.points}
    assert d_poset.is_order_isomorphism(poset, mapping)


def test_fc_representation_equivalence(equivalence5):
    from roughtol import rough_poset

    space = ApproximationSpace(equivalence5)
    fc = fc_poset(space)
    rs = rough_poset(space)
    assert len(fc) == len(rs)
    assert rs.find_isomorphism(fc) is not None


def test_fc_swap_matches_disjoint_swap(r5_space):
    from roughtol.completions import de_morgan_swap

    for pair in disjoint_representation(r5_space):
        alpha, beta = fc_phi(r5_space, pair)
        swapped = fc_phi(r5_space, de_morgan_swap(r5_space, pair))
        assert swapped == (beta, alpha)


def test_burmeister_round_trip(r5):
    ctx = bridge_context(r5)
    text = write_burmeister(ctx)
    back = read_burmeister(text)
    assert back == ctx
    assert "X" in text and "." in text


def test_burmeister_rejects_garbage():
    with pytest.raises(ValueError):
        read_burmeister("not a context\n")
    with pytest.raises(ValueError):
        read_burmeister("B\n\n2\n1\n\ng1\ng2\nm\nX\n")  # truncated grid
