import random

import pytest

from roughtol import ApproximationSpace, FinitePoset, Relation, Universe
from roughtol.algebras import (
    DeMorganLattice,
    algebra_report,
    increasing_algebra,
    is_heyting,
    kleene_check,
    nelson_equation_check,
    quasi_nelson_check,
    relative_pseudocomplement,
    rough_algebra,
    weak_implication,
)

from _sweeps import random_tolerance


def boolean_cube(n):
    points = list(range(1 << n))
    poset = FinitePoset.from_leq(points, lambda p, q: p | q == q)
    full = (1 << n) - 1
    return DeMorganLattice(poset, (poset.index(full & ~p) for p in points))


def chain_with_identity_negation(n):
    poset = FinitePoset.from_leq(list(range(n)), lambda p, q: p <= q)
    return DeMorganLattice(poset, range(n))


def test_carrier_must_be_lattice():
    anti = FinitePoset.from_leq(["x", "y"], lambda a, b: a == b)
    with pytest.raises(ValueError):
        DeMorganLattice(anti, (0, 1))


def test_negation_must_permute():
    poset = FinitePoset.from_leq([0, 1], lambda p, q: p <= q)
    with pytest.raises(ValueError):
        DeMorganLattice(poset, (0, 0))


def test_kleene_boolean(r5_space):
    ok, witness = kleene_check(boolean_cube(3))
    assert ok and witness is None


def test_kleene_on_increasing_completion_of_r5(r5_space):
    # the completion is not even modular here, yet the three laws hold
    algebra = increasing_algebra(r5_space)
    assert not algebra.poset.is_distributive()
    ok, witness = kleene_check(algebra)
    assert ok and witness is None


def test_identity_negation_fails_k2():
    ok, witness = kleene_check(chain_with_identity_negation(2))
    assert not ok
    assert witness[0] == "K2"


def test_relative_pseudocomplement_bounds():
    cube = boolean_cube(3)
    top = cube.top
    bottom = cube.bottom
    poset = cube.poset
    full = 7
    for a in range(len(poset)):
        assert relative_pseudocomplement(cube, a, top) == top
        complement = poset.index(full & ~poset.points[a])
        assert relative_pseudocomplement(cube, a, bottom) == complement


def test_relative_pseudocomplement_missing_in_diamond():
    order = {("0", "x"), ("0", "y"), ("0", "z"), ("0", "1"), ("x", "1"), ("y", "1"), ("z", "1")}
    poset = FinitePoset.from_leq(
        ["0", "x", "y", "z", "1"], lambda a, b: a == b or (a, b) in order
    )
    diamond = DeMorganLattice(poset, range(5))
    x, y = poset.index("x"), poset.index("y")
    assert relative_pseudocomplement(diamond, x, y) is None
    assert not is_heyting(diamond)
    # implication into the top exists even without distributivity
    assert relative_pseudocomplement(diamond, x, diamond.top) == diamond.top


def test_pseudocomplement_agrees_with_join_formula_when_distributive():
    rng = random.Random(73)
    cube = boolean_cube(3)
    poset = cube.poset
    join, meet = poset._tables()
    for a in range(len(poset)):
        for b in range(len(poset)):
            candidates = [z for z in range(len(poset)) if poset.leq(meet[z][a], b)]
            formula = candidates[0]
            for z in candidates[1:]:
                formula = join[formula][z]
            assert relative_pseudocomplement(cube, a, b) == formula


def test_simplex_rough_pairs_are_heyting(simplex3_space):
    algebra = rough_algebra(simplex3_space)
    assert is_heyting(algebra)
    assert quasi_nelson_check(algebra)


def test_join_formula_on_distributive_rough_carrier(simplex3_space):
    algebra = rough_algebra(simplex3_space)
    poset = algebra.poset
    assert poset.is_distributive()
    join, meet = poset._tables()
    rng = random.Random(109)
    n = len(poset)
    for _ in range(60):
        a, b = rng.randrange(n), rng.randrange(n)
        candidates = [z for z in range(n) if poset.leq(meet[z][a], b)]
        formula = candidates[0]
        for z in candidates[1:]:
            formula = join[formula][z]
        assert relative_pseudocomplement(algebra, a, b) == formula


def test_three_element_example_quasi_nelson_not_nelson(three_elem):
    space = ApproximationSpace(three_elem)
    algebra = rough_algebra(space)
    ok, witness = kleene_check(algebra)
    assert ok
    assert quasi_nelson_check(algebra)
    nelson, triple = nelson_equation_check(algebra)
    assert not nelson
    assert triple is not None and len(triple) == 3
    a, b, c = (algebra.poset.index(p) for p in triple)
    _, meet = algebra.poset._tables()
    inner = weak_implication(algebra, b, c)
    left = weak_implication(algebra, meet[a][b], c)
    right = None if inner is None else weak_implication(algebra, a, inner)
    assert left != right


def test_boolean_cube_is_nelson():
    cube = boolean_cube(3)
    assert quasi_nelson_check(cube)
    assert nelson_equation_check(cube) == (True, None)


def test_equivalence_rough_pairs_are_nelson(equivalence5):
    space = ApproximationSpace(equivalence5)
    algebra = rough_algebra(space)
    assert kleene_check(algebra)[0]
    assert quasi_nelson_check(algebra)
    assert nelson_equation_check(algebra) == (True, None)


def test_irredundant_covering_always_quasi_nelson():
    from roughtol import characterize_irredundant

    rng = random.Random(79)
    seen = 0
    for r in [random_tolerance(rng, "abcde") for _ in range(120)]:
        if not characterize_irredundant(r).holds:
            continue
        algebra = rough_algebra(ApproximationSpace(r))
        assert kleene_check(algebra)[0]
        assert quasi_nelson_check(algebra)
        seen += 1
    assert seen > 10


def test_four_element_path_kleene_but_not_quasi_nelson():
    # the rough pairs of a four-element path form a non-distributive
    # lattice: the crossing laws hold, some weak implication does not exist
    u = Universe("abcd")
    r = Relation.from_neighborhoods(
        u, {"a": "ab", "b": "abc", "c": "bcd", "d": "cd"}
    )
    algebra = rough_algebra(ApproximationSpace(r))
    assert not algebra.poset.is_distributive()
    assert kleene_check(algebra)[0]
    assert not quasi_nelson_check(algebra)
    assert not is_heyting(algebra)


def test_crossing_computation_on_rough_pairs():
    # the law behind K3: the meet with the negation has empty lower part,
    # the join has full upper part, in the product formulas
    rng = random.Random(83)
    for _ in range(40):
        r = random_tolerance(rng, "abcde")
        space = ApproximationSpace(r)
        full = r.universe.full
        for x in range(full + 1):
            lo, hi = space.lower(x), space.upper(x)
            clo, chi = space.lower(full & ~x), space.upper(full & ~x)
            assert lo & clo == 0
            assert hi | chi == full
            assert space.interior_downup(hi & chi) == space.interior_downup(hi & ~lo)


def test_algebra_report_shape(three_elem):
    algebra = rough_algebra(ApproximationSpace(three_elem))
    report = algebra_report(algebra)
    assert report["kleene"] and report["heyting"] and report["quasi_nelson"]
    assert not report["nelson"]
    assert "nelson" in report["witnesses"]


def test_weak_implication_memoized(three_elem):
    algebra = rough_algebra(ApproximationSpace(three_elem))
    first = weak_implication(algebra, 0, 1)
    assert weak_implication(algebra, 0, 1) == first
    assert (0, 1) in algebra._impl
