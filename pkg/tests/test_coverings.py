import random

import pytest

from roughtol import (
    ApproximationSpace,
    Covering,
    CoveringMismatchError,
    NotACoveringError,
    PreconditionError,
    Relation,
    Universe,
    blocks,
    blocks_covering,
    bonikowski_approximations,
    characterize_irredundant,
    family_atoms_check,
    induced_tolerance,
    is_irredundant,
    minimal_description,
    pomykala_lower,
    pomykala_upper,
    representative_certificate,
)

from _sweeps import all_tolerances, oracle_blocks, random_tolerance


def k_sets(universe):
    k1 = universe.mask(["1", "12", "13", "123"])
    k2 = universe.mask(["2", "12", "23", "123"])
    k3 = universe.mask(["3", "13", "23", "123"])
    return k1, k2, k3


def test_covering_validation():
    u = Universe("abc")
    with pytest.raises(NotACoveringError):
        Covering(u, [u.mask("ab")])
    with pytest.raises(NotACoveringError):
        Covering(u, [u.mask("ab"), 0, u.mask("c")])
    cov = Covering(u, [u.mask("ab"), u.mask("bc"), u.mask("ab")])
    assert len(cov) == 2  # duplicates collapse


def test_blocks_r5(r5):
    u = r5.universe
    assert blocks(r5) == u.sorted_subsets(
        [u.mask("ab"), u.mask("bc"), u.mask("cd"), u.mask("de")]
    )


def test_blocks_match_subset_scan_oracle():
    rng = random.Random(37)
    relations = list(all_tolerances("abcd")) + [
        random_tolerance(rng, "abcdef") for _ in range(60)
    ]
    for r in relations:
        expected = oracle_blocks(r)
        got = {frozenset(r.universe.labels(b)) for b in blocks(r)}
        assert got == expected


def test_blocks_identity_and_simplex(simplex3):
    ident = Relation.identity(Universe("abc"))
    assert blocks(ident) == ident.universe.sorted_subsets(
        [1, 2, 4]
    )
    u = simplex3.universe
    k1, k2, k3 = k_sets(u)
    found = blocks(simplex3)
    fourth = u.mask(["12", "13", "23", "123"])
    for b in (k1, k2, k3, fourth):
        assert b in found


def test_induced_tolerance(simplex3):
    u = simplex3.universe
    cov = Covering(u, k_sets(u))
    assert induced_tolerance(cov) == simplex3
    # partition induces its equivalence
    pu = Universe("abcde")
    part = Covering(pu, [pu.mask("ab"), pu.mask("cde")])
    induced = induced_tolerance(part)
    assert induced.is_equivalence()
    assert induced.neighborhood("c") == pu.mask("cde")
    tu = Universe("abc")
    two = Covering(tu, [tu.mask("ab"), tu.mask("bc")])
    rel = induced_tolerance(two)
    assert rel.neighborhood("a") == tu.mask("ab")
    assert rel.neighborhood("b") == tu.mask("abc")
    assert rel.neighborhood("c") == tu.mask("bc")


def test_is_irredundant(simplex3):
    u = simplex3.universe
    assert is_irredundant(Covering(u, k_sets(u)))
    pu = Universe("abcde")
    assert is_irredundant(Covering(pu, [pu.mask("ab"), pu.mask("cde")]))
    tu = Universe("abc")
    assert not is_irredundant(
        Covering(tu, [tu.mask("ab"), tu.mask("bc"), tu.mask("abc")])
    )


def test_characterization_r5(r5):
    ch = characterize_irredundant(r5)
    assert not any(
        (ch.chord_pairs, ch.witness_neighborhood, ch.block_witness, ch.irredundant_covering)
    )
    assert ch.agree and ch.certificate is None


def test_characterization_equivalence(equivalence5):
    ch = characterize_irredundant(equivalence5)
    assert ch.holds and ch.agree
    u = equivalence5.universe
    assert ch.certificate.members == u.sorted_subsets([u.mask("ab"), u.mask("cde")])


def test_characterization_simplex(simplex3):
    ch = characterize_irredundant(simplex3)
    assert ch.holds and ch.agree
    assert ch.certificate.members == simplex3.universe.sorted_subsets(
        k_sets(simplex3.universe)
    )


def test_characterization_clauses_agree_everywhere():
    rng = random.Random(41)
    for r in list(all_tolerances("abcd")) + [random_tolerance(rng, "abcdef") for _ in range(40)]:
        assert characterize_irredundant(r).agree


def test_representative_certificate(simplex3, equivalence5):
    u = simplex3.universe
    cov = Covering(u, k_sets(u))
    report = representative_certificate(cov, simplex3)
    assert report.complete
    k1, k2, k3 = k_sets(u)
    assert report.witnesses == {k1: "1", k2: "2", k3: "3"}

    pu = equivalence5.universe
    part = Covering(pu, [pu.mask("ab"), pu.mask("cde")])
    rep = representative_certificate(part, equivalence5)
    assert rep.witnesses == {pu.mask("ab"): "a", pu.mask("cde"): "c"}

    tu = Universe("abc")
    triangle = Relation.total(tu)
    redundant = Covering(tu, [tu.mask("ab"), tu.mask("bc"), tu.mask("ac")])
    assert induced_tolerance(redundant) == triangle
    failing = representative_certificate(redundant, triangle)
    assert not failing.complete
    assert failing.failing_member == tu.mask("ab")

    with pytest.raises(CoveringMismatchError):
        representative_certificate(part, Relation.identity(pu))


def test_pomykala_matches_block_approximations(r5):
    u = r5.universe
    space = ApproximationSpace(r5)
    cov = blocks_covering(r5)
    for x in u.all_subsets():
        assert pomykala_lower(cov, x) == space.lower(x)
        assert pomykala_upper(cov, x) == space.upper(x)
    for label in u:
        assert cov.pointwise_union(label) == r5.neighborhood(label)


def test_pomykala_partition():
    pu = Universe("abcde")
    part = Covering(pu, [pu.mask("ab"), pu.mask("cde")])
    cls = pu.mask("cde")
    assert pomykala_lower(part, cls) == cls
    assert pomykala_upper(part, cls) == cls


def test_bonikowski(simplex3):
    u = simplex3.universe
    cov = Covering(u, k_sets(u))
    empty = bonikowski_approximations(cov, 0)
    assert empty.bottom == () and empty.top == ()
    k1, _, _ = k_sets(u)
    only_k1 = bonikowski_approximations(cov, k1)
    assert only_k1.bottom == (k1,)
    assert only_k1.boundary == ()
    assert only_k1.top == (k1,)

    pu = Universe("abcde")
    part = Covering(pu, [pu.mask("ab"), pu.mask("cde")])
    both = bonikowski_approximations(part, pu.full)
    assert set(both.bottom) == {pu.mask("ab"), pu.mask("cde")}
    assert both.boundary == ()


def test_minimal_description(simplex3):
    u = simplex3.universe
    k1, k2, k3 = k_sets(u)
    cov = Covering(u, [k1, k2, k3, u.full])
    assert set(minimal_description(cov, "1")) == {k1}
    assert set(minimal_description(cov, "12")) == {k1, k2}


def test_family_atoms_simplex(simplex3_space):
    report = family_atoms_check(simplex3_space)
    u = simplex3_space.universe
    assert report.up_atoms == u.sorted_subsets(k_sets(u))
    assert report.up_size == 8 and report.down_size == 8
    assert report.ok


def test_family_atoms_equivalence(equivalence5):
    space = ApproximationSpace(equivalence5)
    report = family_atoms_check(space)
    u = equivalence5.universe
    assert set(report.up_atoms) == {u.mask("ab"), u.mask("cde")}
    assert report.ok


def test_family_atoms_rejects_r5(r5_space):
    with pytest.raises(PreconditionError):
        family_atoms_check(r5_space)


def test_square_neighborhoods_are_blocks():
    rng = random.Random(43)
    for r in [random_tolerance(rng, "abcdef") for _ in range(60)]:
        block_set = set(blocks(r))
        for row in r.rows:
            from roughtol.relations import bits

            if all(r.rows[j] & row == row for j in bits(row)):
                assert row in block_set


def test_blocks_cover_and_induce():
    for r in all_tolerances("abcde"):
        assert induced_tolerance(blocks_covering(r)) == r


def test_irredundant_covering_inside_blocks_possibly_strict(simplex3):
    u = simplex3.universe
    cov = Covering(u, k_sets(u))
    assert is_irredundant(cov)
    block_set = set(blocks(simplex3))
    assert set(cov.members) < block_set  # strict: the fourth block is missing


def test_irredundant_coverings_sit_inside_induced_blocks():
    rng = random.Random(101)
    u = Universe("abcde")
    seen = 0
    while seen < 40:
        members = {rng.randrange(1, u.full + 1) for _ in range(rng.randint(2, 5))}
        union = 0
        for m in members:
            union |= m
        if union != u.full:
            continue
        cov = Covering(u, members)
        if not is_irredundant(cov):
            continue
        induced = induced_tolerance(cov)
        assert set(cov.members) <= set(blocks(induced))
        seen += 1


def test_covering_json_round_trip(simplex3):
    u = simplex3.universe
    cov = Covering(u, k_sets(u))
    assert Covering.from_json(cov.to_json()) == cov


def test_characterization_matches_down_family_distributivity():
    from roughtol import ApproximationSpace, enumerate_down_family

    rng = random.Random(103)
    relations = list(all_tolerances("abcd")) + [
        random_tolerance(rng, "abcde") for _ in range(40)
    ]
    for r in relations:
        space = ApproximationSpace(r)
        distributive = enumerate_down_family(space).as_poset().is_distributive()
        assert characterize_irredundant(r).holds == distributive
