import random

import pytest

from roughtol import (
    ApproximationSpace,
    NotAToleranceError,
    NotInFamilyError,
    Relation,
    Universe,
)

from _sweeps import neighborhood_dict, oracle_lower, oracle_upper, random_tolerance


def test_space_rejects_non_tolerances():
    u = Universe("ab")
    with pytest.raises(NotAToleranceError):
        ApproximationSpace(Relation.from_neighborhoods(u, {"a": "ab", "b": "b"}))


def test_lower(r5_space):
    u = r5_space.universe
    assert r5_space.lower(u.mask("ab")) == u.mask("a")
    assert r5_space.lower(u.full) == u.full
    assert r5_space.lower(u.mask("abc")) == u.mask("ab")


def test_lower_upper_match_definition_oracle(r5):
    space = ApproximationSpace(r5)
    neigh = neighborhood_dict(r5)
    for mask in r5.universe.all_subsets():
        subset = set(r5.universe.labels(mask))
        assert set(r5.universe.labels(space.lower(mask))) == oracle_lower(neigh, subset)
        assert set(r5.universe.labels(space.upper(mask))) == oracle_upper(neigh, subset)


def test_upper(r5_space, simplex3_space):
    u = r5_space.universe
    assert r5_space.upper(u.mask("ab")) == u.mask("abc")
    assert r5_space.upper(0) == 0
    su = simplex3_space.universe
    k1 = su.mask(["1", "12", "13", "123"])
    assert simplex3_space.upper(su.mask(["1"])) == k1


def test_closure_interior(r5_space):
    u = r5_space.universe
    assert r5_space.closure_updown(u.mask("a")) == u.mask("a")
    for op in (r5_space.closure_updown, r5_space.interior_downup):
        assert op(0) == 0
        assert op(u.full) == u.full


def test_closure_interior_operator_laws():
    rng = random.Random(23)
    for _ in range(60):
        r = random_tolerance(rng, "abcdef")
        space = ApproximationSpace(r)
        full = r.universe.full
        for x in range(0, full + 1, 5):
            c = space.closure_updown(x)
            i = space.interior_downup(x)
            assert x | c == c and i | x == x  # extensive / contractive
            assert space.closure_updown(c) == c and space.interior_downup(i) == i
            for y in range(0, full + 1, 7):
                if x | y == y:
                    assert space.closure_updown(x) | space.closure_updown(y) == space.closure_updown(y)
                    assert space.interior_downup(x) | space.interior_downup(y) == space.interior_downup(y)


def test_galois_characterization(r5_space, identity5):
    assert r5_space.verify_galois_characterization()
    assert ApproximationSpace(identity5).verify_galois_characterization()


def test_galois_triple_and_duality_laws(r5_space):
    space = r5_space
    full = space.universe.full
    for x in space.universe.all_subsets():
        up, lo = space.upper(x), space.lower(x)
        assert space.upper(space.lower(up)) == up
        assert space.lower(space.upper(lo)) == lo
        assert space.lower(full & ~x) == full & ~up
        assert lo | x == x and x | up == up


def test_homomorphism_laws():
    rng = random.Random(29)
    for _ in range(40):
        r = random_tolerance(rng, "abcde")
        space = ApproximationSpace(r)
        full = r.universe.full
        for _ in range(30):
            x = rng.randrange(full + 1)
            y = rng.randrange(full + 1)
            z = rng.randrange(full + 1)
            assert space.upper(x | y | z) == space.upper(x) | space.upper(y) | space.upper(z)
            assert space.lower(x & y & z) == space.lower(x) & space.lower(y) & space.lower(z)


def test_ortho_down(r5_space):
    u = r5_space.universe
    assert r5_space.ortho_down(u.mask("ab")) == u.mask("de")
    assert r5_space.ortho_down(0) == u.full
    assert r5_space.ortho_down(u.full) == 0
    with pytest.raises(NotInFamilyError):
        r5_space.ortho_down(u.mask("b"))  # {b} is no lower approximation


def test_ortho_up_simplex(simplex3_space):
    u = simplex3_space.universe
    k1 = u.mask(["1", "12", "13", "123"])
    k2 = u.mask(["2", "12", "23", "123"])
    k3 = u.mask(["3", "13", "23", "123"])
    assert simplex3_space.ortho_up(k1) == k2 | k3
    with pytest.raises(NotInFamilyError):
        simplex3_space.ortho_up(u.mask(["123"]))


def test_ortho_axioms_hold_on_random_tolerances():
    rng = random.Random(31)
    for _ in range(40):
        r = random_tolerance(rng, "abcde")
        space = ApproximationSpace(r)
        full = r.universe.full
        down = {space.lower(x) for x in range(full + 1)}
        up = {space.upper(x) for x in range(full + 1)}
        for a in down:
            ta = space.ortho_down(a)
            assert ta in down
            assert space.ortho_down(ta) == a
            assert a & ta == 0
            assert space.closure_updown(a | ta) == full
        for a in up:
            ba = space.ortho_up(a)
            assert ba in up
            assert space.ortho_up(ba) == a
            assert a | ba == full
            assert space.interior_downup(a & ba) == 0
        for a in down:
            for b in down:
                if a | b == b:
                    t_b, t_a = space.ortho_down(b), space.ortho_down(a)
                    assert t_b | t_a == t_a


def test_raw_operators_work_without_tolerance():
    from roughtol.approximations import raw_lower, raw_upper

    u = Universe("abc")
    r = Relation.from_neighborhoods(u, {"a": "ab", "b": "b", "c": ""})
    assert raw_lower(r, u.mask("ab")) == u.mask("abc")  # empty row passes subset test
    assert raw_upper(r, u.mask("a")) == u.mask("a")
    full = u.full
    for x in range(full + 1):
        assert raw_lower(r, full & ~x) == full & ~raw_upper(r, x)  # duality survives
