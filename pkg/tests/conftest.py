from pathlib import Path

import pytest

from roughtol import ApproximationSpace, Relation, Universe

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def r5() -> Relation:
    """The five-element chain-of-overlaps tolerance whose rough pairs form
    no lattice."""
    return Relation.from_json((DATA / "example43.json").read_text())


@pytest.fixture(scope="session")
def r5_space(r5) -> ApproximationSpace:
    return ApproximationSpace(r5)


@pytest.fixture(scope="session")
def simplex3() -> Relation:
    """Nonempty subsets of a three-element set, related when they meet."""
    return Relation.from_json((DATA / "simplex3.json").read_text())


@pytest.fixture(scope="session")
def simplex3_space(simplex3) -> ApproximationSpace:
    return ApproximationSpace(simplex3)


@pytest.fixture(scope="session")
def three_elem() -> Relation:
    """Three-element tolerance whose rough pairs are quasi-Nelson but not
    Nelson."""
    return Relation.from_json((DATA / "threeelem.json").read_text())


@pytest.fixture(scope="session")
def identity5() -> Relation:
    return Relation.identity(Universe("abcde"))


@pytest.fixture(scope="session")
def equivalence5() -> Relation:
    """Equivalence with classes {a,b}, {c,d,e}."""
    u = Universe("abcde")
    ab = u.mask("ab")
    cde = u.mask("cde")
    return Relation(u, [ab, ab, cde, cde, cde])


@pytest.fixture()
def data_dir() -> Path:
    return DATA
