"""Blocks of a tolerance, coverings, and the irredundant-covering theory.

A block is a maximal set of pairwise related elements (a maximal clique of
the tolerance graph).  The four-way characterization below decides whether
a tolerance is induced by an irredundant covering, which is the hinge for
all the distributivity results in this library.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .approximations import ApproximationSpace
from .errors import (
    CoveringMismatchError,
    NotACoveringError,
    NotAToleranceError,
    PreconditionError,
)
from .relations import Relation, Universe, bits


class Covering:
    """Family of nonempty subsets whose union is the whole universe."""

    __slots__ = ("universe", "members")

    def __init__(self, universe: Universe, members: Iterable[int]):
        self.universe = universe
        self.members = universe.sorted_subsets(set(members))
        union = 0
        for m in self.members:
            if m == 0:
                raise NotACoveringError("coverings may not contain the empty set")
            union |= m
        if union != universe.full:
            missed = universe.labels(universe.complement(union))
            raise NotACoveringError(f"the family does not cover {missed!r}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Covering)
            and self.universe == other.universe
            and self.members == other.members
        )

    def __repr__(self) -> str:
        parts = ", ".join(self.universe.format_subset(m) for m in self.members)
        return f"Covering([{parts}])"

    def member_sets_of(self, x: str) -> tuple[int, ...]:
        i = self.universe.index(x)
        return tuple(m for m in self.members if m >> i & 1)

    def pointwise_union(self, x: str) -> int:
        """Union of the members containing ``x``."""
        out = 0
        for m in self.member_sets_of(x):
            out |= m
        return out

    def to_json(self) -> str:
        payload = {
            "universe": list(self.universe.elements),
            "members": [list(self.universe.labels(m)) for m in self.members],
        }
        return json.dumps(payload, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Covering":
        payload = json.loads(text)
        try:
            universe = Universe(payload["universe"])
            members = [universe.mask(m) for m in payload["members"]]
        except KeyError as exc:
            raise ValueError(f"covering file lacks the {exc.args[0]!r} key") from None
        return cls(universe, members)


def blocks(relation: Relation) -> tuple[int, ...]:
    """All blocks (maximal pairwise-related sets) of a tolerance.

    Bron-Kerbosch with pivoting over the tolerance graph; the output is in
    canonical subset order regardless of the search order.
    """
    if not relation.is_tolerance():
        raise NotAToleranceError("blocks are defined for tolerances")
    rows = relation.rows
    n = len(rows)
    if n == 0:
        return ()
    neigh = [rows[i] & ~(1 << i) for i in range(n)]
    found: list[int] = []

    def expand(clique: int, cand: int, excluded: int) -> None:
        if not cand and not excluded:
            found.append(clique)
            return
        pivot = max(
            bits(cand | excluded), key=lambda v: (neigh[v] & cand).bit_count()
        )
        for v in bits(cand & ~neigh[pivot]):
            expand(clique | 1 << v, cand & neigh[v], excluded & neigh[v])
            cand &= ~(1 << v)
            excluded |= 1 << v

    expand(0, relation.universe.full, 0)
    out = relation.universe.sorted_subsets(set(found))
    for block in out:
        meet = relation.universe.full
        for i in bits(block):
            meet &= rows[i]
        if meet != block:
            raise AssertionError("block invariant violated")  # pragma: no cover
    return out


def blocks_covering(relation: Relation) -> Covering:
    return Covering(relation.universe, blocks(relation))


def induced_tolerance(covering: Covering) -> Relation:
    """Tolerance relating exactly the pairs that share a covering member."""
    rows = [0] * len(covering.universe)
    for member in covering.members:
        for i in bits(member):
            rows[i] |= member
    return Relation(covering.universe, rows)


def is_irredundant(covering: Covering) -> bool:
    """No single member can be dropped without uncovering something."""
    full = covering.universe.full
    for k in range(len(covering.members)):
        union = 0
        for i, m in enumerate(covering.members):
            if i != k:
                union |= m
        if union == full:
            return False
    return True


@dataclass(frozen=True)
class IrredundantCharacterization:
    """Outcome of the four equivalent irredundant-covering tests.

    ``certificate`` carries the witnessing covering when the constructive
    clause holds.  The four booleans are computed independently; they must
    agree for every tolerance.
    """

    chord_pairs: bool  # for every related pair, a dominated shared neighborhood
    witness_neighborhood: bool  # some R(d) inside both neighborhoods, minimal
    block_witness: bool  # some element d whose R(d) is a block containing both
    irredundant_covering: bool  # the R(d)-shaped blocks form an irredundant covering
    certificate: Covering | None

    @property
    def holds(self) -> bool:
        return self.irredundant_covering

    @property
    def agree(self) -> bool:
        return (
            self.chord_pairs
            == self.witness_neighborhood
            == self.block_witness
            == self.irredundant_covering
        )


def characterize_irredundant(relation: Relation) -> IrredundantCharacterization:
    """Evaluate the four equivalent clauses, each by its own definition."""
    if not relation.is_tolerance():
        raise NotAToleranceError("the characterization applies to tolerances")
    rows = relation.rows
    n = len(rows)
    # clause (a) is not visibly symmetric in (a, b), so scan ordered pairs
    related_pairs = [(a, b) for a in range(n) for b in bits(rows[a])]

    def clause_a() -> bool:
        for a, b in related_pairs:
            hit = False
            for c in bits(rows[a]):
                for d in bits(rows[b]):
                    if all(rows[d] & ~rows[k] == 0 for k in bits(rows[c])):
                        hit = True
                        break
                if hit:
                    break
            if not hit:
                return False
        return True

    def clause_b() -> bool:
        for a, b in related_pairs:
            shared = rows[a] & rows[b]
            hit = False
            for d in range(n):
                if rows[d] & ~shared:
                    continue
                if all(rows[d] & ~rows[x] == 0 for x in bits(rows[d])):
                    hit = True
                    break
            if not hit:
                return False
        return True

    block_set = set(blocks(relation))

    def clause_c() -> bool:
        for a, b in related_pairs:
            pair = 1 << a | 1 << b
            if not any(
                rows[d] in block_set and rows[d] & pair == pair
                for d in range(n)
            ):
                return False
        return True

    # clause (d) is decided constructively: collect the blocks shaped like
    # a full neighborhood and test that family
    shaped = relation.universe.sorted_subsets(
        {row for row in rows if row in block_set}
    )
    certificate = None
    clause_d = False
    union = 0
    for m in shaped:
        union |= m
    if shaped and union == relation.universe.full:
        candidate = Covering(relation.universe, shaped)
        if induced_tolerance(candidate) == relation and is_irredundant(candidate):
            clause_d = True
            certificate = candidate
    return IrredundantCharacterization(
        chord_pairs=clause_a(),
        witness_neighborhood=clause_b(),
        block_witness=clause_c(),
        irredundant_covering=clause_d,
        certificate=certificate,
    )


@dataclass(frozen=True)
class RepresentativeReport:
    """Witnesses ``d`` with R(d) equal to each member, or the failing member."""

    witnesses: dict[int, str]
    failing_member: int | None

    @property
    def complete(self) -> bool:
        return self.failing_member is None


def representative_certificate(
    covering: Covering, relation: Relation
) -> RepresentativeReport:
    """For each member of an irredundant covering, find d with R(d) = member."""
    if induced_tolerance(covering) != relation:
        raise CoveringMismatchError("the covering does not induce the relation")
    witnesses: dict[int, str] = {}
    for member in covering.members:
        d = next(
            (i for i in bits(member) if relation.rows[i] == member),
            None,
        )
        if d is None:
            return RepresentativeReport(witnesses, member)
        witnesses[member] = relation.universe.elements[d]
    return RepresentativeReport(witnesses, None)


# -- covering-based approximation operators --------------------------------------


def pomykala_lower(covering: Covering, subset: int) -> int:
    """Elements whose covering neighborhood lies inside ``subset``."""
    out = 0
    for i, x in enumerate(covering.universe):
        if covering.pointwise_union(x) | subset == subset:
            out |= 1 << i
    return out


def pomykala_upper(covering: Covering, subset: int) -> int:
    """Union of the members meeting ``subset``."""
    out = 0
    for member in covering.members:
        if member & subset:
            out |= member
    return out


def minimal_description(covering: Covering, x: str) -> tuple[int, ...]:
    """Inclusion-minimal members containing ``x``, in canonical order."""
    containing = covering.member_sets_of(x)
    return tuple(
        m
        for m in containing
        if not any(other != m and other | m == m for other in containing)
    )


@dataclass(frozen=True)
class BonikowskiApproximation:
    """Member families bottom- and top-approximating a set."""

    bottom: tuple[int, ...]
    boundary: tuple[int, ...]
    top: tuple[int, ...]


def bonikowski_approximations(covering: Covering, subset: int) -> BonikowskiApproximation:
    bottom = tuple(m for m in covering.members if m | subset == subset)
    covered = 0
    for m in bottom:
        covered |= m
    boundary: set[int] = set()
    for i in bits(subset & ~covered):
        boundary.update(minimal_description(covering, covering.universe.elements[i]))
    boundary_sorted = covering.universe.sorted_subsets(boundary)
    top = covering.universe.sorted_subsets(set(bottom) | boundary)
    return BonikowskiApproximation(bottom=bottom, boundary=boundary_sorted, top=top)


# -- Boolean structure of the approximation families -------------------------------


@dataclass(frozen=True)
class FamilyAtomsReport:
    up_atoms: tuple[int, ...]
    down_atoms: tuple[int, ...]
    up_size: int
    down_size: int
    up_is_boolean: bool
    down_is_boolean: bool

    @property
    def ok(self) -> bool:
        return self.up_is_boolean and self.down_is_boolean


def family_atoms_check(space: ApproximationSpace, cap: int = 20) -> FamilyAtomsReport:
    """Confirm the atoms and Boolean shape of both approximation families.

    Requires the relation to be induced by an irredundant covering; the
    raised error names the first characterization clause that failed.
    """
    from .lattices import enumerate_down_family, enumerate_up_family

    character = characterize_irredundant(space.relation)
    if not character.holds:
        for name, value in (
            ("chord_pairs", character.chord_pairs),
            ("witness_neighborhood", character.witness_neighborhood),
            ("block_witness", character.block_witness),
            ("irredundant_covering", character.irredundant_covering),
        ):
            if not value:
                raise PreconditionError(
                    f"relation is not induced by an irredundant covering "
                    f"(clause {name!r} fails)"
                )
    block_set = set(blocks(space.relation))
    expected_up = space.universe.sorted_subsets(
        {row for row in space.relation.rows if row in block_set}
    )
    expected_down = space.universe.sorted_subsets(
        {space.lower(m) for m in expected_up}
    )
    up_poset = enumerate_up_family(space, cap).as_poset()
    down_poset = enumerate_down_family(space, cap).as_poset()
    up_atoms = tuple(up_poset.points[i] for i in up_poset.atoms())
    down_atoms = tuple(down_poset.points[i] for i in down_poset.atoms())
    if up_atoms != expected_up or down_atoms != expected_down:
        raise AssertionError("atom description violated")  # pragma: no cover
    return FamilyAtomsReport(
        up_atoms=up_atoms,
        down_atoms=down_atoms,
        up_size=len(up_poset),
        down_size=len(down_poset),
        up_is_boolean=up_poset.is_boolean(),
        down_is_boolean=down_poset.is_boolean(),
    )
