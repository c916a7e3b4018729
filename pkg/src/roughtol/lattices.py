"""Rough-set families and their order structure.

Enumerates the lower- and upper-approximation families and the set of
rough pairs, classifies their order structure, and carries the two
constructive pieces: the auxiliary set ``S`` and the meet-realizing set
``Z`` whose rough pair is the greatest lower bound whenever the relation
is well-behaved (condition on chords, or an irredundant covering).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .approximations import ApproximationSpace
from .errors import ConstructionFailedError, NotInFamilyError, PreconditionError
from .posets import FinitePoset
from .relations import DEFAULT_CAP, Universe, bits


class RoughPair(NamedTuple):
    """Lower/upper approximation pair, ordered coordinatewise."""

    lo: int
    hi: int


class SubsetFamily:
    """Ordered family of distinct subsets of a universe."""

    __slots__ = ("universe", "members", "_member_set")

    def __init__(self, universe: Universe, members: Iterable[int]):
        self.universe = universe
        self.members = universe.sorted_subsets(set(members))
        self._member_set = frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self._member_set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubsetFamily)
            and self.universe == other.universe
            and self.members == other.members
        )

    def __repr__(self) -> str:
        parts = ", ".join(self.universe.format_subset(m) for m in self.members)
        return f"SubsetFamily([{parts}])"

    def as_poset(self) -> FinitePoset:
        """Inclusion order on the members."""
        ups = []
        for m in self.members:
            cone = 0
            for j, other in enumerate(self.members):
                if m | other == other:
                    cone |= 1 << j
            ups.append(cone)
        return FinitePoset(self.members, ups)


def enumerate_down_family(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> SubsetFamily:
    """All lower approximations, deduplicated (exhaustive subset sweep)."""
    return SubsetFamily(
        space.universe,
        {space.lower(x) for x in space.universe.all_subsets(cap)},
    )


def enumerate_up_family(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> SubsetFamily:
    """All upper approximations, deduplicated (exhaustive subset sweep)."""
    return SubsetFamily(
        space.universe,
        {space.upper(x) for x in space.universe.all_subsets(cap)},
    )


def enumerate_rough_pairs(
    space: ApproximationSpace, cap: int = DEFAULT_CAP
) -> tuple[RoughPair, ...]:
    """All distinct rough pairs, in canonical order."""
    key = space.universe.subset_key
    pairs = {
        RoughPair(space.lower(x), space.upper(x))
        for x in space.universe.all_subsets(cap)
    }
    return tuple(sorted(pairs, key=lambda p: (key(p.lo), key(p.hi))))


def pair_poset(universe: Universe, pairs: Iterable[RoughPair], dual_second: bool = False) -> FinitePoset:
    """Coordinatewise order on approximation pairs.

    With ``dual_second`` the second coordinate is compared reversed, which
    is the order of the disjoint representations.
    """
    pts = tuple(pairs)
    ups = []
    for a in pts:
        cone = 0
        for j, b in enumerate(pts):
            lo_ok = a.lo | b.lo == b.lo
            hi_ok = (b.hi | a.hi == a.hi) if dual_second else (a.hi | b.hi == b.hi)
            if lo_ok and hi_ok:
                cone |= 1 << j
        ups.append(cone)
    return FinitePoset(pts, ups)


def rough_poset(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> FinitePoset:
    return pair_poset(space.universe, enumerate_rough_pairs(space, cap))


def pair_label(universe: Universe, pair: RoughPair) -> str:
    """Compact display form of a rough pair, like ``(a,abc)``.

    Universes with multi-character labels get braced sides instead, so
    the two coordinates stay unambiguous.
    """
    compact = all(len(x) == 1 for x in universe.elements)

    def side(mask: int) -> str:
        if not mask:
            return "∅"
        if compact:
            return "".join(universe.labels(mask))
        return "{" + ",".join(universe.labels(mask)) + "}"

    return f"({side(pair.lo)},{side(pair.hi)})"


# -- joins and meets inside the two families ---------------------------------------


def _require_down(space: ApproximationSpace, member: int) -> None:
    if not space.in_down_family(member):
        raise NotInFamilyError(
            f"{space.universe.format_subset(member)} is not a lower approximation"
        )


def _require_up(space: ApproximationSpace, member: int) -> None:
    if not space.in_up_family(member):
        raise NotInFamilyError(
            f"{space.universe.format_subset(member)} is not an upper approximation"
        )


def down_family_join(space: ApproximationSpace, members: Iterable[int]) -> int:
    """Join in the lower-approximation family: close the union."""
    union = 0
    for m in members:
        _require_down(space, m)
        union |= m
    return space.closure_updown(union)


def down_family_meet(space: ApproximationSpace, members: Iterable[int]) -> int:
    """Meet in the lower-approximation family: plain intersection."""
    out = space.universe.full
    for m in members:
        _require_down(space, m)
        out &= m
    return out


def up_family_join(space: ApproximationSpace, members: Iterable[int]) -> int:
    """Join in the upper-approximation family: plain union."""
    out = 0
    for m in members:
        _require_up(space, m)
        out |= m
    return out


def up_family_meet(space: ApproximationSpace, members: Iterable[int]) -> int:
    """Meet in the upper-approximation family: open the intersection."""
    out = space.universe.full
    for m in members:
        _require_up(space, m)
        out &= m
    return space.interior_downup(out)


# -- the constructive pieces ----------------------------------------------------------


def _parity_masks(rows: tuple[int, ...], seed: int, carrier: int) -> tuple[int, int]:
    """Even/odd distance layers of the masked walk from ``seed`` in ``carrier``."""
    even = odd = visited = 0
    frontier = seed & carrier
    d = 0
    while frontier:
        if d & 1:
            odd |= frontier
        else:
            even |= frontier
        visited |= frontier
        nxt = 0
        for i in bits(frontier):
            nxt |= rows[i]
        frontier = nxt & carrier & ~visited
        d += 1
    return even, odd


def _component(rows: tuple[int, ...], seed: int, carrier: int) -> int:
    visited = 0
    frontier = seed & carrier
    while frontier:
        visited |= frontier
        nxt = 0
        for i in bits(frontier):
            nxt |= rows[i]
        frontier = nxt & carrier & ~visited
    return visited


def construct_S(space: ApproximationSpace, big_y: int, small_t: int) -> int:
    """Build the spanning slice ``S`` used by the constructive meet.

    Given an interior-fixed set Y and T inside its lower approximation,
    returns S disjoint from T inside the lower approximation of Y whose
    upper approximation, together with that of T, recovers Y, while every
    member of S keeps a neighbor outside S and T.  Follows the two parity
    decompositions of the underlying existence proof; representatives are
    chosen by least universe index.
    """
    universe = space.universe
    if space.interior_downup(big_y) != big_y:
        raise PreconditionError("Y must be fixed by the interior operator")
    low_y = space.lower(big_y)
    if small_t & ~low_y:
        raise PreconditionError("T must lie inside the lower approximation of Y")
    up_t = space.upper(small_t)
    rows = space.relation.rows
    for i in bits(big_y & ~up_t):
        if rows[i].bit_count() < 2:
            raise PreconditionError(
                f"element {universe.elements[i]!r} outside the upper approximation "
                "of T has a singleton neighborhood"
            )
    if up_t == big_y:
        return 0
    carrier = big_y & ~small_t
    boundary = big_y & ~low_y  # the part of Y not in its own lower approximation
    _, odd_boundary = _parity_masks(rows, boundary, carrier)
    # representatives of the walk-components untouched by the boundary but
    # escaping the upper approximation of T
    reps = 0
    rest = carrier
    while rest:
        comp = _component(rows, rest & -rest, carrier)
        rest &= ~comp
        if comp & boundary:
            continue
        free = comp & ~up_t
        if free:
            reps |= free & -free
    _, odd_reps = _parity_masks(rows, reps, carrier)
    return odd_boundary | odd_reps


@dataclass(frozen=True)
class MeetConstruction:
    """Outcome of the constructive meet, with its intermediate sets."""

    z: int
    t: int
    y: int
    s: int
    v: int
    q: int
    p: int
    pair: RoughPair


def construct_meet_Z(
    space: ApproximationSpace, family: Iterable[int]
) -> MeetConstruction:
    """Build a set Z realizing the meet of the rough pairs of ``family``.

    The resulting pair is (intersection of lower approximations, meet of
    the upper approximations in the upper family).  The construction is
    validated before returning; when the relation fails both sufficient
    conditions the postcondition can fail, and then an error is raised
    instead of returning a wrong set.
    """
    universe = space.universe
    members = list(family)
    inter = universe.full
    inter_up = universe.full
    lower_target = universe.full
    for x in members:
        inter &= x
        inter_up &= space.upper(x)
        lower_target &= space.lower(x)
    t = space.interior_downup(inter)
    y = space.interior_downup(inter_up)
    s = construct_S(space, y, t)
    rows = space.relation.rows
    st = s | t
    v = 0
    for i in bits(t):
        if rows[i] & ~t and not rows[i] & ~st:
            v |= 1 << i
    q = 0
    if v:
        for i in bits(v):
            outside = rows[i] & ~t  # automatically inside the upper closure of T
            q |= outside & -outside
        s_minus_q = s & ~q
        blocked = space.upper(s_minus_q) | space.upper(t)
        q_up = space.upper(q)
        p = 0
        for i in bits(y & ~blocked):
            if rows[i] | q_up == q_up:
                p |= 1 << i
        z = s_minus_q | t | p
    else:
        p = 0
        z = st
    realized = RoughPair(space.lower(z), space.upper(z))
    expected = RoughPair(lower_target, y)
    if realized != expected:
        raise ConstructionFailedError(
            "constructed set does not realize the meet pair; the relation "
            "fails the sufficient conditions"
        )
    return MeetConstruction(z=z, t=t, y=y, s=s, v=v, q=q, p=p, pair=realized)


def rs_is_complete_lattice(
    space: ApproximationSpace, cap: int = DEFAULT_CAP
) -> tuple[bool, str]:
    """Decide whether the rough pairs form a (complete) lattice.

    Decided by exhaustive pairwise bound existence, then cross-checked
    against the subdirect-product criterion: the rough pairs form a
    complete lattice exactly when they already are their own increasing
    completion.
    """
    from .completions import increasing_representation

    poset = rough_poset(space, cap)
    ok, join_fail, meet_fail = poset.is_lattice_with_witnesses()
    closed = set(poset.points) == set(increasing_representation(space, cap))
    if ok != closed:
        raise AssertionError(
            "pairwise bound existence disagrees with the completion criterion"
        )  # pragma: no cover
    if ok:
        return True, "all pairwise joins and meets exist; the rough pairs equal their increasing completion"
    witness = join_fail or meet_fail
    kind = "join" if join_fail else "meet"
    a, b = witness
    return False, (
        f"no {kind} for {pair_label(space.universe, a)} and "
        f"{pair_label(space.universe, b)}"
    )
