"""Completions and alternative representations of the rough pairs.

The increasing representation completes the rough pairs inside the product
of the two approximation families; the disjoint forms replace the upper
approximation by its complement.  A generic cut completion plus density
checks tie them together.

The inverse-relation upper approximation that general completion formulas
mention coincides with the plain upper approximation for symmetric
relations, so it gets no operator of its own here.
"""

from __future__ import annotations

from typing import Any, Iterable

from .approximations import ApproximationSpace
from .errors import NotInCarrierError
from .lattices import (
    RoughPair,
    enumerate_down_family,
    enumerate_rough_pairs,
    enumerate_up_family,
    pair_poset,
)
from .posets import FinitePoset
from .relations import DEFAULT_CAP, bits


def singleton_core(space: ApproximationSpace) -> int:
    """Elements related to nothing but themselves.

    The core is fixed by both approximation operators, and every rough
    pair separates it the same way on both coordinates.
    """
    return sum(
        1 << i for i, row in enumerate(space.relation.rows) if row == 1 << i
    )


def in_increasing(space: ApproximationSpace, pair: RoughPair) -> bool:
    """Membership in the increasing representation (no enumeration needed)."""
    a, b = pair
    if not space.in_down_family(a) or not space.in_up_family(b):
        return False
    if space.upper(a) & ~space.lower(b):
        return False
    core = singleton_core(space)
    return not core & b & ~a


def increasing_representation(
    space: ApproximationSpace, cap: int = DEFAULT_CAP
) -> tuple[RoughPair, ...]:
    """Pairs of the product of families whose upper part dominates the
    lower's image and which split the singleton core consistently."""
    down = enumerate_down_family(space, cap)
    up = enumerate_up_family(space, cap)
    core = singleton_core(space)
    key = space.universe.subset_key
    lowered = [(b, space.lower(b)) for b in up]
    out = []
    for a in down:
        up_a = space.upper(a)
        for b, low_b in lowered:
            if up_a & ~low_b:
                continue
            if core & b & ~a:
                continue
            out.append(RoughPair(a, b))
    return tuple(sorted(out, key=lambda p: (key(p.lo), key(p.hi))))


def increasing_poset(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> FinitePoset:
    return pair_poset(space.universe, increasing_representation(space, cap))


def de_morgan_tilde(space: ApproximationSpace, pair: RoughPair) -> RoughPair:
    """Complement-swap negation on the increasing representation."""
    if not in_increasing(space, pair):
        raise NotInCarrierError(
            "the pair is not in the increasing representation"
        )
    full = space.universe.full
    return RoughPair(full & ~pair.hi, full & ~pair.lo)


def disjoint_rough_pairs(
    space: ApproximationSpace, cap: int = DEFAULT_CAP
) -> tuple[RoughPair, ...]:
    """Image of the rough pairs under (lower, complement of upper)."""
    full = space.universe.full
    key = space.universe.subset_key
    pairs = {
        RoughPair(p.lo, full & ~p.hi) for p in enumerate_rough_pairs(space, cap)
    }
    return tuple(sorted(pairs, key=lambda p: (key(p.lo), key(p.hi))))


def disjoint_representation(
    space: ApproximationSpace, cap: int = DEFAULT_CAP
) -> tuple[RoughPair, ...]:
    """Pairs of lower approximations with disjoint upper closures covering
    the singleton core."""
    full = space.universe.full
    key = space.universe.subset_key
    pairs = {
        RoughPair(p.lo, full & ~p.hi)
        for p in increasing_representation(space, cap)
    }
    return tuple(sorted(pairs, key=lambda p: (key(p.lo), key(p.hi))))


def in_disjoint_representation(space: ApproximationSpace, pair: RoughPair) -> bool:
    a, b = pair
    if not space.in_down_family(a) or not space.in_down_family(b):
        return False
    if space.upper(a) & space.upper(b):
        return False
    core = singleton_core(space)
    return not core & ~(a | b)


def disjoint_poset(space: ApproximationSpace, pairs: Iterable[RoughPair]) -> FinitePoset:
    """Order of the disjoint forms: second coordinate compared reversed."""
    return pair_poset(space.universe, pairs, dual_second=True)


def de_morgan_swap(space: ApproximationSpace, pair: RoughPair) -> RoughPair:
    """Coordinate swap on the disjoint representation."""
    if not in_disjoint_representation(space, pair):
        raise NotInCarrierError("the pair is not in the disjoint representation")
    return RoughPair(pair.hi, pair.lo)


def phi(space: ApproximationSpace, pair: RoughPair) -> RoughPair:
    """The complementing isomorphism between increasing and disjoint forms."""
    return RoughPair(pair.lo, space.universe.full & ~pair.hi)


# -- Dedekind-MacNeille completion -----------------------------------------------------


def dedekind_macneille(poset: FinitePoset) -> tuple[FinitePoset, tuple[int, ...]]:
    """Cut completion of a finite poset, with the canonical embedding.

    The completion's points are the cut masks over the input carrier; the
    embedding maps each input point to its principal-downset cut.
    """
    carrier = poset.carrier_mask
    closed = {carrier}
    stack = [carrier]
    while stack:
        current = stack.pop()
        for down in poset.down:
            cut = current & down
            if cut not in closed:
                closed.add(cut)
                stack.append(cut)
    cuts = sorted(closed, key=lambda m: (m.bit_count(), tuple(bits(m))))
    ups = []
    for cut in cuts:
        cone = 0
        for j, other in enumerate(cuts):
            if cut | other == other:
                cone |= 1 << j
        ups.append(cone)
    completion = FinitePoset(cuts, ups)
    embedding = tuple(completion.index(poset.down[i]) for i in range(len(poset)))
    return completion, embedding


def density_check(
    sub: FinitePoset, sup: FinitePoset, embedding: Iterable[int]
) -> tuple[bool, bool]:
    """Whether the embedded image is join-dense and meet-dense in ``sup``."""
    image = tuple(embedding)
    if len(image) != len(sub):
        raise ValueError("one image point per subposet point required")
    for i in range(len(sub)):
        for j in range(len(sub)):
            if sub.leq(i, j) != sup.leq(image[i], image[j]):
                raise ValueError("the embedding does not preserve the order")
    join_dense = True
    meet_dense = True
    for t in range(len(sup)):
        below = 0
        above = 0
        for i, im in enumerate(image):
            if sup.leq(im, t):
                below |= 1 << im
            if sup.leq(t, im):
                above |= 1 << im
        if sup.join_of(below) != t:
            join_dense = False
        if sup.meet_of(above) != t:
            meet_dense = False
    return join_dense, meet_dense


def macneille_matches_increasing(
    space: ApproximationSpace, cap: int = DEFAULT_CAP
) -> dict[Any, RoughPair] | None:
    """Canonical isomorphism from the cut completion of the rough pairs
    onto the increasing representation, or ``None`` if it fails.

    Each cut is sent to the join, inside the increasing representation,
    of the rough pairs it contains; the map is verified to be a bijection
    preserving order both ways.
    """
    from .lattices import rough_poset

    rs = rough_poset(space, cap)
    completion, _ = dedekind_macneille(rs)
    irs = increasing_poset(space, cap)
    irs_index = {p: i for i, p in enumerate(irs.points)}
    mapping: dict[Any, RoughPair] = {}
    seen = set()
    for cut in completion.points:
        lo = 0
        hi = 0
        for i in bits(cut):
            lo |= rs.points[i].lo
            hi |= rs.points[i].hi
        target = RoughPair(space.closure_updown(lo), hi)
        if target not in irs_index or target in seen:
            return None
        seen.add(target)
        mapping[cut] = target
    if len(seen) != len(irs.points):
        return None
    for i, a in enumerate(completion.points):
        for j, b in enumerate(completion.points):
            if completion.leq(i, j) != irs.leq(
                irs_index[mapping[a]], irs_index[mapping[b]]
            ):
                return None
    return mapping


def join_decomposition(
    space: ApproximationSpace, pair: RoughPair
) -> tuple[RoughPair, ...]:
    """Rough-pair generators whose join recovers a completion member.

    The generators are the neighborhood pairs of the lower part plus the
    empty-lowered neighborhoods of the inner boundary; every generator is
    a genuine rough pair and their product join equals the input.
    """
    if not in_increasing(space, pair):
        raise NotInCarrierError("the pair is not in the increasing representation")
    rows = space.relation.rows
    a, b = pair
    generators = []
    for i in bits(a):
        neigh = rows[i]
        generators.append(RoughPair(space.lower(neigh), space.upper(neigh)))
    for i in bits(space.lower(b) & ~a):
        if space.lower(1 << i) != 0:
            raise AssertionError(
                "inner-boundary element has a nonempty lowered singleton"
            )  # pragma: no cover
        generators.append(RoughPair(0, rows[i]))
    lo = 0
    hi = 0
    for g in generators:
        lo |= g.lo
        hi |= g.hi
    joined = RoughPair(space.closure_updown(lo), hi)
    if joined != pair:
        raise AssertionError("generators do not join back to the pair")  # pragma: no cover
    return tuple(generators)
