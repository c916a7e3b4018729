"""Kleene, Heyting, and Nelson-style structure on finite bounded lattices.

A carrier is any finite lattice paired with a candidate negation map; the
checks report which algebraic laws hold, with explicit witnesses when one
fails.  Negations are not validated at construction, so violating
carriers can be built and reported on.
"""

from __future__ import annotations

from typing import Any, Iterable

from .approximations import ApproximationSpace
from .lattices import RoughPair, pair_poset, rough_poset
from .posets import FinitePoset
from .relations import DEFAULT_CAP


class DeMorganLattice:
    """Bounded lattice carrier with a negation map over its points."""

    __slots__ = ("poset", "negation", "_impl")

    def __init__(self, poset: FinitePoset, negation: Iterable[int]):
        ok, join_fail, meet_fail = poset.is_lattice_with_witnesses()
        if not ok:
            witness = join_fail or meet_fail
            raise ValueError(f"carrier is not a lattice: {witness!r} lacks a bound")
        self.poset = poset
        self.negation = tuple(negation)
        if sorted(self.negation) != list(range(len(poset))):
            raise ValueError("negation must permute the carrier")
        self._impl: dict[tuple[int, int], int | None] = {}

    @classmethod
    def from_map(cls, poset: FinitePoset, negation: dict[Any, Any]) -> "DeMorganLattice":
        return cls(poset, (poset.index(negation[p]) for p in poset.points))

    def __len__(self) -> int:
        return len(self.poset)

    @property
    def bottom(self) -> int:
        return self.poset.bottom()

    @property
    def top(self) -> int:
        return self.poset.top()

    def point(self, i: int) -> Any:
        return self.poset.points[i]


def kleene_check(lattice: DeMorganLattice) -> tuple[bool, tuple | None]:
    """Involution, antitonicity, and the crossing law, with a witness.

    The witness names the failing law and the points involved.  The
    distributivity half of the textbook definition is reported separately
    by the relative-pseudocomplement checks.
    """
    poset = lattice.poset
    neg = lattice.negation
    n = len(poset)
    for a in range(n):
        if neg[neg[a]] != a:
            return False, ("K1", poset.points[a])
    for a in range(n):
        for b in range(n):
            if poset.leq(a, b) != poset.leq(neg[b], neg[a]):
                return False, ("K2", poset.points[a], poset.points[b])
    join, meet = poset._tables()
    for a in range(n):
        low = meet[a][neg[a]]
        for b in range(n):
            if not poset.leq(low, join[b][neg[b]]):
                return False, ("K3", poset.points[a], poset.points[b])
    return True, None


def relative_pseudocomplement(lattice: DeMorganLattice, a: int, b: int) -> int | None:
    """Greatest z with z meet a below b, or ``None`` when no greatest exists.

    The candidates form a down-set, so a greatest element exists exactly
    when they have a single maximal member; the join formula is only
    trusted after this scan, since it can be wrong outside distributivity.
    """
    poset = lattice.poset
    _, meet = poset._tables()
    candidates = 0
    for z in range(len(poset)):
        if poset.leq(meet[z][a], b):
            candidates |= 1 << z
    maximal = [
        z
        for z in range(len(poset))
        if candidates >> z & 1 and poset.up[z] & candidates == 1 << z
    ]
    if len(maximal) != 1:
        return None
    return maximal[0]


def is_heyting(lattice: DeMorganLattice) -> bool:
    """All relative pseudocomplements exist."""
    n = len(lattice.poset)
    return all(
        relative_pseudocomplement(lattice, a, b) is not None
        for a in range(n)
        for b in range(n)
    )


def weak_implication(lattice: DeMorganLattice, a: int, b: int) -> int | None:
    """Relative pseudocomplement of a with respect to (not a, join b)."""
    key = (a, b)
    if key not in lattice._impl:
        join, _ = lattice.poset._tables()
        lattice._impl[key] = relative_pseudocomplement(
            lattice, a, join[lattice.negation[a]][b]
        )
    return lattice._impl[key]


def quasi_nelson_check(lattice: DeMorganLattice) -> bool:
    """Every weak implication exists."""
    n = len(lattice.poset)
    return all(
        weak_implication(lattice, a, b) is not None
        for a in range(n)
        for b in range(n)
    )


def nelson_equation_check(lattice: DeMorganLattice) -> tuple[bool, tuple | None]:
    """Associativity-style law of the weak implication over all triples."""
    poset = lattice.poset
    _, meet = poset._tables()
    n = len(poset)
    for a in range(n):
        for b in range(n):
            left_base = meet[a][b]
            for c in range(n):
                inner = weak_implication(lattice, b, c)
                left = weak_implication(lattice, left_base, c)
                right = None if inner is None else weak_implication(lattice, a, inner)
                if left != right:
                    return False, (
                        poset.points[a],
                        poset.points[b],
                        poset.points[c],
                    )
    return True, None


def algebra_report(lattice: DeMorganLattice, label=str) -> dict:
    """JSON-ready summary of which algebraic laws the carrier satisfies."""
    kleene, kleene_witness = kleene_check(lattice)
    heyting = is_heyting(lattice)
    quasi = kleene and quasi_nelson_check(lattice)
    nelson = False
    nelson_witness = None
    if quasi:
        nelson, nelson_witness = nelson_equation_check(lattice)
    witnesses: dict[str, Any] = {}
    if kleene_witness is not None:
        law, *points = kleene_witness
        witnesses["kleene"] = [law, *(label(p) for p in points)]
    if nelson_witness is not None:
        witnesses["nelson"] = [label(p) for p in nelson_witness]
    return {
        "kleene": kleene,
        "heyting": heyting,
        "quasi_nelson": quasi,
        "nelson": nelson,
        "witnesses": witnesses,
    }


def _negation_indices(poset: FinitePoset, universe_full: int) -> tuple[int, ...]:
    out = []
    for pair in poset.points:
        negated = RoughPair(universe_full & ~pair.hi, universe_full & ~pair.lo)
        out.append(poset.index(negated))
    return tuple(out)


def rough_algebra(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> DeMorganLattice:
    """The rough pairs with complement-swap negation; requires a lattice."""
    poset = rough_poset(space, cap)
    return DeMorganLattice(poset, _negation_indices(poset, space.universe.full))


def increasing_algebra(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> DeMorganLattice:
    """The increasing representation with complement-swap negation."""
    from .completions import increasing_representation

    pairs = increasing_representation(space, cap)
    poset = pair_poset(space.universe, pairs)
    return DeMorganLattice(poset, _negation_indices(poset, space.universe.full))
