"""Lower and upper approximation operators of a tolerance relation."""

from __future__ import annotations

import random

from .errors import NotAToleranceError, NotInFamilyError
from .relations import Relation, Universe, bits


def raw_lower(relation: Relation, subset: int) -> int:
    """Lower approximation under an arbitrary relation (no tolerance check).

    Oracle-grade escape hatch: none of the tolerance laws are promised.
    """
    out = 0
    for i, row in enumerate(relation.rows):
        if row | subset == subset:
            out |= 1 << i
    return out


def raw_upper(relation: Relation, subset: int) -> int:
    """Upper approximation under an arbitrary relation (no tolerance check)."""
    out = 0
    for i, row in enumerate(relation.rows):
        if row & subset:
            out |= 1 << i
    return out


class ApproximationSpace:
    """Approximation operators determined by a tolerance.

    Construction rejects relations that are not tolerances: every law the
    rest of the library relies on assumes reflexivity and symmetry, so the
    check happens once here instead of at each call.
    """

    __slots__ = ("relation", "universe")

    def __init__(self, relation: Relation):
        if not relation.is_tolerance():
            raise NotAToleranceError(
                "an approximation space requires a reflexive symmetric relation"
            )
        self.relation = relation
        self.universe: Universe = relation.universe

    def __repr__(self) -> str:
        return f"ApproximationSpace({self.relation!r})"

    def lower(self, subset: int) -> int:
        """Elements whose whole neighborhood lies inside ``subset``."""
        out = 0
        for i, row in enumerate(self.relation.rows):
            if row | subset == subset:
                out |= 1 << i
        return out

    def upper(self, subset: int) -> int:
        """Elements whose neighborhood meets ``subset``."""
        out = 0
        for i, row in enumerate(self.relation.rows):
            if row & subset:
                out |= 1 << i
        return out

    def closure_updown(self, subset: int) -> int:
        """Closure operator: upper then lower approximation."""
        return self.lower(self.upper(subset))

    def interior_downup(self, subset: int) -> int:
        """Interior operator: lower then upper approximation."""
        return self.upper(self.lower(subset))

    # -- the two approximation families --------------------------------------

    def in_down_family(self, subset: int) -> bool:
        """Membership in the family of lower approximations (closure fixpoint)."""
        return self.closure_updown(subset) == subset

    def in_up_family(self, subset: int) -> bool:
        """Membership in the family of upper approximations (interior fixpoint)."""
        return self.interior_downup(subset) == subset

    def ortho_down(self, member: int) -> int:
        """Orthocomplement inside the lower-approximation family."""
        if not self.in_down_family(member):
            raise NotInFamilyError(
                f"{self.universe.format_subset(member)} is not a lower approximation"
            )
        return self.lower(self.universe.complement(member))

    def ortho_up(self, member: int) -> int:
        """Orthocomplement inside the upper-approximation family."""
        if not self.in_up_family(member):
            raise NotInFamilyError(
                f"{self.universe.format_subset(member)} is not an upper approximation"
            )
        return self.upper(self.universe.complement(member))

    # -- adjunction --------------------------------------------------------------

    def verify_galois_characterization(self, samples: int = 4096, seed: int = 0) -> bool:
        """Check the pointwise conditions and the adjunction law.

        The pointwise conditions are: every element belongs to the upper
        approximation of its own singleton, and singleton upper membership
        is symmetric.  The adjunction ``upper(X) <= Y  iff  X <= lower(Y)``
        is swept over all subset pairs when the universe is small, and over
        a seeded random sample otherwise.
        """
        n = len(self.universe)
        for i in range(n):
            if not self.upper(1 << i) >> i & 1:
                return False
        for i in range(n):
            for j in bits(self.upper(1 << i)):
                if not self.upper(1 << j) >> i & 1:
                    return False
        if n <= 10:
            pairs = (
                (x, y) for x in range(1 << n) for y in range(1 << n)
            )
        else:
            rng = random.Random(seed)
            full = self.universe.full
            pairs = (
                (rng.randrange(full + 1), rng.randrange(full + 1))
                for _ in range(samples)
            )
        for x, y in pairs:
            left = self.upper(x) | y == y
            right = x | self.lower(y) == self.lower(y)
            if left != right:
                return False
        return True
