"""Finite universes and binary relations over them.

Subsets of a universe are plain integer bitmasks over the element indices,
and a relation stores one neighborhood mask per element.  All values are
immutable after construction and can be shared freely between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapExceededError, NotAToleranceError, UnknownElementError

# Exhaustive 2**|U| sweeps refuse to run above this many elements unless the
# caller raises the cap explicitly.
DEFAULT_CAP = 20

#: A relation path: a sequence of distinct, consecutively related elements.
Path = tuple[str, ...]


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Universe:
    """Ordered finite carrier of distinct element labels.

    The position of a label in ``elements`` is its index; subsets are
    handled as bitmasks over these indices, so iteration order, equality
    and all tie-breaking are fixed by construction order.
    """

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[str]):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("universe labels must be distinct")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Universe({list(self.elements)!r})"

    @property
    def full(self) -> int:
        """Bitmask of the whole universe."""
        return (1 << len(self.elements)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElementError(f"{label!r} is not in the universe") from None

    def singleton(self, label: str) -> int:
        return 1 << self.index(label)

    def mask(self, labels: Iterable[str]) -> int:
        """Bitmask of the subset given by ``labels``."""
        m = 0
        for label in labels:
            m |= 1 << self.index(label)
        return m

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    def complement(self, mask: int) -> int:
        return self.full & ~mask

    def subset_key(self, mask: int) -> tuple[int, tuple[int, ...]]:
        """Canonical sort key: cardinality first, then lexicographic indices."""
        return (mask.bit_count(), tuple(bits(mask)))

    def sorted_subsets(self, masks: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(masks, key=self.subset_key))

    def format_subset(self, mask: int) -> str:
        if mask == 0:
            return "{}"
        return "{" + ",".join(self.labels(mask)) + "}"

    def all_subsets(self, cap: int = DEFAULT_CAP) -> range:
        """Range over all subset masks; refuses universes above ``cap``."""
        if len(self.elements) > cap:
            raise CapExceededError(
                f"universe has {len(self.elements)} elements, above the "
                f"exhaustive cap {cap}"
            )
        return range(1 << len(self.elements))


@dataclass(frozen=True)
class ParityDecomposition:
    """Breadth-first layering of the relational closure of a seed set.

    ``distance`` maps each label of the closure to the minimal path length
    from the seed set; ``even`` and ``odd`` split the closure by the parity
    of that distance.
    """

    closure: int
    even: int
    odd: int
    distance: dict[str, int]


class Relation:
    """Binary relation on a universe, one neighborhood bitmask per element."""

    __slots__ = ("universe", "rows")

    def __init__(self, universe: Universe, rows: Iterable[int]):
        self.universe = universe
        self.rows = tuple(rows)
        if len(self.rows) != len(universe):
            raise ValueError("one neighborhood per universe element required")
        full = universe.full
        for row in self.rows:
            if row & ~full:
                raise ValueError("neighborhood reaches outside the universe")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_neighborhoods(
        cls, universe: Universe, neighborhoods: dict[str, Iterable[str]]
    ) -> "Relation":
        rows = [0] * len(universe)
        for label, neigh in neighborhoods.items():
            rows[universe.index(label)] = universe.mask(neigh)
        missing = [x for x in universe if x not in neighborhoods]
        if missing:
            raise ValueError(f"missing neighborhoods for {missing!r}")
        return cls(universe, rows)

    @classmethod
    def from_pairs(
        cls, universe: Universe, pairs: Iterable[tuple[str, str]]
    ) -> "Relation":
        rows = [0] * len(universe)
        for x, y in pairs:
            rows[universe.index(x)] |= universe.singleton(y)
        return cls(universe, rows)

    @classmethod
    def identity(cls, universe: Universe) -> "Relation":
        return cls(universe, (1 << i for i in range(len(universe))))

    @classmethod
    def total(cls, universe: Universe) -> "Relation":
        full = universe.full
        return cls(universe, (full for _ in range(len(universe))))

    # -- basic queries -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Relation)
            and self.universe == other.universe
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.rows))

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{x}:{self.universe.format_subset(row)}"
            for x, row in zip(self.universe, self.rows)
        )
        return f"Relation({parts})"

    def neighborhood(self, x: str) -> int:
        """R(x), the set of elements related to ``x``."""
        return self.rows[self.universe.index(x)]

    def related(self, x: str, y: str) -> bool:
        return bool(self.rows[self.universe.index(x)] >> self.universe.index(y) & 1)

    def pair_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def image(self, subset: int) -> int:
        """R(X), the union of the neighborhoods of the members of ``subset``."""
        out = 0
        for i in bits(subset):
            out |= self.rows[i]
        return out

    def is_reflexive(self) -> bool:
        return all(row >> i & 1 for i, row in enumerate(self.rows))

    def irreflexive_elements(self) -> tuple[str, ...]:
        """Elements missing their own reflexive pair (diagnostic)."""
        return tuple(
            self.universe.elements[i]
            for i, row in enumerate(self.rows)
            if not row >> i & 1
        )

    def is_symmetric(self) -> bool:
        for i, row in enumerate(self.rows):
            for j in bits(row):
                if not self.rows[j] >> i & 1:
                    return False
        return True

    def is_tolerance(self) -> bool:
        return self.is_reflexive() and self.is_symmetric()

    def is_transitive(self) -> bool:
        for row in self.rows:
            reach = 0
            for j in bits(row):
                reach |= self.rows[j]
            if reach & ~row:
                return False
        return True

    def is_equivalence(self) -> bool:
        return self.is_tolerance() and self.is_transitive()

    # -- derived relations ---------------------------------------------------

    def restrict(self, keep: int) -> "Relation":
        """Restriction to the sub-universe ``keep``; neighborhoods intersect."""
        kept = list(bits(keep))
        pos = {j: k for k, j in enumerate(kept)}
        sub = Universe(self.universe.elements[j] for j in kept)
        rows = []
        for j in kept:
            row = self.rows[j] & keep
            rows.append(sum(1 << pos[t] for t in bits(row)))
        return Relation(sub, rows)

    def compose(self, other: "Relation") -> "Relation":
        if self.universe != other.universe:
            raise ValueError("composition requires a common universe")
        rows = []
        for row in self.rows:
            acc = 0
            for j in bits(row):
                acc |= other.rows[j]
            rows.append(acc)
        return Relation(self.universe, rows)

    def relational_power(self, n: int) -> "Relation":
        """n-fold composition; for reflexive relations this contains all
        walks of length up to ``n``."""
        if n < 1:
            raise ValueError("relational power requires n >= 1")
        out = self
        for _ in range(n - 1):
            out = out.compose(self)
        return out

    def transitive_closure(self) -> "Relation":
        """Smallest equivalence containing a tolerance."""
        if not self.is_tolerance():
            raise NotAToleranceError("transitive closure is defined on tolerances")
        rows = [0] * len(self.rows)
        remaining = self.universe.full
        while remaining:
            start = remaining & -remaining
            component = self._spread(start, self.universe.full)
            for i in bits(component):
                rows[i] = component
            remaining &= ~component
        return Relation(self.universe, rows)

    def _spread(self, seed: int, carrier: int) -> int:
        """Connected closure of ``seed`` inside ``carrier``."""
        visited = 0
        frontier = seed & carrier
        while frontier:
            visited |= frontier
            nxt = 0
            for i in bits(frontier):
                nxt |= self.rows[i]
            frontier = nxt & carrier & ~visited
        return visited

    # -- paths and parity ------------------------------------------------------

    def parity_decomposition(self, seed: int) -> ParityDecomposition:
        """Layer the closure of ``seed`` by minimal path distance.

        Requires a tolerance; distance 0 is the seed itself, and the even
        and odd layers partition the closure.
        """
        if not self.is_tolerance():
            raise NotAToleranceError("parity decomposition is defined on tolerances")
        even = odd = visited = 0
        dist: dict[str, int] = {}
        frontier = seed
        d = 0
        while frontier:
            for i in bits(frontier):
                dist[self.universe.elements[i]] = d
            if d % 2:
                odd |= frontier
            else:
                even |= frontier
            visited |= frontier
            nxt = 0
            for i in bits(frontier):
                nxt |= self.rows[i]
            frontier = nxt & ~visited
            d += 1
        return ParityDecomposition(closure=visited, even=even, odd=odd, distance=dist)

    def satisfies_condition_C(self) -> tuple[bool, Path | None]:
        """Check that every path on five distinct elements has a chord.

        A chord is a related pair at least two steps apart along the path.
        Returns ``(False, path)`` with a chordless witness path when the
        condition fails.
        """
        rows = self.rows

        def extend(path: tuple[int, ...], mask: int) -> tuple[int, ...] | None:
            if len(path) == 5:
                return path
            last = path[-1]
            earlier = mask ^ (1 << last)
            for j in bits(rows[last] & ~mask):
                if rows[j] & earlier:
                    continue  # chord back to a non-consecutive node
                hit = extend(path + (j,), mask | 1 << j)
                if hit is not None:
                    return hit
            return None

        for a in range(len(rows)):
            hit = extend((a,), 1 << a)
            if hit is not None:
                return False, tuple(self.universe.elements[i] for i in hit)
        return True, None

    def r3_equivalence_everywhere(self, cap: int = DEFAULT_CAP) -> bool:
        """Whether the cube of every restriction is transitive.

        Exhaustive over all subsets of the universe, so guarded by ``cap``.
        """
        n = len(self.universe)
        if n > cap:
            raise CapExceededError(
                f"subset sweep over {n} elements exceeds the cap {cap}"
            )
        rows = self.rows
        for sub in range(1 << n):
            members = list(bits(sub))
            r1 = {i: rows[i] & sub for i in members}
            r2 = {}
            for i in members:
                acc = 0
                for j in bits(r1[i]):
                    acc |= r1[j]
                r2[i] = acc
            r3 = {}
            for i in members:
                acc = 0
                for j in bits(r2[i]):
                    acc |= r1[j]
                r3[i] = acc
            for i in members:
                acc = 0
                for j in bits(r3[i]):
                    acc |= r3[j]
                if acc & ~r3[i]:
                    return False
        return True

    # -- serialization -------------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "universe": list(self.universe.elements),
            "neighborhoods": {
                x: list(self.universe.labels(row))
                for x, row in zip(self.universe, self.rows)
            },
        }
        return json.dumps(payload, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Relation":
        payload = json.loads(text)
        if not isinstance(payload, dict):
            raise ValueError("relation file must hold a JSON object")
        try:
            elements = payload["universe"]
            neighborhoods = payload["neighborhoods"]
        except KeyError as exc:
            raise ValueError(f"relation file lacks the {exc.args[0]!r} key") from None
        universe = Universe(elements)
        for label in neighborhoods:
            universe.index(label)  # reject stray labels
        return cls.from_neighborhoods(universe, neighborhoods)
