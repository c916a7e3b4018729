"""Finite partially ordered sets with bitmask cones.

A poset stores its carrier as a tuple of opaque hashable points plus one
"up-set" bitmask per point.  Order axioms are verified at construction.
Joins and meets are computed by cone scans, which is all the desk-scale
carriers in this library need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable

import numpy as np

from .relations import bits

# Above this carrier size the lattice-law triple scans switch to numpy.
_VECTOR_THRESHOLD = 48


@dataclass(frozen=True)
class PosetClassification:
    """Order-theoretic classification of a finite poset.

    Witnesses are points of the carrier: ``join_failure``/``meet_failure``
    are pairs lacking a bound, ``n5_witness`` is a pentagon sublattice in
    carrier order.  Lattice-dependent flags are ``False`` on non-lattices.
    """

    is_lattice: bool
    is_complete: bool
    is_distributive: bool
    is_modular: bool
    is_boolean: bool
    is_atomistic: bool
    join_failure: tuple[Any, Any] | None = None
    meet_failure: tuple[Any, Any] | None = None
    n5_witness: tuple[Any, ...] | None = None


class FinitePoset:
    __slots__ = ("points", "up", "down", "_index", "_join", "_meet")

    def __init__(self, points: Iterable[Any], up: Iterable[int]):
        self.points = tuple(points)
        self.up = tuple(up)
        n = len(self.points)
        if len(self.up) != n:
            raise ValueError("one up-cone per point required")
        full = (1 << n) - 1
        down = [0] * n
        for i, cone in enumerate(self.up):
            if cone & ~full:
                raise ValueError("cone reaches outside the carrier")
            if not cone >> i & 1:
                raise ValueError("order must be reflexive")
            for j in bits(cone):
                down[j] |= 1 << i
        self.down = tuple(down)
        for i in range(n):
            for j in bits(self.up[i]):
                if i != j and self.up[j] >> i & 1:
                    raise ValueError("order must be antisymmetric")
                if self.up[j] & ~self.up[i]:
                    raise ValueError("order must be transitive")
        self._index = {p: i for i, p in enumerate(self.points)}
        if len(self._index) != n:
            raise ValueError("points must be distinct")
        self._join: tuple[tuple[int, ...], ...] | None = None
        self._meet: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def from_leq(cls, points: Iterable[Any], leq: Callable[[Any, Any], bool]) -> "FinitePoset":
        pts = tuple(points)
        ups = []
        for p in pts:
            cone = 0
            for j, q in enumerate(pts):
                if leq(p, q):
                    cone |= 1 << j
            ups.append(cone)
        return cls(pts, ups)

    # -- basics ----------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"FinitePoset(<{len(self.points)} points>)"

    @property
    def carrier_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, point: Any) -> int:
        return self._index[point]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def leq_points(self, p: Any, q: Any) -> bool:
        return self.leq(self._index[p], self._index[q])

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.points, self.down)

    # -- bounds ----------------------------------------------------------------

    def upper_cone(self, mask: int) -> int:
        """Common upper bounds of the points in ``mask``."""
        cone = self.carrier_mask
        for i in bits(mask):
            cone &= self.up[i]
        return cone

    def lower_cone(self, mask: int) -> int:
        cone = self.carrier_mask
        for i in bits(mask):
            cone &= self.down[i]
        return cone

    def least(self, mask: int) -> int | None:
        """Index of the least element of ``mask``, if there is one."""
        for i in bits(mask):
            if self.up[i] & mask == mask:
                return i
        return None

    def greatest(self, mask: int) -> int | None:
        for i in bits(mask):
            if self.down[i] & mask == mask:
                return i
        return None

    def join(self, i: int, j: int) -> int | None:
        return self.least(self.up[i] & self.up[j])

    def meet(self, i: int, j: int) -> int | None:
        return self.greatest(self.down[i] & self.down[j])

    def join_of(self, mask: int) -> int | None:
        """Least upper bound of an arbitrary subset (bottom for the empty set)."""
        return self.least(self.upper_cone(mask))

    def meet_of(self, mask: int) -> int | None:
        return self.greatest(self.lower_cone(mask))

    def bottom(self) -> int | None:
        return self.least(self.carrier_mask)

    def top(self) -> int | None:
        return self.greatest(self.carrier_mask)

    def atoms(self) -> tuple[int, ...]:
        """Indices of the elements covering the bottom."""
        bot = self.bottom()
        if bot is None:
            return ()
        out = []
        for i in range(len(self.points)):
            if i == bot:
                continue
            strictly_below = self.down[i] & ~(1 << i)
            if strictly_below == 1 << bot:
                out.append(i)
        return tuple(out)

    # -- covers and export -------------------------------------------------------

    def covers(self) -> list[tuple[int, int]]:
        """Edges of the transitive reduction, as (lower, upper) index pairs."""
        out = []
        for i in range(len(self.points)):
            strict_up = self.up[i] & ~(1 << i)
            for j in bits(strict_up):
                between = strict_up & self.down[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        return out

    def to_dot(self, label: Callable[[Any], str] = str, name: str = "poset") -> str:
        """Hasse diagram in DOT form, edges pointing from lower to upper."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
        for i, p in enumerate(self.points):
            text = label(p).replace('"', '\\"')
            lines.append(f'  n{i} [label="{text}"];')
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    # -- lattice structure -------------------------------------------------------

    def is_lattice_with_witnesses(
        self,
    ) -> tuple[bool, tuple[Any, Any] | None, tuple[Any, Any] | None]:
        """Pairwise join/meet existence, with the first failing pairs."""
        n = len(self.points)
        if n == 0:
            return False, None, None
        join_fail = meet_fail = None
        for i in range(n):
            for j in range(i + 1, n):
                if join_fail is None and self.join(i, j) is None:
                    join_fail = (self.points[i], self.points[j])
                if meet_fail is None and self.meet(i, j) is None:
                    meet_fail = (self.points[i], self.points[j])
                if join_fail is not None and meet_fail is not None:
                    return False, join_fail, meet_fail
        return join_fail is None and meet_fail is None, join_fail, meet_fail

    def is_lattice(self) -> bool:
        ok, _, _ = self.is_lattice_with_witnesses()
        return ok

    def _tables(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        """Join and meet index tables; only valid on lattices."""
        if self._join is None:
            n = len(self.points)
            join_rows = []
            meet_rows = []
            for i in range(n):
                jr = []
                mr = []
                for j in range(n):
                    jv = self.join(i, j)
                    mv = self.meet(i, j)
                    if jv is None or mv is None:
                        raise ValueError("join/meet tables require a lattice")
                    jr.append(jv)
                    mr.append(mv)
                join_rows.append(tuple(jr))
                meet_rows.append(tuple(mr))
            self._join = tuple(join_rows)
            self._meet = tuple(meet_rows)
        return self._join, self._meet

    def is_modular_with_n5(self) -> tuple[bool, tuple[Any, ...] | None]:
        """Modularity via pentagon search; witness in carrier order."""
        if not self.is_lattice():
            return False, None
        join, meet = self._tables()
        n = len(self.points)
        if n > _VECTOR_THRESHOLD:
            hit = _vector_pentagon(np.array(join), np.array(meet), np.array(self.up_matrix()))
        else:
            hit = None
            for x in range(n):
                strict = self.up[x] & ~(1 << x)
                for z in bits(strict):
                    row_jx, row_jz = join[x], join[z]
                    row_mx, row_mz = meet[x], meet[z]
                    for y in range(n):
                        if row_jx[y] == row_jz[y] and row_mx[y] == row_mz[y]:
                            hit = (x, z, y)
                            break
                    if hit:
                        break
                if hit:
                    break
        if hit is None:
            return True, None
        x, z, y = hit
        indices = sorted({meet[x][y], x, z, y, join[x][y]})
        return False, tuple(self.points[i] for i in indices)

    def is_distributive(self) -> bool:
        """Meet-over-join law on all triples; ``False`` on non-lattices."""
        if not self.is_lattice():
            return False
        join, meet = self._tables()
        n = len(self.points)
        if n > _VECTOR_THRESHOLD:
            j = np.array(join)
            m = np.array(meet)
            for x in range(n):
                lhs = m[x][j]
                rhs = j[np.ix_(m[x], m[x])]
                if not np.array_equal(lhs, rhs):
                    return False
            return True
        for x in range(n):
            mx = meet[x]
            for y in range(n):
                mxy = mx[y]
                row_j = join[y]
                for z in range(n):
                    if mx[row_j[z]] != join[mxy][mx[z]]:
                        return False
        return True

    def up_matrix(self) -> list[list[bool]]:
        n = len(self.points)
        return [[bool(self.up[i] >> j & 1) for j in range(n)] for i in range(n)]

    def is_boolean(self) -> bool:
        """Distributive and complemented."""
        if not self.is_distributive():
            return False
        bot, top = self.bottom(), self.top()
        join, meet = self._tables()
        for x in range(len(self.points)):
            if not any(
                join[x][y] == top and meet[x][y] == bot
                for y in range(len(self.points))
            ):
                return False
        return True

    def is_atomistic(self) -> bool:
        """Every element is the join of the atoms below it."""
        if not self.is_lattice():
            return False
        atom_mask = 0
        for a in self.atoms():
            atom_mask |= 1 << a
        for x in range(len(self.points)):
            below = self.down[x] & atom_mask
            if self.join_of(below) != x:
                return False
        return True

    def classify(self) -> PosetClassification:
        is_lat, join_fail, meet_fail = self.is_lattice_with_witnesses()
        if not is_lat:
            return PosetClassification(
                is_lattice=False,
                is_complete=False,
                is_distributive=False,
                is_modular=False,
                is_boolean=False,
                is_atomistic=False,
                join_failure=join_fail,
                meet_failure=meet_fail,
            )
        modular, n5 = self.is_modular_with_n5()
        distributive = modular and self.is_distributive()
        return PosetClassification(
            is_lattice=True,
            is_complete=True,  # a finite nonempty lattice is complete
            is_distributive=distributive,
            is_modular=modular,
            is_boolean=distributive and self.is_boolean(),
            is_atomistic=self.is_atomistic(),
            n5_witness=n5,
        )

    # -- isomorphism ---------------------------------------------------------------

    def find_isomorphism(self, other: "FinitePoset") -> dict[Any, Any] | None:
        """Search for an order-isomorphism; returns a point map or ``None``."""
        n = len(self.points)
        if n != len(other.points):
            return None
        sig_a = _refined_signatures(self)
        sig_b = _refined_signatures(other)
        if sorted(sig_a) != sorted(sig_b):
            return None
        candidates = [
            [j for j in range(n) if sig_b[j] == sig_a[i]] for i in range(n)
        ]
        order = sorted(range(n), key=lambda i: len(candidates[i]))
        mapping: dict[int, int] = {}
        used = [False] * n

        def backtrack(k: int) -> bool:
            if k == n:
                return True
            i = order[k]
            for j in candidates[i]:
                if used[j]:
                    continue
                ok = True
                for i2, j2 in mapping.items():
                    if self.leq(i, i2) != other.leq(j, j2) or self.leq(i2, i) != other.leq(
                        j2, j
                    ):
                        ok = False
                        break
                if ok:
                    mapping[i] = j
                    used[j] = True
                    if backtrack(k + 1):
                        return True
                    del mapping[i]
                    used[j] = False
            return False

        if not backtrack(0):
            return None
        return {self.points[i]: other.points[j] for i, j in mapping.items()}

    def is_order_isomorphism(self, other: "FinitePoset", mapping: dict[Any, Any]) -> bool:
        """Verify that an explicit point map matches the two order matrices."""
        if len(mapping) != len(self.points) or len(set(mapping.values())) != len(
            other.points
        ):
            return False
        try:
            image = [other.index(mapping[p]) for p in self.points]
        except KeyError:
            return False
        for i in range(len(self.points)):
            for j in range(len(self.points)):
                if self.leq(i, j) != other.leq(image[i], image[j]):
                    return False
        return True


def _refined_signatures(poset: FinitePoset) -> list[tuple]:
    n = len(poset.points)
    sig: list[tuple] = [
        (poset.down[i].bit_count(), poset.up[i].bit_count()) for i in range(n)
    ]
    for _ in range(2):
        sig = [
            (
                sig[i],
                tuple(sorted(sig[j] for j in bits(poset.down[i]))),
                tuple(sorted(sig[j] for j in bits(poset.up[i]))),
            )
            for i in range(n)
        ]
    return sig


def _vector_pentagon(join: np.ndarray, meet: np.ndarray, up: np.ndarray) -> tuple[int, int, int] | None:
    n = join.shape[0]
    strict = np.array(up) & ~np.eye(n, dtype=bool)
    for y in range(n):
        jy = join[:, y]
        my = meet[:, y]
        same = (jy[:, None] == jy[None, :]) & (my[:, None] == my[None, :]) & strict
        if same.any():
            x, z = np.argwhere(same)[0]
            return int(x), int(z), y
    return None
