"""Formal concept analysis over the complement context of a tolerance.

The bridge context pairs the universe with itself through the complement
of the relation; its concept lattice is a copy of the approximation
families, and the weak opposition operation expresses disjointness of
rough pairs, yielding the formal concept representation.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .approximations import ApproximationSpace
from .completions import singleton_core
from .errors import CapExceededError
from .lattices import RoughPair
from .posets import FinitePoset
from .relations import DEFAULT_CAP, Relation, Universe, bits


class Concept(NamedTuple):
    """Extent/intent pair closed under the derivation operators."""

    extent: int
    intent: int


class Context:
    """Objects, attributes, and an incidence table (one row per object)."""

    __slots__ = ("objects", "attributes", "incidence")

    def __init__(self, objects: Universe, attributes: Universe, incidence: Iterable[int]):
        self.objects = objects
        self.attributes = attributes
        self.incidence = tuple(incidence)
        if len(self.incidence) != len(objects):
            raise ValueError("one incidence row per object required")
        for row in self.incidence:
            if row & ~attributes.full:
                raise ValueError("incidence row reaches outside the attributes")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Context)
            and self.objects == other.objects
            and self.attributes == other.attributes
            and self.incidence == other.incidence
        )

    def __repr__(self) -> str:
        return f"Context({len(self.objects)} objects, {len(self.attributes)} attributes)"

    def is_square(self) -> bool:
        return len(self.objects) == len(self.attributes)

    def derive_objects(self, extent: int) -> int:
        """Attributes shared by every object of ``extent``."""
        out = self.attributes.full
        for i in bits(extent):
            out &= self.incidence[i]
        return out

    def derive_attributes(self, intent: int) -> int:
        """Objects carrying every attribute of ``intent``."""
        out = 0
        for i, row in enumerate(self.incidence):
            if row & intent == intent:
                out |= 1 << i
        return out

    def derive(self, mask: int, side: str) -> int:
        if side == "objects":
            return self.derive_objects(mask)
        if side == "attributes":
            return self.derive_attributes(mask)
        raise ValueError(f"side must be 'objects' or 'attributes', not {side!r}")


def bridge_context(relation: Relation) -> Context:
    """The square context of a tolerance over the complemented relation."""
    full = relation.universe.full
    return Context(
        relation.universe,
        relation.universe,
        (full & ~row for row in relation.rows),
    )


def concepts(ctx: Context, cap: int = DEFAULT_CAP) -> tuple[Concept, ...]:
    """All concepts, by a closure sweep over the smaller side."""
    g, m = len(ctx.objects), len(ctx.attributes)
    if min(g, m) > cap:
        raise CapExceededError(
            f"concept enumeration over min({g}, {m}) elements exceeds the cap {cap}"
        )
    found: dict[int, int] = {}
    if g <= m:
        for subset in range(1 << g):
            intent = ctx.derive_objects(subset)
            extent = ctx.derive_attributes(intent)
            found[extent] = intent
    else:
        for subset in range(1 << m):
            extent = ctx.derive_attributes(subset)
            intent = ctx.derive_objects(extent)
            found[extent] = intent
    key = ctx.objects.subset_key
    return tuple(
        Concept(extent, intent) for extent, intent in sorted(found.items(), key=lambda kv: key(kv[0]))
    )


def concept_lattice(ctx: Context, cap: int = DEFAULT_CAP) -> FinitePoset:
    """Concepts ordered by extent inclusion."""
    pts = concepts(ctx, cap)
    ups = []
    for c in pts:
        cone = 0
        for j, d in enumerate(pts):
            if c.extent | d.extent == d.extent:
                cone |= 1 << j
        ups.append(cone)
    return FinitePoset(pts, ups)


def weak_negation(ctx: Context, concept: Concept) -> Concept:
    """Concept generated by the complement of the extent."""
    extent = ctx.objects.complement(concept.extent)
    intent = ctx.derive_objects(extent)
    return Concept(ctx.derive_attributes(intent), intent)


def weak_opposition(ctx: Context, concept: Concept) -> Concept:
    """Concept generated by the complement of the intent."""
    intent = ctx.attributes.complement(concept.intent)
    extent = ctx.derive_attributes(intent)
    return Concept(extent, ctx.derive_objects(extent))


def condition_dagger(ctx: Context) -> bool:
    """Literal complete-distributivity test on non-incident pairs."""
    g_count = len(ctx.objects)
    m_full = ctx.attributes.full
    object_closure = [
        ctx.derive_attributes(ctx.derive_objects(1 << h)) for h in range(g_count)
    ]
    for g in range(g_count):
        non_incident = m_full & ~ctx.incidence[g]
        for m in bits(non_incident):
            hit = False
            for n in bits(non_incident):
                lacking_n = 0  # objects without attribute n
                for k, row in enumerate(ctx.incidence):
                    if not row >> n & 1:
                        lacking_n |= 1 << k
                candidates = (1 << g_count) - 1
                for k in bits(lacking_n):
                    candidates &= object_closure[k]
                    if not candidates:
                        break
                for h in bits(candidates):
                    if not ctx.incidence[h] >> m & 1:
                        hit = True
                        break
                if hit:
                    break
            if not hit:
                return False
    return True


def fc_representation(
    space: ApproximationSpace, cap: int = DEFAULT_CAP
) -> tuple[tuple[Concept, Concept], ...]:
    """Concept pairs below each other's weak opposition, covering the core."""
    ctx = bridge_context(space.relation)
    cs = concepts(ctx, cap)
    core = singleton_core(space)
    opposition = {c: weak_opposition(ctx, c) for c in cs}
    out = []
    for alpha in cs:
        for beta in cs:
            opp = opposition[alpha]
            if beta.extent | opp.extent != opp.extent:
                continue
            if core & ~(alpha.extent | beta.extent):
                continue
            out.append((alpha, beta))
    key = space.universe.subset_key
    return tuple(
        sorted(out, key=lambda ab: (key(ab[0].extent), key(ab[1].extent)))
    )


def fc_poset(
    space: ApproximationSpace, cap: int = DEFAULT_CAP
) -> FinitePoset:
    """The formal concept representation, second coordinate reversed."""
    pts = fc_representation(space, cap)
    ups = []
    for alpha, beta in pts:
        cone = 0
        for j, (gamma, delta) in enumerate(pts):
            if (
                alpha.extent | gamma.extent == gamma.extent
                and delta.extent | beta.extent == beta.extent
            ):
                cone |= 1 << j
        ups.append(cone)
    return FinitePoset(pts, ups)


def fc_phi(space: ApproximationSpace, pair: RoughPair) -> tuple[Concept, Concept]:
    """Map a disjoint-representation pair to its concept pair."""
    ctx = bridge_context(space.relation)

    def as_concept(member: int) -> Concept:
        return Concept(member, ctx.derive_objects(member))

    return (as_concept(pair.lo), as_concept(pair.hi))


# -- plain-text context format ------------------------------------------------------


def write_burmeister(ctx: Context) -> str:
    """Objects-by-attributes grid with X/. marks."""
    lines = ["B", ""]
    lines.append(str(len(ctx.objects)))
    lines.append(str(len(ctx.attributes)))
    lines.append("")
    lines.extend(ctx.objects.elements)
    lines.extend(ctx.attributes.elements)
    for row in ctx.incidence:
        lines.append(
            "".join("X" if row >> j & 1 else "." for j in range(len(ctx.attributes)))
        )
    return "\n".join(lines) + "\n"


def read_burmeister(text: str) -> Context:
    lines = [line.rstrip("\n") for line in text.splitlines()]
    if not lines or lines[0].strip() != "B":
        raise ValueError("context file must start with a 'B' line")
    body = [line for line in lines[1:] if line.strip() != ""]
    try:
        g = int(body[0])
        m = int(body[1])
    except (IndexError, ValueError):
        raise ValueError("context file lacks its size header") from None
    names = body[2:]
    if len(names) < g + m + g:
        raise ValueError("context file is truncated")
    objects = Universe(names[:g])
    attributes = Universe(names[g : g + m])
    rows = []
    for line in names[g + m : g + m + g]:
        cells = line.strip()
        if len(cells) != m:
            raise ValueError(f"incidence row {cells!r} has the wrong width")
        rows.append(sum(1 << j for j, c in enumerate(cells) if c in "Xx"))
    return Context(objects, attributes, rows)
