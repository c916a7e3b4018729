"""Attribute tables and the tolerances they induce.

One CSV grammar covers three table modes: plain tokens (deterministic),
``*`` for a missing value (incomplete), and ``{v1|v2}`` value sets
(nondeterministic).  Value comparison is string-exact after trimming;
indiscernibility of symbols is what the constructions care about.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from typing import Iterable

from .coverings import Covering, characterize_irredundant, induced_tolerance, is_irredundant
from .errors import AssumptionViolatedError, ModeError
from .relations import Relation, Universe, bits

MISSING = None  # cell payload for '*'


class TableMode(enum.Enum):
    DETERMINISTIC = "deterministic"
    INCOMPLETE = "incomplete"
    NONDETERMINISTIC = "nondeterministic"


@dataclass(frozen=True)
class InformationSystem:
    """Objects by attributes, each cell a value set or the missing marker."""

    objects: Universe
    attributes: tuple[str, ...]
    cells: tuple[tuple[frozenset[str] | None, ...], ...]
    mode: TableMode

    def attribute_index(self, name: str) -> int:
        try:
            return self.attributes.index(name)
        except ValueError:
            raise KeyError(f"unknown attribute {name!r}") from None

    def cell(self, obj: str, attribute: str) -> frozenset[str] | None:
        return self.cells[self.objects.index(obj)][self.attribute_index(attribute)]

    def _attribute_subset(self, names: Iterable[str] | None) -> tuple[int, ...]:
        if names is None:
            return tuple(range(len(self.attributes)))
        picked = tuple(self.attribute_index(n) for n in names)
        if not picked:
            raise ValueError("the attribute subset must be nonempty")
        return picked


def parse_information_system(text: str) -> InformationSystem:
    """Parse the CSV table; the mode is inferred from the cell shapes."""
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(c.strip() for c in row)]
    if len(rows) < 2:
        raise ValueError("an information system needs a header and one object row")
    header = [c.strip() for c in rows[0]]
    attributes = tuple(header[1:])
    if not attributes:
        raise ValueError("an information system needs at least one attribute")
    objects = []
    cells = []
    saw_missing = False
    saw_sets = False
    for row in rows[1:]:
        if len(row) != len(header):
            raise ValueError(f"row {row!r} does not match the header width")
        objects.append(row[0].strip())
        parsed_row = []
        for raw in row[1:]:
            token = raw.strip()
            if token in ("*", "∗"):
                parsed_row.append(MISSING)
                saw_missing = True
            elif token.startswith("{") and token.endswith("}"):
                values = frozenset(v.strip() for v in token[1:-1].split("|") if v.strip())
                if not values:
                    raise ValueError(f"empty value set in cell {raw!r}")
                parsed_row.append(values)
                saw_sets = True
            elif token:
                parsed_row.append(frozenset((token,)))
            else:
                raise ValueError("empty cells are not allowed")
        cells.append(tuple(parsed_row))
    if saw_missing and saw_sets:
        raise ValueError("missing markers and value sets cannot be mixed")
    if saw_sets:
        mode = TableMode.NONDETERMINISTIC
    elif saw_missing:
        mode = TableMode.INCOMPLETE
    else:
        mode = TableMode.DETERMINISTIC
    return InformationSystem(Universe(objects), attributes, tuple(cells), mode)


def complete_elements(system: InformationSystem, attributes: Iterable[str] | None = None) -> int:
    """Objects fully known on the chosen attributes: no missing cells, or
    all singleton value sets in the nondeterministic mode."""
    picked = system._attribute_subset(attributes)
    out = 0
    for i, row in enumerate(system.cells):
        if all(row[a] is not MISSING and len(row[a]) == 1 for a in picked):
            out |= 1 << i
    return out


def sim_tolerance(system: InformationSystem, attributes: Iterable[str] | None = None) -> Relation:
    """Tolerance of attribute-wise agreement up to missing values."""
    if system.mode is TableMode.NONDETERMINISTIC:
        raise ModeError("similarity is defined on incomplete tables, not value sets")
    picked = system._attribute_subset(attributes)
    n = len(system.objects)
    rows = [0] * n
    for i in range(n):
        for j in range(i, n):
            if all(
                system.cells[i][a] is MISSING
                or system.cells[j][a] is MISSING
                or system.cells[i][a] == system.cells[j][a]
                for a in picked
            ):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Relation(system.objects, rows)


def covering_HB(
    system: InformationSystem, attributes: Iterable[str] | None = None
) -> Covering:
    """Similarity classes of the complete objects, as an irredundant covering.

    Requires every object to be similar to at least one complete object;
    the error names the first uncovered one.  The result is checked to be
    irredundant and to induce the similarity tolerance itself.
    """
    sim = sim_tolerance(system, attributes)
    complete = complete_elements(system, attributes)
    for i, row in enumerate(sim.rows):
        if not row & complete:
            raise AssumptionViolatedError(
                f"object {system.objects.elements[i]!r} is similar to no complete object"
            )
    members = {sim.rows[i] for i in bits(complete)}
    covering = Covering(system.objects, members)
    if not is_irredundant(covering):
        raise AssertionError("similarity covering is redundant")  # pragma: no cover
    if induced_tolerance(covering) != sim:
        raise AssumptionViolatedError(
            "the complete-object classes do not induce the similarity relation; "
            "some similar pair shares no complete witness"
        )
    return covering


def rb_tolerance(
    system: InformationSystem, attributes: Iterable[str] | None = None
) -> Relation:
    """Potential indiscernibility through a complete witness object.

    Two objects are related when one complete object's values sit inside
    both of their value sets on every chosen attribute.  The result can
    fail to be reflexive when an object has no compatible witness; that is
    surfaced to the caller rather than repaired here.
    """
    if system.mode is TableMode.INCOMPLETE:
        raise ModeError("potential indiscernibility needs value sets, not missing marks")
    picked = system._attribute_subset(attributes)
    n = len(system.objects)
    complete = complete_elements(system, attributes)
    rows = [0] * n
    for c in bits(complete):
        compatible = 0
        for i in range(n):
            if all(system.cells[c][a] <= system.cells[i][a] for a in picked):
                compatible |= 1 << i
        for i in bits(compatible):
            rows[i] |= compatible
    relation = Relation(system.objects, rows)
    if relation.is_tolerance():
        character = characterize_irredundant(relation)
        if not (character.witness_neighborhood and character.block_witness):
            raise AssertionError(
                "witness-based tolerance misses its characterization clauses"
            )  # pragma: no cover
    return relation


def wind_tolerance(
    system: InformationSystem, attributes: Iterable[str] | None = None
) -> Relation:
    """Weak indiscernibility: agreement on at least one chosen attribute."""
    if system.mode is not TableMode.DETERMINISTIC:
        raise ModeError("weak indiscernibility is defined on complete deterministic tables")
    picked = system._attribute_subset(attributes)
    n = len(system.objects)
    rows = [0] * n
    for i in range(n):
        for j in range(i, n):
            if any(system.cells[i][a] == system.cells[j][a] for a in picked):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Relation(system.objects, rows)
