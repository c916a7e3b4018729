"""Full analysis pipeline producing one consistent report per relation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .algebras import algebra_report, rough_algebra
from .approximations import ApproximationSpace
from .completions import (
    disjoint_representation,
    disjoint_rough_pairs,
    increasing_representation,
    singleton_core,
)
from .coverings import blocks, characterize_irredundant
from .fca import bridge_context, concepts, condition_dagger, fc_representation
from .lattices import (
    RoughPair,
    enumerate_down_family,
    enumerate_rough_pairs,
    enumerate_up_family,
    pair_label,
    rough_poset,
)
from .relations import DEFAULT_CAP, Relation

SCHEMA = "roughtol-analysis/1"


def _labels(relation: Relation, mask: int) -> list[str]:
    return list(relation.universe.labels(mask))


def _pair(relation: Relation, pair: RoughPair) -> list[list[str]]:
    return [_labels(relation, pair.lo), _labels(relation, pair.hi)]


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline knows about one tolerance.

    Construction re-checks the cross-module consistency facts a report
    must satisfy (an irredundant covering forces a distributive lattice,
    the chord condition forces completeness), so an inconsistent report
    cannot be emitted.
    """

    relation: dict[str, Any]
    singleton_core: list[str]
    condition_c: dict[str, Any]
    characterization: dict[str, Any]
    blocks: list[list[str]]
    families: dict[str, Any]
    rough_sets: dict[str, Any]
    algebra: dict[str, Any] | None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.characterization["irredundant_covering"]:
            if not (
                self.rough_sets["is_lattice"] and self.rough_sets["is_distributive"]
            ):
                raise AssertionError(
                    "irredundant covering without a distributive rough lattice"
                )
        if self.condition_c["holds"] and not self.rough_sets["is_complete"]:
            raise AssertionError("chord condition without a complete rough lattice")

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "relation": self.relation,
            "singleton_core": self.singleton_core,
            "condition_c": self.condition_c,
            "characterization": self.characterization,
            "blocks": self.blocks,
            "families": self.families,
            "rough_sets": self.rough_sets,
            "algebra": self.algebra,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        lines = []
        for key, value in _flatten(self.to_dict()):
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"

    def flat_items(self) -> list[tuple[str, str]]:
        return _flatten(self.to_dict())


def _flatten(value: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(value, dict):
        out = []
        for key in sorted(value):
            path = f"{prefix}.{key}" if prefix else str(key)
            out.extend(_flatten(value[key], path))
        return out
    return [(prefix, json.dumps(value, ensure_ascii=False))]


def analyze_relation(relation: Relation, cap: int = DEFAULT_CAP) -> AnalysisReport:
    """Run the whole pipeline on a tolerance."""
    space = ApproximationSpace(relation)
    core = singleton_core(space)
    holds_c, witness = relation.satisfies_condition_C()
    character = characterize_irredundant(relation)
    block_list = blocks(relation)
    down = enumerate_down_family(space, cap)
    up = enumerate_up_family(space, cap)
    rs_pairs = enumerate_rough_pairs(space, cap)
    irs = increasing_representation(space, cap)
    drs = disjoint_rough_pairs(space, cap)
    disjoint_repr = disjoint_representation(space, cap)
    fc = fc_representation(space, cap)
    bridge = bridge_context(relation)
    poset = rough_poset(space, cap)
    cls = poset.classify()
    rough_sets = {
        "size": len(rs_pairs),
        "is_lattice": cls.is_lattice,
        "is_complete": cls.is_complete,
        "is_distributive": cls.is_distributive,
        "is_modular": cls.is_modular,
        "is_boolean": cls.is_boolean,
        "is_atomistic": cls.is_atomistic,
        "join_failure": (
            [pair_label(relation.universe, p) for p in cls.join_failure]
            if cls.join_failure
            else None
        ),
        "meet_failure": (
            [pair_label(relation.universe, p) for p in cls.meet_failure]
            if cls.meet_failure
            else None
        ),
    }
    down_cls = down.as_poset().classify()
    families = {
        "down_size": len(down),
        "up_size": len(up),
        "rough_pairs": len(rs_pairs),
        "increasing": len(irs),
        "disjoint_rough_pairs": len(drs),
        "disjoint_representation": len(disjoint_repr),
        "formal_concept_pairs": len(fc),
        "concepts": len(concepts(bridge, cap)),
        "down_is_boolean": down_cls.is_boolean,
        "down_n5_witness": (
            [_labels(relation, m) for m in down_cls.n5_witness]
            if down_cls.n5_witness
            else None
        ),
        "condition_dagger": condition_dagger(bridge),
    }
    algebra = None
    notes = []
    if cls.is_lattice:
        algebra = algebra_report(
            rough_algebra(space, cap),
            label=lambda p: pair_label(relation.universe, p),
        )
    else:
        notes.append("rough pairs form no lattice; algebra checks skipped")
    return AnalysisReport(
        relation={
            "universe": list(relation.universe.elements),
            "size": len(relation.universe),
            "pairs": relation.pair_count(),
            "reflexive": relation.is_reflexive(),
            "symmetric": relation.is_symmetric(),
            "tolerance": relation.is_tolerance(),
        },
        singleton_core=_labels(relation, core),
        condition_c={"holds": holds_c, "witness": list(witness) if witness else None},
        characterization={
            "chord_pairs": character.chord_pairs,
            "witness_neighborhood": character.witness_neighborhood,
            "block_witness": character.block_witness,
            "irredundant_covering": character.irredundant_covering,
            "certificate": (
                [_labels(relation, m) for m in character.certificate.members]
                if character.certificate
                else None
            ),
        },
        blocks=[_labels(relation, b) for b in block_list],
        families=families,
        rough_sets=rough_sets,
        algebra=algebra,
        notes=notes,
    )
