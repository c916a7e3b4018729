"""Rough-set approximation theory over tolerance relations on finite universes.

Lower/upper approximation operators, blocks and irredundant coverings,
rough-set lattice classification, Dedekind-MacNeille completions in their
increasing, disjoint, and formal-concept forms, and Kleene/quasi-Nelson
algebra checks, all over explicit finite carriers with brute-force
verifiable semantics.
"""

from .approximations import ApproximationSpace
from .coverings import (
    Covering,
    blocks,
    blocks_covering,
    bonikowski_approximations,
    characterize_irredundant,
    family_atoms_check,
    induced_tolerance,
    is_irredundant,
    minimal_description,
    pomykala_lower,
    pomykala_upper,
    representative_certificate,
)
from .completions import (
    de_morgan_swap,
    de_morgan_tilde,
    dedekind_macneille,
    density_check,
    disjoint_representation,
    disjoint_rough_pairs,
    join_decomposition,
    increasing_representation,
    singleton_core,
)
from .errors import (
    AssumptionViolatedError,
    CapExceededError,
    ConstructionFailedError,
    CoveringMismatchError,
    ModeError,
    NotACoveringError,
    NotAToleranceError,
    NotInCarrierError,
    NotInFamilyError,
    PreconditionError,
    RoughtolError,
    UnknownElementError,
)
from .fca import (
    Concept,
    Context,
    bridge_context,
    concept_lattice,
    concepts,
    condition_dagger,
    fc_representation,
    weak_negation,
    weak_opposition,
)
from .infosystems import (
    InformationSystem,
    TableMode,
    complete_elements,
    covering_HB,
    parse_information_system,
    rb_tolerance,
    sim_tolerance,
    wind_tolerance,
)
from .lattices import (
    RoughPair,
    SubsetFamily,
    construct_S,
    construct_meet_Z,
    down_family_join,
    down_family_meet,
    enumerate_down_family,
    enumerate_rough_pairs,
    enumerate_up_family,
    rough_poset,
    rs_is_complete_lattice,
    up_family_join,
    up_family_meet,
)
from .posets import FinitePoset, PosetClassification
from .relations import ParityDecomposition, Relation, Universe

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
