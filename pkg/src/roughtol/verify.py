"""Named property suites over a single tolerance.

Each suite returns ``(name, ok, detail)`` triples; details carry a minimal
witness when a law fails.  These are the laws the library's theory rests
on, run against one concrete input.
"""

from __future__ import annotations

import random
from typing import Callable

from .algebras import (
    increasing_algebra,
    is_heyting,
    kleene_check,
    quasi_nelson_check,
    rough_algebra,
)
from .approximations import ApproximationSpace
from .completions import (
    de_morgan_tilde,
    density_check,
    disjoint_poset,
    disjoint_representation,
    disjoint_rough_pairs,
    increasing_poset,
    increasing_representation,
    join_decomposition,
    macneille_matches_increasing,
    phi,
    singleton_core,
)
from .coverings import (
    blocks,
    blocks_covering,
    characterize_irredundant,
    induced_tolerance,
    is_irredundant,
    representative_certificate,
)
from .errors import CapExceededError
from .fca import bridge_context, condition_dagger, fc_phi, fc_poset, fc_representation
from .lattices import (
    RoughPair,
    enumerate_down_family,
    enumerate_rough_pairs,
    enumerate_up_family,
    pair_poset,
    rough_poset,
    rs_is_complete_lattice,
)
from .relations import DEFAULT_CAP, bits

Check = tuple[str, bool, str]

SUITES = ("galois", "ortho", "thmdc", "latticethms", "algebra", "completion")


def _subset_stream(space: ApproximationSpace, cap: int, samples: int = 4096):
    n = len(space.universe)
    if n <= 12:
        yield from space.universe.all_subsets(cap)
        return
    if n > cap:
        raise CapExceededError(f"universe of {n} elements exceeds the cap {cap}")
    rng = random.Random(0)
    full = space.universe.full
    for _ in range(samples):
        yield rng.randrange(full + 1)


def _first_failure(space: ApproximationSpace, cap: int, law: Callable[[int], bool]) -> int | None:
    for x in _subset_stream(space, cap):
        if not law(x):
            return x
    return None


def suite_galois(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> list[Check]:
    fmt = space.universe.format_subset
    full = space.universe.full
    checks: list[Check] = []

    laws = [
        ("upper triple law", lambda x: space.upper(space.lower(space.upper(x))) == space.upper(x)),
        ("lower triple law", lambda x: space.lower(space.upper(space.lower(x))) == space.lower(x)),
        ("duality", lambda x: space.lower(full & ~x) == full & ~space.upper(x)),
        ("reflexive sandwich", lambda x: space.lower(x) | x == x and x | space.upper(x) == space.upper(x)),
        ("image agrees with upper", lambda x: space.relation.image(x) == space.upper(x)),
    ]
    for name, law in laws:
        bad = _first_failure(space, cap, law)
        checks.append((name, bad is None, "" if bad is None else fmt(bad)))

    n = len(space.universe)
    if n <= 6:
        pairs = [(x, y) for x in range(1 << n) for y in range(1 << n)]
    else:
        rng = random.Random(1)
        pairs = [
            (rng.randrange(full + 1), rng.randrange(full + 1)) for _ in range(4096)
        ]
    bad_pair = next(
        (
            (x, y)
            for x, y in pairs
            if space.upper(x | y) != space.upper(x) | space.upper(y)
            or space.lower(x & y) != space.lower(x) & space.lower(y)
        ),
        None,
    )
    checks.append(
        (
            "homomorphism laws",
            bad_pair is None,
            "" if bad_pair is None else f"{fmt(bad_pair[0])}, {fmt(bad_pair[1])}",
        )
    )
    checks.append(
        (
            "galois characterization",
            space.verify_galois_characterization(),
            "",
        )
    )
    return checks


def suite_ortho(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> list[Check]:
    fmt = space.universe.format_subset
    checks: list[Check] = []
    down = enumerate_down_family(space, cap)
    up = enumerate_up_family(space, cap)
    full = space.universe.full

    cases = (
        (
            down,
            space.ortho_down,
            lambda a, b: space.closure_updown(a | b),
            lambda a, b: a & b,
            "down family",
        ),
        (
            up,
            space.ortho_up,
            lambda a, b: a | b,
            lambda a, b: space.interior_downup(a & b),
            "up family",
        ),
    )
    for family, ortho, join_in, meet_in, name in cases:
        bad_o1 = next(
            (
                (a, b)
                for a in family
                for b in family
                if a | b == b and ortho(b) | ortho(a) != ortho(a)
            ),
            None,
        )
        checks.append(
            (
                f"{name} O1 antitone",
                bad_o1 is None,
                "" if bad_o1 is None else f"{fmt(bad_o1[0])}, {fmt(bad_o1[1])}",
            )
        )
        bad_o2 = next((a for a in family if ortho(ortho(a)) != a), None)
        checks.append(
            (f"{name} O2 involution", bad_o2 is None, "" if bad_o2 is None else fmt(bad_o2))
        )
        bad_o3 = next(
            (
                a
                for a in family
                if join_in(a, ortho(a)) != full or meet_in(a, ortho(a)) != 0
            ),
            None,
        )
        checks.append(
            (f"{name} O3 complement", bad_o3 is None, "" if bad_o3 is None else fmt(bad_o3))
        )

    down_poset = down.as_poset()
    up_poset = up.as_poset()
    iso = down_poset.find_isomorphism(up_poset)
    checks.append(("families isomorphic", iso is not None, ""))
    self_dual = down_poset.find_isomorphism(down_poset.dual())
    checks.append(("down family self-dual", self_dual is not None, ""))
    up_self_dual = up_poset.find_isomorphism(up_poset.dual())
    checks.append(("up family self-dual", up_self_dual is not None, ""))
    return checks


def suite_thmdc(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> list[Check]:
    relation = space.relation
    fmt = space.universe.format_subset
    checks: list[Check] = []
    character = characterize_irredundant(relation)
    checks.append(
        (
            "four clauses agree",
            character.agree,
            "" if character.agree else str(character),
        )
    )
    if character.holds:
        cert = character.certificate
        checks.append(
            ("certificate induces relation", induced_tolerance(cert) == relation, "")
        )
        checks.append(("certificate irredundant", is_irredundant(cert), ""))
        report = representative_certificate(cert, relation)
        checks.append(
            (
                "representative witnesses",
                report.complete,
                "" if report.complete else fmt(report.failing_member),
            )
        )
    rows = relation.rows
    bad = None
    block_set = set(blocks(relation))
    for row in rows:
        preblock = all(rows[j] & row == row for j in bits(row))
        if preblock and row not in block_set:
            bad = row
            break
    checks.append(
        ("square neighborhoods are blocks", bad is None, "" if bad is None else fmt(bad))
    )
    cover = blocks_covering(relation)
    checks.append(
        ("blocks cover and induce", induced_tolerance(cover) == relation, "")
    )
    bridge = bridge_context(relation)
    dagger = condition_dagger(bridge)
    checks.append(
        (
            "dagger agrees with chord clause",
            dagger == character.chord_pairs,
            f"dagger={dagger}, clause={character.chord_pairs}",
        )
    )
    return checks


def suite_latticethms(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> list[Check]:
    relation = space.relation
    checks: list[Check] = []
    character = characterize_irredundant(relation)
    poset = rough_poset(space, cap)
    cls = poset.classify()
    complete, reason = rs_is_complete_lattice(space, cap)
    checks.append(
        (
            "irredundant covering iff distributive lattice",
            character.holds == (cls.is_lattice and cls.is_distributive),
            reason,
        )
    )
    holds_c, _ = relation.satisfies_condition_C()
    checks.append(
        ("chord condition implies complete lattice", (not holds_c) or complete, reason)
    )
    irs = set(increasing_representation(space, cap))
    checks.append(
        (
            "subdirect criterion",
            complete == (set(poset.points) == irs),
            reason,
        )
    )
    # order-isomorphism with the interior/closure pair representation
    ic_pairs = {}
    for pair in poset.points:
        ic_pairs[pair] = RoughPair(space.upper(pair.lo), space.lower(pair.hi))
    ic_poset = pair_poset(space.universe, sorted(
        set(ic_pairs.values()),
        key=lambda p: (space.universe.subset_key(p.lo), space.universe.subset_key(p.hi)),
    ))
    iso_ok = len(ic_poset) == len(poset) and poset.is_order_isomorphism(
        ic_poset, ic_pairs
    )
    checks.append(("interior-closure representation isomorphic", iso_ok, ""))
    if len(space.universe) <= 8:
        r3 = relation.r3_equivalence_everywhere(cap)
        all_restrictions = True
        for sub in space.universe.all_subsets(cap):
            sub_relation = relation.restrict(sub)
            sub_space = ApproximationSpace(sub_relation)
            ok, _ = rs_is_complete_lattice(sub_space, cap)
            if not ok:
                all_restrictions = False
                break
        checks.append(
            (
                "restriction corollary",
                r3 == all_restrictions,
                f"r3={r3}, restrictions={all_restrictions}",
            )
        )
    return checks


def suite_algebra(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> list[Check]:
    checks: list[Check] = []
    full = space.universe.full
    bad = None
    for x in _subset_stream(space, cap):
        lo, hi = space.lower(x), space.upper(x)
        clo, chi = space.lower(full & ~x), space.upper(full & ~x)
        meet_first = lo & clo
        join_second = hi | chi
        second_formula = space.interior_downup(hi & chi) == space.interior_downup(
            hi & ~lo
        )
        if meet_first != 0 or join_second != full or not second_formula:
            bad = x
            break
    checks.append(
        (
            "crossing computation",
            bad is None,
            "" if bad is None else space.universe.format_subset(bad),
        )
    )
    poset = rough_poset(space, cap)
    if poset.is_lattice():
        algebra = rough_algebra(space, cap)
        kleene, witness = kleene_check(algebra)
        checks.append(("kleene laws on rough pairs", kleene, str(witness or "")))
        heyting = is_heyting(algebra)
        quasi = quasi_nelson_check(algebra)
        checks.append(("heyting implies quasi-Nelson", (not heyting) or quasi, ""))
        character = characterize_irredundant(space.relation)
        checks.append(
            (
                "irredundant covering implies quasi-Nelson",
                (not character.holds) or (kleene and quasi),
                "",
            )
        )
    algebra_i = increasing_algebra(space, cap)
    kleene_i, witness_i = kleene_check(algebra_i)
    checks.append(("kleene laws on completion", kleene_i, str(witness_i or "")))
    return checks


def suite_completion(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> list[Check]:
    checks: list[Check] = []
    full = space.universe.full
    rs_pairs = enumerate_rough_pairs(space, cap)
    irs = increasing_representation(space, cap)
    irs_set = set(irs)
    checks.append(("rough pairs inside completion", set(rs_pairs) <= irs_set, ""))
    core = singleton_core(space)
    bad = next(
        (
            x
            for x in _subset_stream(space, cap)
            if core & ~(space.lower(x) | (full & ~space.upper(x)))
        ),
        None,
    )
    checks.append(
        (
            "core split",
            bad is None,
            "" if bad is None else space.universe.format_subset(bad),
        )
    )
    closed = True
    for a in irs:
        for b in irs:
            join = RoughPair(space.closure_updown(a.lo | b.lo), a.hi | b.hi)
            meet = RoughPair(a.lo & b.lo, space.interior_downup(a.hi & b.hi))
            if join not in irs_set or meet not in irs_set:
                closed = False
                break
        if not closed:
            break
    checks.append(("completion closed under product bounds", closed, ""))
    down = set(enumerate_down_family(space, cap))
    up = set(enumerate_up_family(space, cap))
    checks.append(
        (
            "projections surjective",
            {p.lo for p in irs} == down and {p.hi for p in irs} == up,
            "",
        )
    )
    checks.append(
        (
            "cut completion matches increasing representation",
            macneille_matches_increasing(space, cap) is not None,
            "",
        )
    )
    rs_poset = rough_poset(space, cap)
    irs_poset = increasing_poset(space, cap)
    irs_index = {p: i for i, p in enumerate(irs_poset.points)}
    embedding = tuple(irs_index[p] for p in rs_poset.points)
    dense = density_check(rs_poset, irs_poset, embedding)
    checks.append(("rough pairs join- and meet-dense", dense == (True, True), str(dense)))
    decomposition_ok = True
    for pair in irs:
        generators = join_decomposition(space, pair)
        if any(g not in set(rs_pairs) for g in generators):
            decomposition_ok = False
            break
    checks.append(("decomposition into rough generators", decomposition_ok, ""))
    drs = disjoint_rough_pairs(space, cap)
    disjoint_repr = disjoint_representation(space, cap)
    phi_rs = {phi(space, p) for p in rs_pairs}
    phi_irs = {phi(space, p) for p in irs}
    checks.append(
        (
            "phi carrier equalities",
            phi_rs == set(drs) and phi_irs == set(disjoint_repr),
            "",
        )
    )
    commute = all(
        phi(space, de_morgan_tilde(space, p))
        == RoughPair(phi(space, p).hi, phi(space, p).lo)
        for p in irs
    )
    checks.append(("phi commutes with the negations", commute, ""))
    drs_poset = disjoint_poset(space, drs)
    phi_map = {p: phi(space, p) for p in rs_poset.points}
    checks.append(
        (
            "disjoint image isomorphic",
            rs_poset.is_order_isomorphism(drs_poset, phi_map),
            "",
        )
    )
    fc_pairs = fc_representation(space, cap)
    fc = fc_poset(space, cap)
    d_poset = disjoint_poset(space, disjoint_repr)
    fc_map = {p: fc_phi(space, p) for p in d_poset.points}
    checks.append(
        (
            "formal concept representation isomorphic",
            set(fc_pairs) == set(fc_map.values())
            and d_poset.is_order_isomorphism(fc, fc_map),
            "",
        )
    )
    return checks


def run_suite(space: ApproximationSpace, suite: str, cap: int = DEFAULT_CAP) -> list[Check]:
    table = {
        "galois": suite_galois,
        "ortho": suite_ortho,
        "thmdc": suite_thmdc,
        "latticethms": suite_latticethms,
        "algebra": suite_algebra,
        "completion": suite_completion,
    }
    if suite == "all":
        out: list[Check] = []
        for name in SUITES:
            out.extend(
                (f"{name}: {check}", ok, detail)
                for check, ok, detail in table[name](space, cap)
            )
        return out
    if suite not in table:
        raise ValueError(f"unknown suite {suite!r}")
    return table[suite](space, cap)
