"""Rigid deformations at the lattice level.

A deformation of a monomial ideal I replaces its lcm-lattice by a
finer atomic lattice T (same atoms, join-preserving map T → L_I) whose
coordinatized ideal J is rigid and whose minimal resolution relabels
to a minimal resolution of I.  Two entry points:

  - simplicial_rigid_deformation: when a simplicial complex X on the
    generators supports the minimal resolution of I, the meet closure
    of L_I together with X's face lattice is such a T, and every new
    element is homologically silent — so total Betti numbers are
    preserved by construction.
  - search_rigid_deformation: a bounded, deterministic scan over
    augmentations of L_I by missing support sets (meet-closed after
    each addition), plus the Betti poset itself when it happens to be
    a lattice.  Used mostly as a negative control: for the hexagon
    edge ideal every single-support augmentation strictly increases
    total Betti numbers, so the scan comes back empty.

Certification never trusts the construction: it re-checks rigidity,
Betti totals, and the full relabeled resolution independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .betti import betti_numbers, betti_poset, interval_ranks, rigidity_report
from .frames import build_frame, homogenize, relabel, verify_resolution
from .homology import FieldSpec, SimplicialComplex, reduced_homology
from .monomials import lcm_of
from .posets import (
    FiniteAtomicLattice,
    coordinatize,
    element_key,
    exists_join_preserving,
    face_lattice,
    is_isomorphic,
    join_preserving_map,
    lcm_lattice,
    meet_closure,
)


def lattice_betti_totals(P, F=FieldSpec(0)):
    """Total Betti numbers read off a poset with 0̂: one generator at the
    bottom, and position i ≥ 1 collects h_{i−2} over all open intervals.
    For an lcm-lattice this equals the ideal's total Betti numbers."""
    bot = P.bottom
    totals = {0: 1}
    for q in P.elements:
        if q == bot:
            continue
        for i, h in interval_ranks(P, q, F).items():
            totals[i + 2] = totals.get(i + 2, 0) + h
    return tuple(totals.get(i, 0) for i in range(max(totals) + 1))


# --------------------------------------------------------------------------
# certification

@dataclass
class Certificate:
    """The three facts a successful deformation must exhibit."""

    rigid: bool = False
    betti_preserved: bool = False
    relabel_verified: bool = False

    @property
    def all_true(self):
        return self.rigid and self.betti_preserved and self.relabel_verified

    def __bool__(self):
        return self.all_true


@dataclass
class CertificationReport:
    """Outcome of checking one candidate ideal J against the source I."""

    rigid: bool = False
    betti_equal: bool = False
    route: str = ""  # "betti-poset-isomorphism" | "join-preserving" | ""
    relabel_verified: bool = False
    detail: str = ""

    @property
    def ok(self):
        return self.rigid and bool(self.route) and self.relabel_verified

    def __bool__(self):
        return self.ok


@dataclass
class DeformationResult:
    target_lattice: FiniteAtomicLattice
    target_ideal: object  # MonomialIdeal
    certificate: Certificate
    comparable_to_source: bool = False
    added: tuple = ()
    route: str = ""


def _betti_poset_resolution(J, F):
    LJ = lcm_lattice(J)
    BJ = betti_poset(LJ, F)
    frame = build_frame(BJ, F)
    res = homogenize(frame, {q: LJ.degree(q) for q in BJ.elements})
    return LJ, BJ, res


def _resolves(res, I):
    """Whether the resolution's first module matches I's generators."""
    degrees = sorted(deg for _, deg in res.modules.get(1, ()))
    return degrees == sorted(I.generators)


def certify_rigid_deformation(J, I, F=FieldSpec(0)):
    """Check independently that J is a rigid deformation of I: J rigid,
    Betti posets isomorphic (or a join-preserving comparability map
    available), and J's minimal resolution relabels to a verified
    minimal resolution of I."""
    LI, LJ = lcm_lattice(I), lcm_lattice(J)
    report = CertificationReport()
    report.rigid = rigidity_report(LJ, F).rigid
    report.betti_equal = (
        lattice_betti_totals(LJ, F) == lattice_betti_totals(LI, F))

    BI, BJ = betti_poset(LI, F), betti_poset(LJ, F)
    iso = is_isomorphic(BJ, BI)
    if iso is not None:
        report.route = "betti-poset-isomorphism"
        assignment = dict(iso.assignment)
    else:
        g = (join_preserving_map(LJ, LI)
             if LJ.n_atoms == LI.n_atoms else None)
        if g is None:
            report.detail = ("Betti posets not isomorphic and no "
                             "join-preserving map onto the source lattice")
            return report
        report.route = "join-preserving"
        assignment = {q: g(q) for q in BJ.elements}

    _, _, res = _betti_poset_resolution(J, F)
    degrees_i = {q: LI.degree(q) for q in LI.elements}
    try:
        moved = relabel(res, assignment, degrees_i)
    except ValueError as err:
        report.detail = f"relabel failed: {err}"
        return report
    verdict = verify_resolution(moved)
    report.relabel_verified = verdict.ok and _resolves(moved, I)
    if not verdict.ok:
        report.detail = verdict.summary()
    elif not report.relabel_verified:
        report.detail = "relabeled first module misses the source generators"
    return report


# --------------------------------------------------------------------------
# the simplicial construction

def _restriction(X, gens, bound):
    faces = [f for f in X.faces
             if f and lcm_of([gens[i] for i in f]).divides(bound)]
    return SimplicialComplex(faces)


def simplicial_rigid_deformation(I, X, F=FieldSpec(0)):
    """Deform I along a simplicial complex X that supports its minimal
    resolution (vertices = generator indices; every restriction X_{≤b},
    b in the lcm-lattice, must be acyclic — checked).

    The target lattice is the meet closure of the lcm supports together
    with X's face lattice; the target ideal is its coordinatization.
    """
    gens = I.generators
    n = len(gens)
    if set(X.vertices) != set(range(n)):
        raise ValueError("complex vertices must be the generator indices "
                         f"0..{n - 1}")
    L = lcm_lattice(I)
    for q in L.elements:
        if q == L.bottom:
            continue
        sub = _restriction(X, gens, L.degree(q))
        ranks = reduced_homology(sub, F).ranks
        if ranks:
            raise ValueError(
                f"restriction to degree of {sorted(q)} is not acyclic "
                f"(nonzero reduced homology {ranks}); the complex does not "
                "support the minimal resolution")

    P = face_lattice(X)
    family = set(L.elements) | set(P.elements)
    T = meet_closure(family, n)
    J = coordinatize(T)
    LJ = lcm_lattice(J)
    assert set(LJ.elements) == set(T.elements), \
        "coordinatization changed the support family"

    totals_t = lattice_betti_totals(T, F)
    betti_preserved = (totals_t == betti_numbers(I, F).totals()
                       and totals_t == lattice_betti_totals(P, F))
    certification = certify_rigid_deformation(J, I, F)
    certificate = Certificate(
        rigid=certification.rigid,
        betti_preserved=betti_preserved,
        relabel_verified=certification.relabel_verified,
    )
    return DeformationResult(
        target_lattice=T,
        target_ideal=J,
        certificate=certificate,
        comparable_to_source=exists_join_preserving(T, L),
        added=tuple(sorted(set(T.elements) - set(L.elements),
                           key=element_key)),
        route=certification.route,
    )


# --------------------------------------------------------------------------
# bounded search

@dataclass
class ScanEntry:
    added: tuple
    lattice_size: int
    totals: tuple
    certified: bool = False


@dataclass
class SearchOutcome:
    base_totals: tuple
    result: DeformationResult = None
    augmentation_log: list = field(default_factory=list)
    betti_poset_candidate: ScanEntry = None

    def __bool__(self):
        return self.result is not None


def _certified_result(T, I, L, F, added):
    J = coordinatize(T)
    certification = certify_rigid_deformation(J, I, F)
    if not certification.ok:
        return None
    certificate = Certificate(
        rigid=certification.rigid,
        betti_preserved=certification.betti_equal,
        relabel_verified=certification.relabel_verified,
    )
    return DeformationResult(
        target_lattice=T,
        target_ideal=J,
        certificate=certificate,
        comparable_to_source=exists_join_preserving(T, L),
        added=added,
        route=certification.route,
    )


def search_rigid_deformation(I, budget=1, F=FieldSpec(0)):
    """Bounded deterministic search for a rigid deformation of I.

    An already-rigid ideal certifies against its own lattice at once.
    Otherwise the scan tries the Betti poset (when it is a lattice and
    differs from L), then meet closures of L plus up to `budget` of the
    missing support sets, certifying only candidates whose total Betti
    numbers match the source — a relabeled *minimal* resolution cannot
    exist otherwise.  Absent result means none within budget, not a
    proof that no deformation exists.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    L = lcm_lattice(I)
    n = len(I.generators)
    family = set(L.elements)
    base = betti_numbers(I, F).totals()
    outcome = SearchOutcome(base_totals=base)

    if rigidity_report(L, F).rigid:
        T = meet_closure(family, n)
        outcome.result = _certified_result(T, I, L, F, added=())
        return outcome

    B = betti_poset(L, F)
    try:
        TB = FiniteAtomicLattice(B.elements, n)
    except ValueError:
        TB = None
    if TB is not None and set(TB.elements) != family:
        entry = ScanEntry(added=(), lattice_size=len(TB.elements),
                          totals=lattice_betti_totals(TB, F))
        outcome.betti_poset_candidate = entry
        result = _certified_result(TB, I, L, F, added=())
        if result is not None:
            entry.certified = True
            outcome.result = result
            return outcome

    missing = sorted(
        (frozenset(s)
         for r in range(2, n)
         for s in itertools.combinations(range(n), r)
         if frozenset(s) not in family),
        key=element_key)
    candidates = []
    for r in range(1, budget + 1):
        for combo in itertools.combinations(missing, r):
            T = meet_closure(family | set(combo), n)
            entry = ScanEntry(added=combo, lattice_size=len(T.elements),
                              totals=lattice_betti_totals(T, F))
            outcome.augmentation_log.append(entry)
            if entry.totals == base:
                candidates.append((entry, T))

    candidates.sort(key=lambda pair: (
        pair[0].lattice_size,
        tuple(element_key(s) for s in pair[0].added)))
    for entry, T in candidates:
        result = _certified_result(T, I, L, F, added=entry.added)
        if result is not None:
            entry.certified = True
            outcome.result = result
            return outcome
    return outcome
