"""Homological contribution, Betti posets, Betti numbers, rigidity.

An element q of a poset with minimum 0̂ "contributes" when the order
complex of the open interval (0̂, q) has some nonzero reduced homology.
The Betti poset keeps 0̂ and the contributors; for an lcm-lattice its
elements index the multigraded Betti numbers of the quotient by the
ideal: β_{i, degree(q)} = h_{i−2} of the interval below q, plus the
rank-one degree-unit term in homological index 0.

Rank-only queries on atomic lattices take a shortcut: the interval
(0̂, q) deformation-retracts onto the nerve of its atoms, the complex
of atom subsets whose join stays below q ("crosscut" complex).  That
complex lives on ≤ n vertices instead of the whole interval, and the
equality of ranks is itself property-tested against the order-complex
route.  Anything needing actual cycle representatives (the resolution
builder) uses the order complex directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .homology import FieldSpec, SimplicialComplex, reduced_homology
from .monomials import Monomial
from .posets import (
    FiniteAtomicLattice,
    Poset,
    element_key,
    lcm_lattice,
    order_complex,
)
from .workers import parallel_map


def crosscut_complex(L, q):
    """Atom subsets of (0̂, q] whose join is strictly below q.

    Homotopy-equivalent to the order complex of (0̂, q); for an atom the
    result is the empty complex {∅}.
    """
    atoms = sorted(i for i in q)
    faces = [()]
    for r in range(1, len(atoms) + 1):
        hits = []
        for s in itertools.combinations(atoms, r):
            if L.join_of_atoms(s) != frozenset(q):
                hits.append(s)
        if not hits:
            break  # larger subsets join to q as well once all r-subsets do
        faces.extend(hits)
    return SimplicialComplex(map(frozenset, faces))


def interval_ranks(P, q, F=FieldSpec(0)):
    """Reduced homology ranks {i: h_i} of the open interval (0̂, q)."""
    q = frozenset(q)
    if q == P.bottom:
        raise ValueError("the interval below the bottom element is undefined")
    cache = P.__dict__.setdefault("_interval_rank_cache", {})
    key = (q, F.characteristic)
    if key not in cache:
        if isinstance(P, FiniteAtomicLattice):
            K = crosscut_complex(P, q)
        else:
            K = order_complex(P.open_interval(q))
        cache[key] = dict(reduced_homology(K, F).ranks)
    return dict(cache[key])


def is_contributor(P, q, F=FieldSpec(0)):
    """Whether the open interval below q has any nonzero reduced homology."""
    return bool(interval_ranks(P, q, F))


def betti_poset(P, F=FieldSpec(0)):
    """The induced subposet on 0̂ and all contributing elements."""
    bot = P.bottom
    others = [e for e in P.elements if e != bot]
    flags = parallel_map(lambda e: is_contributor(P, e, F), others)
    return Poset([bot] + [e for e, hit in zip(others, flags) if hit])


@dataclass
class BettiTable:
    """Multigraded Betti numbers: (homological index, multidegree) → rank."""

    entries: dict = field(default_factory=dict)

    def total(self, i):
        return sum(b for (j, _), b in self.entries.items() if j == i)

    def totals(self):
        top = max((i for i, _ in self.entries), default=-1)
        return tuple(self.total(i) for i in range(top + 1))

    def graded(self):
        """Sorted list of (i, degree, beta) triples."""
        return sorted(((i, d, b) for (i, d), b in self.entries.items()),
                      key=lambda t: (t[0], t[1]))

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def to_json_dict(self):
        return {
            "totals": list(self.totals()),
            "graded": [
                {"i": i, "degree": list(d), "beta": b} for i, d, b in self.graded()
            ],
        }


def betti_numbers(I, F=FieldSpec(0)):
    """Betti table of the quotient by I: the unit degree in index 0,
    then β_{i,b} = h_{i−2} of the interval below b in the lcm-lattice."""
    lat = lcm_lattice(I)
    table = BettiTable()
    table.entries[(0, Monomial([0] * I.ambient_dim))] = 1
    others = [e for e in lat.elements if e]
    all_ranks = parallel_map(lambda e: interval_ranks(lat, e, F), others)
    for e, ranks in zip(others, all_ranks):
        for i, h in ranks.items():
            table.entries[(i + 2, lat.degree(e))] = h
    return table


@dataclass
class RigidityReport:
    """Verdict of the two rigidity conditions, with a witness on failure.

    rule is None when rigid; otherwise "interval-multiplicity" (some
    element has total interval homology rank above one) or
    "comparable-pair" (two comparable elements contribute in the same
    homological index).
    """

    rigid: bool
    rule: str = None
    witnesses: tuple = ()
    detail: str = ""

    def __bool__(self):
        return self.rigid


def rigidity_report(L, F=FieldSpec(0)):
    """Check rigidity of an atomic lattice (of an lcm-lattice, usually).

    Rigid means: every interval (0̂, q) has homology of total rank at
    most one, and elements contributing in the same homological index
    are pairwise incomparable.  The first violation in the canonical
    element order is reported.
    """
    others = [e for e in L.elements if e != L.bottom]
    all_ranks = parallel_map(lambda e: interval_ranks(L, e, F), others)
    contributing = {}
    for e, ranks in zip(others, all_ranks):
        if sum(ranks.values()) > 1:
            what = ", ".join(f"h_{i}={h}" for i, h in sorted(ranks.items()))
            return RigidityReport(
                False, "interval-multiplicity", (e,),
                f"interval below {sorted(e)} has {what}")
        if ranks:
            ((i, _),) = ranks.items()
            contributing[e] = i
    for p, q in itertools.combinations(sorted(contributing, key=element_key), 2):
        if contributing[p] == contributing[q] and (p < q or q < p):
            lo, hi = (p, q) if p < q else (q, p)
            return RigidityReport(
                False, "comparable-pair", (lo, hi),
                f"{sorted(lo)} < {sorted(hi)} both contribute in "
                f"homology degree {contributing[p]}")
    return RigidityReport(True)


def is_rigid(I, F=FieldSpec(0)):
    """RigidityReport for a monomial ideal (via its lcm-lattice)."""
    return rigidity_report(lcm_lattice(I), F)


def contributing_index(P, q, F=FieldSpec(0)):
    """The homological resolution index of q: i+2 for the unique i with
    h_i ≠ 0.  Raises unless exactly one such i exists with rank one."""
    ranks = interval_ranks(P, q, F)
    if sum(ranks.values()) != 1:
        raise ValueError(f"{sorted(q)} does not contribute with rank one: {ranks}")
    ((i, _),) = ranks.items()
    return i + 2
