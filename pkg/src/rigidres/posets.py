"""Finite posets and finite atomic lattices as inclusion families.

Every poset element in this package is identified by a frozenset of
atom indices, and the order is set inclusion.  That single invariant
covers everything we build — lcm-lattices (an element's id is the set
of generators dividing it), their sub-posets, face lattices, and meet
closures — and it makes meets literal intersections and isomorphism /
join-preservation checks pure set manipulation.

A Poset is any finite inclusion family (fragments like open intervals
need no minimum); a FiniteAtomicLattice additionally contains ∅, the
full atom set, and all singletons, and is closed under intersection,
which forces joins and meets to exist.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .homology import SimplicialComplex
from .monomials import Monomial, MonomialIdeal, lcm_of


def element_key(e):
    """Canonical total order on elements; sorting by it is a linear
    extension of inclusion (smaller sets sort first)."""
    return (len(e), tuple(sorted(e)))


class Poset:
    """A finite family of frozensets ordered by inclusion."""

    def __init__(self, members):
        self.elements = tuple(sorted({frozenset(m) for m in members}, key=element_key))
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._lower = None
        self._upper = None
        self._levels = None

    # -- basic queries ------------------------------------------------

    def __contains__(self, e):
        return frozenset(e) in self._index

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"{type(self).__name__}({len(self.elements)} elements)"

    def leq(self, a, b):
        self._check(a)
        self._check(b)
        return frozenset(a) <= frozenset(b)

    def _check(self, e):
        if frozenset(e) not in self._index:
            raise ValueError(f"{set(e) or '{}'} is not an element")

    def minimal_elements(self):
        return [e for e in self.elements
                if not any(f < e for f in self.elements)]

    def maximal_elements(self):
        return [e for e in self.elements
                if not any(e < f for f in self.elements)]

    @property
    def bottom(self):
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise ValueError(f"no unique minimal element ({len(mins)} minima)")
        return mins[0]

    @property
    def top(self):
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise ValueError(f"no unique maximal element ({len(maxs)} maxima)")
        return maxs[0]

    def atoms(self):
        """Upper covers of the bottom element, in canonical order."""
        return self.upper_covers(self.bottom)

    # -- covers -------------------------------------------------------

    def _build_covers(self):
        lower = {e: [] for e in self.elements}
        upper = {e: [] for e in self.elements}
        for q in self.elements:
            below = [p for p in self.elements if p < q]
            for p in below:
                if not any(p < r for r in below if r < q):
                    lower[q].append(p)
                    upper[p].append(q)
        self._lower = {e: tuple(sorted(v, key=element_key)) for e, v in lower.items()}
        self._upper = {e: tuple(sorted(v, key=element_key)) for e, v in upper.items()}

    def lower_covers(self, q):
        self._check(q)
        if self._lower is None:
            self._build_covers()
        return self._lower[frozenset(q)]

    def upper_covers(self, p):
        self._check(p)
        if self._upper is None:
            self._build_covers()
        return self._upper[frozenset(p)]

    def cover_pairs(self):
        """All (p, q) with p covered by q, in canonical order."""
        return [(p, q) for q in self.elements for p in self.lower_covers(q)]

    def cover_digraph(self):
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.cover_pairs())
        return g

    # -- fragments ----------------------------------------------------

    def induced(self, members):
        return Poset(members)

    def open_interval(self, q):
        """The fragment (0̂, q): everything strictly between bottom and q."""
        self._check(q)
        bot = self.bottom
        q = frozenset(q)
        if q == bot:
            raise ValueError("open interval below the bottom element is undefined")
        return Poset([p for p in self.elements if bot < p < q])

    def half_open_interval(self, q):
        """The fragment (0̂, q]: q and everything strictly between."""
        self._check(q)
        bot = self.bottom
        q = frozenset(q)
        if q == bot:
            raise ValueError("half-open interval below the bottom element is undefined")
        return Poset([p for p in self.elements if bot < p <= q])

    def down_set(self, q):
        """The fragment [0̂, q] = everything ≤ q (q included)."""
        self._check(q)
        q = frozenset(q)
        return Poset([p for p in self.elements if p <= q])

    def without(self, members):
        """The induced subposet with the given members removed."""
        drop = {frozenset(m) for m in members}
        return Poset([e for e in self.elements if e not in drop])

    # -- levels and ranked subposets -----------------------------------

    def level(self, q):
        """Most elements on a saturated chain of non-bottom elements
        ending at q.  The bottom has level 0 and atoms level 1."""
        self._check(q)
        if self._levels is None:
            bot = self.bottom
            levels = {bot: 0}
            for e in self.elements:  # canonical order is a linear extension
                if e == bot:
                    continue
                below = [levels[p] for p in self.lower_covers(e) if p != bot]
                levels[e] = 1 + max(below, default=0)
            self._levels = levels
        return self._levels[frozenset(q)]

    def max_ranked(self, q):
        """The fragment of (0̂, q] of elements lying on some chain of
        level(q) non-bottom elements ending at q; the result is ranked."""
        self._check(q)
        q = frozenset(q)
        bot = self.bottom
        if q == bot:
            raise ValueError("the bottom element has no ranked fragment")
        inside = [p for p in self.elements if bot < p <= q]
        up = {q: 0}  # longest cover-path (in edges) up to q
        for p in sorted(inside, key=element_key, reverse=True):
            if p == q:
                continue
            hops = [up[r] for r in self.upper_covers(p) if r <= q]
            up[p] = 1 + max(hops)
        target = self.level(q)
        return Poset([p for p in inside if self.level(p) + up[p] == target])


def order_complex(fragment):
    """Faces are the chains (totally ordered subsets) of the fragment.

    The empty fragment gives the empty complex {∅}; two incomparable
    elements give two isolated vertices.
    """
    elements = list(fragment.elements)
    faces = [()]
    chains = [[e] for e in elements]
    while chains:
        chain = chains.pop()
        faces.append(tuple(chain))
        top = chain[-1]
        for e in elements:
            if top < e:
                chains.append(chain + [e])
    return SimplicialComplex(frozenset(c) for c in faces)


# --------------------------------------------------------------------------
# atomic lattices

class FiniteAtomicLattice(Poset):
    """An intersection-closed inclusion family on atoms {0..n−1}
    containing ∅, the full set, and every singleton.  Meets are
    intersections; the join of a family is the smallest member
    containing its union.  Optional degree labels attach a Monomial to
    every element (as in lcm-lattices)."""

    def __init__(self, members, n_atoms, degrees=None):
        super().__init__(members)
        if n_atoms <= 0:
            raise ValueError("need a positive number of atoms")
        self.n_atoms = n_atoms
        full = frozenset(range(n_atoms))
        family = set(self.elements)
        if frozenset() not in family:
            raise ValueError("missing bottom ∅")
        if full not in family:
            raise ValueError("missing top (full atom set)")
        for i in range(n_atoms):
            if frozenset({i}) not in family:
                raise ValueError(f"atom {i} not realized as a singleton")
        for a, b in itertools.combinations(family, 2):
            if a & b not in family:
                raise ValueError(f"not intersection-closed: {set(a)} ∩ {set(b)} missing")
        self.degrees = None
        if degrees is not None:
            self.degrees = {frozenset(e): Monomial(m) for e, m in degrees.items()}
            if set(self.degrees) != family:
                raise ValueError("degree labels must cover exactly the elements")

    def join(self, members):
        """Smallest element containing every given member."""
        u = frozenset().union(*[frozenset(m) for m in members]) if members else frozenset()
        above = [e for e in self.elements if u <= e]
        out = frozenset(range(self.n_atoms))
        for e in above:
            out &= e
        return out

    def join_of_atoms(self, atom_indices):
        return self.join([frozenset({i}) for i in atom_indices])

    def meet(self, a, b):
        self._check(a)
        self._check(b)
        return frozenset(a) & frozenset(b)

    def degree(self, e):
        if self.degrees is None:
            raise ValueError("this lattice has no degree labels")
        return self.degrees[frozenset(e)]


def lcm_lattice(ideal):
    """The lattice of all least common multiples of subsets of the
    minimal generators, ordered by divisibility, with 1 at the bottom.
    Element ids are the supports {i : generator i divides the lcm};
    degree labels carry the monomials themselves."""
    gens = ideal.generators
    n = len(gens)
    values = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for m in frontier:
            for g in gens:
                j = m.lcm(g)
                if j not in values:
                    new.add(j)
        values |= new
        frontier = new
    values.add(Monomial([0] * ideal.ambient_dim))
    supports = {}
    for m in values:
        s = frozenset(i for i, g in enumerate(gens) if g.divides(m))
        if s in supports:
            raise AssertionError("distinct lattice values share a support")
        supports[s] = m
    return FiniteAtomicLattice(supports.keys(), n, degrees=supports)


def meet_closure(family, n_atoms):
    """Smallest intersection-closed family containing the input together
    with ∅, the full set, and all singletons.  Idempotent."""
    members = {frozenset(m) for m in family}
    members.add(frozenset())
    members.add(frozenset(range(n_atoms)))
    members.update(frozenset({i}) for i in range(n_atoms))
    while True:
        new = {a & b for a, b in itertools.combinations(members, 2)} - members
        if not new:
            break
        members |= new
    return FiniteAtomicLattice(members, n_atoms)


def face_lattice(X):
    """Faces of a simplicial complex ordered by inclusion, with ∅ at the
    bottom and the full vertex set adjoined on top when it is not
    already a face.  Meet-closed because face sets are subset-closed."""
    if not X.vertices:
        raise ValueError("the empty complex has no face lattice")
    index = {v: i for i, v in enumerate(X.vertices)}
    members = {frozenset(index[v] for v in f) for f in X.faces}
    members.add(frozenset(range(len(X.vertices))))
    return FiniteAtomicLattice(members, len(X.vertices))


# --------------------------------------------------------------------------
# maps and comparisons

@dataclass
class PosetMap:
    """A map between posets, stored elementwise."""

    source: Poset
    target: Poset
    assignment: dict

    def __call__(self, e):
        return self.assignment[frozenset(e)]

    def is_order_preserving(self):
        els = self.source.elements
        return all(self(a) <= self(b) for a in els for b in els if a <= b)

    def is_bijective(self):
        return (len(set(self.assignment.values())) == len(self.source.elements)
                == len(self.target.elements))

    def is_join_preserving(self):
        if not isinstance(self.source, FiniteAtomicLattice) or \
           not isinstance(self.target, FiniteAtomicLattice):
            raise ValueError("join preservation needs lattices on both sides")
        els = self.source.elements
        for a, b in itertools.combinations_with_replacement(els, 2):
            if self(self.source.join([a, b])) != self.target.join([self(a), self(b)]):
                return False
        return True


def _heights(poset):
    """Longest cover-path from a minimal element; an isomorphism
    invariant that needs no global bottom."""
    h = {}
    for e in poset.elements:  # linear extension
        below = [h[p] for p in poset.lower_covers(e)]
        h[e] = 1 + max(below, default=-1)
    return h


def is_isomorphic(P, Q):
    """An order-isomorphism P → Q as a PosetMap, or None.

    Works on the cover digraphs; candidate assignments are pruned by
    cover degrees and height, which is plenty at desk scale.
    """
    if len(P) != len(Q):
        return None
    gp, gq = P.cover_digraph(), Q.cover_digraph()
    hp, hq = _heights(P), _heights(Q)
    nx.set_node_attributes(gp, hp, "h")
    nx.set_node_attributes(gq, hq, "h")
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        gp, gq, node_match=nx.algorithms.isomorphism.categorical_node_match("h", -1)
    )
    for mapping in matcher.isomorphisms_iter():
        return PosetMap(P, Q, dict(mapping))
    return None


def join_preserving_map(P, Q, atom_mode="any-bijection"):
    """A join-preserving map P → Q restricting to a bijection on atoms,
    or None.  With atom_mode="identity" only the identity atom
    assignment is tried; "any-bijection" tries all n! of them.

    Such a map is determined by the atom assignment σ: it must send p to
    the join in Q of σ(atoms below p), so the search just checks that
    this canonical candidate respects all pairwise joins.
    """
    if not isinstance(P, FiniteAtomicLattice) or not isinstance(Q, FiniteAtomicLattice):
        raise ValueError("join-preserving comparison needs atomic lattices")
    if P.n_atoms != Q.n_atoms:
        raise ValueError(f"atom counts differ: {P.n_atoms} vs {Q.n_atoms}")
    n = P.n_atoms
    if atom_mode == "identity":
        sigmas = [tuple(range(n))]
    elif atom_mode == "any-bijection":
        sigmas = itertools.permutations(range(n))
    else:
        raise ValueError(f"unknown atom_mode {atom_mode!r}")

    pair_joins = [(a, b, P.join([a, b]))
                  for a, b in itertools.combinations(P.elements, 2)]
    for sigma in sigmas:
        f = {p: Q.join_of_atoms(sigma[i] for i in p) for p in P.elements}
        if all(f[j] == Q.join([f[a], f[b]]) for a, b, j in pair_joins):
            return PosetMap(P, Q, f)
    return None


def exists_join_preserving(P, Q, atom_mode="any-bijection"):
    """Whether some join-preserving atom-bijective map P → Q exists."""
    return join_preserving_map(P, Q, atom_mode) is not None


def coordinatize(L):
    """A monomial ideal whose lcm-lattice is isomorphic to L.

    One variable per non-bottom element; the generator for atom a is the
    product of the variables of all elements not above a.  (A one-atom
    lattice degenerates — the formula would give the unit — so it maps
    to the principal ideal on one variable.)
    """
    if L.n_atoms == 1:
        return MonomialIdeal(("x1",), [Monomial((1,))])
    others = [e for e in L.elements if e]
    variables = tuple(f"x{j + 1}" for j in range(len(others)))
    gens = []
    for a in range(L.n_atoms):
        gens.append(Monomial(tuple(0 if a in p else 1 for p in others)))
    return MonomialIdeal(variables, gens)
