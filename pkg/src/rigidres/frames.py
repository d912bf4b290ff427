"""From Betti posets to minimal free resolutions.

A *frame* over a poset B with minimum 0̂ is a sequence of vector spaces
and maps assembled from the reduced homology of B's open intervals:

  - position 0 holds a single generator, the class of the empty face;
  - position ℓ ≥ 1 holds one component per element q whose interval
    homology h_{ℓ−2} is nonzero, with that rank;
  - the map out of a component at q has one block per lower cover p of
    q, computed as a Mayer-Vietoris connecting map: write each fixed
    representative cycle z as a + b, where a collects exactly the
    chains lying inside the half-open interval (0̂, p]; then ∂a is a
    cycle of the open interval below p, and its coordinates in p's
    fixed homology basis give the block column.

The split is well defined on covers: a chain of (0̂, q) containing p
has p as its largest element (nothing fits strictly between p and q),
so such chains all land in a, and ∂a = −∂b contains no chain through
p, i.e. ∂a really lives below p.

Homogenization turns a frame over a degree-labelled poset into a
multigraded free resolution (scalar c on a cover p ⋖ q becomes
c · degree(q)/degree(p)); relabeling transports a resolution across a
poset isomorphism by keeping all scalars and recomputing the monomial
parts from the new degrees.  Verification is independent of how the
object was produced.  The Taylor-complex Betti oracle at the bottom of
this module shares nothing with the interval-homology path, which is
what makes the cross-checks in the test suite meaningful.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .homology import (
    Chain,
    FieldSpec,
    SimplicialComplex,
    SpanBasis,
    axpy,
    chain_boundary,
    reduce_cycle,
    reduced_homology,
)
from .monomials import Monomial, lcm_of
from .posets import Poset, element_key, order_complex
from .workers import parallel_map


def _key_order(key):
    q, j = key
    return (element_key(q), j)


# --------------------------------------------------------------------------
# frames

@dataclass
class Frame:
    """Homology components and connecting-map blocks over a poset.

    components: ℓ → tuple of (element, multiplicity), canonical order.
    maps: ℓ → {column key → {row key → scalar}} with key = (element, j);
    columns at ℓ map into rows at ℓ−1.  complexes/bases retain each
    interval's order complex and fixed homology basis.
    """

    poset: Poset
    field: FieldSpec
    components: dict
    maps: dict
    complexes: dict = field(repr=False, default_factory=dict)
    bases: dict = field(repr=False, default_factory=dict)

    def rank(self, position):
        return sum(m for _, m in self.components.get(position, ()))

    def ranks(self):
        top = max(self.components, default=-1)
        return tuple(self.rank(i) for i in range(top + 1))

    @property
    def length(self):
        return max((i for i, comps in self.components.items() if comps), default=0)

    def basis_keys(self, position):
        return [(q, j) for q, mult in self.components.get(position, ())
                for j in range(mult)]

    def elements_at(self, position):
        return [q for q, _ in self.components.get(position, ())]

    def block(self, position, q, p):
        """The block of φ_position between component q (columns) and
        component p (rows) as a dense row-major matrix."""
        q, p = frozenset(q), frozenset(p)
        cols = dict(self.components.get(position, ())).get(q)
        rows = dict(self.components.get(position - 1, ())).get(p)
        if cols is None or rows is None:
            raise ValueError("no such component pair")
        zero = self.field.coerce(0)
        return [
            [self.maps[position].get((q, j), {}).get((p, k), zero)
             for j in range(cols)]
            for k in range(rows)
        ]


def _split_off_half_interval(z, p):
    """Terms of z (chains of (0̂,q)) entirely inside (0̂, p]."""
    return {ch: c for ch, c in z.terms.items() if all(e <= p for e in ch)}


def interval_pieces(P, q, p):
    """Split the order complex of (0̂, q) along the cover p ⋖ q.

    Returns three subcomplexes: the chains lying inside (0̂, p], the
    chains lying inside (0̂, p'] for some other lower cover p', and
    their intersection (which always sits inside the open interval
    below p).
    """
    q, p = frozenset(q), frozenset(p)
    covers = P.lower_covers(q)
    if p not in covers:
        raise ValueError("second element is not a lower cover of the first")
    K = order_complex(P.open_interval(q))
    others = [r for r in covers if r != p]
    own, rest, overlap = [], [], []
    for face in K.faces:
        in_own = all(e <= p for e in face)
        in_rest = any(all(e <= r for e in face) for r in others)
        if in_own:
            own.append(face)
        if in_rest:
            rest.append(face)
        if in_own and in_rest:
            overlap.append(face)
    return (SimplicialComplex(own), SimplicialComplex(rest),
            SimplicialComplex(overlap))


def connecting_block(P, q, p, basis_q, basis_p, level, F=FieldSpec(0)):
    """The block of φ_level between the components at q and p ⋖ q, as a
    dense matrix: columns indexed by the fixed representatives of
    H̃_{level−2} of (0̂,q), rows by the basis of H̃_{level−3} of (0̂,p).

    When p is the bottom (q an atom), the single row is the empty-face
    class in position 0 and the entry reads off the coefficient of ∅.
    """
    q, p = frozenset(q), frozenset(p)
    if p not in P.lower_covers(q):
        raise ValueError("second element is not a lower cover of the first")
    reps = basis_q.representatives.get(level - 2, [])
    if p == P.bottom:
        return [[z.terms.get(frozenset(), F.coerce(0)) for z in reps]]
    K_p = order_complex(P.open_interval(p))
    cols = []
    for z in reps:
        a = Chain(level - 2, _split_off_half_interval(z, p))
        da = chain_boundary(a, F)
        cols.append(reduce_cycle(da, K_p, basis_p, F))
    return [[col[k] for col in cols] for k in range(basis_p.rank(level - 3))]


def build_frame(B, F=FieldSpec(0)):
    """Assemble the frame of a poset with minimum 0̂.

    Intended for Betti posets of rigid ideals, where the result carries
    a minimal free resolution; any poset with a minimum is accepted and
    verify_frame decides whether the outcome is exact.
    """
    bot = B.bottom
    others = [q for q in B.elements if q != bot]
    built = parallel_map(lambda q: order_complex(B.open_interval(q)), others)
    complexes = dict(zip(others, built))
    bases = {q: reduced_homology(complexes[q], F) for q in others}

    components = {0: ((bot, 1),)}
    for q in others:  # canonical order keeps each level sorted
        for i in bases[q].nonzero_degrees():
            level = i + 2
            components.setdefault(level, ())
            components[level] += ((q, bases[q].ranks[i]),)

    maps = {}
    for level in sorted(components):
        if level == 0:
            continue
        maps[level] = {}
        for q, mult in components[level]:
            reps = bases[q].representatives[level - 2]
            for j in range(mult):
                z = reps[j]
                col = {}
                for p in B.lower_covers(q):
                    if p == bot:
                        # only atoms cover 0̂; their class is the empty
                        # face itself, sent identically to position 0
                        col[(bot, 0)] = z.terms[frozenset()]
                        continue
                    if bases[p].rank(level - 3) == 0:
                        continue
                    a = Chain(level - 2, _split_off_half_interval(z, p))
                    da = chain_boundary(a, F)
                    coords = reduce_cycle(da, complexes[p], bases[p], F)
                    for k, c in enumerate(coords):
                        if c:
                            col[(p, k)] = c
                maps[level][(q, j)] = col
    return Frame(B, F, components, maps, complexes, bases)


def support_length(P, F=FieldSpec(0)):
    """Length of the frame over P without building its maps: the top
    position that would carry a component."""
    bot = P.bottom
    best = 0
    for q in P.elements:
        if q == bot:
            continue
        ranks = reduced_homology(order_complex(P.open_interval(q)), F).ranks
        if ranks:
            best = max(best, max(ranks) + 2)
    return best


# --------------------------------------------------------------------------
# frame verification

@dataclass
class FrameReport:
    """Outcome of the three frame checks; empty lists mean success."""

    bad_compositions: list = field(default_factory=list)  # (level, col, row)
    strand_failures: list = field(default_factory=list)  # (m, position)
    length_mismatches: list = field(default_factory=list)  # (q, strand, ranked)
    strands_checked: int = 0

    @property
    def is_complex(self):
        return not self.bad_compositions

    @property
    def ok(self):
        return (self.is_complex and not self.strand_failures
                and not self.length_mismatches)

    def summary(self):
        if self.ok:
            return (f"complex, {self.strands_checked} strands exact, "
                    "lengths agree")
        parts = []
        if self.bad_compositions:
            parts.append(f"{len(self.bad_compositions)} nonzero compositions")
        if self.strand_failures:
            parts.append(f"{len(self.strand_failures)} inexact strand positions")
        if self.length_mismatches:
            parts.append(f"{len(self.length_mismatches)} length mismatches")
        return "; ".join(parts)


def _strand_rank(frame, level, allowed):
    """Rank of φ_level restricted to columns at elements inside `allowed`."""
    basis = SpanBasis(frame.field, key=_key_order)
    for key in frame.basis_keys(level):
        if key[0] in allowed:
            col = frame.maps.get(level, {}).get(key, {})
            basis.insert(col)
    return basis.rank


def verify_frame(frame, ambient=None, check_lengths=True):
    """Check that the frame is a complex, that every strand is exact,
    and that strand lengths match their ranked-fragment predictions.

    The strand at m collects the components at elements ≤ m (always
    including position 0) with the restricted maps; it is checked for
    exactness at every position.  m ranges over the ambient poset minus
    its bottom — the bottom strand is the lone position-0 generator,
    whose nonvanishing is exactly what the frame resolves.
    """
    F = frame.field
    report = FrameReport()

    for level in sorted(frame.maps):
        if level - 1 not in frame.maps:
            continue
        below = frame.maps[level - 1]
        for colkey, col in frame.maps[level].items():
            acc = {}
            for rowkey, c in col.items():
                axpy(acc, c, below.get(rowkey, {}), F)
            for rowkey in sorted(acc, key=_key_order):
                report.bad_compositions.append((level, colkey, rowkey))

    scope = ambient if ambient is not None else frame.poset
    bot = scope.bottom
    for m in scope.elements:
        if m == bot:
            continue
        allowed = {q for q in frame.poset.elements if q <= m}
        dims = {level: sum(mult for q, mult in comps if q in allowed)
                for level, comps in frame.components.items()}
        ranks = {level: _strand_rank(frame, level, allowed)
                 for level in frame.maps}
        top = max((level for level, d in dims.items() if d), default=0)
        for level in range(top + 1):
            expected = ranks.get(level, 0) + ranks.get(level + 1, 0)
            if dims.get(level, 0) != expected:
                report.strand_failures.append((m, level))
        report.strands_checked += 1

    if check_lengths:
        B = frame.poset
        for q in B.elements:
            if q == bot:
                continue
            in_strand = max(
                (level for level, comps in frame.components.items()
                 if any(e <= q for e, _ in comps)),
                default=0)
            ranked = B.max_ranked(q)
            ranked_with_bottom = Poset(list(ranked.elements) + [bot])
            predicted = support_length(ranked_with_bottom, F)
            if in_strand != predicted:
                report.length_mismatches.append((q, in_strand, predicted))
    return report


# --------------------------------------------------------------------------
# graded resolutions

@dataclass
class GradedFreeResolution:
    """A multigraded complex of free modules.

    modules: position → tuple of (key, degree Monomial); keys are
    (poset element, index) pairs.  differentials: position →
    {column key → {row key → (scalar, monomial ratio)}}.
    """

    field: FieldSpec
    modules: dict
    differentials: dict

    def ranks(self):
        top = max(self.modules, default=-1)
        return tuple(len(self.modules.get(i, ())) for i in range(top + 1))

    def degrees(self, position):
        return {key: deg for key, deg in self.modules.get(position, ())}

    @property
    def length(self):
        return max((i for i, mods in self.modules.items() if mods), default=0)


def _check_strict_ratio(deg_q, deg_p, where):
    if not deg_p.divides(deg_q) or deg_p == deg_q:
        raise ValueError(f"degrees not strictly compatible at {where}: "
                         f"{tuple(deg_p)} vs {tuple(deg_q)}")
    return deg_q.ratio(deg_p)


def homogenize(frame, degrees):
    """Attach monomial degrees to a frame, yielding a graded resolution.

    degrees maps every component element to a Monomial; each scalar c
    on a pair (q column, p row) becomes (c, degree(q)/degree(p)), which
    must be a non-unit monomial.
    """
    degs = {frozenset(e): Monomial(m) for e, m in degrees.items()}
    modules = {}
    for level, comps in sorted(frame.components.items()):
        mods = []
        for q, mult in comps:
            if q not in degs:
                raise ValueError(f"no degree for element {sorted(q)}")
            mods.extend(((q, j), degs[q]) for j in range(mult))
        modules[level] = tuple(mods)
    differentials = {}
    for level, cols in sorted(frame.maps.items()):
        out = {}
        for colkey, col in cols.items():
            entry = {}
            for rowkey, c in col.items():
                mono = _check_strict_ratio(
                    degs[colkey[0]], degs[rowkey[0]], f"{colkey}->{rowkey}")
                entry[rowkey] = (c, mono)
            out[colkey] = entry
        differentials[level] = out
    return GradedFreeResolution(frame.field, modules, differentials)


def relabel(resolution, mapping, new_degrees):
    """Transport a resolution across a poset isomorphism.

    mapping sends source poset elements to target elements (a PosetMap
    or a plain dict); scalars are kept and every monomial entry is
    recomputed as the ratio of the mapped endpoints' new degrees.
    """
    assignment = getattr(mapping, "assignment", mapping)
    degs = {frozenset(e): Monomial(m) for e, m in new_degrees.items()}

    used = {key[0] for mods in resolution.modules.values() for key, _ in mods}
    missing = [e for e in used if e not in assignment]
    if missing:
        raise ValueError(f"mapping does not cover element "
                         f"{sorted(min(missing, key=element_key))}")
    if len({frozenset(assignment[e]) for e in used}) != len(used):
        raise ValueError("mapping is not injective on the resolution's elements")

    def move(key):
        q, j = key
        return (frozenset(assignment[frozenset(q)]), j)

    modules = {}
    for level, mods in resolution.modules.items():
        moved = []
        for key, _ in mods:
            new_key = move(key)
            if new_key[0] not in degs:
                raise ValueError(f"no degree for element {sorted(new_key[0])}")
            moved.append((new_key, degs[new_key[0]]))
        modules[level] = tuple(sorted(moved, key=lambda kv: _key_order(kv[0])))

    differentials = {}
    for level, cols in resolution.differentials.items():
        out = {}
        for colkey, col in cols.items():
            new_col = move(colkey)
            entry = {}
            for rowkey, (c, _) in col.items():
                new_row = move(rowkey)
                mono = _check_strict_ratio(
                    degs[new_col[0]], degs[new_row[0]], f"{new_col}->{new_row}")
                entry[new_row] = (c, mono)
            out[new_col] = entry
        differentials[level] = out
    return GradedFreeResolution(resolution.field, modules, differentials)


@dataclass
class ResolutionReport:
    """Outcome of graded-resolution verification."""

    homogeneity_failures: list = field(default_factory=list)
    unit_entries: list = field(default_factory=list)  # minimality
    bad_compositions: list = field(default_factory=list)
    strand_failures: list = field(default_factory=list)  # (degree, position)
    strands_checked: int = 0

    @property
    def is_homogeneous(self):
        return not self.homogeneity_failures

    @property
    def is_minimal(self):
        return not self.unit_entries

    @property
    def is_exact(self):
        return not self.strand_failures and not self.bad_compositions

    @property
    def ok(self):
        return self.is_homogeneous and self.is_minimal and self.is_exact

    def summary(self):
        if self.ok:
            return (f"minimal multigraded resolution, "
                    f"{self.strands_checked} degree strands exact")
        parts = []
        if self.homogeneity_failures:
            parts.append(f"{len(self.homogeneity_failures)} inhomogeneous entries")
        if self.unit_entries:
            parts.append(f"{len(self.unit_entries)} unit entries (not minimal)")
        if self.bad_compositions:
            parts.append(f"{len(self.bad_compositions)} nonzero compositions")
        if self.strand_failures:
            parts.append(f"{len(self.strand_failures)} inexact strand positions")
        return "; ".join(parts)


def verify_resolution(resolution):
    """Independent check of a graded resolution.

    Homogeneity (entry monomial = ratio of endpoint degrees),
    minimality (no unit-monomial entries), ∂∂ = 0 on scalars, and
    exactness of the scalar strand at every multidegree in the lcm
    closure of the position-1 degrees (the candidate generators) —
    at all positions, including surjectivity onto position 0.
    """
    F = resolution.field
    report = ResolutionReport()
    all_degrees = {}
    for level, mods in resolution.modules.items():
        for key, deg in mods:
            all_degrees[(level, key)] = deg

    for level, cols in resolution.differentials.items():
        for colkey, col in cols.items():
            dq = all_degrees[(level, colkey)]
            for rowkey, (c, mono) in col.items():
                dp = all_degrees[(level - 1, rowkey)]
                if not c:
                    report.homogeneity_failures.append((level, colkey, rowkey))
                    continue
                if not dp.divides(dq) or dq.ratio(dp) != mono:
                    report.homogeneity_failures.append((level, colkey, rowkey))
                if mono.is_unit:
                    report.unit_entries.append((level, colkey, rowkey))

    for level, cols in resolution.differentials.items():
        below = resolution.differentials.get(level - 1)
        if below is None:
            continue
        for colkey, col in cols.items():
            acc = {}
            for rowkey, (c, _) in col.items():
                scalars = {r: s for r, (s, _) in below.get(rowkey, {}).items()}
                axpy(acc, c, scalars, F)
            for rowkey in sorted(acc, key=_key_order):
                report.bad_compositions.append((level, colkey, rowkey))

    gen_degrees = [deg for _, deg in resolution.modules.get(1, ())]
    values = set(gen_degrees)
    frontier = set(values)
    while frontier:
        new = {a.lcm(b) for a in frontier for b in gen_degrees} - values
        values |= new
        frontier = new
    for b in sorted(values):
        dims = {}
        for level, mods in resolution.modules.items():
            dims[level] = sum(1 for _, deg in mods if deg.divides(b))
        ranks = {}
        for level, cols in resolution.differentials.items():
            basis = SpanBasis(F, key=_key_order)
            for colkey, col in cols.items():
                if all_degrees[(level, colkey)].divides(b):
                    basis.insert({r: c for r, (c, _) in col.items()})
            ranks[level] = basis.rank
        top = max((level for level, d in dims.items() if d), default=0)
        for level in range(top + 1):
            if dims.get(level, 0) != ranks.get(level, 0) + ranks.get(level + 1, 0):
                report.strand_failures.append((b, level))
        report.strands_checked += 1
    return report


# --------------------------------------------------------------------------
# independent oracles: Taylor strands and the Scarf complex

def taylor_betti(I, F=FieldSpec(0), max_generators=12):
    """Betti table via the Taylor complex, bypassing lattice homology.

    Basis in position i: the i-element subsets S of the generators,
    in multidegree lcm(S).  After passing to the residue field, the
    differential keeps the terms S → S∖{j} with unchanged lcm, with
    alternating signs; β_{i,b} is the homology rank of the strand at b.
    """
    from .betti import BettiTable  # local import to avoid a cycle

    gens = I.generators
    n = len(gens)
    if n > max_generators:
        raise ValueError(f"{n} generators exceed the bound {max_generators}")
    unit = Monomial([0] * I.ambient_dim)

    def subset_lcm(S):
        return lcm_of([gens[i] for i in S]) if S else unit

    by_degree = {}
    for r in range(n + 1):
        for S in itertools.combinations(range(n), r):
            by_degree.setdefault(subset_lcm(S), []).append(S)

    table = BettiTable()
    for b, subsets in sorted(by_degree.items()):
        members = set(subsets)
        cols = {}
        for S in subsets:
            col = {}
            for pos, j in enumerate(sorted(S)):
                T = tuple(x for x in S if x != j)
                if T in members:
                    col[T] = F.coerce(1 if pos % 2 == 0 else -1)
            cols[S] = col
        dims = {}
        for S in subsets:
            dims[len(S)] = dims.get(len(S), 0) + 1
        ranks = {}
        for S, col in sorted(cols.items()):
            if col:
                basis = ranks.setdefault(len(S), SpanBasis(F, key=lambda t: t))
                basis.insert(col)
        for i, d in dims.items():
            out_rank = ranks[i].rank if i in ranks else 0
            in_rank = ranks[i + 1].rank if i + 1 in ranks else 0
            h = d - out_rank - in_rank
            if h:
                table.entries[(i, b)] = h
    return table


def scarf_complex(I):
    """Generator subsets whose lcm no other subset attains."""
    gens = I.generators
    n = len(gens)
    unit = Monomial([0] * I.ambient_dim)
    counts = {}
    owner = {}
    for r in range(n + 1):
        for S in itertools.combinations(range(n), r):
            b = lcm_of([gens[i] for i in S]) if S else unit
            counts[b] = counts.get(b, 0) + 1
            owner[b] = S
    unique = [frozenset(S) for b, S in owner.items() if counts[b] == 1]
    K = SimplicialComplex(unique)
    if K.faces != set(unique):
        raise AssertionError("unique-lcm subsets failed to be subset-closed")
    return K
