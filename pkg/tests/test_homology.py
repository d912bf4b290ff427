from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rigidres.homology import (
    Chain,
    FieldSpec,
    SimplicialComplex,
    SpanBasis,
    boundary_matrix,
    chain_boundary,
    cone,
    reduce_cycle,
    reduced_homology,
)

Q = FieldSpec(0)

HEXAGON = SimplicialComplex([{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}])

# the classical 6-vertex triangulation of the real projective plane:
# 10 triangles, every one of the 15 edges in exactly two of them
RP2 = SimplicialComplex(
    [{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
     {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}]
)


def small_complexes():
    facet = st.sets(st.integers(min_value=1, max_value=5), min_size=1, max_size=3)
    return st.lists(facet, min_size=0, max_size=6).map(SimplicialComplex)


def test_field_spec_validates():
    FieldSpec(0)
    FieldSpec(7)
    with pytest.raises(ValueError):
        FieldSpec(6)
    with pytest.raises(ValueError):
        FieldSpec(1)


def test_downward_closure_and_dim():
    K = SimplicialComplex([{1, 2, 3}])
    assert K.dim == 2
    assert {1, 2} in K and {3} in K and frozenset() in K
    assert len(K.faces) == 8


def test_empty_complex():
    K = SimplicialComplex()
    assert K.dim == -1
    assert K.faces == frozenset({frozenset()})
    assert reduced_homology(K).ranks == {-1: 1}


def test_two_points():
    K = SimplicialComplex([{1}, {2}])
    assert reduced_homology(K).ranks == {0: 1}


def test_hexagon_circle():
    assert reduced_homology(HEXAGON).ranks == {1: 1}


def test_full_simplex_acyclic():
    K = SimplicialComplex([{1, 2, 3, 4}])
    assert reduced_homology(K).ranks == {}


def test_sphere_boundaries():
    triangle = SimplicialComplex([{1, 2}, {2, 3}, {1, 3}])
    assert reduced_homology(triangle).ranks == {1: 1}
    tetra_boundary = SimplicialComplex(
        [{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}]
    )
    assert reduced_homology(tetra_boundary).ranks == {2: 1}


def test_projective_plane_depends_on_characteristic():
    assert reduced_homology(RP2, FieldSpec(0)).ranks == {}
    assert reduced_homology(RP2, FieldSpec(2)).ranks == {1: 1, 2: 1}
    assert reduced_homology(RP2, FieldSpec(3)).ranks == {}


def test_vertex_boundary_is_augmentation():
    cols = boundary_matrix(SimplicialComplex([{1}, {2}]), 0, Q)
    assert cols == {
        frozenset({1}): {frozenset(): 1},
        frozenset({2}): {frozenset(): 1},
    }


def test_edge_boundary_signs():
    (col,) = boundary_matrix(SimplicialComplex([{1, 2}]), 1, Q).values()
    assert col == {frozenset({2}): 1, frozenset({1}): -1}


@given(small_complexes())
def test_boundary_squares_to_zero(K):
    for i in range(0, K.dim + 1):
        for col in boundary_matrix(K, i, Q).values():
            z = chain_boundary(Chain(i - 1, col), Q)
            assert not z.terms


@given(small_complexes())
def test_euler_characteristic(K):
    basis = reduced_homology(K, Q)
    alternating = sum((-1) ** i * h for i, h in basis.ranks.items())
    assert alternating == K.euler_characteristic_reduced()


@given(small_complexes())
@settings(max_examples=40)
def test_cone_is_acyclic(K):
    assert reduced_homology(cone(99, K), Q).ranks == {}


@given(small_complexes())
@settings(max_examples=30)
def test_characteristic_zero_matches_gf7(K):
    assert reduced_homology(K, Q).ranks == reduced_homology(K, FieldSpec(7)).ranks


@given(small_complexes())
@settings(max_examples=30)
def test_representatives_are_independent_cycles(K):
    basis = reduced_homology(K, Q)
    for i, reps in basis.representatives.items():
        fresh = SpanBasis(Q)
        for col in boundary_matrix(K, i + 1, Q).values():
            fresh.insert(col)
        for rep in reps:
            if i >= 0:
                assert not chain_boundary(rep, Q).terms
            assert fresh.insert(dict(rep.terms))


def test_representatives_deterministic():
    a = reduced_homology(SimplicialComplex([{1, 2}, {2, 3}, {1, 3}, {4}]), Q)
    b = reduced_homology(SimplicialComplex([{4}, {1, 3}, {2, 3}, {1, 2}]), Q)
    assert a.ranks == b.ranks
    for i in a.representatives:
        assert [r.terms for r in a.representatives[i]] == [
            r.terms for r in b.representatives[i]
        ]


def test_reduce_cycle_on_representative_is_unit_vector():
    basis = reduced_homology(HEXAGON, Q)
    (rep,) = basis.representatives[1]
    assert reduce_cycle(rep, HEXAGON, basis, Q) == [1]


def test_reduce_cycle_on_boundary_is_zero():
    K = SimplicialComplex([{1, 2, 3}, {1, 3, 4}])
    basis = reduced_homology(K, Q)
    z = chain_boundary(Chain(2, {frozenset({1, 2, 3}): Fraction(1)}), Q)
    assert reduce_cycle(z, K, basis, Q) == []
    K2 = SimplicialComplex([{1, 2, 3}, {1, 4}, {4, 5}, {1, 5}])
    basis2 = reduced_homology(K2, Q)
    z2 = chain_boundary(Chain(2, {frozenset({1, 2, 3}): Fraction(1)}), Q)
    assert reduce_cycle(z2, K2, basis2, Q) == [0]


def test_reduce_cycle_around_hexagon():
    basis = reduced_homology(HEXAGON, Q)
    walk = {
        frozenset({1, 2}): Fraction(1),
        frozenset({2, 3}): Fraction(1),
        frozenset({3, 4}): Fraction(1),
        frozenset({4, 5}): Fraction(1),
        frozenset({5, 6}): Fraction(1),
        frozenset({1, 6}): Fraction(-1),
    }
    z = Chain(1, walk)
    assert not chain_boundary(z, Q).terms
    (c,) = reduce_cycle(z, HEXAGON, basis, Q)
    assert abs(c) == 1


def test_reduce_cycle_rejects_non_cycles():
    basis = reduced_homology(HEXAGON, Q)
    with pytest.raises(ValueError):
        reduce_cycle(Chain(1, {frozenset({1, 2}): Fraction(1)}), HEXAGON, basis, Q)
    with pytest.raises(ValueError):
        reduce_cycle(Chain(1, {frozenset({2, 5}): Fraction(1)}), HEXAGON, basis, Q)


def test_cone_rejects_existing_vertex():
    with pytest.raises(ValueError):
        cone(1, SimplicialComplex([{1, 2}]))
