"""Rigid deformations: the simplicial meet-closure construction,
independent certification, and the bounded search with its scan log."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidres.betti import betti_numbers, betti_poset, interval_ranks
from rigidres.deform import (
    Certificate,
    certify_rigid_deformation,
    lattice_betti_totals,
    search_rigid_deformation,
    simplicial_rigid_deformation,
)
from rigidres.frames import scarf_complex
from rigidres.homology import FieldSpec, SimplicialComplex
from rigidres.monomials import parse_ideal
from rigidres.posets import face_lattice, lcm_lattice

from conftest import random_generic_ideal

Q = FieldSpec(0)


# --------------------------------------------------------------------------
# lattice-level Betti totals

def test_lattice_totals_match_ideal_route(squarefree17, hexagon_ideal):
    for I in (parse_ideal("x; y; z"), squarefree17, hexagon_ideal):
        L = lcm_lattice(I)
        assert lattice_betti_totals(L, Q) == betti_numbers(I, Q).totals()


def test_face_lattice_totals_are_the_f_vector():
    X = SimplicialComplex([{0, 1}, {1, 2}])
    P = face_lattice(X)
    assert lattice_betti_totals(P, Q) == (1, 3, 2)


# --------------------------------------------------------------------------
# simplicial construction

def test_koszul_deformation_along_full_simplex():
    I = parse_ideal("x; y; z")
    r = simplicial_rigid_deformation(I, SimplicialComplex([{0, 1, 2}]), Q)
    assert r.certificate.all_true
    assert bool(r.certificate)
    assert r.comparable_to_source
    assert r.added == ()
    assert len(r.target_lattice.elements) == 8
    assert lattice_betti_totals(r.target_lattice, Q) == (1, 3, 3, 1)


def test_path_deformation_along_its_scarf_path():
    I = parse_ideal("x*y; y*z; z*w")
    X = SimplicialComplex([{0, 1}, {1, 2}])
    r = simplicial_rigid_deformation(I, X, Q)
    assert r.certificate.all_true
    assert r.comparable_to_source
    # the meet closure adds nothing: the target is the lcm-lattice itself
    assert set(r.target_lattice.elements) == set(lcm_lattice(I).elements)
    assert lattice_betti_totals(r.target_lattice, Q) == (1, 3, 2)


def test_scarf_deformation_of_plane_triple():
    I = parse_ideal("x^2; x*y; y^2")
    r = simplicial_rigid_deformation(I, scarf_complex(I), Q)
    assert r.certificate.all_true
    assert r.comparable_to_source
    assert lattice_betti_totals(r.target_lattice, Q) == (1, 3, 2)
    assert r.route == "betti-poset-isomorphism"


def test_oversized_complex_is_not_certified():
    # the full simplex supports a non-minimal resolution of this ideal;
    # the construction runs but honest certification must fail
    I = parse_ideal("x^2; x*y; y^2")
    r = simplicial_rigid_deformation(I, SimplicialComplex([{0, 1, 2}]), Q)
    assert r.certificate.rigid
    assert not r.certificate.betti_preserved
    assert not r.certificate.relabel_verified
    assert not r.certificate.all_true
    assert [sorted(e) for e in r.added] == [[0, 2]]


def test_non_acyclic_complex_is_rejected():
    I = parse_ideal("x; y")
    with pytest.raises(ValueError, match="not acyclic"):
        simplicial_rigid_deformation(I, SimplicialComplex([{0}, {1}]), Q)


def test_four_edge_path_scarf_cycle_is_rejected():
    # the Scarf complex of the 4-edge path ideal is a hollow square, so
    # its top restriction has a 1-cycle and cannot support the resolution
    I = parse_ideal("x*y; y*z; z*w; w*v")
    with pytest.raises(ValueError, match="not acyclic"):
        simplicial_rigid_deformation(I, scarf_complex(I), Q)


def test_vertex_set_must_match_generators():
    I = parse_ideal("x; y")
    with pytest.raises(ValueError, match="generator indices"):
        simplicial_rigid_deformation(I, SimplicialComplex([{0, 3}]), Q)


SILENT_EXAMPLE = "x1^4*x2^5*x3; x1*x2*x3^4; x1^5*x2^3*x3^2; x1^2*x2^2*x3^3"


def test_added_lattice_elements_are_homologically_silent():
    I = parse_ideal(SILENT_EXAMPLE)
    X = scarf_complex(I)
    P = face_lattice(X)
    r = simplicial_rigid_deformation(I, X, Q)
    T = r.target_lattice
    faces = set(P.elements)
    silent = [e for e in T.elements if e and e not in faces]
    assert len(silent) == 2
    for e in silent:
        assert interval_ranks(T, e, Q) == {}
    for e in P.elements:
        if e:
            assert interval_ranks(T, e, Q) == interval_ranks(P, e, Q)
    assert r.certificate.all_true
    assert lattice_betti_totals(T, Q) == lattice_betti_totals(P, Q)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_generic_ideals_deform_along_their_scarf_complex(seed):
    rng = random.Random(seed)
    I = random_generic_ideal(rng, max_generators=5)
    X = scarf_complex(I)
    r = simplicial_rigid_deformation(I, X, Q)
    assert r.certificate.all_true
    assert r.comparable_to_source
    T = r.target_lattice
    faces = set(face_lattice(X).elements)
    for e in T.elements:
        if e and e not in faces:
            assert interval_ranks(T, e, Q) == {}


# --------------------------------------------------------------------------
# certification

def test_self_certification_of_rigid_ideal():
    I = parse_ideal("x; y; z")
    report = certify_rigid_deformation(I, I, Q)
    assert report.ok
    assert report.route == "betti-poset-isomorphism"
    assert report.rigid and report.betti_equal and report.relabel_verified


def test_certify_twins_is_honest_about_rigidity(twin_a, twin_b):
    # the twins' shared Betti poset carries a doubled class, so neither
    # ideal is rigid; the relabel leg still verifies across the pair
    report = certify_rigid_deformation(twin_a, twin_b, Q)
    assert not report.rigid
    assert report.betti_equal
    assert report.route == "betti-poset-isomorphism"
    assert report.relabel_verified
    assert not report.ok


def test_certify_mismatched_generator_counts():
    report = certify_rigid_deformation(
        parse_ideal("x; y"), parse_ideal("x; y; z"), Q)
    assert not report.ok
    assert report.route == ""
    assert "not isomorphic" in report.detail


def test_certificate_dataclass_truthiness():
    assert Certificate(True, True, True)
    assert not Certificate(True, True, False)
    assert not Certificate()


# --------------------------------------------------------------------------
# bounded search

def test_search_returns_rigid_input_immediately():
    out = search_rigid_deformation(parse_ideal("x; y; z"), budget=1)
    assert out
    assert out.result.certificate.all_true
    assert out.result.added == ()
    assert out.augmentation_log == []


def test_search_rejects_negative_budget():
    with pytest.raises(ValueError):
        search_rigid_deformation(parse_ideal("x; y"), budget=-1)


def test_hexagon_scan_comes_back_empty(hexagon_ideal):
    out = search_rigid_deformation(hexagon_ideal, budget=1)
    assert not out
    assert out.result is None
    assert out.base_totals == (1, 6, 9, 6, 2)
    # 2^6 subsets minus the 29 lattice members = 35 candidate supports
    assert len(out.augmentation_log) == 35
    base = sum(out.base_totals)
    for entry in out.augmentation_log:
        assert sum(entry.totals) > base
        assert not entry.certified
    # the hexagon's Betti poset is not a lattice, so no extra candidate
    assert out.betti_poset_candidate is None


def test_squarefree17_search_logs_betti_poset_candidate(squarefree17):
    out = search_rigid_deformation(squarefree17, budget=0)
    assert not out
    entry = out.betti_poset_candidate
    assert entry is not None
    assert entry.lattice_size == 16
    assert entry.totals == (1, 6, 8, 3)
    assert not entry.certified
    assert out.augmentation_log == []


def test_search_log_is_deterministic(hexagon_ideal):
    first = search_rigid_deformation(hexagon_ideal, budget=1)
    second = search_rigid_deformation(hexagon_ideal, budget=1)
    assert [(e.added, e.lattice_size, e.totals)
            for e in first.augmentation_log] == \
           [(e.added, e.lattice_size, e.totals)
            for e in second.augmentation_log]
