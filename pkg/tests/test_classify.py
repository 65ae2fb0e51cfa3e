from itertools import permutations

import numpy as np
import pytest

from vtmanifold.core.classify import (
    BoundVerdict,
    ManifoldRecord,
    are_isomorphic,
    as_determinant,
    brehm_kuehnel_bound,
    canonical_key,
    key_digest,
    kuehnel_bound_check,
    multiplication_isomorphic,
    type_label,
)
from vtmanifold.core.complex import relabel
from vtmanifold.core.enumerate import run_enumeration
from vtmanifold.core.groups import multiplication_map
from vtmanifold.core.reference import boundary_simplex, cyclic_polytope_boundary


def shuffled(M, rng):
    vertices = list(M.vertices)
    image = [int(x) for x in rng.permutation(vertices)]
    return relabel(M, dict(zip(vertices, image)))


def brute_isomorphic(M1, M2):
    if M1.vertices != M2.vertices or len(M1.facets) != len(M2.facets):
        return False
    target = set(M2.facets)
    for image in permutations(M2.vertices):
        mapping = dict(zip(M1.vertices, image))
        if all(tuple(sorted(mapping[v] for v in f)) in target for f in M1.facets):
            return True
    return False


@pytest.fixture
def fixtures(torus7, torus9, rp2, octahedron, stacked_sphere, s2xs1):
    return [torus7, torus9, rp2, octahedron, stacked_sphere, s2xs1, cyclic_polytope_boundary(4, 7)]


def test_as_determinant_is_a_relabelling_invariant(fixtures):
    rng = np.random.default_rng(1)
    for M in fixtures:
        det = as_determinant(M)
        for _ in range(100):
            assert as_determinant(shuffled(M, rng)) == det


def test_as_determinant_of_simplex_boundary():
    # A A^T = I + 2J on the 4 triangles of 4 points
    assert as_determinant(boundary_simplex(2)) == 9


def test_isomorphism_is_found_for_relabelled_copies(fixtures):
    rng = np.random.default_rng(2)
    for M in fixtures:
        copy = shuffled(M, rng)
        mapping = are_isomorphic(M, copy)
        assert mapping is not None
        assert relabel(M, mapping).facets == copy.facets
        assert are_isomorphic(copy, M) is not None
        assert are_isomorphic(M, M) is not None


def test_non_isomorphic_spheres_with_equal_f_vectors(octahedron, stacked_sphere):
    assert are_isomorphic(octahedron, stacked_sphere) is None
    assert are_isomorphic(stacked_sphere, octahedron) is None
    assert canonical_key(octahedron) != canonical_key(stacked_sphere)


def test_isomorphism_agrees_with_exhaustive_search(octahedron, stacked_sphere, torus7):
    rng = np.random.default_rng(3)
    pool = [octahedron, stacked_sphere, shuffled(octahedron, rng), shuffled(stacked_sphere, rng)]
    for M1 in pool:
        for M2 in pool:
            assert (are_isomorphic(M1, M2) is not None) == brute_isomorphic(M1, M2)
    other = shuffled(torus7, rng)
    assert (are_isomorphic(torus7, other) is not None) == brute_isomorphic(torus7, other)


def test_canonical_key_is_invariant(fixtures):
    rng = np.random.default_rng(4)
    keys = set()
    for M in fixtures:
        key = canonical_key(M)
        assert canonical_key(shuffled(M, rng)) == key
        keys.add(key_digest(key))
    assert len(keys) == len(fixtures)


def test_canonical_key_layout(torus7):
    d, fv, det, seq = canonical_key(torus7).decode().split("|")
    assert d == "2"
    assert fv == "7,21,14"
    assert int(det) == as_determinant(torus7)
    assert len(seq.split(";")) == 14


def test_multiplication_isomorphism():
    C = cyclic_polytope_boundary(4, 7)
    image = relabel(C, multiplication_map(7, 2))
    m = multiplication_isomorphic(C, image, 7)
    assert m is not None
    assert relabel(C, multiplication_map(7, m)).facets == image.facets
    assert multiplication_isomorphic(C, boundary_simplex(3), 7) is None


@pytest.mark.parametrize("n, chi, ok", [(7, 0, True), (9, 3, True), (8, 3, False), (6, 1, True)])
def test_kuehnel_bound(n, chi, ok):
    assert kuehnel_bound_check(n, chi) is ok


@pytest.mark.parametrize(
    "n, d, verdict",
    [
        (5, 2, BoundVerdict.must_be_sphere),
        (6, 2, BoundVerdict.sphere_or_projective_like),
        (7, 2, BoundVerdict.unconstrained),
        (9, 4, BoundVerdict.sphere_or_projective_like),
        (8, 3, BoundVerdict.must_be_sphere),
        (12, 6, BoundVerdict.must_be_sphere),
        (15, 6, BoundVerdict.unconstrained),
    ],
)
def test_brehm_kuehnel_bound(n, d, verdict):
    assert brehm_kuehnel_bound(n, d) == verdict


def test_type_labels(torus7, rp2, s2xs1):
    assert type_label(torus7) == "T^2"
    assert type_label(rp2) == "RP^2"
    assert type_label(s2xs1) == "S^2xS^1"
    assert type_label(boundary_simplex(3), sphere=True) == "S^3"


def test_record_rebuilds_its_complex(f42):
    result = run_enumeration(7, 2, f42)
    record = ManifoldRecord.from_dict(result.records[0].to_dict())
    assert record.to_complex().facets == result.complexes[0].facets
    assert record.orbit_text() == "124_14"
    assert record.as_det == as_determinant(result.complexes[0])
    assert not record.is_typed
    record.status = "typed:T^2"
    assert record.type_label == "T^2"


def test_record_keeps_large_determinants_exact():
    record = ManifoldRecord("s", "g", 4, 2, [((1, 2, 3), 4)], (4, 6, 4), 3**60)
    assert ManifoldRecord.from_dict(record.to_dict()).as_det == 3**60
