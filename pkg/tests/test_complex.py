import pytest

from vtmanifold.core.classify import are_isomorphic
from vtmanifold.core.complex import (
    SimplicialComplex,
    bad_ridges,
    compact,
    euler_characteristic,
    f_vector,
    from_orbits,
    is_connected,
    is_invariant,
    is_neighborly,
    is_orientable,
    is_pseudomanifold,
    is_strongly_connected,
    link,
    require_pseudomanifold,
    star,
    step3_tests,
    surface_type,
)
from vtmanifold.core.groups import Permutation, PermutationGroup
from vtmanifold.core.reference import (
    MOEBIUS_TORUS,
    boundary_simplex,
    connected_sum,
    cyclic_polytope_boundary,
)
from vtmanifold.utils.exceptions import ComplexError, NotPseudomanifold, SubsetSizeError


TWO_TRIANGLES = SimplicialComplex(
    6, 1, ((1, 3), (1, 5), (2, 4), (2, 6), (3, 5), (4, 6))
)


def test_from_orbits_reproduces_torus(f42):
    M = from_orbits(f42, [(1, 2, 4)])
    assert M.facets == MOEBIUS_TORUS
    assert is_invariant(M, f42)


def test_from_orbits_trivial_group():
    G = PermutationGroup(4, (Permutation.identity(4),))
    M = from_orbits(G, [(1, 2, 3), (2, 3, 4)])
    assert M.facets == ((1, 2, 3), (2, 3, 4))


def test_from_orbits_rejects_mixed_sizes(d7):
    with pytest.raises(SubsetSizeError):
        from_orbits(d7, [(1, 2, 3), (1, 2, 3, 4)])
    with pytest.raises(SubsetSizeError):
        from_orbits(d7, [(1, 2, 9)])


def test_s5xs1_from_orbits(d15, s5xs1):
    assert len(s5xs1.facets) == 90
    assert f_vector(s5xs1) == (15, 105, 315, 525, 525, 315, 90)
    assert is_invariant(s5xs1, d15)
    assert is_pseudomanifold(s5xs1)
    assert step3_tests(s5xs1)


def test_vertex_link_of_s5xs1_is_a_5_sphere_by_euler(s5xs1):
    L = link(s5xs1, (1,))
    assert L.d == 5
    assert len(L.vertices) == 14
    assert euler_characteristic(L) == 0


@pytest.mark.parametrize(
    "M, expected",
    [
        (boundary_simplex(6), (8, 28, 56, 70, 56, 28, 8)),
        (SimplicialComplex(3, 2, ((1, 2, 3),)), (3, 3, 1)),
        (cyclic_polytope_boundary(4, 7), (7, 21, 28, 14)),
    ],
)
def test_f_vectors(M, expected):
    assert f_vector(M) == expected


def test_links_and_stars(torus7):
    L = link(boundary_simplex(2), (1,))
    assert L.facets == ((2, 3), (2, 4), (3, 4))
    L = link(torus7, (1,))
    assert L.vertices == (2, 3, 4, 5, 6, 7)
    assert len(L.facets) == 6
    assert is_connected(L)
    assert all(len([f for f in L.facets if v in f]) == 2 for v in L.vertices)
    assert len(star(torus7, (1,)).facets) == 6
    with pytest.raises(ComplexError):
        link(torus7, (1, 2, 3))


def test_pseudomanifold_checks(s2xs1):
    for d in range(2, 6):
        assert is_pseudomanifold(boundary_simplex(d))
    single = SimplicialComplex(3, 2, ((1, 2, 3),))
    assert not is_pseudomanifold(single)
    assert len(bad_ridges(single)) == 3
    with pytest.raises(NotPseudomanifold):
        require_pseudomanifold(single)
    assert is_pseudomanifold(s2xs1)


def test_connectivity():
    assert not is_connected(TWO_TRIANGLES)
    assert is_strongly_connected(boundary_simplex(4))
    wedge = SimplicialComplex.from_facets(
        [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (4, 5, 6), (4, 5, 7), (4, 6, 7), (5, 6, 7)]
    )
    assert is_connected(wedge)
    assert not is_strongly_connected(wedge)


def test_euler_and_orientability(torus7, rp2, torus9):
    assert euler_characteristic(torus7) == 0 and is_orientable(torus7)
    assert euler_characteristic(boundary_simplex(2)) == 2
    assert euler_characteristic(boundary_simplex(3)) == 0
    assert is_orientable(boundary_simplex(3))
    assert euler_characteristic(rp2) == 1 and not is_orientable(rp2)
    assert surface_type(torus7) == "T^2"
    assert surface_type(torus9) == "T^2"
    assert surface_type(rp2) == "RP^2"
    assert surface_type(boundary_simplex(2)) == "S^2"
    assert surface_type(connected_sum(torus7, torus7)) == "#2 T^2"
    assert surface_type(connected_sum(rp2, rp2)) == "Klein bottle"


def test_step3(d7):
    M = from_orbits(d7, [(1, 2, 3, 4), (1, 2, 4, 5)])
    assert is_pseudomanifold(M)
    assert step3_tests(M)
    assert are_isomorphic(M, cyclic_polytope_boundary(4, 7)) is not None
    result = step3_tests(TWO_TRIANGLES)
    assert not result
    assert "disconnected" in result.reason
    assert step3_tests(boundary_simplex(5))


def test_neighborliness(torus7, octahedron):
    assert is_neighborly(torus7) == 2
    assert is_neighborly(cyclic_polytope_boundary(4, 7)) == 2
    assert is_neighborly(octahedron) == 1
    assert is_neighborly(boundary_simplex(4)) == 5


def test_constructor_rejects_bad_facets():
    with pytest.raises(ComplexError):
        SimplicialComplex(4, 2, ((1, 2),))
    with pytest.raises(ComplexError):
        SimplicialComplex(4, 2, ((1, 2, 3), (3, 2, 1)))
    with pytest.raises(ComplexError):
        SimplicialComplex(4, 2, ((1, 2, 5),))
    with pytest.raises(ComplexError):
        SimplicialComplex(4, 2, ((1, 1, 2),))


def test_compact_relabels_in_order():
    M = SimplicialComplex(9, 1, ((2, 5), (5, 9), (2, 9)))
    assert compact(M).facets == ((1, 2), (1, 3), (2, 3))
    assert not M.is_spanning
