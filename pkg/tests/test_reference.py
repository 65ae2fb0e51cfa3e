from functools import reduce as fold

import pytest

from vtmanifold.core.classify import are_isomorphic
from vtmanifold.core.complex import (
    euler_characteristic,
    f_vector,
    from_orbits,
    is_orientable,
    is_pseudomanifold,
    link,
    surface_type,
)
from vtmanifold.core.groups import builtin_group
from vtmanifold.core.homology import format_homology, integer_homology
from vtmanifold.core.reference import (
    REFERENCE_NAMES,
    boundary_simplex,
    cone,
    connected_sum,
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    join,
    lookup,
    parse_reference,
    point,
    polygon,
    product,
)
from vtmanifold.utils.exceptions import ComplexError

from .conftest import CYCLIC_13_REPS


def test_simplex_boundaries():
    assert len(boundary_simplex(2).facets) == 4
    assert f_vector(boundary_simplex(6)) == (8, 28, 56, 70, 56, 28, 8)
    assert f_vector(boundary_simplex(9))[:3] == (11, 55, 165)


@pytest.mark.parametrize(
    "dim, n, expected",
    [
        (4, 7, (7, 21, 28, 14)),
        (3, 6, (6, 12, 8)),
        (10, 13, (13, 78, 286, 715, 1287, 1703, 1638, 1092, 455, 91)),
    ],
)
def test_cyclic_polytopes(dim, n, expected):
    M = cyclic_polytope_boundary(dim, n)
    assert f_vector(M) == expected
    assert is_pseudomanifold(M)


def test_gale_evenness_on_small_case():
    assert cyclic_polytope_boundary(2, 5).facets == ((1, 2), (1, 5), (2, 3), (3, 4), (4, 5))
    with pytest.raises(ComplexError):
        cyclic_polytope_boundary(4, 4)


@pytest.mark.slow
def test_dihedral_orbits_rebuild_cyclic_polytope():
    M = from_orbits(builtin_group("dihedral", 13), CYCLIC_13_REPS)
    C = cyclic_polytope_boundary(10, 13)
    assert f_vector(M) == f_vector(C)
    assert are_isomorphic(M, C) is not None


@pytest.mark.parametrize(
    "k, expected",
    [
        (2, (4, 4)),
        (3, (6, 12, 8)),
        (7, (14, 84, 280, 560, 672, 448, 128)),
    ],
)
def test_cross_polytopes(k, expected):
    assert f_vector(cross_polytope_boundary(k)) == expected


def test_joins_and_cones():
    two = join(polygon(3), polygon(3))
    assert (two.n, two.d, len(two.facets)) == (6, 3, 9)
    assert is_pseudomanifold(two)
    five = fold(join, [polygon(3)] * 5)
    assert (five.n, five.d, len(five.facets)) == (15, 9, 243)
    coned = cone(polygon(4))
    assert coned.facets == join(polygon(4), point()).facets
    assert link(coned, (5,)).facets == polygon(4).facets


def test_connected_sums(torus7, rp2):
    genus2 = connected_sum(torus7, torus7)
    assert f_vector(genus2) == (11, 39, 26)
    assert euler_characteristic(genus2) == -2
    assert is_orientable(genus2)
    assert surface_type(connected_sum(torus7, rp2)) == "#3 RP^2"
    with pytest.raises(ComplexError):
        connected_sum(torus7, boundary_simplex(3))


def test_products(s2xs1):
    assert (s2xs1.n, s2xs1.d, len(s2xs1.facets)) == (12, 3, 36)
    assert is_pseudomanifold(s2xs1)
    torus = product(polygon(3), polygon(3))
    assert surface_type(torus) == "T^2"
    assert len(torus.facets) == 18


def test_named_fixtures(torus7, torus9, rp2, octahedron):
    assert f_vector(torus7) == (7, 21, 14)
    assert f_vector(torus9) == (9, 27, 18)
    assert f_vector(rp2) == (6, 15, 10)
    assert f_vector(octahedron) == (6, 12, 8)
    assert set(REFERENCE_NAMES) >= {"torus7", "torus9", "rp2", "octahedron", "s2xs1"}
    assert lookup("torus7").facets == torus7.facets


def test_reference_expressions():
    assert parse_reference("cyclic(4, 7)").facets == cyclic_polytope_boundary(4, 7).facets
    M = parse_reference("sum(s2xs1,s2xs1)")
    assert len(M.vertices) == 20
    assert format_homology(integer_homology(M)) == "(Z, Z^2, Z^2, Z)"
    assert parse_reference("join(polygon(3), cone(polygon(3)))").d == 4


@pytest.mark.parametrize(
    "text",
    ["cyclic(4", "nosuch(3)", "cyclic(4,7) extra", "polygon(3,4)", "7", "sum(torus7)"],
)
def test_bad_reference_expressions(text):
    with pytest.raises(ComplexError):
        parse_reference(text)
