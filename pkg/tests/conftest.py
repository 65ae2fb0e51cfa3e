import os

import pytest

from vtmanifold.core import reference
from vtmanifold.core.complex import SimplicialComplex, from_orbits
from vtmanifold.core.groups import builtin_group

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CATALOG = os.path.join(ROOT, "data", "catalog.json")

D7_MATRIX = [
    [2, 1, 0, 0],
    [2, 1, 2, 2],
    [0, 1, 2, 0],
    [0, 1, 0, 2],
]

S5XS1_REPS = [
    (1, 2, 3, 4, 5, 6, 8),
    (1, 2, 3, 4, 5, 7, 8),
    (1, 2, 3, 4, 6, 7, 8),
]

S3XS3_REPS = [
    (1, 2, 3, 4, 5, 8, 10),
    (1, 2, 3, 4, 5, 8, 11),
    (1, 2, 3, 4, 6, 8, 9),
    (1, 2, 3, 4, 6, 8, 14),
    (1, 2, 3, 4, 6, 9, 12),
    (1, 2, 3, 4, 7, 8, 9),
    (1, 2, 3, 4, 7, 8, 10),
    (1, 2, 3, 5, 7, 8, 10),
    (1, 2, 3, 5, 7, 10, 13),
    (1, 2, 4, 5, 8, 10, 11),
    (1, 2, 4, 7, 8, 11, 14),
]

CYCLIC_13_REPS = [
    (1, 2, 3, 4, 5, 6, 7, 8, 9, 10),
    (1, 2, 3, 4, 5, 6, 7, 8, 10, 11),
    (1, 2, 3, 4, 5, 6, 8, 9, 10, 11),
    (1, 2, 3, 4, 5, 6, 8, 9, 11, 12),
    (1, 2, 3, 4, 6, 7, 8, 9, 11, 12),
]


@pytest.fixture
def d7():
    return builtin_group("dihedral", 7)


@pytest.fixture
def z15():
    return builtin_group("cyclic", 15)


@pytest.fixture
def d15():
    return builtin_group("dihedral", 15)


@pytest.fixture
def f42():
    return builtin_group("affine_frobenius", 7, k=6)


@pytest.fixture
def torus7():
    return reference.moebius_torus()


@pytest.fixture
def torus9():
    return reference.torus_3x3()


@pytest.fixture
def rp2():
    return reference.rp2_6()


@pytest.fixture
def octahedron():
    return reference.octahedron()


@pytest.fixture
def s2xs1():
    return reference.s2xs1()


@pytest.fixture(scope="session")
def s5xs1():
    return from_orbits(builtin_group("dihedral", 15), S5XS1_REPS)


@pytest.fixture
def stacked_sphere():
    """6-vertex 2-sphere with the same f-vector as the octahedron but a vertex of degree 5."""
    return SimplicialComplex.from_facets(
        [(1, 3, 4), (2, 3, 4), (1, 2, 5), (1, 3, 5), (2, 3, 5), (1, 2, 6), (1, 4, 6), (2, 4, 6)]
    )
