from collections import Counter
from math import comb

import numpy as np
import pytest

from vtmanifold.core.groups import builtin_group
from vtmanifold.core.orbits import (
    OrbitIncidence,
    build_incidence,
    from_mask,
    inclusion_multiplicity,
    orbit_of,
    orbit_reps_of_complex,
    orbits_of_k_subsets,
    to_mask,
    zn_orbit_count,
    zn_orbit_size_multiset,
)
from vtmanifold.utils.exceptions import SubsetSizeError

from .conftest import D7_MATRIX


def test_masks():
    assert to_mask((1, 3)) == 0b101
    assert from_mask(0b101) == (1, 3)


def test_d7_triples(d7):
    orbits = orbits_of_k_subsets(d7, 3)
    assert [o.representative for o in orbits] == [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 5)]
    assert [o.size for o in orbits] == [7, 14, 7, 7]


@pytest.mark.parametrize("k", [6, 9])
def test_z15_orbits(z15, k):
    orbits = orbits_of_k_subsets(z15, k)
    assert len(orbits) == 335
    assert Counter(o.size for o in orbits) == {15: 333, 5: 2}
    assert zn_orbit_count(15, k) == 335
    assert zn_orbit_size_multiset(15, k) == {15: 333, 5: 2}


def test_z15_small_orbits(z15):
    small = [o.representative for o in orbits_of_k_subsets(z15, 9) if o.size == 5]
    assert small == [(1, 2, 3, 6, 7, 8, 11, 12, 13), (1, 2, 4, 6, 7, 9, 11, 12, 14)]


@pytest.mark.parametrize("family, n, k", [("cyclic", 8, 4), ("dihedral", 9, 4), ("symmetric", 6, 3)])
def test_orbits_partition_subsets(family, n, k):
    orbits = orbits_of_k_subsets(builtin_group(family, n), k)
    assert sum(o.size for o in orbits) == comb(n, k)
    for o in orbits:
        assert min(orbit_of(builtin_group(family, n), o.representative)) == o.representative


def test_cyclic_counts_match_burnside():
    for n in range(4, 13):
        for k in range(1, n):
            assert len(orbits_of_k_subsets(builtin_group("cyclic", n), k)) == zn_orbit_count(n, k)


def test_subset_size_errors(d7):
    with pytest.raises(SubsetSizeError):
        orbits_of_k_subsets(d7, 0)
    with pytest.raises(SubsetSizeError):
        build_incidence(d7, 6)


def test_d7_incidence(d7):
    inc = build_incidence(d7, 3)
    assert inc.shape == (4, 4)
    assert inc.dense().tolist() == D7_MATRIX
    assert [o.representative for o in inc.facet_orbits] == [
        (1, 2, 3, 4),
        (1, 2, 3, 5),
        (1, 2, 4, 5),
        (1, 2, 4, 6),
    ]
    assert inc.blocks == [(0, 1), (2, 3)]
    assert all(inc.row_sum_holds(i) for i in range(4))


def test_inclusion_multiplicity(d7):
    facets = orbits_of_k_subsets(d7, 4)
    ridges = orbits_of_k_subsets(d7, 3)
    assert inclusion_multiplicity(facets[0], ridges[0]) == 2
    assert inclusion_multiplicity(facets[0], ridges[1]) == 1
    with pytest.raises(SubsetSizeError):
        inclusion_multiplicity(ridges[0], ridges[1])


def test_pruned_matrix_invariants():
    # surviving rows have no entry above 2 and every surviving column is covered at least twice
    inc = build_incidence(builtin_group("cyclic", 9), 3)
    for row in inc.entries:
        assert max(row.values()) <= 2
    coverage = np.asarray(inc.dense()).sum(axis=0)
    assert (coverage >= 2).all()


def test_from_matrix_groups_rows_by_first_column():
    inc = OrbitIncidence.from_matrix([[0, 1, 1], [2, 0, 0], [0, 0, 2], [1, 1, 0]])
    assert inc.first_columns == [0, 0, 1, 2]
    assert inc.blocks == [(0, 1), (2,), (3,)]


def test_orbit_reps_of_complex(f42, torus7):
    assert orbit_reps_of_complex(f42, torus7.facets) == [((1, 2, 4), 14)]
