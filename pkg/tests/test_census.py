import asyncio
import os
from itertools import combinations

import pytest

from vtmanifold.core.census import CensusStore, plan_tasks, report, sweep
from vtmanifold.core.classify import ManifoldRecord, are_isomorphic, canonical_key, key_digest
from vtmanifold.core.complex import relabel
from vtmanifold.core.groups import builtin_group, load_catalog
from vtmanifold.utils.fileio import read_jsonl

from .conftest import CATALOG


@pytest.fixture(scope="module")
def catalog():
    return load_catalog(CATALOG)


def make(key, n=7, d=2, group_index=4, status="candidate"):
    return ManifoldRecord(
        symbol="",
        group=f"t{n}n{group_index}",
        n=n,
        d=d,
        orbit_reps=[((1, 2, 4), 14)],
        f_vector=(7, 21, 14),
        as_det=0,
        status=status,
        key=key,
        group_index=group_index,
    )


def test_store_numbers_and_dedups(tmp_path):
    store = CensusStore(str(tmp_path))
    assert store.add(make("a"))
    assert store.add(make("b"))
    assert not store.add(make("a"))
    assert store.add(make("c", group_index=2))
    assert [r.symbol for r in store.records] == ["^2 7^4_1", "^2 7^4_2", "^2 7^2_1"]
    assert store.next_k(2, 7, 4) == 3
    store.save()

    again = CensusStore(str(tmp_path))
    assert again.seen() == {"a", "b", "c"}
    assert len(read_jsonl(os.path.join(str(tmp_path), "records.jsonl"))) == 3
    assert len(again.undetermined()) == 3


def test_store_rebuilds_a_stale_index(tmp_path):
    store = CensusStore(str(tmp_path))
    store.add(make("a", status="sphere"))
    store.save()
    os.remove(os.path.join(str(tmp_path), "index.json"))
    again = CensusStore(str(tmp_path))
    assert again.index == {"a": "^2 7^4_1"}
    assert again.undetermined() == []


def test_plan_orders_by_dimension_then_group_size(catalog):
    tasks = plan_tasks(catalog, [5])
    assert [t.d for t in tasks] == [2] * 5 + [3] * 5
    assert [t.order for t in tasks[:5]] == [120, 60, 20, 10, 5]
    assert tasks[0].task_id == "5:2:t5n5"
    assert plan_tasks(catalog, [5], dims=[3], groups=["D5"])[0].task_id == "5:3:t5n2"
    assert plan_tasks(catalog, [99]) == []


def test_plan_task_rebuilds_its_group(catalog):
    task = plan_tasks(catalog, [6], dims=[2], groups=["C6"])[0]
    G = task.build_group()
    assert (G.degree, G.label, G.order) == (6, "t6n1", 6)


def test_sweep_small_degrees(tmp_path, catalog):
    store = CensusStore(str(tmp_path))
    summary = asyncio.run(sweep(store, catalog, range(4, 8), threads=1))
    assert not summary.partial
    assert summary.lower_bound_degrees == [6]
    assert summary.new_records == 9
    lines = report(store).splitlines()
    assert lines == [
        "n=4: d=2: 1/0",
        "n=5: d=3: 1/0",
        "n=6: d=2: 1/1, d=3: 1/0, d=4: 1/0",
        "n=7: d=2: 0/1, d=3: 1/0, d=5: 1/0",
        "n=6: lower bounds, 8 of 16 transitive groups swept",
    ]
    torus = [r for r in store.records if r.n == 7 and r.d == 2]
    assert torus[0].status == "typed:T^2"
    assert torus[0].orbit_text() == "124_14"
    assert "124_14" in report(store, "orbits")

    rerun = CensusStore(str(tmp_path))
    assert rerun.lower_bound_degrees() == {6: [8, 16]}
    again = asyncio.run(sweep(rerun, catalog, range(4, 8), threads=1))
    assert again.tasks == 0
    assert again.new_records == 0
    assert len(rerun.records) == 9


def test_census_keys_separate_every_record(tmp_path, catalog):
    store = CensusStore(str(tmp_path))
    asyncio.run(sweep(store, catalog, range(4, 8), threads=1))
    complexes = [r.to_complex() for r in store.records]
    keys = [key_digest(canonical_key(M)) for M in complexes]
    assert keys == [r.key for r in store.records]
    assert len(set(keys)) == len(keys) == 9
    for M, key in zip(complexes, keys):
        mirrored = relabel(M, {v: M.n + 1 - v for v in M.vertices})
        assert key_digest(canonical_key(mirrored)) == key
    for (r1, M1), (r2, M2) in combinations(zip(store.records, complexes), 2):
        if (r1.n, r1.d) == (r2.n, r2.d):
            assert are_isomorphic(M1, M2) is None


def test_sweep_flags_degrees_without_groups(tmp_path, catalog):
    store = CensusStore(str(tmp_path))
    summary = asyncio.run(sweep(store, catalog, [4, 30], threads=1))
    assert summary.missing_degrees == [30]
    assert summary.lower_bound_degrees == []
    assert summary.partial


def test_report_styles(tmp_path):
    store = CensusStore(str(tmp_path))
    assert report(store) == ""
    with pytest.raises(ValueError):
        report(store, "pretty")


# spheres / non-spheres per (n, d) over every transitive group
CENSUS_TABLE = {
    9: {2: (0, 3), 3: (1, 1), 4: (0, 1), 5: (2, 0), 6: (0, 0), 7: (1, 0)},
    10: {2: (0, 3), 3: (6, 4), 4: (4, 0), 5: (1, 0), 6: (1, 0), 7: (1, 0), 8: (1, 0)},
    11: {2: (0, 1), 3: (3, 3), 4: (0, 1), 5: (3, 0), 6: (0, 0), 7: (1, 0), 8: (0, 0), 9: (1, 0)},
    12: {
        2: (1, 30), 3: (6, 33), 4: (1, 7), 5: (27, 0), 6: (0, 0),
        7: (4, 0), 8: (1, 0), 9: (1, 0), 10: (1, 0),
    },
    13: {
        2: (0, 4), 3: (6, 9), 4: (0, 5), 5: (17, 2), 6: (0, 0),
        7: (6, 0), 8: (0, 0), 9: (1, 0), 10: (0, 0), 11: (1, 0),
    },
}


def cyclic_and_dihedral(degrees):
    return [
        builtin_group(family, n) for n in degrees for family in ("cyclic", "dihedral")
    ]


def assert_within_census_table(store):
    cells = {}
    for r in store.records:
        assert r.status != "candidate", r.symbol
        cell = cells.setdefault((r.n, r.d), [0, 0])
        cell[0 if r.status == "sphere" else 1] += 1
    for (n, d), (spheres, others) in cells.items():
        bound = CENSUS_TABLE[n][d]
        assert spheres <= bound[0] and others <= bound[1], (n, d)


def test_cyclic_and_dihedral_sweep_bounds_degree_nine(tmp_path):
    store = CensusStore(str(tmp_path))
    summary = asyncio.run(sweep(store, cyclic_and_dihedral([9]), [9], threads=1))
    assert not summary.partial
    assert summary.lower_bound_degrees == [9]
    assert report(store).splitlines() == [
        "n=9: d=2: 0/1, d=3: 1/1, d=5: 2/0, d=7: 1/0",
        "n=9: lower bounds, 2 of 34 transitive groups swept",
    ]
    assert_within_census_table(store)


@pytest.mark.slow
def test_cyclic_and_dihedral_sweep_bounds_up_to_thirteen(tmp_path):
    store = CensusStore(str(tmp_path))
    degrees = range(10, 14)
    asyncio.run(sweep(store, cyclic_and_dihedral(degrees), degrees, threads=1))
    assert sorted(store.lower_bound_degrees()) == list(degrees)
    assert_within_census_table(store)


@pytest.mark.slow
def test_sweep_degree_eight(tmp_path, catalog):
    store = CensusStore(str(tmp_path))
    asyncio.run(sweep(store, catalog, [8], threads=1))
    assert report(store).splitlines() == [
        "n=8: d=2: 0/1, d=3: 2/0, d=5: 1/0, d=6: 1/0",
        "n=8: lower bounds, 10 of 50 transitive groups swept",
    ]
