"""Census store, parallel sweeps over (n, d, group) tasks, and table reports."""

from __future__ import annotations

import asyncio
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

import config

from ..logging import LOGGER
from ..utils.fileio import append_jsonl, iter_jsonl, read_json, write_json
from ..utils.formatters import format_fvector
from ..utils.sys import sys_stats, worker_count
from .classify import ManifoldRecord
from .dir import dirr
from .enumerate import EnumerationOptions, run_enumeration
from .groups import PermutationGroup, catalog_coverage, group_order, parse_cycles
from .pipeline import annotate

RECORDS = "records.jsonl"
INDEX = "index.json"
STATE = "state.json"
COVERAGE = "coverage.json"


class CensusStore:
    """Append-only record log plus a key index and per-task sweep state."""

    def __init__(self, path: str = config.CENSUS_DIR):
        self.path = path
        dirr(path)
        self.records: List[ManifoldRecord] = [
            ManifoldRecord.from_dict(item) for item in iter_jsonl(self._file(RECORDS))
        ]
        self.index: Dict[str, str] = read_json(self._file(INDEX)) or {}
        if len(self.index) != len(self.records):
            LOGGER(__name__).info(f"Rebuilding census index for {path}")
            self.index = {r.key: r.symbol for r in self.records}
            write_json(self._file(INDEX), self.index)
        self.state: Dict[str, Dict] = read_json(self._file(STATE)) or {}
        self.coverage: Dict[str, List[int]] = read_json(self._file(COVERAGE)) or {}

    def _file(self, name: str) -> str:
        return os.path.join(self.path, name)

    def checkpoint_path(self, task_id: str) -> str:
        return os.path.join(self.path, "checkpoints", task_id.replace(":", "_") + ".json")

    def seen(self) -> set:
        return set(self.index)

    def next_k(self, d: int, n: int, group_index: int) -> int:
        return 1 + sum(
            1 for r in self.records if (r.d, r.n, r.group_index) == (d, n, group_index)
        )

    def add(self, record: ManifoldRecord) -> bool:
        if record.key in self.index:
            return False
        record.with_symbol(self.next_k(record.d, record.n, record.group_index))
        self.records.append(record)
        self.index[record.key] = record.symbol
        append_jsonl(self._file(RECORDS), [record.to_dict()])
        return True

    def mark(self, task_id: str, status: str, checkpoint: Optional[str] = None) -> None:
        self.state[task_id] = {"status": status, "checkpoint": checkpoint}

    def save(self) -> None:
        write_json(self._file(INDEX), self.index)
        write_json(self._file(STATE), self.state)
        write_json(self._file(COVERAGE), self.coverage)

    @property
    def partial(self) -> bool:
        return any(s["status"] != "done" for s in self.state.values())

    def lower_bound_degrees(self) -> Dict[int, List[int]]:
        """Degrees swept with only part of their transitive groups: n -> [swept, known]."""
        return {
            int(n): pair
            for n, pair in self.coverage.items()
            if pair[1] is None or pair[0] < pair[1]
        }

    def undetermined(self) -> List[ManifoldRecord]:
        return [r for r in self.records if r.status in ("candidate", "verified-manifold")]


@dataclass(frozen=True)
class Task:
    n: int
    d: int
    group: str
    name: Optional[str]
    generators: tuple
    order: int
    family: Optional[str]
    index: Optional[int]

    @property
    def task_id(self) -> str:
        return f"{self.n}:{self.d}:{self.group}"

    def build_group(self) -> PermutationGroup:
        gens = tuple(parse_cycles(g, self.n) for g in self.generators)
        return PermutationGroup(self.n, gens, self.name, self.order, self.family, self.index)


@dataclass
class TaskOptions:
    seen: frozenset = frozenset()
    checkpoint: Optional[str] = None
    resume: bool = False
    budget_seconds: Optional[float] = None
    seed: int = config.DEFAULT_SEED
    bistellar_budget: int = config.BISTELLAR_BUDGET


@dataclass
class TaskResult:
    task: Task
    records: List[dict]
    timed_out: bool
    nodes: int


def plan_tasks(
    catalog: Sequence[PermutationGroup],
    n_values: Iterable[int],
    dims: Optional[Iterable[int]] = None,
    groups: Optional[Iterable[str]] = None,
) -> List[Task]:
    wanted = set(groups) if groups else None
    n_values = set(n_values)
    dims = set(dims) if dims else None
    tasks = []
    for G in catalog:
        if G.degree not in n_values:
            continue
        if wanted and G.label not in wanted and G.name not in wanted:
            continue
        for d in range(2, G.degree - 1):
            if dims and d not in dims:
                continue
            tasks.append(
                Task(
                    G.degree,
                    d,
                    G.label,
                    G.name,
                    tuple(G.generator_cycles()),
                    group_order(G),
                    G.family,
                    G.index,
                )
            )
    tasks.sort(key=lambda t: (t.n, t.d, -t.order, t.index if t.index is not None else 0))
    return tasks


def run_task(task: Task, options: TaskOptions) -> TaskResult:
    """Enumerate one (n, d, group) task and assess its new records; runs in a worker process."""
    G = task.build_group()
    result = run_enumeration(
        task.n,
        task.d,
        G,
        EnumerationOptions(
            seen=set(options.seen),
            checkpoint=options.checkpoint,
            resume=options.resume,
            budget_seconds=options.budget_seconds,
        ),
    )
    records = [
        annotate(r, M, options.seed, options.bistellar_budget).to_dict()
        for r, M in zip(result.records, result.complexes)
    ]
    return TaskResult(task, records, result.timed_out, result.nodes)


@dataclass
class SweepSummary:
    tasks: int = 0
    new_records: int = 0
    timed_out: List[str] = field(default_factory=list)
    missing_degrees: List[int] = field(default_factory=list)
    lower_bound_degrees: List[int] = field(default_factory=list)

    @property
    def partial(self) -> bool:
        return bool(self.timed_out or self.missing_degrees)


async def sweep(
    store: CensusStore,
    catalog: Sequence[PermutationGroup],
    n_values: Iterable[int],
    dims: Optional[Iterable[int]] = None,
    groups: Optional[Iterable[str]] = None,
    threads: int = config.THREADS,
    time_budget: Optional[float] = None,
    resume: bool = False,
    seed: int = config.DEFAULT_SEED,
    bistellar_budget: int = config.BISTELLAR_BUDGET,
) -> SweepSummary:
    n_values = sorted(set(n_values))
    log = LOGGER(__name__)
    summary = SweepSummary()
    degrees = {G.degree for G in catalog}
    for n in n_values:
        if n not in degrees:
            log.warning(f"No catalog groups of degree {n}, skipping")
            summary.missing_degrees.append(n)
            continue
        swept, known = catalog_coverage(catalog, n, groups)
        if known is None or swept < known:
            log.warning(
                f"Degree {n}: {swept} of {known or '?'} transitive groups, counts are lower bounds"
            )
            summary.lower_bound_degrees.append(n)
        # a wider earlier sweep of the same degree is not narrowed
        old = store.coverage.get(str(n))
        if old is None or swept >= old[0]:
            store.coverage[str(n)] = [swept, known]

    pending = []
    for task in plan_tasks(catalog, n_values, dims, groups):
        status = store.state.get(task.task_id, {}).get("status")
        if status == "done":
            continue
        pending.append(task)
    summary.tasks = len(pending)
    seen = frozenset(store.seen())
    workers = worker_count(threads)
    log.info(f"Sweeping {len(pending)} tasks on {workers} worker(s)")

    def options_for(task: Task) -> TaskOptions:
        return TaskOptions(
            seen,
            store.checkpoint_path(task.task_id),
            resume and store.state.get(task.task_id, {}).get("status") == "timed-out",
            time_budget,
            seed,
            bistellar_budget,
        )

    loop = asyncio.get_running_loop()
    if workers == 1 or len(pending) <= 1:
        results = []
        for task in pending:
            results.append(await loop.run_in_executor(None, run_task, task, options_for(task)))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                loop.run_in_executor(pool, run_task, task, options_for(task)) for task in pending
            ]
            results = await asyncio.gather(*futures)

    # merge in task order so the store does not depend on scheduling
    for result in results:
        for item in result.records:
            if store.add(ManifoldRecord.from_dict(item)):
                summary.new_records += 1
        task_id = result.task.task_id
        if result.timed_out:
            store.mark(task_id, "timed-out", store.checkpoint_path(task_id))
            summary.timed_out.append(task_id)
        else:
            store.mark(task_id, "done")
    store.save()
    UP, CPU, RAM, DISK = sys_stats(store.path)
    log.info(
        f"Sweep finished: {summary.new_records} new records, "
        f"uptime {UP}, CPU {CPU}, RAM {RAM}, disk {DISK}"
    )
    return summary


def _cell_counts(records: Iterable[ManifoldRecord]) -> Dict[int, Dict[int, List[int]]]:
    grid: Dict[int, Dict[int, List[int]]] = {}
    for r in records:
        cell = grid.setdefault(r.n, {}).setdefault(r.d, [0, 0, 0])
        if r.status == "sphere":
            cell[0] += 1
        elif r.is_typed:
            cell[1] += 1
        else:
            cell[2] += 1
    return grid


def report(store: CensusStore, style: str = "counts") -> str:
    if style == "counts":
        lines = []
        grid = _cell_counts(store.records)
        for n, row in sorted(grid.items()):
            cells = []
            for d, (s, ns, u) in sorted(row.items()):
                cells.append(f"d={d}: {s}/{ns}" + (f"/{u}" if u else ""))
            lines.append(f"n={n}: " + ", ".join(cells))
        partial = store.lower_bound_degrees()
        for n in sorted(partial):
            if n in grid:
                swept, known = partial[n]
                lines.append(
                    f"n={n}: lower bounds, {swept} of {known or '?'} transitive groups swept"
                )
        return "\n".join(lines)
    if style == "orbits":
        lines = []
        for r in sorted(store.records, key=lambda r: (r.d, r.n)):
            lines.append(
                " | ".join(
                    [r.symbol, format_fvector(r.f_vector, table=True), r.group, r.orbit_text(), r.remarks]
                )
            )
        return "\n".join(lines)
    raise ValueError(f"unknown report style {style!r}")
