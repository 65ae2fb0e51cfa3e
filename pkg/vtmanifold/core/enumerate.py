"""Block-structured backtracking over the orbit-incidence matrix.

The search keeps a stack of chosen rows, the running column sums and a
pointer to the next row to try. A combination whose sums are all 0 or 2 is
emitted and never extended.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Set

import config

from ..logging import LOGGER
from ..utils.exceptions import GroupParamError, SubsetSizeError
from ..utils.fileio import read_json, write_json
from ..utils.formatters import format_duration, format_vector, row_name
from .classify import (
    ManifoldRecord,
    as_determinant,
    canonical_key,
    key_digest,
    multiplication_isomorphic,
)
from .complex import SimplicialComplex, f_vector, is_strongly_connected, step3_tests
from .groups import (
    PermutationGroup,
    contains_standard_cycle,
    is_full_symmetric_or_alternating,
    is_transitive,
)
from .orbits import OrbitIncidence, build_incidence, from_mask, orbit_reps_of_complex

END = "END"
DEADLINE_STRIDE = 1024


class Backtracker:
    def __init__(
        self,
        inc: OrbitIncidence,
        trace: Optional[Callable[[str], None]] = None,
        checkpoint: Optional[str] = None,
        checkpoint_every: int = config.CHECKPOINT_EVERY,
        deadline: Optional[float] = None,
        meta: Optional[Dict] = None,
    ):
        self.inc = inc
        self.rows = inc.entries
        self.end = len(self.rows)
        self.first = inc.first_columns
        self.trace = trace
        self.checkpoint = checkpoint
        self.checkpoint_every = checkpoint_every
        self.deadline = deadline
        self.meta = meta or {}
        self.next_block = [self.end] * self.end
        for block, following in zip(inc.blocks, inc.blocks[1:] + [(self.end,)]):
            for r in block:
                self.next_block[r] = following[0]
        self.sums = [0] * inc.width
        self.chosen: List[int] = []
        self.pointer = 0
        self.nodes = 0
        self.emitted = 0
        self.timed_out = False
        self.finished = False

    def _name(self, r: int) -> str:
        return row_name(r, self.end)

    def _say(self, msg: str) -> None:
        if self.trace is None:
            return
        combo = "+".join(self._name(r) for r in self.chosen) or "-"
        self.trace(f"{combo}: {format_vector(self.sums)} {msg}")

    def _target(self, p: int) -> str:
        return END if p == self.end else self._name(p)

    def _advance(self, p: int) -> str:
        jumped = False
        while p < self.end and self.sums[self.first[p]] >= 2:
            p = self.next_block[p]
            jumped = True
        if p < self.end and 1 in self.sums[: self.first[p]]:
            self.pointer = self.end
            return "Cannot be completed! Set pointer to END."
        self.pointer = p
        if jumped:
            return f"First entry is 2: set pointer to {self._target(p)}."
        return f"Set pointer to {self._target(p)}."

    def _add(self, r: int, sign: int) -> None:
        for j, t in self.rows[r].items():
            self.sums[j] += sign * t

    def restore(self, chosen: List[int], pointer: int, emitted: int = 0, nodes: int = 0) -> None:
        self.sums = [0] * self.inc.width
        self.chosen = list(chosen)
        for r in self.chosen:
            self._add(r, 1)
        self.pointer = pointer
        self.emitted = emitted
        self.nodes = nodes

    def state(self) -> Dict:
        return {
            **self.meta,
            "chosen": list(self.chosen),
            "pointer": self.pointer,
            "emitted": self.emitted,
            "nodes": self.nodes,
        }

    def save(self) -> None:
        if self.checkpoint:
            write_json(self.checkpoint, self.state())

    def run(self, emit: Callable[[List[int]], None]) -> int:
        """Explore from the current state; returns the number of emissions."""
        if not self.chosen and self.pointer == 0 and self.nodes == 0:
            self._say(self._advance(0))
        while True:
            if self.pointer == self.end:
                if not self.chosen:
                    break
                r = self.chosen.pop()
                self._add(r, -1)
                self._say(self._advance(r + 1))
                continue
            r = self.pointer
            self.chosen.append(r)
            self._add(r, 1)
            self.nodes += 1
            if any(s > 2 for s in self.sums):
                self.pointer = self.end
                self._say("Invalid combination! Set pointer to END.")
            elif 1 not in self.sums:
                self.emitted += 1
                emit(list(self.chosen))
                self.pointer = self.end
                self._say("Candidate! Set pointer to END.")
            else:
                self._say(self._advance(r + 1))
            if self.checkpoint and self.nodes % self.checkpoint_every == 0:
                self.save()
            if self.deadline is not None and self.nodes % DEADLINE_STRIDE == 0:
                if time.monotonic() > self.deadline:
                    self.timed_out = True
                    self.save()
                    return self.emitted
        self.finished = True
        if self.checkpoint:
            self.save()
        return self.emitted


def backtrack(
    inc: OrbitIncidence,
    emit: Callable[[List[int]], None],
    trace: Optional[Callable[[str], None]] = None,
) -> int:
    return Backtracker(inc, trace).run(emit)


def assemble(inc: OrbitIncidence, rows: List[int], n: int) -> SimplicialComplex:
    masks = set()
    for r in rows:
        masks.update(inc.facet_orbits[r].members)
    return SimplicialComplex(n, inc.d, tuple(from_mask(m) for m in masks))


@dataclass
class EnumerationOptions:
    seen: Set[str] = field(default_factory=set)
    trace: Optional[Callable[[str], None]] = None
    checkpoint: Optional[str] = None
    resume: bool = False
    budget_seconds: Optional[float] = None
    checkpoint_every: int = config.CHECKPOINT_EVERY
    first_index: int = 1


@dataclass
class EnumerationResult:
    records: List[ManifoldRecord]
    timed_out: bool = False
    nodes: int = 0
    emissions: int = 0
    complexes: List[SimplicialComplex] = field(default_factory=list)


def make_record(M: SimplicialComplex, G: PermutationGroup, key: str, k: int) -> ManifoldRecord:
    record = ManifoldRecord(
        symbol="",
        group=G.label,
        n=G.degree,
        d=M.d,
        orbit_reps=orbit_reps_of_complex(G, M.facets),
        f_vector=f_vector(M),
        as_det=as_determinant(M),
        key=key,
        generators=G.generator_cycles(),
        group_index=G.index or 0,
    )
    return record.with_symbol(k)


def _validate(n: int, d: int, G: PermutationGroup) -> None:
    if G.degree != n:
        raise GroupParamError(f"{G.label} acts on {G.degree} points, not {n}")
    if not is_transitive(G):
        raise GroupParamError(f"{G.label} is not transitive")
    if not 2 <= d <= n - 2:
        raise SubsetSizeError(f"dimension {d} is outside 2..{n - 2} for {n} vertices")


def run_enumeration(
    n: int, d: int, G: PermutationGroup, options: Optional[EnumerationOptions] = None
) -> EnumerationResult:
    options = options or EnumerationOptions()
    _validate(n, d, G)
    log = LOGGER(__name__)
    records: List[ManifoldRecord] = []

    if is_full_symmetric_or_alternating(G):
        if n != d + 2:
            return EnumerationResult(records)
        M = SimplicialComplex.from_facets(
            [[v for v in range(1, n + 1) if v != skip] for skip in range(1, n + 1)]
        )
        key = key_digest(canonical_key(M))
        if key not in options.seen:
            options.seen.add(key)
            records.append(make_record(M, G, key, options.first_index))
        return EnumerationResult(records, complexes=[M] * len(records))

    inc = build_incidence(G, d)
    deadline = None
    if options.budget_seconds:
        deadline = time.monotonic() + options.budget_seconds
        log.info(f"{G.label} d={d}: search budget {format_duration(options.budget_seconds)}")
    engine = Backtracker(
        inc,
        options.trace,
        options.checkpoint,
        options.checkpoint_every,
        deadline,
        {"n": n, "d": d, "group": G.label},
    )
    if options.resume and options.checkpoint:
        state = read_json(options.checkpoint)
        if state and (state.get("n"), state.get("d"), state.get("group")) == (n, d, G.label):
            engine.restore(state["chosen"], state["pointer"], state["emitted"], state["nodes"])
            log.info(f"Resuming {G.label} d={d} after {engine.nodes} nodes")

    shortcut = contains_standard_cycle(G)
    found: List[SimplicialComplex] = []

    def emit(rows: List[int]) -> None:
        M = assemble(inc, rows, n)
        verdict = step3_tests(M, d)
        if not verdict or not is_strongly_connected(M):
            log.debug(f"rows {rows} rejected: {verdict.reason if not verdict else 'not strongly connected'}")
            return
        if shortcut:
            for prev in found:
                if multiplication_isomorphic(M, prev, n) is not None:
                    return
        key = key_digest(canonical_key(M))
        if key in options.seen:
            return
        options.seen.add(key)
        found.append(M)
        records.append(make_record(M, G, key, options.first_index + len(records)))

    engine.run(emit)
    log.info(
        f"{G.label} d={d}: {engine.emitted} candidates, {len(records)} new, "
        f"{engine.nodes} nodes{' (timed out)' if engine.timed_out else ''}"
    )
    return EnumerationResult(records, engine.timed_out, engine.nodes, engine.emitted, found)


def enumerate_vt(
    n: int, d: int, G: PermutationGroup, options: Optional[EnumerationOptions] = None
) -> List[ManifoldRecord]:
    return run_enumeration(n, d, G, options).records
