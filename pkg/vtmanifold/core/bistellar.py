"""Bistellar flips, the reduction heuristic and equivalence search.

A move on the i-face F with cofacet V' replaces the star F * boundary(V')
by boundary(F) * V'. For i = d the face is a facet and V' is a single unused
vertex, so the move subdivides the facet.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

import config

from ..logging import LOGGER
from ..utils.exceptions import ComplexError, IllegalMove
from ..utils.fileio import read_jsonl, write_text
from .classify import are_isomorphic
from .complex import SimplicialComplex, compact, f_vector, link
from .homology import HomologyProfile, integer_homology
from .orbits import from_mask, to_mask

DISTANCE_WEIGHT = 1000
# moves between homology comparisons when debug logging is on
HOMOLOGY_CHECK_EVERY = 100


@dataclass(frozen=True)
class FlipMove:
    face: Tuple[int, ...]
    cofacet: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "face", tuple(sorted(self.face)))
        object.__setattr__(self, "cofacet", tuple(sorted(self.cofacet)))

    @property
    def i(self) -> int:
        return len(self.face) - 1

    def facet_change(self, d: int) -> int:
        return 2 * self.i - d

    def to_dict(self) -> dict:
        return {"face": list(self.face), "cofacet": list(self.cofacet)}

    @classmethod
    def from_dict(cls, data: dict) -> "FlipMove":
        return cls(tuple(data["face"]), tuple(data["cofacet"]))

    def __str__(self) -> str:
        return f"{list(self.face)} -> {list(self.cofacet)}"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


class _FlipState:
    """Mutable facet set with face containment counts kept current."""

    def __init__(self, M: SimplicialComplex):
        self.d = M.d
        self.n = M.n
        self.facets: Set[int] = set()
        self.count: Dict[int, int] = {}
        self.labels: Set[int] = set()
        self.cand: List[Set[int]] = [set() for _ in range(self.d)]
        for m in M.masks:
            self._touch(m, 1)

    def _touch(self, facet: int, sign: int) -> None:
        if sign > 0:
            self.facets.add(facet)
        else:
            self.facets.discard(facet)
        sub = facet
        while sub:
            old = self.count.get(sub, 0)
            new = old + sign
            if new:
                self.count[sub] = new
            else:
                del self.count[sub]
            k = sub.bit_count() - 1
            if k < self.d:
                target = self.d - k + 1
                if old == target:
                    self.cand[k].discard(sub)
                if new == target:
                    self.cand[k].add(sub)
            if k == 0:
                if not old:
                    self.labels.add(sub.bit_length())
                elif not new:
                    self.labels.discard(sub.bit_length())
            sub = (sub - 1) & facet

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def free_label(self) -> int:
        v = 1
        while v in self.labels:
            v += 1
        return v

    def cofacet(self, face: int) -> Optional[int]:
        i = face.bit_count() - 1
        if i == self.d:
            return (1 << (self.free_label() - 1)) if face in self.facets else None
        if self.count.get(face, 0) != self.d - i + 1:
            return None
        other = 0
        for v in self.labels:
            b = 1 << (v - 1)
            if not face & b and self.count.get(face | b, 0):
                other |= b
        if other.bit_count() != self.d - i + 1 or self.count.get(other, 0):
            return None
        return other

    def admissible(self, face: int, cofacet: int) -> bool:
        i = face.bit_count() - 1
        if i == self.d:
            return (
                face in self.facets
                and cofacet.bit_count() == 1
                and cofacet.bit_length() not in self.labels
            )
        return self.cofacet(face) == cofacet

    def moves(self, i: int) -> List[Tuple[int, int]]:
        faces = self.facets if i == self.d else self.cand[i]
        out = []
        for face in sorted(faces, key=from_mask):
            other = self.cofacet(face)
            if other is not None:
                out.append((face, other))
        return out

    def pick(self, i: int, rng: np.random.Generator) -> Optional[Tuple[int, int]]:
        faces = self.facets if i == self.d else self.cand[i]
        if not faces:
            return None
        ordered = sorted(faces)
        for idx in rng.permutation(len(ordered)):
            other = self.cofacet(ordered[idx])
            if other is not None:
                return ordered[idx], other
        return None

    def random_move(self, rng: np.random.Generator, levels: Sequence[int]) -> Optional[Tuple[int, int]]:
        for idx in rng.permutation(len(levels)):
            move = self.pick(levels[idx], rng)
            if move is not None:
                return move
        return None

    def apply(self, face: int, cofacet: int) -> None:
        removed = [face | (cofacet & ~x) for x in _bits(cofacet)]
        added = [(face & ~y) | cofacet for y in _bits(face)]
        for m in removed:
            self._touch(m, -1)
        for m in added:
            self._touch(m, 1)
        self.n = max(self.n, cofacet.bit_length())

    def is_simplex_boundary(self) -> bool:
        return self.num_vertices == self.d + 2 and self.num_facets == self.d + 2

    def complex(self, facets=None) -> SimplicialComplex:
        facets = self.facets if facets is None else facets
        return SimplicialComplex(self.n, self.d, tuple(from_mask(m) for m in facets))


def _as_move(face: int, cofacet: int) -> FlipMove:
    return FlipMove(from_mask(face), from_mask(cofacet))


def valid_moves(M: SimplicialComplex) -> List[FlipMove]:
    state = _FlipState(M)
    return [_as_move(f, c) for i in range(M.d + 1) for f, c in state.moves(i)]


def is_admissible(M: SimplicialComplex, move: FlipMove) -> bool:
    if move.i > M.d or len(move.cofacet) != M.d - move.i + 1:
        return False
    if set(move.face) & set(move.cofacet):
        return False
    return _FlipState(M).admissible(to_mask(move.face), to_mask(move.cofacet))


def apply_move(M: SimplicialComplex, move: FlipMove) -> SimplicialComplex:
    if not is_admissible(M, move):
        raise IllegalMove(f"move {move} is not admissible")
    state = _FlipState(M)
    state.apply(to_mask(move.face), to_mask(move.cofacet))
    return state.complex()


def inverse_move(move: FlipMove, M: Optional[SimplicialComplex] = None) -> FlipMove:
    return FlipMove(move.cofacet, move.face)


def f_vector_change(d: int, i: int) -> Tuple[int, ...]:
    """(f_0, ..., f_d) change of any i-move on a d-dimensional complex."""
    out = []
    for k in range(1, d + 2):
        # F+B goes for B a proper part of the cofacet, A+cofacet comes for A a proper part of F
        gone = comb(d - i + 1, k - i - 1) if 0 <= k - i - 1 <= d - i else 0
        come = comb(i + 1, k - d + i - 1) if 0 <= k - d + i - 1 <= i else 0
        out.append(come - gone)
    return tuple(out)


def move_classes(d: int) -> Tuple[List[int], List[int]]:
    """Move classes below subdivision, ordered by the (f_d, ..., f_0) change they cause.

    Returns (reducing, levelling): the first list lowers the f-vector in that order.
    """
    zero = (0,) * (d + 1)
    ranked = sorted(range(d), key=lambda i: f_vector_change(d, i)[::-1])
    reducing = [i for i in ranked if f_vector_change(d, i)[::-1] < zero]
    return reducing, [i for i in ranked if i not in reducing]


class _HomologyWatch:
    """Compares homology against the start every HOMOLOGY_CHECK_EVERY moves, in debug mode only."""

    def __init__(self, M: SimplicialComplex):
        self.log = LOGGER(__name__)
        self.start: Optional[HomologyProfile] = None
        if self.log.isEnabledFor(logging.DEBUG):
            self.start = integer_homology(M)

    def __call__(self, state: "_FlipState", done: int) -> None:
        if self.start is None or done % HOMOLOGY_CHECK_EVERY:
            return
        now = integer_homology(state.complex())
        if (now.betti, now.torsion, now.z2_betti) != (
            self.start.betti,
            self.start.torsion,
            self.start.z2_betti,
        ):
            raise IllegalMove(f"homology changed after {done} moves")
        self.log.debug(f"homology unchanged after {done} moves")


class Verdict(str, Enum):
    boundary_of_simplex = "boundary_of_simplex"
    reduced_but_unrecognized = "reduced_but_unrecognized"
    budget_exhausted = "budget_exhausted"


@dataclass
class ReduceResult:
    complex: SimplicialComplex
    verdict: Verdict
    moves_used: int
    moves: List[FlipMove] = field(default_factory=list)
    seed: int = config.DEFAULT_SEED

    @property
    def is_sphere(self) -> bool:
        return self.verdict == Verdict.boundary_of_simplex


def reduce(
    M: SimplicialComplex,
    seed: int = config.DEFAULT_SEED,
    budget: int = config.BISTELLAR_BUDGET,
    heat_after: int = config.HEAT_AFTER,
    heat_moves: int = config.HEAT_MOVES,
    heat_rounds: int = config.HEAT_ROUNDS,
) -> ReduceResult:
    """Greedy flip reduction with random heating; ``moves`` leads from M to the best complex.

    Each step takes a move of the first class in ``move_classes`` that has one, so the
    f-vector drops lexicographically in (f_d, ..., f_0) whenever some move allows it.
    """
    d = M.d
    state = _FlipState(M)
    if state.is_simplex_boundary():
        return ReduceResult(compact(M), Verdict.boundary_of_simplex, 0, [], seed)
    watch = _HomologyWatch(M)
    rng = np.random.default_rng(seed)
    reducing, levelling = move_classes(d)
    best = frozenset(state.facets)
    best_score = (state.num_vertices, state.num_facets)
    best_at = 0
    moves: List[FlipMove] = []
    stalled = cold_rounds = 0

    while len(moves) < budget and state.num_vertices > d + 2:
        if stalled >= heat_after:
            cold_rounds += 1
            if cold_rounds > heat_rounds:
                break
            for _ in range(min(heat_moves, budget - len(moves))):
                move = state.random_move(rng, reducing + levelling)
                if move is None:
                    break
                state.apply(*move)
                moves.append(_as_move(*move))
                watch(state, len(moves))
            stalled = 0
            continue
        move = None
        for i in reducing + levelling:
            move = state.pick(i, rng)
            if move is not None:
                break
        if move is None:
            break
        state.apply(*move)
        moves.append(_as_move(*move))
        watch(state, len(moves))
        score = (state.num_vertices, state.num_facets)
        if score < best_score:
            best, best_score, best_at = frozenset(state.facets), score, len(moves)
            stalled = cold_rounds = 0
        else:
            stalled += 1

    if best_score[0] == d + 2:
        verdict = Verdict.boundary_of_simplex
    elif len(moves) >= budget:
        verdict = Verdict.budget_exhausted
    else:
        verdict = Verdict.reduced_but_unrecognized
    LOGGER(__name__).debug(
        f"reduce d={d}: {len(moves)} moves, best (f_0, f_d) = {best_score}, {verdict.value}"
    )
    return ReduceResult(compact(state.complex(best)), verdict, len(moves), moves[:best_at], seed)


def links_are_spheres(
    M: SimplicialComplex,
    seed: int = config.DEFAULT_SEED,
    budget: int = config.BISTELLAR_BUDGET,
    vertex: Optional[int] = None,
) -> ReduceResult:
    """Reduce the link of one vertex; for vertex-transitive complexes one link stands for all."""
    if M.d < 1:
        raise ComplexError("links of vertices need dimension at least 1")
    v = M.vertices[0] if vertex is None else vertex
    return reduce(compact(link(M, (v,))), seed, budget)


@dataclass
class EquivalenceResult:
    equivalent: bool
    moves: List[FlipMove] = field(default_factory=list)
    flipped: Optional[str] = None
    mapping: Optional[Dict[int, int]] = None

    @property
    def verdict(self) -> str:
        return "equivalent" if self.equivalent else "undetermined"


def bistellar_equivalent(
    M1: SimplicialComplex,
    M2: SimplicialComplex,
    seed: int = config.DEFAULT_SEED,
    budget: int = config.BISTELLAR_BUDGET,
    cadence: int = config.EQUIV_CADENCE,
    heat_after: int = config.HEAT_AFTER,
    heat_moves: int = config.HEAT_MOVES,
) -> EquivalenceResult:
    """Flip the larger complex toward the other one until an isomorphism shows up.

    ``moves`` applies to the complex named by ``flipped``; "undetermined" is not a disproof.
    """
    if M1.d != M2.d:
        return EquivalenceResult(False)
    mapping = are_isomorphic(M1, M2)
    if mapping is not None:
        return EquivalenceResult(True, [], None, mapping)
    if (len(M1.vertices), len(M1.facets)) >= (len(M2.vertices), len(M2.facets)):
        source, target, flipped = M1, M2, "first"
    else:
        source, target, flipped = M2, M1, "second"
    d = source.d
    goal = (len(target.vertices), len(target.facets))
    target_f = f_vector(target)
    state = _FlipState(source)
    watch = _HomologyWatch(source)
    rng = np.random.default_rng(seed)
    levels = list(range(d + 1))
    moves: List[FlipMove] = []

    def distance(nv: int, nf: int) -> int:
        return abs(nv - goal[0]) * DISTANCE_WEIGHT + abs(nf - goal[1])

    def after(i: int) -> int:
        dv = -1 if i == 0 else (1 if i == d else 0)
        return distance(state.num_vertices + dv, state.num_facets + 2 * i - d)

    best = distance(state.num_vertices, state.num_facets)
    stalled = 0
    while len(moves) < budget:
        if stalled >= heat_after:
            for _ in range(min(heat_moves, budget - len(moves))):
                move = state.random_move(rng, levels[:-1])
                if move is None:
                    break
                state.apply(*move)
                moves.append(_as_move(*move))
                watch(state, len(moves))
            stalled = 0
        else:
            move = None
            for i in sorted(levels, key=lambda i: (after(i), i)):
                move = state.pick(i, rng)
                if move is not None:
                    break
            if move is None:
                break
            state.apply(*move)
            moves.append(_as_move(*move))
            watch(state, len(moves))
        now = distance(state.num_vertices, state.num_facets)
        if now < best:
            best, stalled = now, 0
        else:
            stalled += 1
        matched = now == 0
        if matched or len(moves) % cadence == 0:
            current = state.complex()
            if matched and f_vector(current) != target_f:
                continue
            mapping = are_isomorphic(current, target)
            if mapping is not None:
                LOGGER(__name__).info(f"bistellar equivalence found after {len(moves)} moves")
                return EquivalenceResult(True, moves, flipped, mapping)
    return EquivalenceResult(False, moves, flipped)


def random_walk(
    M: SimplicialComplex, steps: int, seed: int = config.DEFAULT_SEED
) -> Iterator[Tuple[FlipMove, SimplicialComplex]]:
    """Random admissible moves: a move class i chosen uniformly, then a move within it."""
    state = _FlipState(M)
    rng = np.random.default_rng(seed)
    levels = list(range(M.d + 1))
    for _ in range(steps):
        move = state.random_move(rng, levels)
        if move is None:
            return
        state.apply(*move)
        yield _as_move(*move), state.complex()


def dump_moves(moves: Sequence[FlipMove]) -> str:
    return "".join(json.dumps(m.to_dict()) + "\n" for m in moves)


def write_move_log(path: str, moves: Sequence[FlipMove]) -> None:
    write_text(path, dump_moves(moves))


def read_move_log(path: str) -> List[FlipMove]:
    return [FlipMove.from_dict(item) for item in read_jsonl(path)]


def replay_moves(M: SimplicialComplex, path_or_moves) -> SimplicialComplex:
    moves = read_move_log(path_or_moves) if isinstance(path_or_moves, str) else path_or_moves
    for move in moves:
        M = apply_move(M, move)
    return M
