"""Orbits of k-subsets and the facet/ridge orbit-incidence matrix.

Subsets are bitmasks with bit ``v - 1`` standing for vertex ``v``; orbits are
computed by breadth-first closure over the generators only, so the full group
is never materialized.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from ..logging import LOGGER
from ..utils.exceptions import SubsetSizeError
from .groups import Permutation, PermutationGroup


def to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for v in subset:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> Tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


class MaskAction:
    """Byte lookup tables applying one permutation to subset bitmasks."""

    def __init__(self, perm: Permutation):
        n = perm.degree
        self.chunks = (n + 7) // 8
        self.tables = []
        for c in range(self.chunks):
            table = [0] * 256
            for byte in range(1, 256):
                img = 0
                for bit in range(8):
                    point = 8 * c + bit + 1
                    if byte >> bit & 1 and point <= n:
                        img |= 1 << (perm(point) - 1)
                table[byte] = img
            self.tables.append(table)

    def __call__(self, mask: int) -> int:
        out = 0
        for table in self.tables:
            out |= table[mask & 255]
            mask >>= 8
        return out


def mask_actions(G: PermutationGroup) -> List[MaskAction]:
    return [MaskAction(g) for g in G.generators]


def _closure(start: int, actions: Sequence[MaskAction]) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for act in actions:
            img = act(m)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return seen


@dataclass(frozen=True)
class SubsetOrbit:
    representative: Tuple[int, ...]
    size: int
    k: int
    members: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def mask(self) -> int:
        return to_mask(self.representative)


def orbit_of(G: PermutationGroup, subset: Iterable[int]) -> List[Tuple[int, ...]]:
    members = _closure(to_mask(subset), mask_actions(G))
    return sorted(from_mask(m) for m in members)


def orbits_of_k_subsets(G: PermutationGroup, k: int) -> List[SubsetOrbit]:
    n = G.degree
    if not 1 <= k <= n:
        raise SubsetSizeError(f"subset size {k} is outside 1..{n}")
    actions = mask_actions(G)
    seen = set()
    out = []
    # lex order of combinations: the first unseen subset is its orbit's minimum
    for combo in combinations(range(1, n + 1), k):
        mask = to_mask(combo)
        if mask in seen:
            continue
        orbit = _closure(mask, actions)
        seen |= orbit
        out.append(SubsetOrbit(combo, len(orbit), k, tuple(sorted(orbit))))
    LOGGER(__name__).debug(f"{G.label}: {len(out)} orbits of {k}-subsets")
    return out


def inclusion_multiplicity(
    facet_orbit: SubsetOrbit, ridge_orbit: SubsetOrbit, G: PermutationGroup = None
) -> int:
    if facet_orbit.k != ridge_orbit.k + 1:
        raise SubsetSizeError(
            f"facet orbits of {facet_orbit.k}-subsets do not contain {ridge_orbit.k}-subsets as ridges"
        )
    members = facet_orbit.members
    if not members:
        if G is None:
            raise SubsetSizeError("orbit members are unknown and no group was given")
        members = tuple(_closure(facet_orbit.mask, mask_actions(G)))
    r = ridge_orbit.mask
    return sum(1 for m in members if m & r == r)


def zn_orbit_count(n: int, k: int) -> int:
    """Number of orbits of the cyclic group of order n on k-subsets (necklace count)."""
    total = 0
    for e in range(1, gcd(n, k) + 1):
        if n % e == 0 and k % e == 0:
            phi = sum(1 for x in range(1, e + 1) if gcd(x, e) == 1)
            total += phi * comb(n // e, k // e)
    return total // n


def zn_orbit_size_multiset(n: int, k: int) -> Dict[int, int]:
    """Orbit sizes of the cyclic group on k-subsets by counting subsets with each stabilizer."""
    # subsets fixed by the shift of order e exist iff e | gcd(n, k)
    fixed = {}
    for e in range(1, n + 1):
        if n % e == 0:
            fixed[e] = comb(n // e, k // e) if k % e == 0 else 0
    exact = {}
    for e in sorted(fixed, reverse=True):
        exact[e] = fixed[e] - sum(exact[f] for f in exact if f % e == 0 and f != e)
    return {n // e: count * e // n for e, count in sorted(exact.items()) if count}


@dataclass
class OrbitIncidence:
    facet_orbits: List[SubsetOrbit]
    ridge_orbits: List[SubsetOrbit]
    entries: List[Dict[int, int]]
    d: int
    group: PermutationGroup = None
    width: int = 0
    first_columns: List[int] = field(default_factory=list)
    blocks: List[Tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.width = self.width or len(self.ridge_orbits)
        self.first_columns = [min(row) for row in self.entries]
        self.blocks = []
        for i, c in enumerate(self.first_columns):
            if self.blocks and self.first_columns[self.blocks[-1][0]] == c:
                self.blocks[-1] = self.blocks[-1] + (i,)
            else:
                self.blocks.append((i,))

    @classmethod
    def from_matrix(cls, matrix, d: int = 0) -> "OrbitIncidence":
        """Build from a dense matrix; rows are stably grouped by first present column."""
        dense = np.asarray(matrix, dtype=np.int64)
        rows = [{j: int(x) for j, x in enumerate(row) if x} for row in dense.tolist()]
        rows = [r for r in rows if r]
        rows.sort(key=min)
        return cls([], [], rows, d, None, dense.shape[1] if dense.ndim == 2 else 0)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), self.width

    def dense(self) -> np.ndarray:
        m, n = self.shape
        out = np.zeros((m, n), dtype=np.int64)
        for i, row in enumerate(self.entries):
            for j, t in row.items():
                out[i, j] = t
        return out

    def row_sum_holds(self, i: int) -> bool:
        total = sum(t * self.ridge_orbits[j].size for j, t in self.entries[i].items())
        return total == (self.d + 1) * self.facet_orbits[i].size


def build_incidence(G: PermutationGroup, d: int) -> OrbitIncidence:
    n = G.degree
    if not 2 <= d <= n - 2:
        raise SubsetSizeError(f"dimension {d} is outside 2..{n - 2} for {n} vertices")
    facets = orbits_of_k_subsets(G, d + 1)
    ridges = orbits_of_k_subsets(G, d)
    rep_col = {r.mask: j for j, r in enumerate(ridges)}
    table = []
    for orbit in facets:
        row: Dict[int, int] = {}
        for m in orbit.members:
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                j = rep_col.get(m ^ low)
                if j is not None:
                    row[j] = row.get(j, 0) + 1
        table.append(row)

    alive_rows = {i for i, row in enumerate(table) if max(row.values()) <= 2}
    alive_cols = set(range(len(ridges)))
    while True:
        coverage = dict.fromkeys(alive_cols, 0)
        for i in alive_rows:
            for j, t in table[i].items():
                coverage[j] += t
        dead = {j for j, c in coverage.items() if c <= 1}
        if not dead:
            break
        alive_cols -= dead
        alive_rows = {i for i in alive_rows if not dead.intersection(table[i])}

    cols = sorted(alive_cols)
    col_pos = {j: p for p, j in enumerate(cols)}
    rows = sorted(alive_rows, key=lambda i: (min(col_pos[j] for j in table[i]), i))
    inc = OrbitIncidence(
        [facets[i] for i in rows],
        [ridges[j] for j in cols],
        [{col_pos[j]: t for j, t in table[i].items()} for i in rows],
        d,
        G,
    )
    LOGGER(__name__).info(
        f"{G.label} d={d}: {len(rows)}/{len(facets)} facet orbits and "
        f"{len(cols)}/{len(ridges)} ridge orbits survive pruning"
    )
    return inc


def orbit_reps_of_complex(G: PermutationGroup, facets: Iterable[Sequence[int]]) -> List[Tuple[Tuple[int, ...], int]]:
    """(representative, size) of every orbit a G-invariant facet set splits into."""
    actions = mask_actions(G)
    remaining = {to_mask(f) for f in facets}
    out = []
    while remaining:
        # the smallest facet in lex order of its sorted vertex tuple
        rep = min(remaining, key=from_mask)
        orbit = _closure(rep, actions)
        out.append((from_mask(rep), len(orbit)))
        remaining -= orbit
    out.sort()
    return out
