"""Simplicial homology over Z and Z_2, duality and link filters, edge-path presentations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

import config

from ..logging import LOGGER
from ..utils import formatters
from ..utils.normalforms import SparseRows, gf2_rank, smith_normal_form
from .complex import SimplicialComplex, link
from .groups import PermutationGroup, point_orbit


@dataclass
class HomologyProfile:
    betti: List[int]
    torsion: List[List[int]]
    z2_betti: List[int]
    z2_only: bool = False

    @property
    def dimension(self) -> int:
        return len(self.z2_betti) - 1

    def to_dict(self) -> dict:
        return {
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
            "z2_betti": list(self.z2_betti),
            "z2_only": self.z2_only,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HomologyProfile":
        return cls(
            list(data.get("betti", [])),
            [list(t) for t in data.get("torsion", [])],
            list(data["z2_betti"]),
            bool(data.get("z2_only", False)),
        )


def _face_index(M: SimplicialComplex) -> List[Dict[Tuple[int, ...], int]]:
    """Position of every face among the lex-sorted faces of its dimension."""
    return [{f: i for i, f in enumerate(M.faces(k + 1))} for k in range(M.d + 1)]


def _boundary_rows(M: SimplicialComplex, k: int, index=None) -> SparseRows:
    """Sparse rows of the k-th boundary map, one row per (k-1)-face."""
    index = index or _face_index(M)
    rows: SparseRows = {}
    for j, face in enumerate(index[k]):
        for pos in range(len(face)):
            i = index[k - 1][face[:pos] + face[pos + 1:]]
            rows.setdefault(i, {})[j] = -1 if pos % 2 else 1
    return rows


def boundary_matrices(M: SimplicialComplex) -> List[np.ndarray]:
    index = _face_index(M)
    out = []
    for k in range(1, M.d + 1):
        mat = np.zeros((len(index[k - 1]), len(index[k])), dtype=np.int64)
        for i, row in _boundary_rows(M, k, index).items():
            for j, x in row.items():
                mat[i, j] = x
        out.append(mat)
    return out


def _z2_ranks(M: SimplicialComplex, index) -> List[int]:
    ranks = [0]
    for k in range(1, M.d + 1):
        cols = []
        for face in index[k]:
            v = 0
            for pos in range(len(face)):
                v ^= 1 << index[k - 1][face[:pos] + face[pos + 1:]]
            cols.append(v)
        ranks.append(gf2_rank(cols))
    return ranks + [0]


def integer_homology(M: SimplicialComplex, max_cells: int = config.HOMOLOGY_MAX_CELLS) -> HomologyProfile:
    index = _face_index(M)
    sizes = [len(x) for x in index]
    z2_ranks = _z2_ranks(M, index)
    z2 = [sizes[k] - z2_ranks[k] - z2_ranks[k + 1] for k in range(M.d + 1)]
    if sum(sizes) > max_cells:
        LOGGER(__name__).info(f"{sum(sizes)} cells exceed {max_cells}, computing Z_2 only")
        return HomologyProfile([], [], z2, True)
    ranks = [0]
    factors = [[]]
    for k in range(1, M.d + 1):
        snf = smith_normal_form(_boundary_rows(M, k, index))
        ranks.append(len(snf))
        factors.append([x for x in snf if x > 1])
    ranks.append(0)
    factors.append([])
    betti = [sizes[k] - ranks[k] - ranks[k + 1] for k in range(M.d + 1)]
    torsion = [factors[k + 1] for k in range(M.d + 1)]
    return HomologyProfile(betti, torsion, z2)


def z2_from_integer(profile: HomologyProfile) -> List[int]:
    """Z_2 Betti numbers by the universal coefficient theorem."""
    out = []
    for k, b in enumerate(profile.betti):
        even = sum(1 for t in profile.torsion[k] if t % 2 == 0)
        below = sum(1 for t in profile.torsion[k - 1] if t % 2 == 0) if k else 0
        out.append(b + even + below)
    return out


def reduced_betti(profile: HomologyProfile) -> List[int]:
    betti = list(profile.betti or profile.z2_betti)
    if betti:
        betti[0] -= 1
    return betti


def euler_from_betti(profile: HomologyProfile) -> int:
    return sum((-1) ** k * b for k, b in enumerate(profile.betti or profile.z2_betti))


def poincare_z2_check(M: SimplicialComplex, profile: Optional[HomologyProfile] = None) -> bool:
    profile = profile or integer_homology(M)
    z2 = profile.z2_betti
    return all(z2[k] == z2[M.d - k] for k in range(M.d + 1))


def is_sphere_homology(profile: HomologyProfile) -> bool:
    top = profile.dimension
    if top == 0:
        return profile.z2_betti == [2]
    if profile.z2_only:
        return profile.z2_betti == [1] + [0] * (top - 1) + [1]
    return profile.betti == [1] + [0] * (top - 1) + [1] and not any(profile.torsion)


def link_sphere_homology_check(M: SimplicialComplex, vertex: Optional[int] = None) -> bool:
    v = M.vertices[0] if vertex is None else vertex
    return is_sphere_homology(integer_homology(link(M, (v,))))


def link_homology_all(
    M: SimplicialComplex, G: Optional[PermutationGroup] = None
) -> Dict[int, HomologyProfile]:
    if G is None:
        vertices = list(M.vertices)
    else:
        vertices, left = [], set(M.vertices)
        while left:
            v = min(left)
            vertices.append(v)
            left -= set(point_orbit(G, v))
    return {v: integer_homology(link(M, (v,))) for v in vertices}


def format_homology(profile: HomologyProfile) -> str:
    if profile.z2_only:
        return formatters.format_z2(profile.z2_betti)
    return formatters.format_homology(profile.betti, profile.torsion)


Word = Tuple[int, ...]


@dataclass
class Presentation:
    """Generators are edges outside a spanning tree; letters are +-(index + 1)."""

    generators: List[Tuple[int, int]]
    relators: List[Word] = field(default_factory=list)

    def __str__(self) -> str:
        def letter(x):
            a, b = self.generators[abs(x) - 1]
            return f"x{a}_{b}" + ("" if x > 0 else "^-1")

        gens = ", ".join(f"x{a}_{b}" for a, b in self.generators)
        rels = ", ".join("*".join(letter(x) for x in r) for r in self.relators)
        return f"< {gens} | {rels} >"


def free_reduce(word: Sequence[int]) -> Word:
    out: List[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    # cyclic reduction
    start, stop = 0, len(out)
    while stop - start > 1 and out[start] == -out[stop - 1]:
        start += 1
        stop -= 1
    return tuple(out[start:stop])


def _spanning_tree(M: SimplicialComplex) -> set:
    adjacency: Dict[int, List[int]] = {v: [] for v in M.vertices}
    for a, b in M.faces(2):
        adjacency[a].append(b)
        adjacency[b].append(a)
    root = M.vertices[0]
    seen = {root}
    tree = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(adjacency[u]):
            if w not in seen:
                seen.add(w)
                tree.add((min(u, w), max(u, w)))
                queue.append(w)
    return tree


def pi1_presentation(M: SimplicialComplex) -> Presentation:
    tree = _spanning_tree(M)
    edges = [e for e in M.faces(2) if e not in tree]
    letter = {e: i + 1 for i, e in enumerate(edges)}
    relators = []
    for a, b, c in M.faces(3):
        word = [letter.get((a, b), 0), letter.get((b, c), 0), -letter.get((a, c), 0)]
        relators.append(free_reduce([x for x in word if x]))
    dead = set()
    while True:
        relators = sorted({r for r in relators if r})
        killed = {abs(r[0]) for r in relators if len(r) == 1}
        if not killed:
            break
        dead |= killed
        relators = [free_reduce([x for x in r if abs(x) not in killed]) for r in relators]
    alive = [i + 1 for i in range(len(edges)) if i + 1 not in dead]
    renumber = {old: new for new, old in enumerate(alive, 1)}
    relators = [
        tuple(renumber[abs(x)] * (1 if x > 0 else -1) for x in r) for r in relators
    ]
    return Presentation([edges[i - 1] for i in alive], relators)


def abelianization(presentation: Presentation) -> Tuple[int, List[int]]:
    """(free rank, torsion coefficients) of the abelianized group."""
    gens = len(presentation.generators)
    rows: SparseRows = {}
    for i, r in enumerate(presentation.relators):
        row: Dict[int, int] = {}
        for x in r:
            j = abs(x) - 1
            row[j] = row.get(j, 0) + (1 if x > 0 else -1)
        row = {j: e for j, e in row.items() if e}
        if row:
            rows[i] = row
    factors = smith_normal_form(rows) if rows else []
    return gens - len(factors), [x for x in factors if x > 1]


def format_abelianization(rank: int, torsion: Sequence[int]) -> str:
    return formatters.format_group_summand(rank, torsion)
