"""Combinatorial equivalence: fingerprints, isomorphism search and canonical keys."""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from math import ceil, comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..logging import LOGGER
from ..utils.exceptions import ComplexError
from ..utils.formatters import format_orbit, format_symbol
from ..utils.normalforms import bareiss_determinant
from .complex import (
    SimplicialComplex,
    f_vector,
    from_orbits,
    is_pseudomanifold,
    is_strongly_connected,
    surface_type,
)
from .groups import PermutationGroup, multiplication_map, parse_cycles
from .homology import (
    HomologyProfile,
    abelianization,
    format_homology,
    integer_homology,
    pi1_presentation,
)
from .orbits import MaskAction, from_mask


def as_determinant(M: SimplicialComplex) -> int:
    """det(A A^T) for the vertex-facet incidence matrix A."""
    index = {v: i for i, v in enumerate(M.vertices)}
    A = np.zeros((len(index), len(M.facets)), dtype=np.int64)
    for j, f in enumerate(M.facets):
        for v in f:
            A[index[v], j] = 1
    return bareiss_determinant(A @ A.T)


def multiplication_isomorphic(
    M1: SimplicialComplex, M2: SimplicialComplex, n: int
) -> Optional[int]:
    if len(M1.facets) != len(M2.facets) or M1.d != M2.d:
        return None
    target = set(M2.masks)
    for m in range(1, n):
        if gcd(m, n) != 1:
            continue
        act = MaskAction(multiplication_map(n, m))
        if all(act(f) in target for f in M1.masks):
            return m
    return None


class _Shape:
    """Adjacency data shared by the isomorphism search and the canonical form."""

    def __init__(self, M: SimplicialComplex):
        if not is_pseudomanifold(M):
            raise ComplexError("isomorphism search needs a pseudomanifold")
        if not is_strongly_connected(M):
            raise ComplexError("isomorphism search needs a strongly connected complex")
        self.M = M
        self.masks = M.masks
        self.index = {m: i for i, m in enumerate(self.masks)}
        self.ridge_map = M.ridge_map
        degree: Dict[int, int] = {}
        edges: Dict[Tuple[int, int], int] = {}
        for f in M.facets:
            for v in f:
                degree[v] = degree.get(v, 0) + 1
            for a in range(len(f)):
                for b in range(a + 1, len(f)):
                    edges[f[a], f[b]] = edges.get((f[a], f[b]), 0) + 1
        around: Dict[int, List[int]] = {v: [] for v in degree}
        for (a, b), c in edges.items():
            around[a].append(c)
            around[b].append(c)
        self.edges = edges
        self.vsig = {v: (degree[v], tuple(sorted(around[v]))) for v in degree}

    def edge_degree(self, a: int, b: int) -> int:
        return self.edges[(a, b) if a < b else (b, a)]

    def neighbour(self, i: int, v: int) -> Tuple[int, int]:
        """Facet across the ridge of facet i opposite v, and its apex vertex."""
        m = self.masks[i]
        ridge = m & ~(1 << (v - 1))
        a, b = self.ridge_map[ridge]
        j = b if a == i else a
        return j, (self.masks[j] & ~ridge).bit_length()

    def start_signature(self, order: Sequence[int]) -> tuple:
        vs = tuple(self.vsig[v] for v in order)
        es = tuple(
            self.edge_degree(order[a], order[b])
            for a in range(len(order))
            for b in range(a + 1, len(order))
        )
        return vs, es

    def best_starts(self) -> List[Tuple[int, ...]]:
        """Every facet ordering attaining the smallest invariant start signature."""
        best = None
        starts: List[Tuple[int, ...]] = []
        for f in self.M.facets:
            ranked = sorted(f, key=lambda v: self.vsig[v])
            floor = tuple(self.vsig[v] for v in ranked)
            if best is not None and floor > best[0]:
                continue
            for order in permutations(f):
                if tuple(self.vsig[v] for v in order) != floor:
                    continue
                sig = self.start_signature(order)
                if best is None or sig < best:
                    best = sig
                    starts = [order]
                elif sig == best:
                    starts.append(order)
        return starts


def _propagate(s1: _Shape, s2: _Shape, order1: Sequence[int], order2: Sequence[int]) -> Optional[Dict[int, int]]:
    mapping = dict(zip(order1, order2))
    used = set(order2)
    start1 = s1.index[sum(1 << (v - 1) for v in order1)]
    start2 = s2.index[sum(1 << (v - 1) for v in order2)]
    image = {start1: start2}
    queue = deque([start1])
    while queue:
        i = queue.popleft()
        i2 = image[i]
        for v in from_mask(s1.masks[i]):
            j, u = s1.neighbour(i, v)
            j2, w = s2.neighbour(i2, mapping[v])
            if u in mapping:
                if mapping[u] != w:
                    return None
            else:
                if w in used or s1.vsig[u] != s2.vsig[w]:
                    return None
                mapping[u] = w
                used.add(w)
            if j in image:
                if image[j] != j2:
                    return None
            else:
                image[j] = j2
                queue.append(j)
    if len(mapping) != len(s1.vsig):
        return None
    target = set(s2.masks)
    for f in s1.M.facets:
        if sum(1 << (mapping[v] - 1) for v in f) not in target:
            return None
    return mapping


def are_isomorphic(M1: SimplicialComplex, M2: SimplicialComplex) -> Optional[Dict[int, int]]:
    """A vertex bijection carrying the facets of M1 onto those of M2, or None."""
    if M1.d != M2.d or len(M1.facets) != len(M2.facets):
        return None
    if len(M1.vertices) != len(M2.vertices):
        return None
    if set(M1.facets) == set(M2.facets):
        return {v: v for v in M1.vertices}
    if f_vector(M1) != f_vector(M2) or as_determinant(M1) != as_determinant(M2):
        return None
    s1, s2 = _Shape(M1), _Shape(M2)
    if sorted(s1.vsig.values()) != sorted(s2.vsig.values()):
        return None
    # start from the facet of M1 whose vertex signatures are rarest in M2
    counts: Dict[tuple, int] = {}
    for f in M2.facets:
        key = tuple(sorted(s2.vsig[v] for v in f))
        counts[key] = counts.get(key, 0) + 1
    f1 = min(M1.facets, key=lambda f: (counts.get(tuple(sorted(s1.vsig[v] for v in f)), 0), f))
    key1 = tuple(sorted(s1.vsig[v] for v in f1))
    if key1 not in counts:
        return None
    for f2 in M2.facets:
        if tuple(sorted(s2.vsig[v] for v in f2)) != key1:
            continue
        for order2 in permutations(f2):
            if any(s1.vsig[a] != s2.vsig[b] for a, b in zip(f1, order2)):
                continue
            mapping = _propagate(s1, s2, f1, order2)
            if mapping is not None:
                return mapping
    return None


def _relabel_sequence(shape: _Shape, order: Sequence[int], best: Optional[list]):
    """BFS relabelling from a start ordering.

    Returns (sequence, labels), or None as soon as the sequence exceeds ``best``.
    """
    labels = {v: i for i, v in enumerate(order, 1)}
    start = shape.index[sum(1 << (v - 1) for v in order)]
    seen = {start}
    queue = deque([start])
    seq = [tuple(range(1, len(order) + 1))]
    tied = best is not None
    if tied and seq[0] != best[0]:
        if seq[0] > best[0]:
            return None
        tied = False
    nxt = len(order) + 1
    while queue:
        i = queue.popleft()
        for v in sorted(from_mask(shape.masks[i]), key=labels.__getitem__):
            j, u = shape.neighbour(i, v)
            if u not in labels:
                labels[u] = nxt
                nxt += 1
            if j in seen:
                continue
            seen.add(j)
            queue.append(j)
            item = tuple(sorted(labels[x] for x in from_mask(shape.masks[j])))
            if tied:
                ref = best[len(seq)]
                if item > ref:
                    return None
                if item < ref:
                    tied = False
            seq.append(item)
    return seq, labels


def canonical_form(M: SimplicialComplex) -> List[Tuple[int, ...]]:
    shape = _Shape(M)
    best: Optional[list] = None
    best_labels: Optional[Dict[int, int]] = None
    covered = set()
    automorphisms: List[Dict[int, int]] = []
    for order in shape.best_starts():
        if order in covered:
            continue
        covered.add(order)
        out = _relabel_sequence(shape, order, best)
        if out is None:
            continue
        seq, labels = out
        if best is None or seq < best:
            best, best_labels = seq, labels
            continue
        # equal sequences: the two labellings differ by an automorphism
        by_label = {lab: v for v, lab in best_labels.items()}
        aut = {v: by_label[lab] for v, lab in labels.items()}
        automorphisms.append(aut)
        frontier = list(covered)
        while frontier:
            nxt = []
            for start in frontier:
                for a in automorphisms:
                    img = tuple(a[v] for v in start)
                    if img not in covered:
                        covered.add(img)
                        nxt.append(img)
            frontier = nxt
    LOGGER(__name__).debug(f"canonical form found with {len(automorphisms)} automorphisms")
    return best


def canonical_key(M: SimplicialComplex) -> bytes:
    fv = f_vector(M)
    det = as_determinant(M)
    if len(M.vertices) == M.d + 2 and len(M.facets) == M.d + 2:
        seq = [tuple(x for x in range(1, M.d + 3) if x != skip) for skip in range(M.d + 2, 0, -1)]
    else:
        seq = canonical_form(M)
    text = f"{M.d}|{','.join(map(str, fv))}|{det}|" + ";".join(
        ",".join(map(str, f)) for f in seq
    )
    return text.encode()


def key_digest(key: bytes) -> str:
    return hashlib.sha256(key).hexdigest()


def kuehnel_bound_check(n: int, chi: int) -> bool:
    return comb(n - 4, 3) >= 10 * (chi - 2)


class BoundVerdict(str, Enum):
    must_be_sphere = "must_be_sphere"
    sphere_or_projective_like = "sphere_or_projective_like"
    unconstrained = "unconstrained"


def brehm_kuehnel_bound(n: int, d: int) -> BoundVerdict:
    bound = 3 * ceil(d / 2) + 3
    if n < bound:
        return BoundVerdict.must_be_sphere
    if n == bound and d % 2 == 0:
        if d in (2, 4, 8, 16):
            return BoundVerdict.sphere_or_projective_like
        return BoundVerdict.must_be_sphere
    return BoundVerdict.unconstrained


STATUSES = ("candidate", "verified-manifold", "sphere")


@dataclass
class ManifoldRecord:
    symbol: str
    group: str
    n: int
    d: int
    orbit_reps: List[Tuple[Tuple[int, ...], int]]
    f_vector: Tuple[int, ...]
    as_det: int
    status: str = "candidate"
    homology: Optional[dict] = None
    key: str = ""
    generators: List[str] = field(default_factory=list)
    group_index: int = 0
    seed: Optional[int] = None
    remarks: str = ""

    @property
    def is_typed(self) -> bool:
        return self.status.startswith("typed:")

    @property
    def type_label(self) -> Optional[str]:
        return self.status[len("typed:"):] if self.is_typed else None

    def orbit_text(self) -> str:
        return " ".join(format_orbit(rep, size) for rep, size in self.orbit_reps)

    def with_symbol(self, k: int) -> "ManifoldRecord":
        self.symbol = format_symbol(self.d, self.n, self.group_index, k)
        return self

    def to_dict(self) -> dict:
        return {
            "symbol": self.symbol,
            "group": self.group,
            "group_index": self.group_index,
            "generators": list(self.generators),
            "n": self.n,
            "d": self.d,
            "orbit_reps": [[list(rep), size] for rep, size in self.orbit_reps],
            "f_vector": list(self.f_vector),
            "as_det": str(self.as_det),
            "status": self.status,
            "homology": self.homology,
            "key": self.key,
            "seed": self.seed,
            "remarks": self.remarks,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ManifoldRecord":
        return cls(
            symbol=data["symbol"],
            group=data["group"],
            n=data["n"],
            d=data["d"],
            orbit_reps=[(tuple(rep), size) for rep, size in data["orbit_reps"]],
            f_vector=tuple(data["f_vector"]),
            as_det=int(data["as_det"]),
            status=data.get("status", "candidate"),
            homology=data.get("homology"),
            key=data.get("key", ""),
            generators=list(data.get("generators", [])),
            group_index=data.get("group_index", 0),
            seed=data.get("seed"),
            remarks=data.get("remarks", ""),
        )

    def to_complex(self):
        gens = tuple(parse_cycles(g, self.n) for g in self.generators)
        G = PermutationGroup(self.n, gens, self.group)
        return from_orbits(G, [rep for rep, _ in self.orbit_reps])


def type_label(
    M: SimplicialComplex, profile: Optional[HomologyProfile] = None, sphere: bool = False
) -> str:
    """Name of the manifold type when it is recognized, otherwise its homology tuple."""
    d = M.d
    if sphere:
        return f"S^{d}"
    if d == 2:
        return surface_type(M)
    profile = profile or integer_homology(M)
    if (
        not profile.z2_only
        and profile.betti == [1, 1] + [0] * (d - 3) + [1, 1]
        and not any(profile.torsion)
        and abelianization(pi1_presentation(M)) == (1, [])
    ):
        return f"S^{d - 1}xS^1"
    return format_homology(profile)
