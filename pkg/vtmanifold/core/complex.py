from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from ..utils.exceptions import ComplexError, NotPseudomanifold, SubsetSizeError
from .groups import Permutation, PermutationGroup
from .orbits import _closure, from_mask, mask_actions, to_mask

Face = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Pure complex on the labels 1..n; ``facets`` is kept lex-sorted."""

    n: int
    d: int
    facets: Tuple[Face, ...]

    def __post_init__(self):
        facets = tuple(sorted(tuple(sorted(f)) for f in self.facets))
        object.__setattr__(self, "facets", facets)
        if not facets:
            raise ComplexError("a complex needs at least one facet")
        for f in facets:
            if len(f) != self.d + 1:
                raise ComplexError(f"facet {list(f)} does not have {self.d + 1} vertices")
            if len(set(f)) != len(f):
                raise ComplexError(f"facet {list(f)} repeats a vertex")
            if f and not (1 <= f[0] and f[-1] <= self.n):
                raise ComplexError(f"facet {list(f)} uses labels outside 1..{self.n}")
        for a, b in zip(facets, facets[1:]):
            if a == b:
                raise ComplexError(f"facet {list(a)} is listed twice")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], n: Optional[int] = None) -> "SimplicialComplex":
        facets = [tuple(sorted(f)) for f in facets]
        if not facets:
            raise ComplexError("a complex needs at least one facet")
        top = max((max(f) for f in facets if f), default=0)
        return cls(n if n is not None else top, len(facets[0]) - 1, tuple(facets))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(to_mask(f) for f in self.facets)

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def is_spanning(self) -> bool:
        return len(self.vertices) == self.n

    @cached_property
    def ridge_map(self) -> Dict[int, List[int]]:
        """Ridge mask -> indices of the facets containing it."""
        out: Dict[int, List[int]] = {}
        for i, m in enumerate(self.masks):
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                out.setdefault(m ^ low, []).append(i)
        return out

    def faces(self, k: int) -> List[Face]:
        """All faces with k vertices, lex-sorted."""
        if k == 0:
            return [()]
        seen = set()
        for f in self.facets:
            seen.update(combinations(f, k))
        return sorted(seen)

    def has_face(self, face: Iterable[int]) -> bool:
        m = to_mask(face)
        return any(f & m == m for f in self.masks)

    def __len__(self) -> int:
        return len(self.facets)


def from_orbits(G: PermutationGroup, reps: Sequence[Iterable[int]]) -> SimplicialComplex:
    reps = [tuple(sorted(r)) for r in reps]
    if not reps:
        raise SubsetSizeError("at least one orbit representative is needed")
    k = len(reps[0])
    actions = mask_actions(G)
    masks = set()
    for r in reps:
        if len(r) != k:
            raise SubsetSizeError(f"representative {list(r)} does not have {k} vertices")
        if r[0] < 1 or r[-1] > G.degree:
            raise SubsetSizeError(f"representative {list(r)} leaves 1..{G.degree}")
        masks |= _closure(to_mask(r), actions)
    return SimplicialComplex(G.degree, k - 1, tuple(from_mask(m) for m in masks))


def f_vector(M: SimplicialComplex) -> Tuple[int, ...]:
    return tuple(len(M.faces(k)) for k in range(1, M.d + 2))


def euler_characteristic(M: SimplicialComplex) -> int:
    return sum((-1) ** i * f for i, f in enumerate(f_vector(M)))


def is_neighborly(M: SimplicialComplex) -> int:
    """Largest k such that every k-subset of the vertices is a face."""
    nv = len(M.vertices)
    k = 0
    for i, f in enumerate(f_vector(M), 1):
        if f != comb(nv, i):
            break
        k = i
    return k


def _check_face(M: SimplicialComplex, face: Iterable[int]) -> Face:
    face = tuple(sorted(face))
    if not M.has_face(face):
        raise ComplexError(f"{list(face)} is not a face of the complex")
    return face


def star(M: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    face = _check_face(M, face)
    m = to_mask(face)
    return SimplicialComplex(M.n, M.d, tuple(f for f, fm in zip(M.facets, M.masks) if fm & m == m))


def link(M: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    face = _check_face(M, face)
    m = to_mask(face)
    return SimplicialComplex(
        M.n,
        M.d - len(face),
        tuple(from_mask(fm & ~m) for fm in M.masks if fm & m == m),
    )


def bad_ridges(M: SimplicialComplex) -> List[Tuple[Face, int]]:
    return sorted(
        (from_mask(r), len(fs)) for r, fs in M.ridge_map.items() if len(fs) != 2
    )


def is_pseudomanifold(M: SimplicialComplex) -> bool:
    return all(len(fs) == 2 for fs in M.ridge_map.values())


def require_pseudomanifold(M: SimplicialComplex) -> None:
    bad = bad_ridges(M)
    if bad:
        raise NotPseudomanifold(*bad[0])


def is_connected(M: SimplicialComplex) -> bool:
    vertices = M.vertices
    if not vertices:
        return True
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in M.facets:
        root = find(f[0])
        for v in f[1:]:
            parent[find(v)] = root
    return len({find(v) for v in vertices}) == 1


def facet_components(M: SimplicialComplex) -> int:
    """Number of classes of facets joined by paths across ridges."""
    seen = [False] * len(M.facets)
    parts = 0
    for start in range(len(M.facets)):
        if seen[start]:
            continue
        parts += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            i = queue.popleft()
            m = M.masks[i]
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                for j in M.ridge_map[m ^ low]:
                    if not seen[j]:
                        seen[j] = True
                        queue.append(j)
    return parts


def is_strongly_connected(M: SimplicialComplex) -> bool:
    return facet_components(M) == 1


def _position_sign(facet: Face, omitted: int) -> int:
    return -1 if facet.index(omitted) % 2 else 1


def is_orientable(M: SimplicialComplex) -> bool:
    require_pseudomanifold(M)
    if not is_strongly_connected(M):
        raise ComplexError("orientability is only decided for strongly connected complexes")
    sign = {0: 1}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        f = M.facets[i]
        m = M.masks[i]
        for v in f:
            ridge = m & ~(1 << (v - 1))
            a, b = M.ridge_map[ridge]
            j = b if a == i else a
            g = M.facets[j]
            w = from_mask(M.masks[j] & ~ridge)[0]
            # induced orientations on the shared ridge must be opposite
            want = -sign[i] * _position_sign(f, v) * _position_sign(g, w)
            if j in sign:
                if sign[j] != want:
                    return False
            else:
                sign[j] = want
                queue.append(j)
    return True


def sphere_euler(k: int) -> int:
    """Euler characteristic of the k-sphere."""
    return 1 + (-1) ** k


class Step3Result(NamedTuple):
    passed: bool
    reason: str

    def __bool__(self) -> bool:
        return self.passed


def step3_tests(M: SimplicialComplex, d: Optional[int] = None) -> Step3Result:
    d = M.d if d is None else d
    if not is_connected(M):
        return Step3Result(False, "complex is disconnected")
    v0 = M.vertices[0]
    L = link(M, (v0,))
    if not is_connected(L):
        return Step3Result(False, f"link of vertex {v0} is disconnected")
    if euler_characteristic(L) != sphere_euler(d - 1):
        return Step3Result(
            False, f"link of vertex {v0} has Euler characteristic {euler_characteristic(L)}"
        )
    for size, needed in ((2, 3), (3, 4)):
        if d < needed:
            break
        for face in M.faces(size):
            if face[0] != v0:
                continue
            L = link(M, face)
            if not is_connected(L):
                return Step3Result(False, f"link of {list(face)} is disconnected")
            if euler_characteristic(L) != sphere_euler(d - size):
                return Step3Result(
                    False,
                    f"link of {list(face)} has Euler characteristic {euler_characteristic(L)}",
                )
    return Step3Result(True, "ok")


def relabel(M: SimplicialComplex, mapping: Union[Mapping[int, int], Permutation]) -> SimplicialComplex:
    if isinstance(mapping, Permutation):
        facets = tuple(tuple(mapping(v) for v in f) for f in M.facets)
        return SimplicialComplex(mapping.degree, M.d, facets)
    facets = tuple(tuple(mapping[v] for v in f) for f in M.facets)
    return SimplicialComplex.from_facets(facets)


def compact(M: SimplicialComplex) -> SimplicialComplex:
    """Order-preserving relabelling onto 1..f_0."""
    mapping = {v: i for i, v in enumerate(M.vertices, 1)}
    return relabel(M, mapping)


def is_invariant(M: SimplicialComplex, G: PermutationGroup) -> bool:
    masks = set(M.masks)
    for act in mask_actions(G):
        if any(act(m) not in masks for m in masks):
            return False
    return True


def surface_type(M: SimplicialComplex) -> str:
    if M.d != 2:
        raise ComplexError("surface type is only defined for 2-dimensional complexes")
    chi = euler_characteristic(M)
    if is_orientable(M):
        g = (2 - chi) // 2
        return {0: "S^2", 1: "T^2"}.get(g, f"#{g} T^2")
    k = 2 - chi
    return {1: "RP^2", 2: "Klein bottle"}.get(k, f"#{k} RP^2")

