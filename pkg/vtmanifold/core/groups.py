"""Permutation groups of small degree.

Points are labelled 1..n everywhere. Products follow the left-to-right
convention: ``p * q`` applies ``p`` first and then ``q``.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import config

from ..logging import LOGGER
from ..utils.exceptions import (
    CapExceeded,
    CatalogError,
    CycleParseError,
    GroupParamError,
    InvalidPermutation,
)

FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "affine_frobenius")

_CYCLES = re.compile(r"(\(\s*\d+(\s*,\s*\d+)*\s*\))+")
_ONE_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise InvalidPermutation("a permutation needs at least one point")
        if sorted(self.images) != list(range(1, n + 1)):
            raise InvalidPermutation(f"{list(self.images)} is not a bijection on 1..{n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, 1))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        return format_cycles(self)


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise InvalidPermutation("cannot compose permutations of different degree")
    qi = q.images
    return Permutation(tuple(qi[x - 1] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.degree
    for i, img in enumerate(p.images, 1):
        images[img - 1] = i
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


def parse_cycles(text: str, degree: int) -> Permutation:
    if degree < 1:
        raise CycleParseError(f"degree must be positive, got {degree}")
    compact = re.sub(r"\s+", "", text)
    if compact in ("()", ""):
        return Permutation.identity(degree)
    if not _CYCLES.fullmatch(compact):
        raise CycleParseError(f"malformed cycle notation: {text!r}")
    seen = set()
    cycles = []
    for body in _ONE_CYCLE.findall(compact):
        cycle = [int(x) for x in body.split(",")]
        for x in cycle:
            if not 1 <= x <= degree:
                raise CycleParseError(f"point {x} is outside 1..{degree} in {text!r}")
            if x in seen:
                raise CycleParseError(f"point {x} is repeated in {text!r}")
            seen.add(x)
        cycles.append(cycle)
    return Permutation.from_cycles(cycles, degree)


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    generators: Tuple[Permutation, ...]
    name: Optional[str] = None
    order: Optional[int] = field(default=None, compare=False)
    family: Optional[str] = field(default=None, compare=False)
    index: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.generators:
            raise GroupParamError("a group needs at least one generator")
        for g in self.generators:
            if g.degree != self.degree:
                raise InvalidPermutation(
                    f"generator {g} has degree {g.degree}, expected {self.degree}"
                )

    @property
    def label(self) -> str:
        if self.index is not None:
            return f"t{self.degree}n{self.index}"
        return self.name or f"G{self.degree}"

    def generator_cycles(self) -> List[str]:
        return [format_cycles(g) for g in self.generators]


@lru_cache(maxsize=64)
def _closure(gens: Tuple[Tuple[int, ...], ...], cap: int) -> frozenset:
    n = len(gens[0])
    start = tuple(range(1, n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        e = queue.popleft()
        for g in gens:
            prod = tuple(g[x - 1] for x in e)
            if prod not in seen:
                seen.add(prod)
                if len(seen) > cap:
                    raise CapExceeded(cap)
                queue.append(prod)
    return frozenset(seen)


def group_elements(G: PermutationGroup, cap: int = config.GROUP_CAP) -> set:
    gens = tuple(g.images for g in G.generators)
    return {Permutation(e) for e in _closure(gens, cap)}


def group_order(G: PermutationGroup, cap: int = config.GROUP_CAP) -> int:
    if G.order is not None:
        return G.order
    return len(_closure(tuple(g.images for g in G.generators), cap))


def point_orbit(G: PermutationGroup, point: int = 1) -> List[int]:
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in G.generators:
            y = g(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def is_transitive(G: PermutationGroup) -> bool:
    return len(point_orbit(G, 1)) == G.degree


def multiplication_map(n: int, m: int) -> Permutation:
    if n < 2:
        raise GroupParamError(f"modulus must be at least 2, got {n}")
    if gcd(m, n) != 1:
        raise GroupParamError(f"{m} is not a unit modulo {n}")
    return Permutation(tuple((m * k) % n or n for k in range(1, n + 1)))


def _standard_cycle(n: int) -> Permutation:
    return Permutation(tuple(list(range(2, n + 1)) + [1]))


def _reflection(n: int) -> Permutation:
    half = n // 2
    return Permutation.from_cycles([(i, 2 * half + 1 - i) for i in range(1, half + 1)], n)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


def primitive_root(p: int) -> int:
    if not _is_prime(p):
        raise GroupParamError(f"{p} is not prime")
    if p == 2:
        return 1
    factors = {q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)}
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise GroupParamError(f"no primitive root modulo {p}")


def builtin_group(family: str, n: int, **params) -> PermutationGroup:
    if family not in FAMILIES:
        raise GroupParamError(f"unknown group family {family!r}")
    if n < 2:
        raise GroupParamError(f"degree must be at least 2, got {n}")
    a = _standard_cycle(n)
    if family == "cyclic":
        return PermutationGroup(n, (a,), f"C{n}", n, family)
    if family == "dihedral":
        if n < 3:
            raise GroupParamError("dihedral groups need at least 3 points")
        return PermutationGroup(n, (a, _reflection(n)), f"D{n}", 2 * n, family)
    if family == "symmetric":
        gens = (a,) if n == 2 else (a, Permutation.from_cycles([(1, 2)], n))
        return PermutationGroup(n, gens, f"S{n}", factorial(n), family)
    if family == "alternating":
        if n < 3:
            raise GroupParamError("alternating groups need at least 3 points")
        three = Permutation.from_cycles([(1, 2, 3)], n)
        if n % 2:
            gens = (a, three)
        else:
            gens = (Permutation.from_cycles([tuple(range(2, n + 1))], n), three)
        return PermutationGroup(n, gens, f"A{n}", factorial(n) // 2, family)
    k = params.get("k")
    if k is None:
        raise GroupParamError("affine_frobenius needs the parameter k")
    if not _is_prime(n):
        raise GroupParamError(f"affine_frobenius needs a prime degree, got {n}")
    if k < 1 or (n - 1) % k:
        raise GroupParamError(f"k={k} does not divide {n - 1}")
    g = primitive_root(n)
    m = pow(g, (n - 1) // k, n)
    gens = (a,) if m == 1 else (a, multiplication_map(n, m))
    return PermutationGroup(n, gens, f"F{k * n}", k * n, family)


def contains_standard_cycle(G: PermutationGroup, cap: int = config.GROUP_CAP) -> bool:
    n = G.degree
    a = _standard_cycle(n)
    if a in G.generators or G.family in ("cyclic", "dihedral", "symmetric", "affine_frobenius"):
        return True
    if G.family == "alternating":
        return n % 2 == 1
    try:
        return a.images in _closure(tuple(g.images for g in G.generators), cap)
    except CapExceeded:
        return False


def is_full_symmetric_or_alternating(G: PermutationGroup) -> Optional[str]:
    if G.family == "symmetric":
        return "S"
    if G.family == "alternating":
        return "A"
    n = G.degree
    if G.order is not None and n >= 3:
        if G.order == factorial(n):
            return "S"
        if G.order == factorial(n) // 2:
            return "A"
    return None


def load_catalog(
    path: str = config.CATALOG_PATH, cap: int = config.GROUP_CAP, strict: bool = True
) -> List[PermutationGroup]:
    try:
        with open(path, encoding="utf8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as ex:
        raise CatalogError(f"cannot read group catalog {path}: {ex}") from ex
    groups = []
    for record in raw:
        try:
            groups.append(_catalog_group(record, cap))
        except (CatalogError, CycleParseError, InvalidPermutation, GroupParamError) as ex:
            if strict:
                raise CatalogError(f"catalog record {record.get('name')!r}: {ex}") from ex
            LOGGER(__name__).warning(f"Skipping catalog record {record.get('name')!r}: {ex}")
    groups.sort(key=lambda g: (g.degree, g.index))
    LOGGER(__name__).info(f"Loaded {len(groups)} groups from {path}")
    return groups


def _catalog_group(record: Dict, cap: int) -> PermutationGroup:
    try:
        n = int(record["degree"])
        index = int(record["index"])
        name = str(record["name"])
        order = int(record["order"])
        cycles = list(record["generators"])
    except (KeyError, TypeError, ValueError) as ex:
        raise CatalogError(f"incomplete record: {ex}") from ex
    gens = tuple(parse_cycles(c, n) for c in cycles)
    G = PermutationGroup(n, gens, name, None, record.get("family"), index)
    if not is_transitive(G):
        raise CatalogError(f"{name} is not transitive on {n} points")
    try:
        computed = group_order(G, cap)
    except CapExceeded:
        LOGGER(__name__).warning(
            f"{G.label} ({name}) exceeds {cap} elements, trusting declared order {order}"
        )
        computed = order
    if computed != order:
        raise CatalogError(f"{name} has order {computed}, catalog says {order}")
    return PermutationGroup(n, gens, name, order, record.get("family"), index)


# number of transitive permutation groups of each degree, up to conjugacy
TRANSITIVE_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 2, 4: 5, 5: 5, 6: 16, 7: 7, 8: 50, 9: 34, 10: 45, 11: 8,
    12: 301, 13: 9, 14: 63, 15: 104, 16: 1954, 17: 10, 18: 983, 19: 8, 20: 1117,
    21: 164, 22: 59, 23: 7, 24: 25000, 25: 211, 26: 96, 27: 2392, 28: 1854,
    29: 8, 30: 5712, 31: 12,
}


def catalog_coverage(
    catalog: Sequence[PermutationGroup], n: int, groups: Optional[Iterable[str]] = None
) -> Tuple[int, Optional[int]]:
    """(catalog groups of degree n, known number of transitive groups of degree n)."""
    wanted = set(groups) if groups else None
    listed = {
        G.label
        for G in catalog
        if G.degree == n
        and (wanted is None or G.label in wanted or G.name in wanted)
    }
    return len(listed), TRANSITIVE_GROUP_COUNTS.get(n)


_FAMILY_REF = re.compile(r"([CDSAF])(\d+)")
_CATALOG_REF = re.compile(r"t(\d+)n(\d+)")


def find_group(catalog: Sequence[PermutationGroup], ref: str) -> PermutationGroup:
    """Resolve ``t7n4``, a catalog name, or a family reference such as ``D15`` or ``F21``."""
    ref = ref.strip()
    m = _CATALOG_REF.fullmatch(ref)
    if m:
        n, i = int(m.group(1)), int(m.group(2))
        for G in catalog:
            if G.degree == n and G.index == i:
                return G
        raise CatalogError(f"{ref} is not in the group catalog")
    for G in catalog:
        if G.name == ref:
            return G
    m = _FAMILY_REF.fullmatch(ref)
    if not m:
        raise CatalogError(f"unknown group reference {ref!r}")
    letter, num = m.group(1), int(m.group(2))
    if letter == "C":
        return builtin_group("cyclic", num)
    if letter == "D":
        return builtin_group("dihedral", num)
    if letter == "S":
        return builtin_group("symmetric", num)
    if letter == "A":
        return builtin_group("alternating", num)
    for p in sorted((q for q in range(2, num + 1) if num % q == 0 and _is_prime(q)), reverse=True):
        k = num // p
        if (p - 1) % k == 0:
            return builtin_group("affine_frobenius", p, k=k)
    raise CatalogError(f"F{num} is not an affine Frobenius group k*p with k | p-1")
