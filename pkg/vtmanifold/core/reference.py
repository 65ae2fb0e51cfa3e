"""Reference triangulations and the small named fixtures used for identification."""

from __future__ import annotations

import re
from itertools import combinations, product as cartesian
from typing import Callable, Dict, List, Tuple

from ..utils.exceptions import ComplexError
from .complex import SimplicialComplex


def boundary_simplex(d: int) -> SimplicialComplex:
    if d < 0:
        raise ComplexError(f"dimension must be non-negative, got {d}")
    return SimplicialComplex(d + 2, d, tuple(combinations(range(1, d + 3), d + 1)))


def _gale_even(subset: Tuple[int, ...], n: int) -> bool:
    members = set(subset)
    gaps = [v for v in range(1, n + 1) if v not in members]
    for a, b in zip(gaps, gaps[1:]):
        if (b - a - 1) % 2:
            return False
    return True


def cyclic_polytope_boundary(dim: int, n: int) -> SimplicialComplex:
    """Boundary of the cyclic dim-polytope with n vertices, by Gale's evenness condition."""
    if dim < 1 or n < dim + 1:
        raise ComplexError(f"C_{dim}({n}) needs at least {dim + 1} vertices")
    facets = tuple(s for s in combinations(range(1, n + 1), dim) if _gale_even(s, n))
    return SimplicialComplex(n, dim - 1, facets)


def cross_polytope_boundary(k: int) -> SimplicialComplex:
    if k < 1:
        raise ComplexError(f"cross-polytope dimension must be positive, got {k}")
    facets = tuple(
        tuple(i + k * pick for i, pick in enumerate(choice, 1))
        for choice in cartesian((0, 1), repeat=k)
    )
    return SimplicialComplex(2 * k, k - 1, facets)


def polygon(k: int) -> SimplicialComplex:
    if k < 3:
        raise ComplexError(f"a polygon needs at least 3 vertices, got {k}")
    return SimplicialComplex(k, 1, tuple((i, i % k + 1) for i in range(1, k + 1)))


def point() -> SimplicialComplex:
    return SimplicialComplex(1, 0, ((1,),))


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    shift = K1.n
    facets = tuple(
        f1 + tuple(v + shift for v in f2) for f1 in K1.facets for f2 in K2.facets
    )
    return SimplicialComplex(K1.n + K2.n, K1.d + K2.d + 1, facets)


def cone(K: SimplicialComplex) -> SimplicialComplex:
    return join(K, point())


def connected_sum(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Remove the lex-first facet of each and glue along their boundaries in vertex order."""
    if K1.d != K2.d:
        raise ComplexError(f"cannot glue a {K1.d}-complex to a {K2.d}-complex")
    F1, F2 = K1.facets[0], K2.facets[0]
    mapping = dict(zip(F2, F1))
    rest = [v for v in K2.vertices if v not in mapping]
    mapping.update({v: K1.n + i for i, v in enumerate(rest, 1)})
    facets = list(K1.facets[1:])
    facets.extend(tuple(mapping[v] for v in f) for f in K2.facets[1:])
    return SimplicialComplex(K1.n + len(rest), K1.d, tuple(facets))


def product(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of K1 x K2; vertex (a, b) is labelled (a - 1) * n2 + b."""
    n2 = K2.n
    facets = set()
    for f1 in K1.facets:
        for f2 in K2.facets:
            p, q = len(f1) - 1, len(f2) - 1
            # a lattice path is fixed by which of its p + q steps move in the first factor
            for steps in combinations(range(p + q), p):
                a = b = 0
                path = [(f1[0] - 1) * n2 + f2[0]]
                for s in range(p + q):
                    if s in steps:
                        a += 1
                    else:
                        b += 1
                    path.append((f1[a] - 1) * n2 + f2[b])
                facets.add(tuple(path))
    return SimplicialComplex(K1.n * n2, K1.d + K2.d, tuple(facets))


MOEBIUS_TORUS = (
    (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 7), (1, 5, 6), (1, 5, 7), (2, 3, 5),
    (2, 3, 7), (2, 4, 5), (2, 6, 7), (3, 4, 6), (3, 5, 6), (4, 5, 7), (4, 6, 7),
)

RP2_6 = (
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
)


def moebius_torus() -> SimplicialComplex:
    return SimplicialComplex(7, 2, MOEBIUS_TORUS)


def torus_3x3() -> SimplicialComplex:
    def label(i, j):
        return 3 * (i % 3) + j % 3 + 1

    facets = []
    for i in range(3):
        for j in range(3):
            facets.append((label(i, j), label(i + 1, j), label(i + 1, j + 1)))
            facets.append((label(i, j), label(i, j + 1), label(i + 1, j + 1)))
    return SimplicialComplex(9, 2, tuple(facets))


def rp2_6() -> SimplicialComplex:
    return SimplicialComplex(6, 2, RP2_6)


def octahedron() -> SimplicialComplex:
    return cross_polytope_boundary(3)


def s2xs1() -> SimplicialComplex:
    return product(boundary_simplex(2), polygon(3))


_BUILDERS: Dict[str, Tuple[int, Callable]] = {
    "simplex": (1, boundary_simplex),
    "cyclic": (2, cyclic_polytope_boundary),
    "cross": (1, cross_polytope_boundary),
    "polygon": (1, polygon),
    "point": (0, point),
    "cone": (1, cone),
    "join": (2, join),
    "sum": (2, connected_sum),
    "product": (2, product),
    "torus7": (0, moebius_torus),
    "torus9": (0, torus_3x3),
    "rp2": (0, rp2_6),
    "octahedron": (0, octahedron),
    "s2xs1": (0, s2xs1),
}

REFERENCE_NAMES = tuple(_BUILDERS)

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z][a-z0-9]*)|(.))")


def lookup(name: str, *args):
    """Build a reference by name; numeric families take integers, combinators take complexes."""
    try:
        arity, builder = _BUILDERS[name]
    except KeyError:
        raise ComplexError(
            f"unknown reference {name!r}, expected one of {', '.join(REFERENCE_NAMES)}"
        )
    if len(args) != arity:
        raise ComplexError(f"{name} takes {arity} argument(s), got {len(args)}")
    return builder(*args)


def parse_reference(text: str) -> SimplicialComplex:
    """Evaluate expressions like ``sum(s2xs1, s2xs1)`` or ``cyclic(4, 7)``."""
    tokens: List[Tuple[str, str]] = []
    for number, word, other in _TOKEN.findall(text.strip().lower()):
        if number:
            tokens.append(("int", number))
        elif word:
            tokens.append(("name", word))
        elif other.strip():
            tokens.append(("op", other))
    pos = 0

    def take(kind=None, value=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ComplexError(f"unexpected end of reference {text!r}")
        tok = tokens[pos]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ComplexError(f"unexpected {tok[1]!r} in reference {text!r}")
        pos += 1
        return tok

    def expression():
        kind, value = take()
        if kind == "int":
            return int(value)
        if kind != "name":
            raise ComplexError(f"unexpected {value!r} in reference {text!r}")
        args = []
        if pos < len(tokens) and tokens[pos] == ("op", "("):
            take("op", "(")
            args.append(expression())
            while tokens[pos:pos + 1] == [("op", ",")]:
                take("op", ",")
                args.append(expression())
            take("op", ")")
        return lookup(value, *args)

    result = expression()
    if pos != len(tokens) or not isinstance(result, SimplicialComplex):
        raise ComplexError(f"{text!r} does not describe a single complex")
    return result
