"""Exact integer linear algebra: Bareiss determinants, Smith normal forms, GF(2) ranks.

Matrices come in as numpy arrays or nested lists and are reduced on Python
integers, so entries never overflow.
"""

from __future__ import annotations

from math import gcd
from typing import Dict, Iterable, List, Sequence

import numpy as np

SparseRows = Dict[int, Dict[int, int]]


def _as_lists(matrix) -> List[List[int]]:
    if isinstance(matrix, np.ndarray):
        return [[int(x) for x in row] for row in matrix.tolist()]
    return [[int(x) for x in row] for row in matrix]


def bareiss_determinant(matrix) -> int:
    """Fraction-free Gaussian elimination; every intermediate value is an exact minor."""
    a = _as_lists(matrix)
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def to_sparse_rows(matrix) -> SparseRows:
    rows: SparseRows = {}
    for i, row in enumerate(_as_lists(matrix)):
        entries = {j: x for j, x in enumerate(row) if x}
        if entries:
            rows[i] = entries
    return rows


def _eliminate_units(rows: SparseRows) -> int:
    """Pivot on +-1 entries until none is left; returns the number of unit pivots."""
    cols: Dict[int, set] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)
    rank = 0
    changed = True
    while changed:
        changed = False
        for r in sorted(rows):
            prow = rows.get(r)
            if prow is None:
                continue
            best = None
            for c, v in prow.items():
                if v == 1 or v == -1:
                    if best is None or len(cols[c]) < len(cols[best]):
                        best = c
            if best is None:
                continue
            c = best
            v = prow[c]
            del rows[r]
            for c2 in prow:
                cols[c2].discard(r)
            for i in list(cols[c]):
                row_i = rows[i]
                factor = row_i[c] * v
                for c2, x in prow.items():
                    new = row_i.get(c2, 0) - factor * x
                    if new:
                        if c2 not in row_i:
                            cols[c2].add(i)
                        row_i[c2] = new
                    elif c2 in row_i:
                        del row_i[c2]
                        cols[c2].discard(i)
                if not row_i:
                    del rows[i]
            del cols[c]
            rank += 1
            changed = True
    return rank


def _dense_diagonal(a: List[List[int]]) -> List[int]:
    """Diagonalize by unimodular row and column operations, smallest pivot first."""
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (pivot is None or abs(x) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        row_i, row_t = a[i], a[t]
                        for j in range(t, n):
                            row_i[j] -= q * row_t[j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        clean = False
            if clean:
                break
            # move the smallest remainder in row t / column t onto the diagonal
            best = (t, t)
            for i in range(t + 1, m):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t + 1, n):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariant_factors(diagonal: Iterable[int]) -> List[int]:
    """Normalize a diagonal so that every entry divides the next one."""
    d = sorted(x for x in diagonal if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def smith_normal_form(matrix) -> List[int]:
    """Nonzero invariant factors of an integer matrix (dense or sparse rows)."""
    rows = matrix if isinstance(matrix, dict) else to_sparse_rows(matrix)
    rows = {i: dict(r) for i, r in rows.items()}
    units = _eliminate_units(rows)
    if not rows:
        return [1] * units
    col_ids = sorted({j for r in rows.values() for j in r})
    col_pos = {j: k for k, j in enumerate(col_ids)}
    dense = []
    for i in sorted(rows):
        line = [0] * len(col_ids)
        for j, x in rows[i].items():
            line[col_pos[j]] = x
        dense.append(line)
    return [1] * units + invariant_factors(_dense_diagonal(dense))


def integer_rank_and_torsion(matrix) -> tuple[int, List[int]]:
    factors = smith_normal_form(matrix)
    return len(factors), [x for x in factors if x > 1]


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over the two-element field of bit-packed rows."""
    basis: Dict[int, int] = {}
    rank = 0
    for v in rows:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                rank += 1
                break
            v ^= b
    return rank


def pack_gf2_columns(columns: Sequence[Sequence[int]]) -> List[int]:
    """Bit rows from index lists of odd entries."""
    packed = []
    for col in columns:
        v = 0
        for i in col:
            v ^= 1 << i
        packed.append(v)
    return packed
