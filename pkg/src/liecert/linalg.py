"""Exact linear algebra over the rationals.

Matrices are plain lists of rows; entries are anything ``Fraction`` accepts.
Every routine copies its input and returns ``Fraction`` entries, so callers
may pass integer matrices freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Iterable[Iterable]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = to_matrix(rows)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Iterable[Iterable]) -> int:
    """Rank by fraction-free elimination (integer inputs stay integral)."""
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0
    if not all(isinstance(x, int) for row in m for x in row):
        return len(rref(m)[1])
    # Bareiss: exact integer elimination with no gcds.
    n_rows, n_cols = len(m), len(m[0])
    r, prev = 0, 1
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, n_rows):
            mi = m[i]
            f = mi[c]
            mi[:] = [(p * a - f * b) // prev for a, b in zip(mi, m[r])]
        prev = p
        r += 1
    return r


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : A x = 0}``; ``ncols`` is required when ``rows`` is empty."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(rows)
    n = len(m[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            vec[pc] = -row[f]
        basis.append(vec)
    return basis


def row_basis(vectors: Iterable[Iterable]) -> list[Vector]:
    """Independent spanning set for the row space, in echelon form."""
    vecs = [v for v in vectors]
    if not vecs:
        return []
    m, pivots = rref(vecs)
    return m[: len(pivots)]


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal independent subset, chosen greedily in order."""
    chosen: list[int] = []
    basis: list[Vector] = []
    for i, v in enumerate(vectors):
        trial = basis + [to_matrix([v])[0]]
        if rank(trial) > len(basis):
            basis = trial
            chosen.append(i)
    return chosen


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """One solution of ``A x = b`` or None when inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    n = len(aug[0]) - 1
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(m, pivots):
        x[pc] = row[n]
    return x


def det(rows: Sequence[Sequence]) -> Fraction:
    m = to_matrix(rows)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def inverse(rows: Sequence[Sequence]) -> Matrix:
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in m]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def in_span(basis: Sequence[Sequence], vec: Sequence) -> bool:
    if not basis:
        return all(x == 0 for x in vec)
    return rank(list(basis) + [list(vec)]) == rank(basis)
