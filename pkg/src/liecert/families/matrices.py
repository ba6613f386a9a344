"""Matrices with polynomial entries, and the matrix model of a dual point.

A point ``x`` of the dual of a matrix Lie algebra with basis ``K_b`` is
identified with the matrix ``M`` satisfying ``Tr(M K_b) = x_b``; because the
trace form is invariant, polynomials in ``M`` built from traces are
coadjoint-invariant.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .. import linalg
from ..algebra import LieAlgebra
from ..errors import InputError
from ..poly import Polynomial

PMatrix = list[list[Polynomial]]


def zeros(nvars: int, rows: int, cols: int | None = None) -> PMatrix:
    cols = rows if cols is None else cols
    return [[Polynomial.zero(nvars) for _ in range(cols)] for _ in range(rows)]


def constant_matrix(nvars: int, m: Sequence[Sequence]) -> PMatrix:
    return [[Polynomial.constant(nvars, c) for c in row] for row in m]


def identity(nvars: int, n: int, scale: Polynomial | None = None) -> PMatrix:
    one = scale if scale is not None else Polynomial.constant(nvars, 1)
    out = zeros(nvars, n)
    for i in range(n):
        out[i][i] = one
    return out


def add(a: PMatrix, b: PMatrix) -> PMatrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a: PMatrix, b: PMatrix) -> PMatrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(a: PMatrix, c) -> PMatrix:
    return [[x * c for x in r] for r in a]


def matmul(a: PMatrix, b: PMatrix) -> PMatrix:
    nvars = a[0][0].nvars
    cols = list(zip(*b))
    out = []
    for row in a:
        new = []
        for col in cols:
            acc = Polynomial.zero(nvars)
            for x, y in zip(row, col):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def matvec(a: PMatrix, v: Sequence[Polynomial]) -> list[Polynomial]:
    return [sum((x * y for x, y in zip(row, v)), Polynomial.zero(v[0].nvars)) for row in a]


def vecmat(v: Sequence[Polynomial], a: PMatrix) -> list[Polynomial]:
    """Row vector times matrix."""
    return [sum((v[i] * a[i][j] for i in range(len(v))), Polynomial.zero(v[0].nvars)) for j in range(len(a[0]))]


def dot(u: Sequence[Polynomial], w: Sequence) -> Polynomial:
    nvars = u[0].nvars
    return sum((x * y for x, y in zip(u, w)), Polynomial.zero(nvars))


def outer(u: Sequence[Polynomial], w: Sequence[Polynomial]) -> PMatrix:
    return [[x * y for y in w] for x in u]


def transpose(a: PMatrix) -> PMatrix:
    return [list(c) for c in zip(*a)]


def trace(a: PMatrix) -> Polynomial:
    return sum((a[i][i] for i in range(1, len(a))), a[0][0])


def power_traces(a: PMatrix, powers: Sequence[int]) -> dict[int, Polynomial]:
    """``{k: Tr a^k}`` for the requested positive powers, sharing products."""
    out = {}
    top = max(powers)
    p = a
    for k in range(1, top + 1):
        if k > 1:
            p = matmul(p, a)
        if k in powers:
            out[k] = trace(p)
    return out


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def det(a: PMatrix) -> Polynomial:
    """Leibniz expansion; meant for the small sizes used here."""
    n = len(a)
    nvars = a[0][0].nvars
    if n == 0:
        return Polynomial.constant(nvars, 1)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n > 5:
        return _det_laplace(a)
    acc = Polynomial.zero(nvars)
    for p in permutations(range(n)):
        term = None
        for i, j in enumerate(p):
            if a[i][j].is_zero():
                term = None
                break
            term = a[i][j] if term is None else term * a[i][j]
        else:
            if term is not None:
                acc = acc + term * _perm_sign(p)
    return acc


def _det_laplace(a: PMatrix) -> Polynomial:
    n = len(a)
    acc = Polynomial.zero(a[0][0].nvars)
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def pfaffian(a: PMatrix, nvars: int | None = None) -> Polynomial:
    """Pfaffian of an antisymmetric matrix of even size, by row expansion."""
    n = len(a)
    nvars = a[0][0].nvars if n else nvars
    if n % 2:
        raise InputError("Pfaffian needs an even-dimensional matrix")
    if n == 0:
        return Polynomial.constant(nvars, 1)
    acc = Polynomial.zero(nvars)
    for j in range(1, n):
        if a[0][j].is_zero():
            continue
        keep = [t for t in range(1, n) if t != j]
        minor = [[a[r][c] for c in keep] for r in keep]
        term = a[0][j] * pfaffian(minor, nvars)
        acc = acc + term if j % 2 == 1 else acc - term
    return acc


def submatrix(a: PMatrix, size: int) -> PMatrix:
    return [row[:size] for row in a[:size]]


def gram_inverse(mats: Sequence[Sequence[Sequence[Fraction]]]) -> list[list[Fraction]]:
    flat = [[x for row in m for x in row] for m in mats]
    t = [[x for col in zip(*m) for x in col] for m in mats]  # transposes, flattened
    gram = [[sum((p * q for p, q in zip(fa, tb)), Fraction(0)) for tb in t] for fa in flat]
    if linalg.det(gram) == 0:
        raise InputError("trace form is degenerate on this matrix algebra")
    return [list(r) for r in linalg.inverse(gram)]


def dual_matrix(mats: Sequence, nvars: int, offset: int = 0) -> PMatrix:
    """Matrix ``M`` with ``Tr(M K_b) = x_{offset + b}`` for the basis ``K_b``."""
    ginv = gram_inverse(mats)
    size = len(mats[0])
    xs = [Polynomial.var(nvars, offset + b) for b in range(len(mats))]
    coeffs = [sum((xs[a] * ginv[b][a] for a in range(len(mats)) if ginv[b][a]), Polynomial.zero(nvars))
              for b in range(len(mats))]
    out = zeros(nvars, size)
    for b, m in enumerate(mats):
        if coeffs[b].is_zero():
            continue
        for i in range(size):
            for j in range(size):
                if m[i][j]:
                    out[i][j] = out[i][j] + coeffs[b] * m[i][j]
    return out


def matrix_basis(A: LieAlgebra) -> list:
    """The matrices defining ``A`` (or its Levi-type factor for semidirect sums)."""
    if "k_matrices" in A.meta:
        return list(A.meta["k_matrices"])
    if "matrices" in A.meta:
        return list(A.meta["matrices"])
    raise InputError(f"{A.name or 'algebra'} carries no matrix model")


def coadjoint_matrix(A: LieAlgebra, nvars: int | None = None) -> PMatrix:
    """``M(x)`` for a matrix algebra or the ``k``-part of a catalog semidirect sum."""
    return dual_matrix(matrix_basis(A), nvars or A.dim)


def evaluate_matrix(a: PMatrix, point: Sequence) -> list[list[Fraction]]:
    return [[p.evaluate(point) for p in row] for row in a]
