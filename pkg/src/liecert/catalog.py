"""Builtin Lie algebras with frozen basis conventions.

* ``gl(n)``: matrix units ``E_ij`` in row-major order.
* ``so(n)``: ``F_ij = E_ij - E_ji`` for ``i < j`` in lexicographic order.
* ``sp(2n)``: matrices ``[[A, B], [C, -A^T]]`` preserving ``Omega(x, y) = x^T J y``
  with ``J = [[0, I], [-I, 0]]``; basis ``A_ij`` (row-major), then ``B_ij``
  and ``C_ij`` for ``i <= j`` (symmetric units).
* ``heisenberg(m)``: ``xi_1..xi_2m, e`` with ``[xi_i, xi_{m+i}] = e``.
* semidirect sums ``k + V``: the basis of ``k`` first, then the standard
  basis ``f_1..f_d`` of ``V`` with ``[K, f_i] = K f_i``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import LieAlgebra
from .errors import InputError

Mat = tuple[tuple[Fraction, ...], ...]


def _mat(rows) -> Mat:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def _unit(n: int, i: int, j: int) -> list[list[Fraction]]:
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(1)
    return m


def _commutator(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    ab = linalg.matmul(a, b)
    ba = linalg.matmul(b, a)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]


class _Coordinates:
    """Solve ``M = sum c_a B_a`` for matrices in the span of a fixed basis."""

    def __init__(self, basis: Sequence[Mat]):
        self.flat = [[x for row in b for x in row] for b in basis]
        _, pivots = linalg.rref(linalg.transpose(self.flat))
        if len(pivots) != len(basis):
            raise InputError("basis matrices are linearly dependent")
        ech, cols = linalg.rref(self.flat)
        self.cols = cols
        sub = [[self.flat[a][c] for c in cols] for a in range(len(basis))]
        self.inv = linalg.inverse(sub)

    def __call__(self, m: Sequence[Sequence]) -> list[Fraction]:
        flat = [Fraction(x) for row in m for x in row]
        target = [flat[c] for c in self.cols]
        coeffs = [sum((t * self.inv[r][a] for r, t in enumerate(target)), Fraction(0))
                  for a in range(len(self.inv))]
        recon = [sum((c * f[p] for c, f in zip(coeffs, self.flat)), Fraction(0)) for p in range(len(flat))]
        if recon != flat:
            raise InputError("matrix is not in the span of the basis")
        return coeffs


def matrix_algebra(basis: Sequence[Sequence[Sequence]], names: Sequence[str], name: str = "",
                   meta: dict | None = None) -> LieAlgebra:
    """Structure constants of the linear span of ``basis`` under the commutator."""
    mats = [_mat(b) for b in basis]
    coords = _Coordinates(mats)
    brackets = {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            c = coords(_commutator(mats[a], mats[b]))
            row = {k: x for k, x in enumerate(c) if x != 0}
            if row:
                brackets[(a, b)] = row
    info = {"matrices": tuple(mats), "matrix_size": len(mats[0])}
    info.update(meta or {})
    return LieAlgebra.from_brackets(names, brackets, name, info)


def _label(prefix: str, i: int, j: int, n: int) -> str:
    return f"{prefix}{i + 1}{j + 1}" if n < 10 else f"{prefix}{i + 1}_{j + 1}"


def gl(n: int) -> LieAlgebra:
    _size(n, 1)
    pairs = [(i, j) for i in range(n) for j in range(n)]
    return matrix_algebra([_unit(n, i, j) for i, j in pairs], [_label("E", i, j, n) for i, j in pairs],
                          f"gl({n})", {"kind": "gl", "size": n})


def so_basis(n: int) -> tuple[list[tuple[int, int]], list[list[list[Fraction]]]]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mats = []
    for i, j in pairs:
        m = _unit(n, i, j)
        m[j][i] = Fraction(-1)
        mats.append(m)
    return pairs, mats


def so(n: int) -> LieAlgebra:
    _size(n, 2)
    pairs, mats = so_basis(n)
    return matrix_algebra(mats, [_label("F", i, j, n) for i, j in pairs], f"so({n})", {"kind": "so", "size": n})


def symplectic_form(n: int) -> list[list[Fraction]]:
    """``J`` with ``Omega(x, y) = x^T J y`` on ``Q^{2n}``."""
    J = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        J[i][n + i] = Fraction(1)
        J[n + i][i] = Fraction(-1)
    return J


def sp_basis(n: int) -> tuple[list[str], list[list[list[Fraction]]]]:
    size = 2 * n
    names, mats = [], []
    for i in range(n):
        for j in range(n):
            m = _unit(size, i, j)
            m[n + j][n + i] -= 1
            names.append(_label("A", i, j, n))
            mats.append(m)
    for block, prefix in (((0, n), "B"), ((n, 0), "C")):
        r0, c0 = block
        for i in range(n):
            for j in range(i, n):
                m = _unit(size, r0 + i, c0 + j)
                m[r0 + j][c0 + i] = Fraction(1)
                names.append(_label(prefix, i, j, n))
                mats.append(m)
    return names, mats


def sp(n: int) -> LieAlgebra:
    """``sp(2n)``; the size parameter is ``n``."""
    _size(n, 1)
    names, mats = sp_basis(n)
    return matrix_algebra(mats, names, f"sp({2 * n})", {"kind": "sp", "size": n, "form": _mat(symplectic_form(n))})


def abelian(n: int) -> LieAlgebra:
    _size(n, 1)
    return LieAlgebra.from_brackets([f"a{i + 1}" for i in range(n)], {}, f"abelian({n})", {"kind": "abelian", "size": n})


def heisenberg(m: int) -> LieAlgebra:
    _size(m, 1)
    names = [f"xi{i + 1}" for i in range(2 * m)] + ["e"]
    brackets = {(i, m + i): {2 * m: 1} for i in range(m)}
    return LieAlgebra.from_brackets(names, brackets, f"heisenberg({m})", {"kind": "heisenberg", "size": m})


def semidirect(k: LieAlgebra, rep: Sequence[Sequence[Sequence]], name: str = "",
               v_names: Sequence[str] | None = None, meta: dict | None = None) -> LieAlgebra:
    """``k + V`` for the representation ``rep[a]`` = matrix of basis element ``a``.

    The homomorphism property ``rho([K_a, K_b]) = [rho_a, rho_b]`` is checked.
    """
    mats = [_mat(r) for r in rep]
    if len(mats) != k.dim:
        raise InputError("need one representation matrix per basis element of k")
    d = len(mats[0])
    if any(len(m) != d or any(len(r) != d for r in m) for m in mats):
        raise InputError("representation matrices must be square of equal size")
    for a in range(k.dim):
        for b in range(a + 1, k.dim):
            lhs = [[Fraction(0)] * d for _ in range(d)]
            for c, x in k.bracket_basis(a, b).items():
                lhs = [[p + x * q for p, q in zip(r1, r2)] for r1, r2 in zip(lhs, mats[c])]
            if lhs != _commutator(mats[a], mats[b]):
                raise InputError(f"representation fails the homomorphism check at ({a + 1}, {b + 1})")
    n = k.dim
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(n):
        for b in range(a + 1, n):
            row = k.bracket_basis(a, b)
            if row:
                brackets[(a, b)] = dict(row)
        for i in range(d):
            row = {n + l: mats[a][l][i] for l in range(d) if mats[a][l][i] != 0}
            if row:
                brackets[(a, n + i)] = row
    names = list(k.basis_names) + list(v_names or [f"f{i + 1}" for i in range(d)])
    info = {"k_dim": n, "v_dim": d, "rep": tuple(mats), "k_name": k.name}
    info.update(meta or {})
    return LieAlgebra.from_brackets(names, brackets, name or f"{k.name}+Q^{d}", info)


def _standard(A: LieAlgebra) -> list[Mat]:
    return list(A.meta["matrices"])


def euclidean(n: int) -> LieAlgebra:
    """``e(n) = so(n) + Q^n``."""
    _size(n, 2)
    k = so(n)
    return semidirect(k, _standard(k), f"e({n})", [f"v{i + 1}" for i in range(n)],
                      {"kind": "e", "size": n, "k_matrices": k.meta["matrices"]})


def sp_affine(n: int) -> LieAlgebra:
    """``sp(2n) + Q^{2n}``."""
    _size(n, 1)
    k = sp(n)
    return semidirect(k, _standard(k), f"sp({2 * n})+Q^{2 * n}", [f"v{i + 1}" for i in range(2 * n)],
                      {"kind": "sp_affine", "size": n, "k_matrices": k.meta["matrices"], "form": k.meta["form"]})


def aff(n: int) -> LieAlgebra:
    """``aff(n) = gl(n) + Q^n``."""
    _size(n, 1)
    k = gl(n)
    return semidirect(k, _standard(k), f"aff({n})", [f"v{i + 1}" for i in range(n)],
                      {"kind": "aff", "size": n, "k_matrices": k.meta["matrices"]})


def direct_sum(*parts: LieAlgebra) -> LieAlgebra:
    if not parts:
        raise InputError("direct_sum needs at least one summand")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    names: list[str] = []
    offset = 0
    for p in parts:
        for (i, j, k), c in p.structure.items():
            if i < j:
                brackets.setdefault((offset + i, offset + j), {})[offset + k] = c
        names.extend(p.basis_names)
        offset += p.dim
    if len(set(names)) != len(names):
        names = [f"{n}_{t}" for t, p in enumerate(parts) for n in p.basis_names]
    return LieAlgebra.from_brackets(names, brackets, "+".join(p.name for p in parts), {"kind": "direct_sum"})


CATALOG = {
    "abelian": abelian,
    "heisenberg": heisenberg,
    "gl": gl,
    "so": so,
    "sp": sp,
    "e": euclidean,
    "sp_affine": sp_affine,
    "aff": aff,
}


def _size(n, minimum: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise InputError(f"invalid size {n!r} (need an integer >= {minimum})")


def catalog(name: str, n: int | None = None, **kwargs) -> LieAlgebra:
    """Look up a builtin algebra.

    ``direct_sum`` takes ``parts=[...]``; ``semidirect`` takes ``k=...`` and
    ``rep=[...]``.  Everything else takes the size parameter ``n``.
    """
    if name == "direct_sum":
        return direct_sum(*kwargs["parts"])
    if name == "semidirect":
        return semidirect(kwargs["k"], kwargs["rep"], kwargs.get("label", ""))
    try:
        ctor = CATALOG[name]
    except KeyError:
        raise InputError(f"unknown algebra {name!r}") from None
    return ctor(n)
