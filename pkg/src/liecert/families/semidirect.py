"""Explicit complete families on ``so(n)+R^n``, ``sp(2n)+R^2n`` and ``gl(n)+R^n``.

A dual point is written ``(M, v)``: ``M`` is the matrix model of the
``k``-coordinates (see :mod:`.matrices`) and ``v`` is built from the
ideal coordinates.  Families parametrized by a real ``lam`` are expanded in
``lam``: an extra variable is appended, and every coefficient of a power of
it becomes a member.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .. import linalg
from ..algebra import LieAlgebra
from ..catalog import aff, euclidean, sp_affine, symplectic_form
from ..errors import InputError, PreconditionError
from ..poly import Polynomial
from . import matrices as mx
from .base import CommutingFamily, make_family

DEFAULT_RETRIES = 16
Matrix = list[list[Fraction]]


def _certify(F: CommutingFamily, seed: int) -> bool:
    from ..verify import certify_rank

    return certify_rank(F, seed)


def _lambda_parts(p: Polynomial) -> list[Polynomial]:
    return list(p.coefficients_in_last().values())


def _layout(A: LieAlgebra) -> tuple[int, int, int]:
    k, d = A.meta["k_dim"], A.meta["v_dim"]
    return k, d, A.dim + 1  # one extra variable for lam


def _constant(nvars: int, m: Sequence[Sequence]) -> mx.PMatrix:
    return mx.constant_matrix(nvars, m)


# numeric projections (used by the identity checks) ---------------------------

def _vec(v) -> list[Fraction]:
    return [Fraction(t) for t in v]


def _mv(m, v) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def project_orthogonal(M: Sequence[Sequence], v: Sequence) -> Matrix:
    """``M + (v (Mv)^T - (Mv) v^T)/|v|^2``; for skew ``M`` this equals ``P M P``
    with ``P`` the orthogonal projector onto ``v``'s complement."""
    v = _vec(v)
    n2 = sum(t * t for t in v)
    if n2 == 0:
        raise InputError("projection needs v != 0")
    Mv = _mv(M, v)
    return [[Fraction(M[i][j]) + (v[i] * Mv[j] - Mv[i] * v[j]) / n2 for j in range(len(v))] for i in range(len(v))]


def omega(J: Sequence[Sequence], x: Sequence, y: Sequence):
    return sum((x[i] * J[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if J[i][j]), 0 * x[0])


def symplectic_projector(J: Sequence[Sequence], v: Sequence, a: Sequence) -> Matrix:
    """``P`` onto the Omega-complement of ``span(v, a)`` along ``span(v, a)``."""
    v, a = _vec(v), _vec(a)
    s = omega(J, v, a)
    if s == 0:
        raise InputError("projection needs Omega(v, a) != 0")
    n = len(v)
    Ja = _mv(J, a)
    Jv = _mv(J, v)
    # P x = x - Omega(x, a)/s v + Omega(x, v)/s a, with Omega(x, a) = (J a) . x
    return [[Fraction(int(i == j)) - v[i] * Ja[j] / s + a[i] * Jv[j] / s for j in range(n)] for i in range(n)]


def project_symplectic(J, X: Sequence[Sequence], v: Sequence, a: Sequence) -> Matrix:
    """``P X P``; lands in the subalgebra killing both ``v`` and ``a``."""
    P = symplectic_projector(J, v, a)
    return [list(r) for r in linalg.matmul(linalg.matmul(P, X), P)]


# e(n) -------------------------------------------------------------------------

def normal_form_skew(n: int, rng: random.Random, bound: int = 100) -> Matrix:
    """Block-diagonal skew matrix with distinct nonzero rotation parameters."""
    params = rng.sample(range(1, bound + 1), n // 2)
    B = [[Fraction(0)] * n for _ in range(n)]
    for t, b in enumerate(params):
        B[2 * t][2 * t + 1] = Fraction(b)
        B[2 * t + 1][2 * t] = Fraction(-b)
    return B


def dense_skew(n: int, rng: random.Random, bound: int = 100) -> Matrix:
    B = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            c = Fraction(rng.randint(-bound, bound))
            B[i][j], B[j][i] = c, -c
    return B


def _check_skew(B, n) -> Matrix:
    B = [[Fraction(t) for t in r] for r in B]
    if len(B) != n or any(len(r) != n for r in B) or any(B[i][j] != -B[j][i] for i in range(n) for j in range(n)):
        raise InputError(f"B must be a skew-symmetric {n}x{n} matrix")
    return B


def en_members(A: LieAlgebra, B: Matrix, powers: Sequence[int] | None = None) -> tuple[list[Polynomial], Polynomial]:
    n = A.meta["size"]
    k, d, nv = _layout(A)
    lam = Polynomial.var(nv, nv - 1)
    X = mx.add(mx.dual_matrix(A.meta["k_matrices"], nv), mx.scale(_constant(nv, B), lam))
    v = [Polynomial.var(nv, k + i) for i in range(d)]
    n2 = mx.dot(v, v)
    Xv = mx.matvec(X, v)
    Y = mx.add(mx.scale(X, n2), mx.sub(mx.outer(v, Xv), mx.outer(Xv, v)))
    powers = list(powers or range(2, n + 1, 2))
    raw = [Polynomial.var(A.dim, k + i) for i in range(d)]
    for kk, t in sorted(mx.power_traces(Y, powers).items()):
        raw.extend(_lambda_parts(t))
    avoid = sum((Polynomial.var(A.dim, k + i) ** 2 for i in range(d)), Polynomial.zero(A.dim))
    return raw, avoid


def family_en(n: int, B: Sequence[Sequence] | None = None, *, seed: int = 0, dense: bool = False,
              retries: int = DEFAULT_RETRIES, certify: bool = True, algebra_ref: dict | None = None) -> CommutingFamily:
    """``v_1..v_n`` and the lam-parts of ``Tr(|v|^2 proj_v(M + lam B))^k``, ``k`` even, ``k <= n``.

    Without ``B`` a skew matrix is drawn from ``seed`` (block-diagonal normal
    form unless ``dense``) and redrawn until the rank certificate passes.
    """
    if n < 3:
        raise InputError("family_en needs n >= 3")
    A = euclidean(n)
    rng = random.Random(seed)
    attempts = 1 if B is not None else retries
    for _ in range(attempts):
        Bm = _check_skew(B, n) if B is not None else (dense_skew if dense else normal_form_skew)(n, rng)
        raw, avoid = en_members(A, Bm)
        F = make_family(A, raw, "en", {"n": n, "B": Bm}, seed, [avoid], algebra_ref)
        if not certify or _certify(F, seed):
            return F
    raise PreconditionError(f"rank certificate failed for {attempts} choice(s) of B")


# sp(2n) + R^2n ----------------------------------------------------------------

def _is_lagrangian(J, L: Sequence[Sequence], n: int) -> bool:
    if len(L) != n or linalg.rank(L) != n:
        return False
    return all(omega(J, _vec(x), _vec(y)) == 0 for x in L for y in L)


def _pvec(nv: int, c: Sequence) -> list[Polynomial]:
    return [Polynomial.constant(nv, t) for t in c]


def _omega_poly(J, x: Sequence[Polynomial], y: Sequence[Polynomial]) -> Polynomial:
    return mx.dot(x, mx.matvec(_constant(x[0].nvars, J), y))


def sp_affine_parts(A: LieAlgebra, a: Sequence, L: Sequence[Sequence], nvars: int | None = None):
    """Polynomial building blocks ``(M, v, e, f_zetas, Ptilde, Q)`` in ``nvars`` variables."""
    k, d, _ = _layout(A)
    nv = nvars or A.dim
    J = [list(r) for r in A.meta["form"]]
    M = mx.dual_matrix(A.meta["k_matrices"], nv)
    w = [Polynomial.var(nv, k + i) for i in range(d)]
    v = mx.matvec(_constant(nv, J), w)  # Omega(v, u) = w . u
    a_p = _pvec(nv, a)
    Mv = mx.matvec(M, v)
    e = _omega_poly(J, v, Mv)
    zetas = []
    for z in L:
        z_p = _pvec(nv, z)
        xi = [zi * _omega_poly(J, a_p, v) - ai * _omega_poly(J, z_p, v) for zi, ai in zip(z_p, a_p)]
        zetas.append(_omega_poly(J, Mv, xi))
    s = _omega_poly(J, v, a_p)
    Ja = mx.matvec(_constant(nv, J), a_p)
    Jv = mx.matvec(_constant(nv, J), v)
    P = mx.add(mx.identity(nv, d, s), mx.sub(mx.outer(a_p, Jv), mx.outer(v, Ja)))
    # Q = Omega(Mv, v) M + Mv (J Mv)^T, the choice of sign that makes Q v = 0
    Q = mx.add(mx.scale(M, -e), mx.outer(Mv, mx.matvec(_constant(nv, J), Mv)))
    return M, v, e, zetas, P, Q, s


def sp_affine_members(A: LieAlgebra, a, L, B, powers: Sequence[int] | None = None):
    n = A.meta["size"]
    k, d, nv = _layout(A)
    M, v, e, zetas, P, Q, s = sp_affine_parts(A, a, L, nv)
    lam = Polynomial.var(nv, nv - 1)
    X = mx.add(Q, mx.scale(_constant(nv, B), lam))
    Y = mx.matmul(mx.matmul(P, X), P)
    powers = list(powers or range(2, 2 * n - 1, 2))
    drop = lambda p: p.coefficients_in_last()[0]  # noqa: E731  (no lam present)
    raw = [Polynomial.var(A.dim, k + i) for i in range(d)]
    raw.extend(drop(z) for z in zetas)
    raw.append(drop(e))
    if powers:
        for kk, t in sorted(mx.power_traces(Y, powers).items()):
            raw.extend(_lambda_parts(t))
    return raw, drop(s)


def random_sp_element(n: int, rng: random.Random, bound: int = 100) -> Matrix:
    """``S J`` for a random symmetric ``S``."""
    J = symplectic_form(n)
    m = 2 * n
    S = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            S[i][j] = S[j][i] = Fraction(rng.randint(-bound, bound))
    return [list(r) for r in linalg.matmul(S, J)]


def _check_sp(B, n) -> Matrix:
    B = [[Fraction(t) for t in r] for r in B]
    J = symplectic_form(n)
    BtJ = linalg.matmul(linalg.transpose(B), J)
    JB = linalg.matmul(J, B)
    if len(B) != 2 * n or any(BtJ[i][j] + JB[i][j] != 0 for i in range(2 * n) for j in range(2 * n)):
        raise InputError(f"B must lie in sp({2 * n})")
    return B


def family_sp_affine(n: int, a: Sequence | None = None, L: Sequence[Sequence] | None = None,
                     B: Sequence[Sequence] | None = None, *, seed: int = 0, retries: int = DEFAULT_RETRIES,
                     certify: bool = True, powers: Sequence[int] | None = None,
                     algebra_ref: dict | None = None) -> CommutingFamily:
    """Coordinates of ``v``, the ``f_zeta`` (``zeta`` in ``L``), ``Omega(v, Mv)``,
    and the lam-parts of ``Tr(Ptilde (Q + lam B) Ptilde)^k``.

    ``a`` defaults to the first basis vector and ``L`` to the span of the
    first ``n``; ``L`` must be Lagrangian and contain ``a``.  ``k`` runs over
    ``2, 4, .., 2n - 2`` unless ``powers`` says otherwise.
    """
    A = sp_affine(n)
    J = symplectic_form(n)
    m = 2 * n
    a = _vec(a) if a is not None else [Fraction(int(i == 0)) for i in range(m)]
    L = [_vec(z) for z in L] if L is not None else [[Fraction(int(i == j)) for i in range(m)] for j in range(n)]
    if len(a) != m or all(t == 0 for t in a):
        raise InputError(f"a must be a nonzero vector of length {m}")
    if not _is_lagrangian(J, L, n):
        raise InputError("L must be a Lagrangian basis of n vectors")
    if not linalg.in_span(L, a):
        raise InputError("L must contain a")
    others = [L[i] for i in _complement_in(L, a)]
    rng = random.Random(seed)
    attempts = 1 if B is not None else retries
    for _ in range(attempts):
        Bm = _check_sp(B, n) if B is not None else random_sp_element(n, rng)
        raw, avoid = sp_affine_members(A, a, others, Bm, powers)
        params = {"n": n, "a": a, "L": L, "B": Bm}
        if powers is not None:
            params["powers"] = list(powers)
        F = make_family(A, raw, "sp_affine", params, seed, [avoid], algebra_ref)
        if not certify or _certify(F, seed):
            return F
    raise PreconditionError(f"rank certificate failed for {attempts} choice(s) of B")


def _complement_in(L: Sequence[Sequence], a: Sequence) -> list[int]:
    """Indices of members of ``L`` that together with ``a`` give a basis of ``span L``."""
    chosen = [list(a)]
    keep = []
    for i, z in enumerate(L):
        if linalg.rank(chosen + [list(z)]) > len(chosen):
            chosen.append(list(z))
            keep.append(i)
    return keep


# aff(n) -----------------------------------------------------------------------

def affn_members(A: LieAlgebra, Xi: Sequence[Sequence], max_k: int) -> list[Polynomial]:
    k, d, _ = _layout(A)
    nv = A.dim
    M = mx.dual_matrix(A.meta["k_matrices"], nv)
    v = [Polynomial.var(nv, k + i) for i in range(d)]
    rows = [v]
    for _ in range(max_k - 1):
        rows.append(mx.vecmat(rows[-1], M))
    xi = [_pvec(nv, c) for c in Xi]
    pair = [[mx.dot(r, x) for x in xi] for r in rows]  # (xi_j, v M^i)
    raw = []
    for size in range(1, max_k + 1):
        for S in combinations(range(len(Xi)), size):
            raw.append(mx.det([[pair[i][j] for j in S] for i in range(size)]))
    return raw


def family_affn(n: int, Xi: Sequence[Sequence] | None = None, *, max_k: int | None = None,
                algebra_ref: dict | None = None) -> CommutingFamily:
    """Determinants ``det((xi_j, v M^(i-1)))`` over index subsets of ``Xi``.

    ``v`` is a row vector.  Subset sizes run up to ``n``: the single
    top-size determinant is needed to reach the completeness count.
    """
    A = aff(n)
    Xi = [_vec(c) for c in Xi] if Xi is not None else [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    if len(Xi) != n or any(len(c) != n for c in Xi) or linalg.rank(Xi) != n:
        raise InputError(f"Xi must be {n} linearly independent vectors of length {n}")
    top = max_k if max_k is not None else n
    if not 1 <= top <= n:
        raise InputError(f"max_k must lie in 1..{n}")
    return make_family(A, affn_members(A, Xi, top), "affn", {"n": n, "Xi": Xi, "max_k": top},
                       algebra_ref=algebra_ref)
