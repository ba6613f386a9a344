import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecert import linalg
from liecert.catalog import aff, sp_affine, symplectic_form
from liecert.errors import InputError
from liecert.families import matrices as mx
from liecert.families.semidirect import (
    family_affn,
    family_en,
    family_sp_affine,
    omega,
    project_orthogonal,
    project_symplectic,
    random_sp_element,
    sp_affine_parts,
)
from liecert.poly import Polynomial, poisson_bracket
from liecert.verify import check_commutes, commutes, jacobian_rank

from conftest import rng

ints = st.integers(-12, 12)


def _mv(m, v):
    return [sum(Fraction(a) * b for a, b in zip(row, v)) for row in m]


def _skew(entries, n):
    m = [[Fraction(0)] * n for _ in range(n)]
    it = iter(entries)
    for i in range(n):
        for j in range(i + 1, n):
            c = Fraction(next(it))
            m[i][j], m[j][i] = c, -c
    return m


@given(st.lists(ints, min_size=6, max_size=6), st.lists(ints, min_size=4, max_size=4).filter(any))
@settings(max_examples=80, deadline=None)
def test_orthogonal_projection(entries, v):
    M = _skew(entries, 4)
    Y = project_orthogonal(M, v)
    assert _mv(Y, v) == [0] * 4
    assert all(Y[i][j] == -Y[j][i] for i in range(4) for j in range(4))
    n2 = sum(t * t for t in v)
    P = [[Fraction(int(i == j)) - Fraction(v[i] * v[j], n2) for j in range(4)] for i in range(4)]
    assert Y == linalg.matmul(linalg.matmul(P, M), P)


def test_orthogonal_projection_fixes_stabilizer():
    M = _skew([0, 0, 0, 0, 0, 5], 4)  # rotation in the (3,4)-plane fixes e1
    assert project_orthogonal(M, [1, 0, 0, 0]) == M


def _symplectic_case(r: random.Random, n: int):
    J = symplectic_form(n)
    while True:
        v = [Fraction(r.randint(-9, 9)) for _ in range(2 * n)]
        a = [Fraction(r.randint(-9, 9)) for _ in range(2 * n)]
        if omega(J, v, a) != 0:
            return J, random_sp_element(n, r, 20), v, a


def _expanded_projection(J, X, v, a):
    """The two-sided projection multiplied out term by term."""
    s = omega(J, v, a)
    W = lambda x, y: omega(J, x, y)  # noqa: E731
    Jv, Ja = _mv(J, v), _mv(J, a)
    Xv, Xa = _mv(X, v), _mv(X, a)
    JXv, JXa = _mv(J, Xv), _mv(J, Xa)
    m = len(v)
    terms = []
    for i in range(m):
        row = []
        for j in range(m):
            t = Fraction(X[i][j])
            t += (-Xv[i] * Ja[j] + Xa[i] * Jv[j] + v[i] * JXa[j] - a[i] * JXv[j]) / s
            t += (W(Xv, a) * v[i] * Ja[j] - W(Xa, a) * v[i] * Jv[j]
                  - W(Xv, v) * a[i] * Ja[j] + W(Xa, v) * a[i] * Jv[j]) / s ** 2
            row.append(t)
        terms.append(row)
    return terms


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symplectic_projection_identities(n):
    r = rng(f"sp-proj-{n}")
    for _ in range(10):
        J, X, v, a = _symplectic_case(r, n)
        Y = project_symplectic(J, X, v, a)
        assert _mv(Y, v) == [0] * (2 * n) and _mv(Y, a) == [0] * (2 * n)
        YtJ, JY = linalg.matmul(linalg.transpose(Y), J), linalg.matmul(J, Y)
        assert all(YtJ[i][j] + JY[i][j] == 0 for i in range(2 * n) for j in range(2 * n))
        assert project_symplectic(J, Y, v, a) == Y
        assert Y == _expanded_projection(J, X, v, a)


def test_sp_affine_building_blocks_vanish_where_required():
    A = sp_affine(2)
    a = [1, 0, 0, 0]
    L = [[1, 0, 0, 0], [0, 1, 0, 0]]
    M, v, e, zetas, P, Q, s = sp_affine_parts(A, a, L[1:])
    av = [Polynomial.constant(A.dim, t) for t in a]
    assert all(p.is_zero() for p in mx.matvec(Q, v))
    assert all(p.is_zero() for p in mx.matvec(P, v))
    assert all(p.is_zero() for p in mx.matvec(P, av))
    assert all(poisson_bracket(e, z, A).is_zero() for z in zetas)
    for z1 in zetas:
        for z2 in zetas:
            assert poisson_bracket(z1, z2, A).is_zero()


def test_sp_affine_input_checks():
    with pytest.raises(InputError, match="Lagrangian"):
        family_sp_affine(2, L=[[1, 0, 0, 0], [0, 0, 1, 0]], certify=False)
    with pytest.raises(InputError, match="contain a"):
        family_sp_affine(2, a=[0, 0, 0, 1], certify=False)
    with pytest.raises(InputError):
        family_sp_affine(2, B=[[1, 0, 0, 0]] * 4, certify=False)


def test_sp_affine_small_is_complete():
    F = family_sp_affine(1, seed=3)
    assert commutes(F) and jacobian_rank(F) == 3


def test_en3_members_and_rank():
    F = family_en(3, seed=1)
    coords = [Polynomial.var(6, 3 + i) for i in range(3)]
    assert list(F.members[:3]) == coords
    assert commutes(F) and jacobian_rank(F) == 4


def test_en_dense_b_also_works():
    F = family_en(4, seed=2, dense=True)
    assert commutes(F) and jacobian_rank(F) == 6


def test_en_rejects_bad_inputs():
    with pytest.raises(InputError):
        family_en(2)
    with pytest.raises(InputError, match="skew"):
        family_en(3, B=[[1, 0, 0], [0, 0, 0], [0, 0, 0]])


def test_affn_forms():
    A = aff(2)
    F = family_affn(2)
    x = [Polynomial.var(6, i) for i in range(6)]
    v = x[4:]
    M = mx.dual_matrix(A.meta["k_matrices"], 6)
    vM = mx.vecmat(v, M)
    xi1, xi2 = [1, 0], [0, 1]
    pair = lambda c, w: sum((p * t for p, t in zip(w, c) if t), Polynomial.zero(6))  # noqa: E731
    assert F.members[0] == pair(xi1, v) and F.members[1] == pair(xi2, v)
    assert F.members[2] == pair(xi1, v) * pair(xi2, vM) - pair(xi2, v) * pair(xi1, vM)


def test_affn_counts_and_rank():
    for n, target in [(2, 3), (3, 6)]:
        F = family_affn(n)
        assert len(F.members) == 2 ** n - 1
        assert all(p.zero for p in check_commutes(F))
        assert jacobian_rank(F) == target


def test_affn_generic_covectors():
    F = family_affn(3, Xi=[[1, 2, 0], [0, 1, -3], [2, 0, 1]])
    assert commutes(F) and jacobian_rank(F) == 6


def test_affn_rejects_dependent_covectors():
    with pytest.raises(InputError):
        family_affn(2, Xi=[[1, 2], [2, 4]])
    with pytest.raises(InputError):
        family_affn(2, max_k=3)
