from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecert import linalg
from liecert.algebra import index
from liecert.catalog import gl, so, sp
from liecert.errors import PreconditionError
from liecert.families import matrices as mx
from liecert.families.invariants import (
    argument_shift,
    gelfand_zetlin,
    invariant_generators,
    shift_components,
    shift_family,
)
from liecert.poly import Polynomial, poisson_bracket, variables
from liecert.verify import commutes, jacobian_rank


def _is_casimir(f, A):
    return all(poisson_bracket(f, x, A).is_zero() for x in variables(A.dim))


def test_gl2_linear_invariant_is_trace():
    x = variables(4)
    assert invariant_generators("gl", 2)[0] == x[0] + x[3]


@pytest.mark.parametrize("A", [gl(1), gl(2), gl(3), gl(4), so(2), so(3), so(4), so(5), sp(1), sp(2)],
                         ids=lambda A: A.name)
def test_generators_are_casimirs_and_count_the_index(A):
    gens = invariant_generators(A)
    assert len(gens) == index(A, 5)
    assert all(_is_casimir(f, A) for f in gens)


def test_so3_quadratic_casimir():
    (f,) = invariant_generators("so", 3)
    assert f.degree() == 2 and f.is_homogeneous()
    assert _is_casimir(f, so(3))


def _skew(entries, n):
    m = [[Fraction(0)] * n for _ in range(n)]
    it = iter(entries)
    for i in range(n):
        for j in range(i + 1, n):
            c = Fraction(next(it))
            m[i][j], m[j][i] = c, -c
    return m


@given(st.lists(st.integers(-30, 30), min_size=6, max_size=6))
@settings(max_examples=60, deadline=None)
def test_pfaffian_squares_to_determinant(entries):
    m = _skew(entries, 4)
    pf = mx.pfaffian(mx.constant_matrix(1, m)).evaluate([0])
    assert pf * pf == linalg.det(m)


def test_so4_pfaffian_member_is_quadratic_with_square_det():
    A = so(4)
    M = mx.coadjoint_matrix(A)
    pf = invariant_generators(A)[-1]
    assert pf.degree() == 2
    assert pf * pf == mx.det(M)


def _trace_product(P, Q):
    return mx.trace(mx.matmul(P, Q))


def test_gl2_shift_components_match_binomial_expansion():
    A = gl(2)
    M = mx.coadjoint_matrix(A)
    f = mx.trace(mx.matmul(M, M))
    a = [3, -1, 2, 5]
    Ma = mx.constant_matrix(4, mx.evaluate_matrix(M, a))
    lin, quad = shift_components(f, a)
    assert lin == _trace_product(Ma, M) * 2
    assert quad == f


def _span_rank(polys):
    keys = sorted({e for p in polys for e in p.terms})
    return linalg.rank([[p.terms.get(k, Fraction(0)) for k in keys] for p in polys])


@pytest.mark.parametrize("c", [Fraction(2), Fraction(-3, 7)])
def test_shift_spans_are_invariant_under_rescaling(c):
    A = gl(3)
    invs = invariant_generators(A)
    F = shift_family(A, seed=4)
    a = F.params["a"]
    G = argument_shift(invs, [c * t for t in a], A)
    r = _span_rank(F.members)
    assert r == _span_rank(G.members) == _span_rank(list(F.members) + list(G.members))


def test_gl3_shift_family_is_complete():
    F = shift_family(gl(3), seed=2)
    assert len(F.members) == 6 and commutes(F) and jacobian_rank(F) == 6


def test_shift_rejects_singular_element():
    A = gl(2)
    with pytest.raises(PreconditionError, match="corank"):
        argument_shift(invariant_generators(A), [0, 0, 0, 0], A)


def test_gelfand_zetlin_gl2_members():
    F = gelfand_zetlin(gl(2))
    x = variables(4)
    assert F.members[0] == x[0]
    assert len(F.members) == 3 and commutes(F) and jacobian_rank(F) == 3


def test_gelfand_zetlin_so3_contains_so2_generator():
    A = so(3)
    F = gelfand_zetlin(A)
    linear = [f for f in F.members if f.degree() == 1]
    assert len(linear) == 1
    assert all(poisson_bracket(linear[0], f, A).is_zero() for f in F.members)


def test_top_shift_component_is_original():
    A = so(4)
    for f in invariant_generators(A):
        assert shift_components(f, [1, 2, 3, 4, 5, 6])[-1] == f


def test_constant_polynomial_has_no_shift_components():
    assert shift_components(Polynomial.constant(3, 5), [1, 1, 1]) == []
