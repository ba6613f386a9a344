import pytest

from liecert.algebra import SubspaceBasis, bracket, sample_point, whole
from liecert.catalog import euclidean, heisenberg
from liecert.errors import InputError, PreconditionError
from liecert.families.heisenberg import (
    annihilator_codim,
    b_coordinate_polynomial,
    check_split,
    f_beta,
    heisenberg_split,
    lift_tilde,
    symplectic_defect,
)
from liecert.families.steps import heisenberg_step
from liecert.poly import Polynomial, poisson_bracket
from liecert.catalog import so
from liecert.verify import commutes, jacobian_rank

from conftest import rng


def _random_b(split, r, bound=7):
    vec = [0] * split.algebra.dim
    for beta in split.b.vectors:
        c = r.randint(-bound, bound)
        vec = [x + c * y for x, y in zip(vec, beta)]
    return vec


@pytest.mark.parametrize("m", [1, 2, 3])
def test_split_of_heisenberg_itself(m):
    A = heisenberg(m)
    s = heisenberg_split(A, whole(A))
    assert s.b.dim == 1 and s.V.dim == 2 * m
    assert s.b.same_span(SubspaceBasis.span(A, [A.basis_vector(A.dim - 1)]))


def test_split_of_stabilizer(st_sp4):
    S, H = st_sp4
    s = heisenberg_split(S, H)
    check_split(s)
    assert s.b.dim == 4 and s.V.dim == 2
    r = rng("defect")
    for _ in range(5):
        beta = _random_b(s, r)
        assert all(x == 0 for row in symplectic_defect(s, beta) for x in row)


def test_central_f_beta_is_square(st_sp4):
    S, H = st_sp4
    s = heisenberg_split(S, H)
    E = s.central_coordinate()
    assert f_beta(s.e, s) == E * E


def test_f_beta_annihilates_heisenberg_coordinates(st_sp4):
    S, H = st_sp4
    s = heisenberg_split(S, H)
    coords = [Polynomial.linear(list(h)) for h in H.vectors]
    for beta in s.b.vectors:
        f = f_beta(beta, s)
        assert all(poisson_bracket(f, c, S).is_zero() for c in coords)


def test_f_beta_bracket_identity(st_sp4):
    S, H = st_sp4
    s = heisenberg_split(S, H)
    E = s.central_coordinate()
    r = rng("fbeta-pairs-small")
    for _ in range(4):
        b1, b2 = _random_b(s, r), _random_b(s, r)
        lhs = poisson_bracket(f_beta(b1, s), f_beta(b2, s), S)
        assert lhs == E * f_beta(bracket(S, b1, b2), s)


def test_lift_of_central_and_linear_coordinates(st_sp4):
    S, H = st_sp4
    s = heisenberg_split(S, H)
    E = s.central_coordinate()
    assert lift_tilde(b_coordinate_polynomial(s, s.e), s) == (E, 0)
    beta = s.b.vectors[-1]
    assert lift_tilde(b_coordinate_polynomial(s, beta), s) == (f_beta(beta, s), 1)


def test_lift_rejects_wrong_variable_count(st_sp4):
    S, H = st_sp4
    s = heisenberg_split(S, H)
    with pytest.raises(InputError):
        lift_tilde(Polynomial.var(S.dim, 0), s)


def test_split_rejects_non_heisenberg():
    A = euclidean(3)
    V = SubspaceBasis.span(A, [A.basis_vector(i) for i in range(3, 6)], "ideal")
    with pytest.raises(InputError):
        heisenberg_split(A, V)


def test_annihilator_codim_matches_b(st_sp4):
    S, H = st_sp4
    s = heisenberg_split(S, H)
    r = rng("annihilator-small")
    for _ in range(3):
        x = sample_point(r, S.dim, 1000)
        if s.central_coordinate().evaluate(x) != 0:
            assert annihilator_codim(S, H, x) == s.b.dim


@pytest.mark.parametrize("case", ["h1", "h2", "st"])
def test_heisenberg_step_complete(case, st_sp4):
    if case == "st":
        S, H = st_sp4
        F, target = heisenberg_step(S, H), 4
    else:
        m = int(case[1])
        F, target = heisenberg_step(heisenberg(m)), m + 1
    assert commutes(F) and jacobian_rank(F) == target


def test_heisenberg_step_needs_case_ii():
    with pytest.raises(PreconditionError):
        heisenberg_step(so(3))
