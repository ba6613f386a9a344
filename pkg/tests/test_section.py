from fractions import Fraction

import pytest

from liecert import linalg
from liecert.catalog import aff, euclidean, gl
from liecert.errors import InputError
from liecert.families.section import (
    PolynomialSection,
    bracket_sections,
    polynomial_sections,
    random_section,
    section_function,
)
from liecert.families.semidirect import family_affn
from liecert.families.steps import section_step
from liecert.poly import Polynomial, poisson_bracket
from liecert.verify import commutes, jacobian_rank

from conftest import rng, translation_ideal


def test_constant_section_in_ideal_gives_linear_function():
    A = euclidean(3)
    h = translation_ideal(A)
    eta = [0, 0, 0, 2, -1, 3]
    psi = PolynomialSection.constant(A, h, eta)
    assert psi.is_stationary()
    assert section_function(psi) == Polynomial.linear(eta)


def test_zero_section():
    A = aff(2)
    psi = PolynomialSection.constant(A, translation_ideal(A), [0] * 6)
    assert section_function(psi).is_zero()


def test_non_stationary_section_is_rejected():
    A = euclidean(3)
    psi = PolynomialSection.constant(A, translation_ideal(A), [1, 0, 0, 0, 0, 0])
    assert not psi.is_stationary()
    with pytest.raises(InputError):
        section_function(psi)


def test_sections_need_commutative_ideal():
    A = gl(2)
    from liecert.algebra import whole
    with pytest.raises(InputError):
        polynomial_sections(A, whole(A), 1)


@pytest.mark.parametrize("A,degree", [(aff(2), 1), (euclidean(3), 1), (aff(2), 2)], ids=str)
def test_section_functions_commute_with_ideal(A, degree):
    h = translation_ideal(A)
    basis = polynomial_sections(A, h, degree)
    assert basis
    coords = [Polynomial.linear(list(v)) for v in h.vectors]
    for psi in basis:
        assert psi.is_stationary()
        f = section_function(psi)
        assert all(poisson_bracket(f, c, A).is_zero() for c in coords)


@pytest.mark.parametrize("A", [aff(2), euclidean(3)], ids=lambda A: A.name)
def test_homomorphism_on_a_few_pairs(A):
    h = translation_ideal(A)
    basis = polynomial_sections(A, h, 1)
    r = rng(f"section-small-{A.name}")
    for _ in range(4):
        p1, p2 = random_section(basis, r), random_section(basis, r)
        lhs = poisson_bracket(section_function(p1), section_function(p2), A)
        assert lhs == section_function(bracket_sections(p1, p2))


def _in_span(polys, target):
    keys = sorted({e for p in list(polys) + [target] for e in p.terms})
    rows = [[p.terms.get(k, Fraction(0)) for k in keys] for p in polys]
    return linalg.in_span(rows, [target.terms.get(k, Fraction(0)) for k in keys])


def test_aff2_determinant_member_is_a_section_function():
    A = aff(2)
    det_member = family_affn(2).members[-1]
    funcs = [section_function(s) for s in polynomial_sections(A, translation_ideal(A), 2)]
    assert _in_span(funcs, det_member)
    low = [section_function(s) for s in polynomial_sections(A, translation_ideal(A), 1)]
    assert not _in_span(low, det_member)


def test_section_step_is_complete_on_aff2_and_e3():
    for A, target in [(aff(2), 3), (euclidean(3), 4)]:
        F = section_step(A, degree=2 if A.name.startswith("aff") else 1)
        assert commutes(F) and jacobian_rank(F) == target
