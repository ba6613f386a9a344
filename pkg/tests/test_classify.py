import pytest

from liecert.algebra import is_commutative, is_ideal, stationary_subalgebra, subalgebra_as_algebra
from liecert.catalog import abelian, aff, direct_sum, euclidean, gl, heisenberg, so, sp, sp_affine
from liecert.classify import (
    COMMUTATIVE_IDEAL,
    HEISENBERG_IDEAL,
    SEMISIMPLE,
    SEMISIMPLE_PLUS_LINE,
    classify,
    is_heisenberg,
    verify_classification,
)

from conftest import translation_ideal


@pytest.mark.parametrize("A,case,witness", [
    (so(4), SEMISIMPLE, None),
    (so(3), SEMISIMPLE, None),
    (euclidean(3), COMMUTATIVE_IDEAL, 3),
    (sp_affine(1), COMMUTATIVE_IDEAL, 2),
    (sp_affine(2), COMMUTATIVE_IDEAL, 4),
    (heisenberg(1), HEISENBERG_IDEAL, 3),
    (heisenberg(2), HEISENBERG_IDEAL, 5),
    (gl(2), SEMISIMPLE_PLUS_LINE, None),
    (direct_sum(so(3), abelian(1)), SEMISIMPLE_PLUS_LINE, None),
    (aff(1), COMMUTATIVE_IDEAL, 1),
], ids=lambda x: getattr(x, "name", str(x)))
def test_cases(A, case, witness):
    c = classify(A)
    assert c.case == case
    assert (c.ideal.dim if c.ideal is not None else None) == witness
    assert verify_classification(A, c)


def test_commutative_witness_is_valid_ideal():
    c = classify(euclidean(3))
    assert is_ideal(c.ideal) and is_commutative(c.ideal)


def test_sp2_reduction_reaches_heisenberg_case():
    A = sp_affine(1)
    St = stationary_subalgebra(A, translation_ideal(A), [1, 0])
    S = subalgebra_as_algebra(St)
    c = classify(S)
    assert c.case == HEISENBERG_IDEAL and is_heisenberg(c.ideal)


def test_numerals():
    assert classify(so(4)).numeral == "iv"
    assert classify(gl(2)).numeral == "iii"
    assert classify(sp(1)).numeral == "iv"


def test_line_is_reductive_with_trivial_semisimple_part():
    A = abelian(1)
    c = classify(A)
    assert c.case == SEMISIMPLE_PLUS_LINE and c.semisimple_part.dim == 0
    assert verify_classification(A, c)
