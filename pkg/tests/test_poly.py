from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from liecert.algebra import bracket
from liecert.catalog import euclidean, gl, heisenberg
from liecert.errors import InputError
from liecert.poly import Polynomial, format_poly, parse_poly, poisson_bracket, variables

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polys(nvars, max_degree=3, max_terms=5):
    def monomial(vs):
        e = [0] * nvars
        for v in vs:
            e[v] += 1
        return tuple(e)

    exps = st.lists(st.integers(0, nvars - 1), max_size=max_degree).map(monomial)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: Polynomial(nvars, d))


def test_arithmetic_examples():
    x1, x2 = variables(2)
    assert (x1 + x2) * (x1 - x2) == x1 ** 2 - x2 ** 2
    f = x1 ** 2 * x2
    assert f.partial(0) == 2 * x1 * x2
    assert f.evaluate([3, Fraction(1, 2)]) == Fraction(9, 2)
    assert f.degree() == 3 and Polynomial.zero(2).degree() == -1


def test_exact_division():
    x1, x2 = variables(2)
    assert ((x1 + x2) * x2 ** 2).exact_div(x2) == (x1 + x2) * x2
    assert (x1 + 1).exact_div(x2) is None
    with pytest.raises(InputError):
        x1.exact_div(Polynomial.zero(2))


def test_compose_and_homogeneous_parts():
    x1, x2 = variables(2)
    f = x1 ** 2 + 3 * x2 + 1
    assert f.compose([x1 + x2, x1]) == (x1 + x2) ** 2 + 3 * x1 + 1
    parts = f.homogeneous_components()
    assert parts == {0: Polynomial.constant(2, 1), 1: 3 * x2, 2: x1 ** 2}


@given(polys(3))
@settings(max_examples=100, deadline=None)
def test_format_parse_roundtrip(p):
    assert parse_poly(format_poly(p), 3) == p


@pytest.mark.parametrize("text", ["", "x", "2x1", "x4", "*x1", "1//2*x1", "x1++x2"])
def test_parse_rejects_garbage(text):
    with pytest.raises(InputError):
        parse_poly(text, 3)


def test_linear_bracket_is_commutator():
    A = gl(2)
    xs = variables(4)
    for i in range(4):
        for j in range(4):
            expected = Polynomial.linear(bracket(A, A.basis_vector(i), A.basis_vector(j)))
            assert poisson_bracket(xs[i], xs[j], A) == expected


def test_heisenberg_bracket_and_constants():
    H = heisenberg(1)
    x = variables(3)
    assert poisson_bracket(x[0], x[1], H) == x[2]
    assert poisson_bracket(Polynomial.constant(3, 7), x[0] * x[1], H).is_zero()


ALG = euclidean(3)
P6 = polys(6, max_degree=3, max_terms=4)
slow = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@given(P6, P6)
@slow
def test_antisymmetry(f, g):
    assert poisson_bracket(f, g, ALG) == -poisson_bracket(g, f, ALG)


@given(P6, P6, P6)
@slow
def test_leibniz(f, g, h):
    assert poisson_bracket(f, g * h, ALG) == poisson_bracket(f, g, ALG) * h + g * poisson_bracket(f, h, ALG)


@given(P6, P6, P6)
@slow
def test_jacobi(f, g, h):
    b = lambda p, q: poisson_bracket(p, q, ALG)
    assert (b(f, b(g, h)) + b(g, b(h, f)) + b(h, b(f, g))).is_zero()


@given(P6, P6)
@slow
def test_degree_bound(f, g):
    assert poisson_bracket(f, g, ALG).degree() <= max(f.degree() + g.degree() - 1, -1)


@given(P6, P6, st.lists(st.integers(-9, 9), min_size=6, max_size=6))
@slow
def test_bracket_pointwise_oracle(f, g, x):
    # {f, g}(x) = <x, [df(x), dg(x)]> using only the vector bracket
    df = [d.evaluate(x) for d in f.gradient()]
    dg = [d.evaluate(x) for d in g.gradient()]
    expected = sum(a * b for a, b in zip(x, bracket(ALG, df, dg)))
    assert poisson_bracket(f, g, ALG).evaluate(x) == expected
