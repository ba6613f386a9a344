from __future__ import annotations

import random
from fractions import Fraction

import pytest

from liecert.algebra import SubspaceBasis, intersect, stationary_subalgebra, subalgebra_as_algebra
from liecert.catalog import sp_affine
from liecert.classify import HEISENBERG_IDEAL, classify

SEED = 20240601


def rng(tag: str = "") -> random.Random:
    return random.Random(f"{SEED}:{tag}")


def translation_ideal(A) -> SubspaceBasis:
    k = A.meta["k_dim"]
    return SubspaceBasis.span(A, [A.basis_vector(i) for i in range(k, A.dim)], "ideal")


def linear_part(A) -> SubspaceBasis:
    k = A.meta["k_dim"]
    return SubspaceBasis.span(A, [A.basis_vector(i) for i in range(k)], "subalgebra")


def stabilizer_algebra(n: int = 2, h=None):
    """Stabilizer in sp(2n) of a covector on R^2n, as an algebra of its own.

    For n = 2 this is sp(2) + h_1 (dimension 6) with a Heisenberg ideal of
    dimension 3 that contains the center.
    """
    A = sp_affine(n)
    V = translation_ideal(A)
    h = h or [Fraction(1)] + [Fraction(0)] * (2 * n - 1)
    st = intersect(stationary_subalgebra(A, V, h), linear_part(A), "subalgebra")
    S = subalgebra_as_algebra(st, name=f"St(sp({2 * n}))")
    c = classify(S)
    assert c.case == HEISENBERG_IDEAL
    return S, c.ideal


@pytest.fixture(scope="session")
def st_sp4():
    return stabilizer_algebra(2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
