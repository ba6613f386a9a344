"""Polynomial sections of the stationary-subalgebra bundle over a commutative ideal.

For a commutative ideal ``h`` with basis ``h_1..h_m``, a point of ``h*`` is
the vector ``y`` of its values on that basis.  A section ``Psi`` assigns to
``y`` an element of ``St(y) = {xi : y([xi, eta]) = 0 for eta in h}``; its
components are polynomials in ``y``.  The function
``f_Psi(x) = <x, Psi(pi(x))>`` then commutes with every coordinate of ``h``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .. import linalg
from ..algebra import LieAlgebra, SubspaceBasis, bracket, is_commutative, is_ideal
from ..errors import InputError
from ..poly import Polynomial


def _stationarity_tensor(A: LieAlgebra, h: SubspaceBasis) -> list[list[dict[int, Fraction]]]:
    """``T[r][b] = {s: c}`` with ``[e_b, h_r] = sum_s c h_s``."""
    out = []
    for eta in h.vectors:
        row = []
        for b in range(A.dim):
            coords = h.coordinates(bracket(A, A.basis_vector(b), eta))
            row.append({s: c for s, c in enumerate(coords) if c})
        out.append(row)
    return out


@dataclass(frozen=True, eq=False)
class PolynomialSection:
    ambient: LieAlgebra
    ideal: SubspaceBasis
    components: tuple[Polynomial, ...]  # one per basis vector of the ambient algebra, in ideal.dim variables

    def __post_init__(self) -> None:
        if len(self.components) != self.ambient.dim:
            raise InputError("need one component per basis vector of the algebra")
        if any(c.nvars != self.ideal.dim for c in self.components):
            raise InputError("components must be polynomials in the ideal coordinates")

    @classmethod
    def constant(cls, A: LieAlgebra, h: SubspaceBasis, xi: Sequence) -> "PolynomialSection":
        return cls(A, h, tuple(Polynomial.constant(h.dim, c) for c in xi))

    def at(self, y: Sequence) -> list[Fraction]:
        return [c.evaluate(y) for c in self.components]

    def defect(self) -> list[Polynomial]:
        """``y([Psi(y), h_r])`` as polynomials in ``y``, one per ideal basis vector."""
        T = _stationarity_tensor(self.ambient, self.ideal)
        m = self.ideal.dim
        ys = [Polynomial.var(m, s) for s in range(m)]
        out = []
        for row in T:
            acc = Polynomial.zero(m)
            for b, entry in enumerate(row):
                if entry and not self.components[b].is_zero():
                    lin = sum((ys[s] * c for s, c in entry.items()), Polynomial.zero(m))
                    acc = acc + lin * self.components[b]
            out.append(acc)
        return out

    def is_stationary(self) -> bool:
        return all(p.is_zero() for p in self.defect())

    def stationary_at(self, y: Sequence) -> bool:
        return all(p.evaluate(y) == 0 for p in self.defect())

    def __add__(self, other: "PolynomialSection") -> "PolynomialSection":
        return PolynomialSection(self.ambient, self.ideal, tuple(a + b for a, b in zip(self.components, other.components)))

    def scale(self, c) -> "PolynomialSection":
        return PolynomialSection(self.ambient, self.ideal, tuple(p.scale(c) for p in self.components))


def _check_ideal(h: SubspaceBasis) -> None:
    if not (is_ideal(h) and is_commutative(h)):
        raise InputError("sections need a commutative ideal")


def bracket_sections(p1: PolynomialSection, p2: PolynomialSection) -> PolynomialSection:
    """Pointwise bracket ``[Psi1, Psi2](y) = [Psi1(y), Psi2(y)]``."""
    A = p1.ambient
    m = p1.ideal.dim
    comps = [Polynomial.zero(m) for _ in range(A.dim)]
    for (i, j, k), c in A.structure.items():
        a, b = p1.components[i], p2.components[j]
        if not a.is_zero() and not b.is_zero():
            comps[k] = comps[k] + a * b * c
    return PolynomialSection(A, p1.ideal, tuple(comps))


def section_function(psi: PolynomialSection, *, check: bool = True) -> Polynomial:
    """``x -> <x, Psi(pi(x))>`` with ``pi`` the restriction to the ideal."""
    if check and not psi.is_stationary():
        raise InputError("section is not stationary")
    A = psi.ambient
    proj = [Polynomial.linear(list(v)) for v in psi.ideal.vectors]
    out = Polynomial.zero(A.dim)
    for b, comp in enumerate(psi.components):
        if not comp.is_zero():
            out = out + comp.compose(proj) * Polynomial.var(A.dim, b)
    return out


def _monomials(m: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(m), d):
            e = [0] * m
            for s in combo:
                e[s] += 1
            out.append(tuple(e))
    return out


def polynomial_sections(A: LieAlgebra, h: SubspaceBasis, degree: int) -> list[PolynomialSection]:
    """A basis of all stationary sections with components of degree ``<= degree``.

    The stationarity identity is linear in the unknown coefficients, so the
    sections form the exact nullspace of one rational linear system.
    """
    _check_ideal(h)
    if degree < 0:
        raise InputError("degree must be nonnegative")
    T = _stationarity_tensor(A, h)
    m = h.dim
    monos = _monomials(m, degree)
    unknowns = [(b, mono) for b in range(A.dim) for mono in monos]
    col = {u: t for t, u in enumerate(unknowns)}
    equations: dict[tuple[int, tuple[int, ...]], dict[int, Fraction]] = {}
    for r, row in enumerate(T):
        for b, entry in enumerate(row):
            for s, c in entry.items():
                for mono in monos:
                    gamma = list(mono)
                    gamma[s] += 1
                    eq = equations.setdefault((r, tuple(gamma)), {})
                    t = col[(b, mono)]
                    eq[t] = eq.get(t, Fraction(0)) + c
    rows = []
    for key in sorted(equations):
        eq = equations[key]
        rows.append([eq.get(t, Fraction(0)) for t in range(len(unknowns))])
    kernel = linalg.nullspace(rows, len(unknowns)) if rows else [
        [Fraction(int(t == u)) for t in range(len(unknowns))] for u in range(len(unknowns))]
    out = []
    for vec in kernel:
        comps = [dict() for _ in range(A.dim)]
        for t, c in enumerate(vec):
            if c:
                b, mono = unknowns[t]
                comps[b][mono] = c
        out.append(PolynomialSection(A, h, tuple(Polynomial(m, comp) for comp in comps)))
    return out


def random_section(basis: Sequence[PolynomialSection], rng: random.Random, bound: int = 5) -> PolynomialSection:
    if not basis:
        raise InputError("empty section basis")
    acc = basis[0].scale(0)
    for s in basis:
        c = rng.randint(-bound, bound)
        if c:
            acc = acc + s.scale(c)
    return acc
