"""Reduction across a Heisenberg ideal whose center is the center of ``g``.

With ``H = V + Q e`` and ``[v_i, v_j] = omega_ij e``, the subalgebra
``b = {xi : [xi, V] in V}`` complements ``V``.  For ``beta`` in ``b`` the
quadratic ``f_beta`` commutes with every coordinate of ``H``, and
``beta -> f_beta / <e, x>`` respects brackets; composing a polynomial on
``b*`` with these quotients lifts it to ``g*`` (denominators cleared by
powers of ``<e, x>``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .. import linalg
from ..algebra import (
    LieAlgebra,
    SubspaceBasis,
    _phi_matrix,
    bracket,
    center,
    complement,
    intersect,
    is_ideal,
    is_subalgebra,
    subalgebra_as_algebra,
    sum_spaces,
)
from ..classify import heisenberg_form
from ..errors import InputError, InvariantViolation
from ..poly import Polynomial


@dataclass(frozen=True, eq=False)
class HeisenbergSplit:
    algebra: LieAlgebra
    H: SubspaceBasis
    b: SubspaceBasis  # basis starts with e
    V: SubspaceBasis
    e: tuple[Fraction, ...]
    omega: tuple[tuple[Fraction, ...], ...]

    @property
    def m(self) -> int:
        return self.V.dim // 2

    def central_coordinate(self) -> Polynomial:
        return _linear(self.e)

    def v_coordinates(self) -> list[Polynomial]:
        return [_linear(v) for v in self.V.vectors]

    def b_algebra(self) -> LieAlgebra:
        return subalgebra_as_algebra(self.b, name=f"b({self.algebra.name})")

    def v_action(self, beta: Sequence) -> list[list[Fraction]]:
        """Matrix of ``ad_beta`` on ``V`` (columns are images of ``v_j``)."""
        cols = []
        for vj in self.V.vectors:
            w = bracket(self.algebra, beta, vj)
            if not self.V.contains(w):
                raise InputError("element does not preserve V")
            cols.append(self.V.coordinates(w))
        return [list(r) for r in linalg.transpose(cols)]

    def lagrangian(self) -> list[int]:
        """Indices of a Lagrangian subset of the ``V`` basis (greedy, deterministic)."""
        chosen: list[int] = []
        for i in range(self.V.dim):
            if all(self.omega[i][j] == 0 for j in chosen):
                chosen.append(i)
        if len(chosen) == self.m:
            return chosen
        raise InvariantViolation("no coordinate Lagrangian subset of V; change the V basis")


def _linear(coeffs: Sequence) -> Polynomial:
    return Polynomial.linear([Fraction(c) for c in coeffs])


def heisenberg_split(A: LieAlgebra, H: SubspaceBasis) -> HeisenbergSplit:
    if H.parent is not A:
        raise InputError("H must be a subspace of A")
    form = heisenberg_form(H)
    if form is None or not is_ideal(H):
        raise InputError("H is not a Heisenberg ideal")
    e, V, omega = form
    if not center(H).same_span(center(A)):
        raise InputError("the center of H must be the center of the algebra")
    # b: brackets with V have no e-component
    Z = SubspaceBasis.span(A, [e])
    rows = []
    for vj in V.vectors:
        row = []
        for i in range(A.dim):
            w = bracket(A, A.basis_vector(i), vj)
            row.append(_e_component(V, e, w))
        rows.append(row)
    kernel = linalg.nullspace(rows, A.dim)
    b0 = SubspaceBasis.span(A, kernel, "subalgebra")
    rest = complement(Z, b0)
    b = SubspaceBasis(A, (tuple(e),) + tuple(rest.vectors), "subalgebra")
    split = HeisenbergSplit(A, H, b, V, tuple(e), tuple(tuple(r) for r in omega))
    check_split(split)
    return split


def _e_component(V: SubspaceBasis, e, w) -> Fraction:
    basis = [list(v) for v in V.vectors] + [list(e)]
    coords = linalg.solve(linalg.transpose(basis), w)
    if coords is None:
        raise InvariantViolation("bracket with V left the ideal")
    return coords[-1]


def symplectic_defect(split: HeisenbergSplit, beta: Sequence) -> list[list[Fraction]]:
    """``omega(ad_beta v_i, v_j) + omega(v_i, ad_beta v_j)`` on the ``V`` basis."""
    a = split.v_action(beta)
    w = split.omega
    d = len(w)
    # omega(a e_i, e_j) = sum_k a_ki w_kj
    return [[sum((a[k][i] * w[k][j] + w[i][k] * a[k][j] for k in range(d)), Fraction(0)) for j in range(d)]
            for i in range(d)]


def check_split(split: HeisenbergSplit) -> None:
    """Raise :class:`InvariantViolation` unless every structural claim holds."""
    A, b, V, H = split.algebra, split.b, split.V, split.H
    if sum_spaces(b, V).dim != A.dim or b.dim + V.dim != A.dim:
        raise InvariantViolation("g is not the direct sum of b and V")
    if not is_subalgebra(b):
        raise InvariantViolation("b is not a subalgebra")
    if not intersect(b, H).same_span(SubspaceBasis.span(A, [split.e])):
        raise InvariantViolation("b meets the Heisenberg ideal outside its center")
    for beta in b.vectors:
        if any(x != 0 for row in symplectic_defect(split, beta) for x in row):
            raise InvariantViolation("b does not act on V by symplectic maps")


def f_beta(beta: Sequence, split: HeisenbergSplit) -> Polynomial:
    """``<beta, x><e, x> + 1/2 p^T U p`` with ``p`` the ``V``-coordinates.

    ``U = omega^{-1} a^T`` for ``a`` the matrix of ``ad_beta`` on ``V``; this
    is the unique symmetric choice for which ``{f_beta, p_j} = 0``.
    """
    A = split.algebra
    beta = [Fraction(t) for t in beta]
    if len(beta) != A.dim:
        raise InputError("beta has the wrong length")
    if not split.b.contains(beta):
        raise InputError("beta is not in b")
    a = split.v_action(beta)
    winv = linalg.inverse(split.omega)
    U = linalg.matmul(winv, linalg.transpose(a))
    p = split.v_coordinates()
    E = split.central_coordinate()
    out = _linear(beta) * E
    d = len(p)
    for i in range(d):
        for j in range(d):
            if U[i][j]:
                out = out + p[i] * p[j] * (U[i][j] / 2)
    return out


def lift_tilde(f: Polynomial, split: HeisenbergSplit) -> tuple[Polynomial, int]:
    """Compose ``f`` (in the coordinates of ``split.b``'s basis) with ``f_beta / E``.

    Returns ``(numerator, k)`` with the lift equal to ``numerator / E**k`` and
    ``k`` minimal.
    """
    if f.nvars != split.b.dim:
        raise InputError(f"f must have {split.b.dim} variables (the dimension of b)")
    A = split.algebra
    E = split.central_coordinate()
    images = [f_beta(beta, split) for beta in split.b.vectors]
    parts = f.homogeneous_components()
    if not parts:
        return Polynomial.zero(A.dim), 0
    top = max(parts)
    num = Polynomial.zero(A.dim)
    for deg, part in parts.items():
        num = num + part.compose(images) * E ** (top - deg)
    k = top
    while k > 0:
        q = num.exact_div(E)
        if q is None:
            break
        num, k = q, k - 1
    return num, k


def b_coordinate_polynomial(split: HeisenbergSplit, beta: Sequence) -> Polynomial:
    """The linear function ``<beta, .>`` on ``b*`` in the coordinates of ``split.b``."""
    coords = split.b.coordinates([Fraction(t) for t in beta])
    return Polynomial.linear(coords)


def annihilator_codim(A: LieAlgebra, H: SubspaceBasis, x: Sequence) -> int:
    """``dim g - rank`` of the map ``eta -> ad*_eta x`` over the basis of ``H``."""
    phi = _phi_matrix(A, x)
    rows = [[sum((Fraction(h[i]) * phi[i][j] for i in range(A.dim) if h[i]), Fraction(0)) for j in range(A.dim)]
            for h in H.vectors]
    return A.dim - linalg.rank(rows)
