"""Structural case split used by the reduction steps.

Every algebra falls in (at least) one of four cases:

(i)   a commutative ideal ``h`` with ``dim h > 1`` or ``[h, g] != 0``;
(ii)  a Heisenberg ideal whose center is the center of ``g``;
(iii) ``g = g0 + K`` with ``g0`` semisimple and ``K`` the one-dimensional center;
(iv)  ``g`` semisimple.

The search walks the derived series of the radical; see :func:`classify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import (
    LieAlgebra,
    SubspaceBasis,
    bracket,
    center,
    derived_algebra,
    derived_series,
    is_commutative,
    is_ideal,
    is_semisimple,
    radical,
    require_lie,
    subalgebra_as_algebra,
    sum_spaces,
)
from .errors import InvariantViolation

COMMUTATIVE_IDEAL = "commutative-ideal"
HEISENBERG_IDEAL = "heisenberg-ideal"
SEMISIMPLE_PLUS_LINE = "semisimple-plus-line"
SEMISIMPLE = "semisimple"

CASE_NUMERALS = {COMMUTATIVE_IDEAL: "i", HEISENBERG_IDEAL: "ii", SEMISIMPLE_PLUS_LINE: "iii", SEMISIMPLE: "iv"}


@dataclass(frozen=True)
class Classification:
    case: str
    ideal: SubspaceBasis | None = None  # witness for (i) and (ii)
    semisimple_part: SubspaceBasis | None = None  # g0 for (iii)
    line: SubspaceBasis | None = None  # K for (iii)

    @property
    def numeral(self) -> str:
        return CASE_NUMERALS[self.case]


def heisenberg_form(H: SubspaceBasis) -> tuple[list[Fraction], SubspaceBasis, list[list[Fraction]]] | None:
    """If ``H`` is Heisenberg, return ``(e, V, omega)`` with ``[v_i, v_j] = omega_ij e``.

    Heisenberg means: one-dimensional center ``Z``, ``[H, H]`` inside ``Z``, and the
    induced form on ``H / Z`` nondegenerate.  ``V`` is the deterministic
    complement of ``Z`` taken from the basis of ``H``.
    """
    from .algebra import complement

    A = H.parent
    Z = center(H)
    if Z.dim != 1 or H.dim < 3 or H.dim % 2 == 0:
        return None
    e = list(Z.vectors[0])
    V = complement(Z, H)
    omega = []
    for u in V.vectors:
        row = []
        for v in V.vectors:
            w = bracket(A, u, v)
            if not Z.contains(w):
                return None
            row.append(Z.coordinates(w)[0])
        omega.append(row)
    if linalg.det(omega) == 0:
        return None
    return e, V, omega


def is_heisenberg(H: SubspaceBasis) -> bool:
    return heisenberg_form(H) is not None


def classify(A: LieAlgebra, check: bool = True) -> Classification:
    """Return the case tag and a witness that re-verifies exactly."""
    if check:
        require_lie(A)
    r = radical(A)
    semisimple = is_semisimple(A)
    if (r.dim == 0) != semisimple:
        raise InvariantViolation("radical and Killing determinant disagree on semisimplicity")
    if r.dim == 0:
        return Classification(SEMISIMPLE)

    series = derived_series(r)
    # Last nonzero term; the radical is solvable so the series ends at {0}.
    if series[-1].dim != 0:
        raise InvariantViolation("derived series of the radical does not terminate")
    terminal = series[-2]
    Z = center(A)

    def valid_i(h: SubspaceBasis) -> bool:
        return h.dim > 1 or not Z.contains_subspace(h)

    candidates = [h.with_tag("ideal") for h in (terminal, Z) if h.dim and valid_i(h)]
    if candidates:
        best = max(candidates, key=lambda h: h.dim)  # ties keep the derived term
        return Classification(COMMUTATIVE_IDEAL, ideal=best)

    # terminal is one-dimensional and central, and so is Z.
    if terminal.dim == r.dim:
        g0 = derived_algebra(A)
        if not (g0.dim + 1 == A.dim and sum_spaces(g0, Z).dim == A.dim):
            raise InvariantViolation("reductive splitting failed")
        if g0.dim and not is_semisimple(subalgebra_as_algebra(g0)):
            raise InvariantViolation("derived algebra of a reductive algebra is not semisimple")
        return Classification(SEMISIMPLE_PLUS_LINE, semisimple_part=g0, line=Z)

    prev = series[-3]
    Zp = center(prev)
    if Zp.dim > terminal.dim:
        return Classification(COMMUTATIVE_IDEAL, ideal=Zp.with_tag("ideal"))
    H = prev.with_tag("ideal")
    if not is_heisenberg(H):
        raise InvariantViolation("two-step nilpotent ideal with 1-dim center is not Heisenberg")
    return Classification(HEISENBERG_IDEAL, ideal=H)


def verify_classification(A: LieAlgebra, c: Classification) -> bool:
    """Re-check every property the witness claims, exactly."""
    if c.case == SEMISIMPLE:
        return is_semisimple(A)
    if c.case == COMMUTATIVE_IDEAL:
        h = c.ideal
        return (is_ideal(h) and is_commutative(h)
                and (h.dim > 1 or not center(A).contains_subspace(h)))
    if c.case == HEISENBERG_IDEAL:
        h = c.ideal
        return is_ideal(h) and is_heisenberg(h) and center(h).same_span(center(A))
    if c.case == SEMISIMPLE_PLUS_LINE:
        g0, K = c.semisimple_part, c.line
        return (K.dim == 1 and center(A).same_span(K) and is_ideal(g0)
                and sum_spaces(g0, K).dim == A.dim
                and (g0.dim == 0 or is_semisimple(subalgebra_as_algebra(g0))))
    return False
