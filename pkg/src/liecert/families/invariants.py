"""Classical invariants, the argument-shift family and Gelfand-Zetlin chains."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from ..algebra import LieAlgebra, index_estimate, poisson_tensor, sample_point
from ..catalog import catalog
from ..errors import InputError, PreconditionError
from ..poly import Polynomial
from . import matrices as mx
from .base import CommutingFamily, make_family

MATRIX_KINDS = ("gl", "so", "sp")


def matrix_invariants(kind: str, M: mx.PMatrix) -> list[Polynomial]:
    """A minimal generating set of invariants of the matrix model ``M``.

    ``gl``: ``Tr M^k`` for ``k = 1..n``.  ``so``: ``Tr M^(2k)`` for
    ``2k < n`` and the Pfaffian when ``n`` is even, so that the count is
    ``floor(n/2)``.  ``sp``: ``Tr M^(2k)`` for ``2k <= n``.
    """
    n = len(M)
    if kind == "gl":
        traces = mx.power_traces(M, range(1, n + 1))
        return [traces[k] for k in range(1, n + 1)]
    if kind == "so":
        even = [2 * k for k in range(1, (n + 1) // 2) if 2 * k < n]
        out = []
        if even:
            traces = mx.power_traces(M, even)
            out = [traces[k] for k in even]
        if n % 2 == 0:
            out.append(mx.pfaffian(M))
        return out
    if kind == "sp":
        even = list(range(2, n + 1, 2))
        traces = mx.power_traces(M, even)
        return [traces[k] for k in even]
    raise InputError(f"no invariant catalog for {kind!r}")


def _kind(A: LieAlgebra) -> str:
    kind = A.meta.get("kind")
    if kind not in MATRIX_KINDS:
        raise InputError(f"expected a catalog gl/so/sp algebra, got {A.name or 'an unnamed algebra'}")
    return kind


def invariant_generators(family: str | LieAlgebra, n: int | None = None) -> list[Polynomial]:
    """Generators of the coadjoint invariants of ``gl(n)``, ``so(n)`` or ``sp(2n)``."""
    A = family if isinstance(family, LieAlgebra) else catalog(family, n) if family in MATRIX_KINDS else None
    if A is None:
        raise InputError(f"no invariant catalog for {family!r}")
    return matrix_invariants(_kind(A), mx.coadjoint_matrix(A))


def shift_components(f: Polynomial, a: Sequence) -> list[Polynomial]:
    """Homogeneous components of ``x -> f(a + x)`` of positive degree, lowest first."""
    n = f.nvars
    images = [Polynomial.var(n, i) + Fraction(a[i]) if a[i] else Polynomial.var(n, i) for i in range(n)]
    parts = f.compose(images).homogeneous_components()
    return [parts[d] for d in sorted(parts) if d > 0]


def is_regular(A: LieAlgebra, a: Sequence, index_value: int) -> bool:
    return poisson_tensor(A, a).corank == index_value


def argument_shift(invariants: Sequence[Polynomial], a: Sequence, A: LieAlgebra, *,
                   index_value: int | None = None, seed: int | None = None,
                   algebra_ref: dict | None = None) -> CommutingFamily:
    """Shift family of ``invariants`` at the regular element ``a``."""
    if len(a) != A.dim:
        raise InputError(f"shift vector has length {len(a)}, algebra has dimension {A.dim}")
    a = [Fraction(t) for t in a]
    ind = index_estimate(A, seed).value if index_value is None else index_value
    corank = poisson_tensor(A, a).corank
    if corank != ind:
        raise PreconditionError(f"shift vector is not regular: corank {corank} exceeds index {ind} by {corank - ind}")
    raw = []
    for f in invariants:
        raw.extend(shift_components(f, a))
    return make_family(A, raw, "shift", {"a": a}, seed, algebra_ref=algebra_ref)


def shift_family(A: LieAlgebra, seed: int = 0, *, bound: int = 100, retries: int = 16,
                 invariants: Sequence[Polynomial] | None = None, algebra_ref: dict | None = None) -> CommutingFamily:
    """Argument shift with a seeded regular ``a``; resampled up to ``retries`` times."""
    rng = random.Random(seed)
    invs = list(invariants) if invariants is not None else invariant_generators(A)
    ind = index_estimate(A, seed).value
    for _ in range(retries):
        a = sample_point(rng, A.dim, bound)
        if is_regular(A, a, ind):
            return argument_shift(invs, a, A, index_value=ind, seed=seed, algebra_ref=algebra_ref)
    raise PreconditionError(f"no regular shift vector found in {retries} attempts")


def _leading_blocks(kind: str, n: int) -> range:
    return range(1, n + 1) if kind == "gl" else range(2, n + 1)


def gelfand_zetlin(A: LieAlgebra, algebra_ref: dict | None = None) -> CommutingFamily:
    """Union of the invariants of the leading ``i x i`` blocks, ``i = 1..n``.

    The leading block of ``M`` is the matrix model of the subalgebra of
    matrices supported on the first ``i`` rows and columns, so each block's
    invariants commute with everything supported there (and with each other).
    """
    kind = _kind(A)
    if kind == "sp":
        raise InputError("the leading-block chain is implemented for gl and so only")
    M = mx.coadjoint_matrix(A)
    raw = []
    chain = list(_leading_blocks(kind, len(M)))
    for i in chain:
        raw.extend(matrix_invariants(kind, mx.submatrix(M, i)))
    return make_family(A, raw, "gz", {"chain": chain}, algebra_ref=algebra_ref)
