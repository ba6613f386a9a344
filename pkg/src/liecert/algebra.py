"""Finite-dimensional Lie algebras over Q given by structure constants.

``[e_i, e_j] = sum_k c[i, j, k] e_k``.  Vectors are coordinate lists in the
basis ``e_1..e_n``; everything is exact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from . import linalg
from .errors import InputError, InvariantViolation

Vector = list[Fraction]


def _as_rng(rng: random.Random | int | None) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(0 if rng is None else rng)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure-constant presentation of a Lie algebra.

    ``structure`` maps ``(i, j, k)`` (0-based) to a nonzero Fraction.  The
    constructor stores whatever it is given; use :meth:`from_brackets` to apply
    antisymmetric completion, and :func:`check_jacobi` to validate.
    ``meta`` holds construction details (matrix realizations, semidirect
    splittings) used by the family constructions; it is not part of equality.
    """

    dim: int
    basis_names: tuple[str, ...]
    structure: Mapping[tuple[int, int, int], Fraction]
    name: str = ""
    meta: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InputError("dimension must be positive")
        if len(self.basis_names) != self.dim:
            raise InputError("need one basis name per dimension")
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        clean = {}
        for (i, j, k), c in self.structure.items():
            if not all(0 <= t < self.dim for t in (i, j, k)):
                raise InputError(f"structure index {(i, j, k)} out of range")
            c = Fraction(c)
            if c != 0:
                clean[(i, j, k)] = c
                table.setdefault((i, j), {})[k] = c
        object.__setattr__(self, "structure", clean)
        object.__setattr__(self, "_table", table)

    @classmethod
    def from_brackets(
        cls,
        names: Sequence[str],
        brackets: Mapping[tuple[int, int], Mapping[int, Any]],
        name: str = "",
        meta: Mapping[str, Any] | None = None,
    ) -> "LieAlgebra":
        """Build from ``{(i, j): {k: c}}``, completing ``c(j,i,k) = -c(i,j,k)``.

        Conflicting entries for the two orientations of a pair are rejected.
        """
        structure: dict[tuple[int, int, int], Fraction] = {}
        for (i, j), row in brackets.items():
            for k, c in row.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if i == j:
                    raise InputError(f"nonzero self-bracket [e{i + 1}, e{i + 1}]")
                for key, val in (((i, j, k), c), ((j, i, k), -c)):
                    old = structure.get(key)
                    if old is not None and old != val:
                        raise InputError(f"conflicting structure constants at {key}")
                    structure[key] = val
        return cls(len(names), tuple(names), structure, name, dict(meta or {}))

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        return self._table.get((i, j), {})  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.dim, self.basis_names, self.structure) == (
            other.dim,
            other.basis_names,
            other.structure,
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.basis_names, frozenset(self.structure.items())))

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name or '?'}, dim={self.dim})"

    def basis_vector(self, i: int) -> Vector:
        return [Fraction(int(t == i)) for t in range(self.dim)]

    def ad_matrix(self, u: Sequence) -> list[Vector]:
        """Matrix of ``ad_u`` (column j holds ``[u, e_j]``)."""
        cols = [bracket(self, u, self.basis_vector(j)) for j in range(self.dim)]
        return linalg.transpose(cols)


def _check_vec(A: LieAlgebra, u: Sequence) -> None:
    if len(u) != A.dim:
        raise InputError(f"vector of length {len(u)} for algebra of dimension {A.dim}")


def bracket(A: LieAlgebra, u: Sequence, v: Sequence) -> Vector:
    """``[u, v] = sum u_i v_j c(i, j, .)``."""
    _check_vec(A, u)
    _check_vec(A, v)
    out = [Fraction(0)] * A.dim
    nz_u = [(i, Fraction(x)) for i, x in enumerate(u) if x != 0]
    nz_v = [(j, Fraction(y)) for j, y in enumerate(v) if y != 0]
    for i, x in nz_u:
        for j, y in nz_v:
            row = A.bracket_basis(i, j)
            if row:
                xy = x * y
                for k, c in row.items():
                    out[k] += xy * c
    return out


@dataclass(frozen=True)
class JacobiViolation:
    identity: str  # "antisymmetry" or "jacobi"
    indices: tuple[int, ...]  # 0-based; (i, j, k) or (i, j, l, m)
    defect: Fraction


def check_jacobi(A: LieAlgebra) -> list[JacobiViolation]:
    """All antisymmetry and Jacobi violations; an empty list means a Lie algebra."""
    out: list[JacobiViolation] = []
    pairs = sorted({(min(i, j), max(i, j), k) for (i, j, k) in A.structure})
    for i, j, k in pairs:
        s = A.structure.get((i, j, k), Fraction(0)) + A.structure.get((j, i, k), Fraction(0))
        if i == j or s != 0:
            out.append(JacobiViolation("antisymmetry", (i, j, k), s))
    n = A.dim
    basis = [A.basis_vector(t) for t in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ij = bracket(A, basis[i], basis[j])
            for l in range(j + 1, n):
                jl = bracket(A, basis[j], basis[l])
                li = bracket(A, basis[l], basis[i])
                total = [a + b + c for a, b, c in zip(
                    bracket(A, ij, basis[l]),
                    bracket(A, jl, basis[i]),
                    bracket(A, li, basis[j]),
                )]
                for m, d in enumerate(total):
                    if d != 0:
                        out.append(JacobiViolation("jacobi", (i, j, l, m), d))
    return out


def require_lie(A: LieAlgebra) -> None:
    bad = check_jacobi(A)
    if bad:
        raise InvariantViolation(f"{A!r} violates the Lie axioms: {bad[:3]}")


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Independent vectors spanning a subspace of ``parent``.

    ``tag`` is one of "subspace", "subalgebra", "ideal"; :meth:`verify_tag` checks
    the corresponding closure condition exactly.
    """

    parent: LieAlgebra
    vectors: tuple[tuple[Fraction, ...], ...]
    tag: str = "subspace"

    def __post_init__(self) -> None:
        vecs = tuple(tuple(Fraction(x) for x in v) for v in self.vectors)
        for v in vecs:
            _check_vec(self.parent, v)
        if vecs and linalg.rank(vecs) != len(vecs):
            raise InputError("subspace vectors are linearly dependent")
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def span(cls, parent: LieAlgebra, vectors: Iterable[Sequence], tag: str = "subspace") -> "SubspaceBasis":
        """Echelon basis of the span of arbitrary (possibly dependent) vectors."""
        vecs = [list(v) for v in vectors if any(x != 0 for x in v)]
        return cls(parent, tuple(tuple(v) for v in linalg.row_basis(vecs)), tag)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def contains(self, vec: Sequence) -> bool:
        return linalg.in_span(self.vectors, vec)

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def same_span(self, other: "SubspaceBasis") -> bool:
        return self.dim == other.dim and self.contains_subspace(other)

    def coordinates(self, vec: Sequence) -> Vector:
        """Coefficients of ``vec`` in this basis; raises if ``vec`` is outside."""
        cols = linalg.transpose(self.vectors) if self.vectors else [[] for _ in vec]
        sol = linalg.solve(cols, vec) if self.vectors else ([] if all(x == 0 for x in vec) else None)
        if sol is None:
            raise InputError("vector does not lie in the subspace")
        return sol

    def with_tag(self, tag: str) -> "SubspaceBasis":
        return SubspaceBasis(self.parent, self.vectors, tag)

    def verify_tag(self) -> bool:
        if self.tag == "ideal":
            return is_ideal(self)
        if self.tag == "subalgebra":
            return is_subalgebra(self)
        return True


def zero_subspace(A: LieAlgebra, tag: str = "ideal") -> SubspaceBasis:
    return SubspaceBasis(A, (), tag)


def whole(A: LieAlgebra) -> SubspaceBasis:
    return SubspaceBasis(A, tuple(tuple(A.basis_vector(i)) for i in range(A.dim)), "ideal")


def is_subalgebra(S: SubspaceBasis) -> bool:
    A = S.parent
    return all(S.contains(bracket(A, u, v)) for a, u in enumerate(S.vectors) for v in S.vectors[a + 1:])


def is_ideal(S: SubspaceBasis) -> bool:
    A = S.parent
    return all(S.contains(bracket(A, A.basis_vector(i), v)) for i in range(A.dim) for v in S.vectors)


def is_commutative(S: SubspaceBasis) -> bool:
    A = S.parent
    return all(not any(bracket(A, u, v)) for u in S.vectors for v in S.vectors)


def bracket_span(S: SubspaceBasis, T: SubspaceBasis, tag: str = "subspace") -> SubspaceBasis:
    A = S.parent
    return SubspaceBasis.span(A, (bracket(A, u, v) for u in S.vectors for v in T.vectors), tag)


def intersect(S: SubspaceBasis, T: SubspaceBasis, tag: str = "subspace") -> SubspaceBasis:
    if not S.vectors or not T.vectors:
        return SubspaceBasis(S.parent, (), tag)
    # Solve sum a_i s_i = sum b_j t_j.
    cols = [list(v) for v in S.vectors] + [[-x for x in v] for v in T.vectors]
    kernel = linalg.nullspace(linalg.transpose(cols))
    vecs = []
    for coeffs in kernel:
        vecs.append([sum((c * v[t] for c, v in zip(coeffs, S.vectors)), Fraction(0)) for t in range(S.parent.dim)])
    return SubspaceBasis.span(S.parent, vecs, tag)


def sum_spaces(S: SubspaceBasis, T: SubspaceBasis, tag: str = "subspace") -> SubspaceBasis:
    return SubspaceBasis.span(S.parent, list(S.vectors) + list(T.vectors), tag)


def complement(S: SubspaceBasis, inside: SubspaceBasis | None = None) -> SubspaceBasis:
    """A complement of ``S`` in ``inside`` (default: the whole algebra).

    Chosen greedily from the basis of ``inside`` so that it is deterministic.
    """
    A = S.parent
    pool = inside.vectors if inside is not None else tuple(tuple(A.basis_vector(i)) for i in range(A.dim))
    chosen: list[tuple[Fraction, ...]] = []
    current = list(S.vectors)
    for v in pool:
        if linalg.rank(current + [list(v)]) > len(current):
            current.append(list(v))
            chosen.append(v)
    return SubspaceBasis(A, tuple(chosen))


def killing_form(A: LieAlgebra) -> list[Vector]:
    """``K(i, j) = trace(ad e_i o ad e_j) = sum_{k,l} c(i,k,l) c(j,l,k)``."""
    n = A.dim
    ad = []
    for i in range(n):
        entries = {}
        for k in range(n):
            for l, c in A.bracket_basis(i, k).items():
                entries[(l, k)] = c  # (ad e_i)[l][k]
        ad.append(entries)
    K = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = Fraction(0)
            for (l, k), c in ad[i].items():
                d = ad[j].get((k, l))
                if d is not None:
                    s += c * d
            K[i][j] = K[j][i] = s
    return K


def is_semisimple(A: LieAlgebra) -> bool:
    return linalg.det(killing_form(A)) != 0


def derived_algebra(A: LieAlgebra) -> SubspaceBasis:
    return bracket_span(whole(A), whole(A), "ideal")


def radical(A: LieAlgebra) -> SubspaceBasis:
    """Killing-orthogonal complement of ``[g, g]`` (Cartan's criterion)."""
    K = killing_form(A)
    rows = [[sum((v[i] * K[i][j] for i in range(A.dim)), Fraction(0)) for j in range(A.dim)]
            for v in derived_algebra(A).vectors]
    vecs = linalg.nullspace(rows, A.dim)
    return SubspaceBasis.span(A, vecs, "ideal")


def derived_series(S: SubspaceBasis) -> list[SubspaceBasis]:
    """``S, [S,S], ...`` up to the first term that equals its successor."""
    series = [S]
    while True:
        nxt = bracket_span(series[-1], series[-1], S.tag)
        if nxt.dim == series[-1].dim:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def center(A: LieAlgebra | SubspaceBasis) -> SubspaceBasis:
    """Center of the algebra, or of the subalgebra/ideal spanned by ``S``."""
    if isinstance(A, LieAlgebra):
        S = whole(A)
    else:
        S = A
    P = S.parent
    if S.dim == 0:
        return zero_subspace(P)
    # xi = sum a_t s_t with [xi, s] = 0 for every s in S.
    rows = []
    for s in S.vectors:
        cols = [bracket(P, t, s) for t in S.vectors]
        rows.extend(linalg.transpose(cols))
    kernel = linalg.nullspace(rows, S.dim)
    vecs = [[sum((c * v[t] for c, v in zip(coeffs, S.vectors)), Fraction(0)) for t in range(P.dim)]
            for coeffs in kernel]
    return SubspaceBasis.span(P, vecs, "ideal" if isinstance(A, LieAlgebra) else "subalgebra")


@dataclass(frozen=True)
class PoissonTensorAt:
    point: tuple[Fraction, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return linalg.rank([list(r) for r in self.matrix])

    @property
    def corank(self) -> int:
        return len(self.point) - self.rank


def _phi_matrix(A: LieAlgebra, x: Sequence) -> list[list[Fraction]]:
    n = A.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j, k), c in A.structure.items():
        if x[k]:
            m[i][j] += c * x[k]
    return m


def poisson_tensor(A: LieAlgebra, x: Sequence) -> PoissonTensorAt:
    """``Phi_x(e_i, e_j) = sum_k c(i,j,k) x_k``."""
    _check_vec(A, x)
    m = _phi_matrix(A, x)
    return PoissonTensorAt(tuple(Fraction(t) for t in x), tuple(tuple(row) for row in m))


def _int_rank(A: LieAlgebra, x: Sequence[int]) -> int:
    m = _phi_matrix(A, x)
    den = math.lcm(*(e.denominator for row in m for e in row))
    return linalg.rank([[int(e * den) for e in row] for row in m])


def sample_point(rng: random.Random, n: int, bound: int) -> list[int]:
    return [rng.randint(-bound, bound) for _ in range(n)]


@dataclass(frozen=True)
class IndexEstimate:
    value: int
    max_rank: int
    trials: int
    bound: int
    seed: int | None


def index_estimate(A: LieAlgebra, rng: random.Random | int | None = None, trials: int = 8,
                   bound: int = 10**4) -> IndexEstimate:
    """Sampled ``dim - max rank Phi_x``; an upper bound on ind g, exact w.h.p."""
    if trials < 1 or bound < 1:
        raise InputError("trials and bound must be positive")
    seed = rng if isinstance(rng, int) else None
    r = _as_rng(rng)
    best = 0
    for _ in range(trials):
        best = max(best, _int_rank(A, sample_point(r, A.dim, bound)))
    return IndexEstimate(A.dim - best, best, trials, bound, seed)


def index(A: LieAlgebra, rng: random.Random | int | None = None, trials: int = 8, bound: int = 10**4) -> int:
    return index_estimate(A, rng, trials, bound).value


def subalgebra_as_algebra(S: SubspaceBasis, names: Sequence[str] | None = None, name: str = "") -> "LieAlgebra":
    """The subalgebra spanned by ``S`` as an algebra in its own basis."""
    if not is_subalgebra(S):
        raise InputError("subspace is not closed under the bracket")
    A = S.parent
    brackets = {}
    for a, u in enumerate(S.vectors):
        for b in range(a + 1, len(S.vectors)):
            coords = S.coordinates(bracket(A, u, S.vectors[b]))
            row = {k: c for k, c in enumerate(coords) if c != 0}
            if row:
                brackets[(a, b)] = row
    names = list(names) if names else [f"b{t + 1}" for t in range(S.dim)]
    return LieAlgebra.from_brackets(names, brackets, name or f"sub({A.name})",
                                    {"embedding": tuple(S.vectors), "parent": A.name})


def stationary_subalgebra(A: LieAlgebra, ideal: SubspaceBasis, h: Sequence) -> SubspaceBasis:
    """``St(h) = {xi : h([xi, eta]) = 0 for all eta in the ideal}``.

    ``h`` is given by its values on the ideal basis, i.e. a point of ``ideal*``.
    """
    if len(h) != ideal.dim:
        raise InputError("h must have one coordinate per ideal basis vector")
    rows = []
    for eta in ideal.vectors:
        row = []
        for i in range(A.dim):
            coords = ideal.coordinates(bracket(A, A.basis_vector(i), eta))
            row.append(sum((Fraction(a) * b for a, b in zip(h, coords)), Fraction(0)))
        rows.append(row)
    return SubspaceBasis.span(A, linalg.nullspace(rows, A.dim), "subalgebra")
