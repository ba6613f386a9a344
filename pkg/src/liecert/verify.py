"""Certificates for commuting families.

Commutativity is exact: every pairwise Lie-Poisson bracket must be the zero
polynomial.  Independence is certified from below by the exact rank of the
gradient matrix at seeded integer points; ``1/2 (dim + ind)`` bounds it from
above, so reaching the target settles completeness (given the sampled index).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import IndexEstimate, _phi_matrix, index_estimate, sample_point
from .errors import InputError
from .families.base import CommutingFamily, rational_str
from .poly import Polynomial, format_poly, poisson_bracket

SCHEMA = "liecert.verification/1"
COMPLETE, INCOMPLETE, COMMUTATIVITY_FAILED = "complete", "incomplete", "commutativity-failed"
DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class PairStatus:
    i: int
    j: int
    zero: bool
    witness: Polynomial | None = None


def check_commutes(F: CommutingFamily, stop_on_failure: bool = False) -> list[PairStatus]:
    """Bracket every unordered pair of members; a pair passes iff the bracket is 0."""
    out = []
    members = F.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            b = poisson_bracket(members[i], members[j], F.algebra)
            ok = b.is_zero()
            out.append(PairStatus(i, j, ok, None if ok else b))
            if stop_on_failure and not ok:
                return out
    return out


def commutes(F: CommutingFamily) -> bool:
    return all(p.zero for p in check_commutes(F, stop_on_failure=True))


class _Gradients:
    """Gradient polynomials computed once, evaluated at many points."""

    def __init__(self, members: Sequence[Polynomial]):
        self.grads = [f.gradient() for f in members]

    def at(self, x: Sequence) -> list[list[Fraction]]:
        return [[g.evaluate(x) for g in grad] for grad in self.grads]


def _avoids(avoid: Sequence[Polynomial], x: Sequence) -> bool:
    return all(p.evaluate(x) != 0 for p in avoid)


def sample_points(F: CommutingFamily, rng: random.Random, trials: int, bound: int,
                  max_rejects: int = 1000) -> list[list[int]]:
    """Seeded integer points in ``[-bound, bound]``, rejecting the zero sets of ``F.avoid``."""
    pts = []
    rejects = 0
    while len(pts) < trials:
        x = sample_point(rng, F.algebra.dim, bound)
        if _avoids(F.avoid, x):
            pts.append(x)
        else:
            rejects += 1
            if rejects > max_rejects:
                raise InputError("sampling keeps landing on an excluded locus; bound too small?")
    return pts


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    den = math.lcm(*(e.denominator for r in rows for e in r))
    return linalg.rank([[int(e * den) for e in r] for r in rows])


def jacobian_rank(F: CommutingFamily, seed: int = DEFAULT_SEED, trials: int = 8, bound: int = 10**4,
                  points: Sequence[Sequence] | None = None) -> int:
    """Max exact rank of the gradient matrix over the sampled points."""
    if trials < 1:
        raise InputError("trials must be positive")
    if not F.members:
        return 0
    pts = points if points is not None else sample_points(F, random.Random(seed), trials, bound)
    grads = _Gradients(F.members)
    return max(_rank(grads.at(x)) for x in pts)


@dataclass(frozen=True)
class IsotropyResult:
    point: tuple[Fraction, ...]
    passed: bool
    defect: tuple[tuple[Fraction, ...], ...]


def _pairing(phi, grads):
    n = len(phi)
    phig = [[sum((phi[a][b] * g[b] for b in range(n) if g[b]), Fraction(0)) for a in range(n)] for g in grads]
    return [[sum((gi[a] * pj[a] for a in range(n) if gi[a]), Fraction(0)) for pj in phig] for gi in grads]


def isotropy_check(F: CommutingFamily, x: Sequence, grads: _Gradients | None = None) -> IsotropyResult:
    """``Phi_x(df_i(x), df_j(x))`` must vanish for all pairs."""
    if len(x) != F.algebra.dim:
        raise InputError("point has the wrong length")
    x = [Fraction(t) for t in x]
    g = (grads or _Gradients(F.members)).at(x)
    m = _pairing(_phi_matrix(F.algebra, x), g)
    ok = all(e == 0 for row in m for e in row)
    return IsotropyResult(tuple(x), ok, tuple(tuple(r) for r in m))


@dataclass(frozen=True)
class RelativeIsotropy:
    """Maximal isotropy of ``span dA(x)`` inside ``span dF(x)`` at one point."""

    dim_dA: int
    dim_dF: int
    corank_on_dF: int
    isotropic: bool

    @property
    def maximal(self) -> bool:
        return self.isotropic and 2 * self.dim_dA == self.dim_dF + self.corank_on_dF


def relative_isotropy(F: CommutingFamily, subset: Sequence[int], x: Sequence) -> RelativeIsotropy:
    """Compare the sub-collection ``subset`` of ``F`` with the whole of ``F`` at ``x``.

    With ``r`` the rank of ``Phi_x`` on ``span dF(x)``, a maximal isotropic
    subspace has dimension ``dim dF - r/2``.
    """
    x = [Fraction(t) for t in x]
    g = _Gradients(F.members).at(x)
    basis_F = linalg.row_basis(g)
    ga = [g[i] for i in subset]
    phi = _phi_matrix(F.algebra, x)
    on_F = _pairing(phi, basis_F) if basis_F else []
    r = _rank(on_F) if basis_F else 0
    on_A = _pairing(phi, ga) if ga else []
    iso = all(e == 0 for row in on_A for e in row)
    dA = _rank(ga) if ga else 0
    return RelativeIsotropy(dA, len(basis_F), len(basis_F) - r, iso)


@dataclass(frozen=True)
class VerificationReport:
    algebra: str
    dim: int
    members: int
    pairs: tuple[PairStatus, ...]
    rank: int
    index: IndexEstimate
    target: Fraction
    isotropy: tuple[IsotropyResult, ...]
    bound_ok: tuple[bool, ...]
    seed: int
    trials: int
    bound: int
    provenance: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if not all(p.zero for p in self.pairs):
            return COMMUTATIVITY_FAILED
        if self.target.denominator == 1 and self.rank == self.target and all(r.passed for r in self.isotropy):
            return COMPLETE
        return INCOMPLETE

    @property
    def failing_pairs(self) -> list[PairStatus]:
        return [p for p in self.pairs if not p.zero]

    def to_dict(self) -> dict:
        from .families.base import to_jsonable

        return {
            "schema": SCHEMA,
            "algebra": {"name": self.algebra, "dim": self.dim},
            "family": {"members": self.members, "provenance": to_jsonable(self.provenance)},
            "commutativity": {
                "pairs_checked": len(self.pairs),
                "all_zero": all(p.zero for p in self.pairs),
                "failures": [{"i": p.i + 1, "j": p.j + 1, "bracket": format_poly(p.witness)}
                             for p in self.failing_pairs],
            },
            "rank": {"value": self.rank, "trials": self.trials, "bound": self.bound, "seed": self.seed},
            "index_used": {"value": self.index.value, "max_rank": self.index.max_rank,
                           "trials": self.index.trials, "bound": self.index.bound, "seed": self.index.seed},
            "target": rational_str(self.target),
            "isotropy": [{"point": [rational_str(t) for t in r.point], "passed": r.passed} for r in self.isotropy],
            "rank_bound_ok": list(self.bound_ok),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def describe_algebra(F: CommutingFamily) -> str:
    return F.algebra.name or f"dim-{F.algebra.dim}"


def completeness_report(F: CommutingFamily, seed: int = DEFAULT_SEED, trials: int = 8,
                        bound: int = 10**4, check_pairs: bool = True) -> VerificationReport:
    """Commutativity, sampled index, Jacobian rank and isotropy in one report.

    Index sampling and point sampling use independent streams derived from
    ``seed`` so that a report depends only on ``(family, seed, trials, bound)``.
    """
    A = F.algebra
    pairs = tuple(check_commutes(F)) if check_pairs else ()
    ind = index_estimate(A, random.Random(f"index:{seed}"), trials, bound)
    ind = IndexEstimate(ind.value, ind.max_rank, ind.trials, ind.bound, seed)
    target = Fraction(A.dim + ind.value, 2)
    pts = sample_points(F, random.Random(f"points:{seed}"), trials, bound)
    grads = _Gradients(F.members) if F.members else None
    rank = 0
    iso, bound_ok = [], []
    for x in pts:
        if grads is not None:
            g = grads.at(x)
            r = _rank(g)
            rank = max(rank, r)
            iso.append(isotropy_check(F, x, grads))
        else:
            r = 0
            iso.append(IsotropyResult(tuple(Fraction(t) for t in x), True, ()))
        corank = A.dim - _rank(_phi_matrix(A, x))
        bound_ok.append(2 * r - corank <= A.dim)
    return VerificationReport(describe_algebra(F), A.dim, len(F.members), pairs, rank, ind, target,
                              tuple(iso), tuple(bound_ok), seed, trials, bound, F.provenance)


def certify_rank(F: CommutingFamily, seed: int = DEFAULT_SEED, trials: int = 4, bound: int = 10**4) -> bool:
    """Cheap completeness test used by randomized constructions: rank reaches the target."""
    ind = index_estimate(F.algebra, random.Random(f"index:{seed}"), trials, bound).value
    target = Fraction(F.algebra.dim + ind, 2)
    return target.denominator == 1 and jacobian_rank(F, seed, trials, bound) == target
