"""Single reduction steps packaged as families for arbitrary input algebras.

These do not recurse: each takes candidate polynomials produced by one step
(section functions over a commutative ideal, or lifts across a Heisenberg
ideal) and keeps a commuting, independent subset chosen greedily.  Whether
the result is complete is for :mod:`liecert.verify` to decide.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .. import linalg
from ..algebra import LieAlgebra, SubspaceBasis, sample_point
from ..classify import COMMUTATIVE_IDEAL, HEISENBERG_IDEAL, classify
from ..errors import PreconditionError
from ..poly import Polynomial, poisson_bracket
from .base import CommutingFamily, make_family
from .heisenberg import heisenberg_split, lift_tilde
from .section import polynomial_sections, section_function


def casimirs_up_to_degree(A: LieAlgebra, degree: int) -> list[Polynomial]:
    """A basis of invariant polynomials of degree ``1..degree`` (no constants).

    Solved as one linear system: ``{f, x_i} = 0`` for every coordinate.
    """
    n = A.dim
    monos = []
    for d in range(1, degree + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for s in combo:
                e[s] += 1
            monos.append(Polynomial(n, {tuple(e): 1}))
    xs = [Polynomial.var(n, i) for i in range(n)]
    columns = []
    keys: dict[tuple, int] = {}
    for mono in monos:
        col: dict[int, Fraction] = {}
        for i, x in enumerate(xs):
            for exp, c in poisson_bracket(mono, x, A).terms.items():
                key = keys.setdefault((i, exp), len(keys))
                col[key] = c
        columns.append(col)
    rows = [[col.get(r, Fraction(0)) for col in columns] for r in range(len(keys))]
    kernel = linalg.nullspace(rows, len(monos)) if rows else [
        [Fraction(int(t == u)) for t in range(len(monos))] for u in range(len(monos))]
    out = []
    for vec in kernel:
        p = Polynomial.zero(n)
        for c, mono in zip(vec, monos):
            if c:
                p = p + mono * c
        out.append(p)
    return out


def greedy_commuting(A: LieAlgebra, candidates: Sequence[Polynomial], seed: int = 0,
                     points: int = 3, bound: int = 10**3) -> list[int]:
    """Indices of candidates kept in order: each must commute with the kept ones
    and raise the gradient rank at seeded sample points."""
    rng = random.Random(seed)
    pts = [sample_point(rng, A.dim, bound) for _ in range(points)]
    kept: list[int] = []
    rows: list[list[list[Fraction]]] = [[] for _ in pts]
    rank = 0
    for t, f in enumerate(candidates):
        if f.is_constant():
            continue
        if any(not poisson_bracket(f, candidates[i], A).is_zero() for i in kept):
            continue
        grad = f.gradient()
        trial = [r + [[g.evaluate(x) for g in grad]] for r, x in zip(rows, pts)]
        new_rank = max(linalg.rank(r) for r in trial)
        if new_rank > rank:
            kept.append(t)
            rows, rank = trial, new_rank
    return kept


def section_step(A: LieAlgebra, ideal: SubspaceBasis | None = None, degree: int = 1, seed: int = 0,
                 algebra_ref: dict | None = None) -> CommutingFamily:
    """Ideal coordinates plus section functions of degree ``<= degree``."""
    if ideal is None:
        c = classify(A)
        if c.case != COMMUTATIVE_IDEAL:
            raise PreconditionError(f"no suitable commutative ideal: the algebra is in case ({c.numeral})")
        ideal = c.ideal
    coords = [Polynomial.linear(list(v)) for v in ideal.vectors]
    funcs = [section_function(s, check=False) for s in polynomial_sections(A, ideal, degree)]
    cands = coords + funcs
    keep = greedy_commuting(A, cands, seed)
    params = {"degree": degree, "ideal": [list(v) for v in ideal.vectors]}
    return make_family(A, [cands[i] for i in keep], "section", params, seed, algebra_ref=algebra_ref)


def heisenberg_step(A: LieAlgebra, H: SubspaceBasis | None = None, casimir_degree: int = 2, seed: int = 0,
                    algebra_ref: dict | None = None) -> CommutingFamily:
    """Central coordinate, a Lagrangian half of the ``V``-coordinates, and lifts
    of a greedy commuting family on ``b*`` (its low-degree Casimirs first,
    then its coordinates)."""
    if H is None:
        c = classify(A)
        if c.case != HEISENBERG_IDEAL:
            raise PreconditionError(f"no Heisenberg ideal: the algebra is in case ({c.numeral})")
        H = c.ideal
    split = heisenberg_split(A, H)
    b = split.b_algebra()
    cands_b = casimirs_up_to_degree(b, casimir_degree) + [Polynomial.var(b.dim, i) for i in range(b.dim)]
    keep = greedy_commuting(b, cands_b, seed)
    lifted = [lift_tilde(cands_b[i], split)[0] for i in keep]
    p = split.v_coordinates()
    members = [split.central_coordinate()] + [p[i] for i in split.lagrangian()] + lifted
    params = {"casimir_degree": casimir_degree, "H": [list(v) for v in H.vectors], "b_dim": split.b.dim}
    return make_family(A, members, "heisenberg_step", params, seed, [split.central_coordinate()], algebra_ref)
