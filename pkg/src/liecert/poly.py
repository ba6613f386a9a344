"""Sparse exact multivariate polynomials and the Lie-Poisson bracket.

Arithmetic is delegated to FLINT's ``fmpq_mpoly`` (graded lexicographic
order, coefficients in lowest terms); this module fixes the value semantics,
the canonical text form, and the bracket.

Text form: terms in descending graded-lex order joined by `` + `` / `` - ``,
each term ``c*x1^a1*x3`` with 1-based variable names, e.g.
``x1^2*x2 - 3/2*x3 + 1``.  The zero polynomial prints as ``0``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Mapping, Sequence

import flint
from flint.utils.flint_exceptions import DomainError

from .errors import InputError

if TYPE_CHECKING:
    from .algebra import LieAlgebra

Exponent = tuple[int, ...]


@lru_cache(maxsize=None)
def _ctx(nvars: int) -> flint.fmpq_mpoly_ctx:
    return flint.fmpq_mpoly_ctx.get(("x", nvars), "deglex")


def _fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _frac(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class Polynomial:
    """Immutable polynomial in ``x_1..x_nvars`` over Q.

    Equality is structural (canonical form), so "is zero" is ``p.is_zero()``.
    """

    __slots__ = ("nvars", "_p")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None, *, _raw=None):
        if nvars < 1:
            raise InputError("a polynomial needs at least one variable")
        self.nvars = nvars
        if _raw is not None:
            self._p = _raw
            return
        data = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise InputError(f"bad exponent {exp} for {nvars} variables")
            if c != 0:
                data[exp] = _fmpq(c)
        self._p = _ctx(nvars).from_dict(data)

    # construction -----------------------------------------------------------
    @classmethod
    def _wrap(cls, nvars: int, raw) -> "Polynomial":
        return cls(nvars, _raw=raw)

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Polynomial":
        """The coordinate ``x_{i+1}`` (0-based ``i``)."""
        if not 0 <= i < nvars:
            raise InputError(f"variable index {i} out of range for {nvars} variables")
        return cls._wrap(nvars, _ctx(nvars).gens()[i])

    @classmethod
    def linear(cls, coeffs: Sequence, constant=0) -> "Polynomial":
        """``sum coeffs[i] x_i + constant``."""
        n = len(coeffs)
        terms = {tuple(int(t == i) for t in range(n)): c for i, c in enumerate(coeffs) if c != 0}
        if constant:
            terms[(0,) * n] = constant
        return cls(n, terms)

    # inspection -------------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """Exponent tuple -> coefficient, in descending graded-lex order."""
        return {tuple(int(e) for e in m): _frac(c) for m, c in zip(self._p.monoms(), self._p.coeffs())}

    def __len__(self) -> int:
        return len(self._p)

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.is_constant()

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return -1 if self._p.is_zero() else int(self._p.total_degree())

    def degrees(self) -> tuple[int, ...]:
        return tuple(int(d) for d in self._p.degrees())

    def variables(self) -> set[int]:
        return {i for i, d in enumerate(self.degrees()) if d > 0}

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._p.monoms()}) <= 1

    # ring operations ----------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise InputError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Polynomial._wrap(self.nvars, self._p + o._p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Polynomial._wrap(self.nvars, self._p - o._p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Polynomial._wrap(self.nvars, o._p - self._p)

    def __neg__(self):
        return Polynomial._wrap(self.nvars, -self._p)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Polynomial._wrap(self.nvars, self._p * o._p)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        return Polynomial._wrap(self.nvars, self._p * _fmpq(c))

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise InputError("power must be a nonnegative integer")
        return Polynomial._wrap(self.nvars, self._p ** k)

    def exact_div(self, other: "Polynomial") -> "Polynomial | None":
        """Quotient when ``other`` divides ``self`` exactly, else None."""
        o = self._coerce(other)
        if o.is_zero():
            raise InputError("division by the zero polynomial")
        try:
            return Polynomial._wrap(self.nvars, self._p / o._p)
        except DomainError:
            return None

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == _fmpq(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(self._p.monoms()), tuple(str(c) for c in self._p.coeffs())))

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # calculus and evaluation -----------------------------------------------
    def partial(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise InputError(f"variable index {i} out of range")
        return Polynomial._wrap(self.nvars, self._p.derivative(i))

    def gradient(self) -> list["Polynomial"]:
        return [self.partial(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise InputError(f"point of length {len(point)} for {self.nvars} variables")
        return _frac(self._p(*[_fmpq(t) for t in point]))

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``x_i -> images[i]``; every image shares one variable count."""
        if len(images) != self.nvars:
            raise InputError("need one image per variable")
        m = images[0].nvars
        if any(q.nvars != m for q in images):
            raise InputError("images must share nvars")
        ctx = _ctx(m)
        return Polynomial._wrap(m, self._p.compose(*[q._p for q in images], ctx=ctx))

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict] = {}
        for m, c in zip(self._p.monoms(), self._p.coeffs()):
            parts.setdefault(int(sum(m)), {})[tuple(m)] = c
        return {d: Polynomial._wrap(self.nvars, _ctx(self.nvars).from_dict(t)) for d, t in sorted(parts.items())}

    def coefficients_in_last(self) -> dict[int, "Polynomial"]:
        """Split by the exponent of the last variable into polys in one fewer variable."""
        if self.nvars < 2:
            raise InputError("need at least two variables to split off the last")
        parts: dict[int, dict] = {}
        for m, c in zip(self._p.monoms(), self._p.coeffs()):
            parts.setdefault(int(m[-1]), {})[tuple(int(e) for e in m[:-1])] = c
        ctx = _ctx(self.nvars - 1)
        return {d: Polynomial._wrap(self.nvars - 1, ctx.from_dict(t)) for d, t in sorted(parts.items())}

    def embed(self, nvars: int, positions: Sequence[int]) -> "Polynomial":
        """Rename variable ``i`` to ``positions[i]`` inside ``nvars`` variables."""
        images = [Polynomial.var(nvars, p) for p in positions]
        return self.compose(images)

    def content_normalized(self) -> "Polynomial":
        """Scale so the leading coefficient is 1 (zero stays zero)."""
        if self.is_zero():
            return self
        return self.scale(1 / _frac(self._p.leading_coefficient()))


def variables(nvars: int) -> list[Polynomial]:
    return [Polynomial.var(nvars, i) for i in range(nvars)]


def _check_alg(f: Polynomial, A: "LieAlgebra") -> None:
    if f.nvars != A.dim:
        raise InputError(f"polynomial in {f.nvars} variables on an algebra of dimension {A.dim}")


@lru_cache(maxsize=64)
def _linear_brackets(A: "LieAlgebra") -> tuple[tuple[tuple[int, Polynomial], ...], ...]:
    """For each ``i``: the nonzero ``(j, sum_k c(i,j,k) x_k)``."""
    rows = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            coeffs = A.bracket_basis(i, j)
            if coeffs:
                lin = [Fraction(0)] * A.dim
                for k, c in coeffs.items():
                    lin[k] = c
                row.append((j, Polynomial.linear(lin)))
        rows.append(tuple(row))
    return tuple(rows)


def hamiltonian_field(g: Polynomial, A: "LieAlgebra") -> list[Polynomial]:
    """``H_i = sum_j c(i,j,k) x_k dg/dx_j``, so that ``{f, g} = sum_i df/dx_i H_i``."""
    _check_alg(g, A)
    dg = g.gradient()
    out = []
    for row in _linear_brackets(A):
        acc = Polynomial.zero(A.dim)
        for j, lin in row:
            if not dg[j].is_zero():
                acc = acc + lin * dg[j]
        out.append(acc)
    return out


def poisson_bracket(f: Polynomial, g: Polynomial, A: "LieAlgebra") -> Polynomial:
    """``{f, g}(x) = <x, [df(x), dg(x)]> = sum c(i,j,k) x_k df/dx_i dg/dx_j``."""
    _check_alg(f, A)
    _check_alg(g, A)
    if f.is_constant() or g.is_constant():
        return Polynomial.zero(A.dim)
    # Differentiate the smaller side, build the field from the other.
    swap = len(f) > len(g)
    a, b = (g, f) if swap else (f, g)
    field = hamiltonian_field(b, A)
    acc = Polynomial.zero(A.dim)
    for i, h in enumerate(field):
        if h.is_zero():
            continue
        da = a.partial(i)
        if not da.is_zero():
            acc = acc + da * h
    return -acc if swap else acc


# text form ---------------------------------------------------------------------

def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for exp, c in p.terms.items():
        mono = "*".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e)
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


_TERM = re.compile(r"^(?:(\d+)(?:/(\d+))?)?((?:\*?x\d+(?:\^\d+)?)*)$")
_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_poly(text: str, nvars: int) -> Polynomial:
    """Inverse of :func:`format_poly`; also tolerates extra whitespace."""
    s = "".join(text.split())
    if not s:
        raise InputError("empty polynomial text")
    if s == "0":
        return Polynomial.zero(nvars)
    if s[0] not in "+-":
        s = "+" + s
    chunks = re.findall(r"[+-][^+-]+", s)
    if "".join(chunks) != s:
        raise InputError(f"cannot parse polynomial {text!r}")
    terms: dict[Exponent, Fraction] = {}
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        body = chunk[1:]
        m = _TERM.match(body)
        if not m or not body:
            raise InputError(f"cannot parse term {chunk!r}")
        num, den, mono = m.groups()
        if num is None and not mono:
            raise InputError(f"cannot parse term {chunk!r}")
        if num is not None and mono and not mono.startswith("*"):
            raise InputError(f"missing '*' in term {chunk!r}")
        if num is None and mono.startswith("*"):
            raise InputError(f"dangling '*' in term {chunk!r}")
        coeff = Fraction(int(num or 1), int(den or 1)) * sign
        exp = [0] * nvars
        for var, power in _FACTOR.findall(mono):
            i = int(var) - 1
            if not 0 <= i < nvars:
                raise InputError(f"variable x{var} out of range for {nvars} variables")
            exp[i] += int(power or 1)
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return Polynomial(nvars, terms)
