"""The family container shared by every construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from ..algebra import LieAlgebra
from ..errors import InputError
from ..poly import Polynomial, format_poly


@dataclass(frozen=True, eq=False)
class CommutingFamily:
    """Ordered polynomials on the dual of ``algebra`` plus how they were made.

    Commutativity is a claim to be certified by :mod:`liecert.verify`.
    ``avoid`` lists polynomials whose zero sets random sampling must avoid
    (denominators of the construction).  ``raw_members`` keeps the list as
    generated, before zeros and repeats were pruned.
    """

    algebra: LieAlgebra
    members: tuple[Polynomial, ...]
    construct: str = "custom"
    params: dict = field(default_factory=dict)
    seed: int | None = None
    avoid: tuple[Polynomial, ...] = ()
    raw_members: tuple[Polynomial, ...] = ()
    algebra_ref: dict | None = None

    def __post_init__(self) -> None:
        for p in tuple(self.members) + tuple(self.avoid) + tuple(self.raw_members):
            if p.nvars != self.algebra.dim:
                raise InputError(f"member has {p.nvars} variables, algebra has dimension {self.algebra.dim}")

    def __len__(self) -> int:
        return len(self.members)

    @property
    def provenance(self) -> dict:
        return {"construct": self.construct, "params": self.params, "seed": self.seed,
                "raw_count": len(self.raw_members) or len(self.members)}

    def replace_members(self, members: Sequence[Polynomial], construct: str | None = None) -> "CommutingFamily":
        return CommutingFamily(self.algebra, tuple(members), construct or self.construct, dict(self.params),
                               self.seed, self.avoid, (), self.algebra_ref)


def prune(members: Sequence[Polynomial]) -> list[Polynomial]:
    """Drop zeros, constants and members equal to an earlier one up to scale."""
    seen = set()
    out = []
    for p in members:
        if p.is_constant():
            continue
        key = p.content_normalized()
        if key in seen:
            continue
        seen.add(key)
        out.append(p)
    return out


def make_family(A: LieAlgebra, raw: Sequence[Polynomial], construct: str, params: dict | None = None,
                seed: int | None = None, avoid: Sequence[Polynomial] = (),
                algebra_ref: dict | None = None) -> CommutingFamily:
    raw = tuple(raw)
    return CommutingFamily(A, tuple(prune(raw)), construct, dict(params or {}), seed, tuple(avoid), raw, algebra_ref)


def rational_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_jsonable(obj: Any) -> Any:
    """Fractions as ``p/q`` strings, polynomials in text form, tuples as lists."""
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, Polynomial):
        return format_poly(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def parse_rational(s) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError, TypeError):
        raise InputError(f"not a rational: {s!r}") from None
