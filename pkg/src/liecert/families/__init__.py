"""Constructions of commuting polynomial families."""

from __future__ import annotations

from ..algebra import LieAlgebra, SubspaceBasis
from ..catalog import catalog
from ..errors import InputError
from .base import CommutingFamily, make_family, prune
from .heisenberg import HeisenbergSplit, annihilator_codim, f_beta, heisenberg_split, lift_tilde
from .invariants import argument_shift, gelfand_zetlin, invariant_generators, shift_family
from .section import PolynomialSection, bracket_sections, polynomial_sections, section_function
from .semidirect import family_affn, family_en, family_sp_affine
from .steps import casimirs_up_to_degree, heisenberg_step, section_step

CONSTRUCTS = ("shift", "gz", "en", "sp_affine", "affn", "section", "heisenberg_step")

# constructions that fix their own algebra from a size
_SIZED = {"en": "e", "sp_affine": "sp_affine", "affn": "aff"}


def construct(tag: str, A: LieAlgebra | None = None, *, size: int | None = None, seed: int = 0,
              params: dict | None = None, algebra_ref: dict | None = None) -> CommutingFamily:
    """Dispatch a construction by tag; the CLI's single entry point."""
    params = dict(params or {})
    if tag not in CONSTRUCTS:
        raise InputError(f"unknown construction {tag!r}; choose from {', '.join(CONSTRUCTS)}")
    if tag in _SIZED:
        if size is None:
            raise InputError(f"construction {tag!r} needs a size")
        ref = {"catalog": _SIZED[tag], "size": size}
        if tag == "en":
            return family_en(size, params.pop("B", None), seed=seed, algebra_ref=ref, **params)
        if tag == "sp_affine":
            return family_sp_affine(size, params.pop("a", None), params.pop("L", None), params.pop("B", None),
                                    seed=seed, algebra_ref=ref, **params)
        return family_affn(size, params.pop("Xi", None), algebra_ref=ref, **params)
    if A is None:
        raise InputError(f"construction {tag!r} needs an algebra")
    for key in ("ideal", "H"):
        if key in params:
            params[key] = SubspaceBasis.span(A, params[key], "ideal")
    if tag == "shift":
        return shift_family(A, seed, algebra_ref=algebra_ref, **params)
    if tag == "gz":
        return gelfand_zetlin(A, algebra_ref=algebra_ref)
    if tag == "section":
        return section_step(A, seed=seed, algebra_ref=algebra_ref, **params)
    return heisenberg_step(A, seed=seed, algebra_ref=algebra_ref, **params)


__all__ = [
    "CONSTRUCTS", "CommutingFamily", "HeisenbergSplit", "PolynomialSection", "annihilator_codim",
    "argument_shift", "bracket_sections", "casimirs_up_to_degree", "catalog", "construct", "f_beta",
    "family_affn", "family_en", "family_sp_affine", "gelfand_zetlin", "heisenberg_split",
    "heisenberg_step", "invariant_generators", "lift_tilde", "make_family", "polynomial_sections",
    "prune", "section_function", "section_step", "shift_family",
]
