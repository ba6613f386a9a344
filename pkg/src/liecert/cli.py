"""Command-line front end: ``liecert info | family | verify``.

Exit codes: 0 success (for ``verify``: complete), 2 parse/usage error,
3 Jacobi violation, 4 construction precondition failed, 5 incomplete,
6 commutativity failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .algebra import LieAlgebra, center, check_jacobi, index_estimate, is_semisimple, radical
from .catalog import CATALOG, catalog
from .classify import classify
from .errors import InputError, InvariantViolation, PreconditionError
from .families import CONSTRUCTS, construct
from .formats import format_family, read_algebra, read_family, write_atomic
from .verify import COMMUTATIVITY_FAILED, COMPLETE, DEFAULT_SEED, completeness_report

EXIT_OK, EXIT_PARSE, EXIT_JACOBI, EXIT_PRECONDITION, EXIT_INCOMPLETE, EXIT_NONCOMMUTING = 0, 2, 3, 4, 5, 6


@dataclass
class RunConfig:
    subcommand: str
    catalog: str | None = None
    size: int | None = None
    file: str | None = None
    construct: str | None = None
    params: dict = field(default_factory=dict)
    seed: int = DEFAULT_SEED
    trials: int = 8
    bound: int = 10**4
    out: str | None = None


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liecert", description="Build and certify commuting polynomial families.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, with_construct=False):
        sp.add_argument("--catalog", choices=sorted(CATALOG), help="builtin algebra name")
        sp.add_argument("--size", type=int, help="size parameter of the builtin algebra or construction")
        sp.add_argument("--file", help="algebra file (info, family) or family file (verify)")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
        sp.add_argument("--trials", type=int, default=8, help="sample points for rank and index (default 8)")
        sp.add_argument("--bound", type=int, default=10**4, help="coordinate bound for samples (default 10^4)")
        sp.add_argument("--out", help="output path (default: standard output)")
        if with_construct:
            sp.add_argument("--construct", required=True, choices=CONSTRUCTS)
            sp.add_argument("--param", action="append", default=[], metavar="KEY=JSON",
                            help="extra construction parameter, e.g. max_k=2 or 'B=[[0,1],[-1,0]]'")

    common(sub.add_parser("info", help="structural summary of an algebra"))
    common(sub.add_parser("family", help="construct a family and write a family file"), with_construct=True)
    common(sub.add_parser("verify", help="certify a family file and write a JSON report"))
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    params = {}
    for item in getattr(ns, "param", []):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise _Exit(EXIT_PARSE, f"--param expects KEY=JSON, got {item!r}")
        try:
            params[key] = json.loads(value)
        except json.JSONDecodeError:
            raise _Exit(EXIT_PARSE, f"--param {key}: value is not JSON") from None
    cfg = RunConfig(ns.subcommand, ns.catalog, ns.size, ns.file, getattr(ns, "construct", None), params,
                    ns.seed, ns.trials, ns.bound, ns.out)
    if cfg.trials < 1 or cfg.bound < 1:
        raise _Exit(EXIT_PARSE, "--trials and --bound must be positive")
    if cfg.file is not None and not os.path.isfile(cfg.file):
        raise _Exit(EXIT_PARSE, f"no such file: {cfg.file}")
    if cfg.out is not None:
        parent = os.path.dirname(os.path.abspath(cfg.out))
        if not os.path.isdir(parent):
            raise _Exit(EXIT_PARSE, f"output directory does not exist: {parent}")
    return cfg


def _load_algebra(cfg: RunConfig, required: bool = True) -> tuple[LieAlgebra | None, dict | None]:
    if cfg.file and cfg.catalog:
        raise _Exit(EXIT_PARSE, "give either --catalog or --file, not both")
    if cfg.file:
        A, ref = read_algebra(cfg.file), None
    elif cfg.catalog:
        A, ref = catalog(cfg.catalog, cfg.size), {"catalog": cfg.catalog, "size": cfg.size}
    elif required:
        raise _Exit(EXIT_PARSE, "an algebra is required: use --catalog NAME --size N or --file PATH")
    else:
        return None, None
    violations = check_jacobi(A)
    if violations:
        lines = [f"  {v.identity} at {tuple(i + 1 for i in v.indices)}: defect {v.defect}" for v in violations[:20]]
        more = f"\n  ... and {len(violations) - 20} more" if len(violations) > 20 else ""
        raise _Exit(EXIT_JACOBI, "structure constants violate the Lie axioms:\n" + "\n".join(lines) + more)
    return A, ref


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        write_atomic(cfg.out, text)
    else:
        sys.stdout.write(text)


def cmd_info(cfg: RunConfig) -> int:
    A, _ = _load_algebra(cfg)
    ind = index_estimate(A, cfg.seed, cfg.trials, cfg.bound)
    c = classify(A, check=False)
    summary = {
        "name": A.name, "dim": A.dim,
        "index": {"value": ind.value, "trials": ind.trials, "bound": ind.bound, "seed": cfg.seed},
        "center_dim": center(A).dim, "radical_dim": radical(A).dim, "semisimple": is_semisimple(A),
        "case": c.numeral, "case_tag": c.case,
        "witness_dim": c.ideal.dim if c.ideal is not None else None,
    }
    text = "\n".join([
        f"algebra:     {A.name or '(unnamed)'}",
        f"dim:         {A.dim}",
        f"index:       {ind.value}  (trials={ind.trials}, bound={ind.bound}, seed={cfg.seed})",
        f"center dim:  {summary['center_dim']}",
        f"radical dim: {summary['radical_dim']}",
        f"semisimple:  {'yes' if summary['semisimple'] else 'no'}",
        f"case:        ({c.numeral}) {c.case}" + (f", witness dim {c.ideal.dim}" if c.ideal is not None else ""),
    ]) + "\n"
    if cfg.out:
        write_atomic(cfg.out, json.dumps(summary, sort_keys=True, indent=2) + "\n")
    sys.stdout.write(text)
    return EXIT_OK


def cmd_family(cfg: RunConfig) -> int:
    sized = cfg.construct in ("en", "sp_affine", "affn")
    A, ref = _load_algebra(cfg, required=not sized)
    if sized and A is not None:
        expected = {"en": "e", "sp_affine": "sp_affine", "affn": "aff"}[cfg.construct]
        if cfg.catalog != expected:
            raise _Exit(EXIT_PARSE, f"--construct {cfg.construct} builds on --catalog {expected}")
    try:
        F = construct(cfg.construct, A, size=cfg.size, seed=cfg.seed, params=cfg.params, algebra_ref=ref)
    except (InputError, PreconditionError, InvariantViolation) as exc:
        raise _Exit(EXIT_PRECONDITION, f"precondition failed: {exc}") from None
    except TypeError as exc:  # unknown --param names
        raise _Exit(EXIT_PRECONDITION, f"precondition failed: {exc}") from None
    _emit(cfg, format_family(F))
    if cfg.out:
        sys.stdout.write(f"wrote {len(F.members)} members ({cfg.construct}) to {cfg.out}\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    if not cfg.file:
        raise _Exit(EXIT_PARSE, "verify needs --file FAMILY_FILE")
    if cfg.catalog:
        raise _Exit(EXIT_PARSE, "verify reads the algebra from the family file; drop --catalog")
    F = read_family(cfg.file)
    if check_jacobi(F.algebra):
        raise _Exit(EXIT_JACOBI, "the family's algebra violates the Lie axioms")
    report = completeness_report(F, cfg.seed, cfg.trials, cfg.bound)
    _emit(cfg, report.to_json())
    verdict = report.verdict
    msg = f"verdict: {verdict} (rank {report.rank}, target {report.target}, index {report.index.value})"
    if verdict == COMMUTATIVITY_FAILED:
        p = report.failing_pairs[0]
        msg += f"; members {p.i + 1} and {p.j + 1} do not commute"
    sys.stderr.write(msg + "\n")
    if verdict == COMPLETE:
        return EXIT_OK
    return EXIT_NONCOMMUTING if verdict == COMMUTATIVITY_FAILED else EXIT_INCOMPLETE


COMMANDS = {"info": cmd_info, "family": cmd_family, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        cfg = _config(ns)
        return COMMANDS[cfg.subcommand](cfg)
    except _Exit as exc:
        sys.stderr.write(f"liecert: {exc}\n")
        return exc.code
    except (PreconditionError, InvariantViolation) as exc:
        sys.stderr.write(f"liecert: precondition failed: {exc}\n")
        return EXIT_PRECONDITION
    except InputError as exc:
        sys.stderr.write(f"liecert: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
