"""Text formats for algebras and families.

Algebra file::

    # comments and blank lines are ignored
    name: e(3)
    dim: 6
    basis: F12 F13 F23 v1 v2 v3
    1 2 3 -1
    ...

Each triple line ``i j k c`` (1-based, ``c`` an integer or ``p/q``) sets
``[e_i, e_j] = ... + c e_k``; the antisymmetric partner is implied.  The
writer emits only ``i < j`` in sorted order.

Family file::

    liecert-family 1
    algebra: catalog e 3          (or: algebra: inline, then a begin/end block)
    construct: en
    params: {...}                 (canonical JSON, rationals as strings)
    seed: 0                       (or: none)
    avoid: 1
    <polynomial>
    members: 6
    <polynomial>
    ...
    raw: 7                        (only when pruning removed something)
    <polynomial>
    ...
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import Iterable

from .algebra import LieAlgebra
from .catalog import catalog
from .errors import InputError
from .families.base import CommutingFamily, rational_str, to_jsonable
from .poly import format_poly, parse_poly

FAMILY_MAGIC = "liecert-family 1"


def _clean(lines: Iterable[str]) -> list[str]:
    out = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _header(line: str, key: str) -> str:
    prefix = key + ":"
    if not line.startswith(prefix):
        raise InputError(f"expected '{prefix}', found {line!r}")
    return line[len(prefix):].strip()


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {text!r}") from None


def parse_algebra(text: str) -> LieAlgebra:
    lines = _clean(text.splitlines())
    if len(lines) < 3:
        raise InputError("algebra file needs name, dim and basis lines")
    name = _header(lines[0], "name")
    dim = _int(_header(lines[1], "dim"), "dim")
    names = _header(lines[2], "basis").split()
    if dim < 1 or len(names) != dim:
        raise InputError(f"dim {dim} does not match {len(names)} basis names")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for line in lines[3:]:
        parts = line.split()
        if len(parts) != 4:
            raise InputError(f"bad structure-constant line {line!r}")
        i, j, k = (_int(p, "index") - 1 for p in parts[:3])
        if not all(0 <= t < dim for t in (i, j, k)):
            raise InputError(f"index out of range in {line!r}")
        try:
            c = Fraction(parts[3])
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad coefficient in {line!r}") from None
        if i == j:
            if c != 0:
                raise InputError(f"[e_{i + 1}, e_{i + 1}] must vanish ({line!r})")
            continue
        if i > j:
            i, j, c = j, i, -c
        row = brackets.setdefault((i, j), {})
        if k in row and row[k] != c:
            raise InputError(f"conflicting entries for the triple ({i + 1}, {j + 1}, {k + 1})")
        row[k] = c
    return LieAlgebra.from_brackets(names, brackets, name)


def format_algebra(A: LieAlgebra) -> str:
    lines = [f"name: {A.name}", f"dim: {A.dim}", "basis: " + " ".join(A.basis_names)]
    for (i, j, k), c in sorted(A.structure.items()):
        if i < j and c != 0:
            lines.append(f"{i + 1} {j + 1} {k + 1} {rational_str(c)}")
    return "\n".join(lines) + "\n"


def read_algebra(path: str) -> LieAlgebra:
    return parse_algebra(_read(path))


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def write_atomic(path: str, text: str) -> None:
    """Write to a temporary file in the target directory, then rename over ``path``."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# families ---------------------------------------------------------------------

def _canonical_json(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":"))


def format_family(F: CommutingFamily) -> str:
    lines = [FAMILY_MAGIC]
    ref = F.algebra_ref
    if ref and "catalog" in ref:
        size = ref.get("size")
        lines.append(f"algebra: catalog {ref['catalog']}" + (f" {size}" if size is not None else ""))
    else:
        lines.append("algebra: inline")
        lines.append("begin-algebra")
        lines.extend(format_algebra(F.algebra).rstrip("\n").split("\n"))
        lines.append("end-algebra")
    lines.append(f"construct: {F.construct}")
    lines.append(f"params: {_canonical_json(F.params)}")
    lines.append(f"seed: {'none' if F.seed is None else F.seed}")
    for label, polys in (("avoid", F.avoid), ("members", F.members)):
        lines.append(f"{label}: {len(polys)}")
        lines.extend(format_poly(p) for p in polys)
    if F.raw_members and tuple(F.raw_members) != tuple(F.members):
        lines.append(f"raw: {len(F.raw_members)}")
        lines.extend(format_poly(p) for p in F.raw_members)
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> CommutingFamily:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != FAMILY_MAGIC:
        raise InputError("not a family file (bad magic line)")
    pos = 1

    def take(key: str) -> str:
        nonlocal pos
        if pos >= len(lines):
            raise InputError(f"unexpected end of file, expected '{key}:'")
        value = _header(lines[pos], key)
        pos += 1
        return value

    ref_text = take("algebra")
    if ref_text == "inline":
        if pos >= len(lines) or lines[pos] != "begin-algebra":
            raise InputError("inline algebra must start with 'begin-algebra'")
        try:
            end = lines.index("end-algebra", pos)
        except ValueError:
            raise InputError("missing 'end-algebra'") from None
        A = parse_algebra("\n".join(lines[pos + 1:end]))
        ref = None
        pos = end + 1
    else:
        parts = ref_text.split()
        if not parts or parts[0] != "catalog" or len(parts) not in (2, 3):
            raise InputError(f"bad algebra reference {ref_text!r}")
        size = _int(parts[2], "size") if len(parts) == 3 else None
        A = catalog(parts[1], size)
        ref = {"catalog": parts[1], "size": size}
    construct = take("construct")
    try:
        params = json.loads(take("params"))
    except json.JSONDecodeError as exc:
        raise InputError(f"params is not valid JSON: {exc.msg}") from None
    seed_text = take("seed")
    seed = None if seed_text == "none" else _int(seed_text, "seed")

    def block(key: str):
        nonlocal pos
        count = _int(take(key), key)
        if count < 0 or pos + count > len(lines):
            raise InputError(f"'{key}' promises {count} polynomials, file is shorter")
        polys = tuple(parse_poly(ln, A.dim) for ln in lines[pos:pos + count])
        pos += count
        return polys

    avoid = block("avoid")
    members = block("members")
    raw = block("raw") if pos < len(lines) else members
    if pos != len(lines):
        raise InputError(f"trailing content at line {lines[pos]!r}")
    return CommutingFamily(A, members, construct, params, seed, avoid, raw, ref)


def read_family(path: str) -> CommutingFamily:
    return parse_family(_read(path))
