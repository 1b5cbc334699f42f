"""Line-oriented text files for flag codes and subspace codes.

    FLAGCODE v1
    field p=3 e=1 tower=3,2
    ambient n=6
    type 1,2,3,4,5
    count 28
    flag
    subspace k=1
    1 0 0 0 0 0
    subspace k=2
    ...

`tower=k,s` is optional provenance for spread-type constructions and has no
effect on parsing.  The ambient field is reconstructed as make_field(p, e),
so files should only hold codes over fields built that way (element codes
of a tower over an intermediate field need not match).  A SUBCODE v1 file is identical except the type line
holds a single dimension and the body is `count` subspace blocks with no
`flag` separators.  Entries are integer element codes of GF(p^e); members
are written sorted by canonical basis, so serialization is deterministic.
"""

import re
from dataclasses import dataclass

from .errors import CodeFileError
from .fields import FiniteField, make_field
from .flags import Flag, FlagCode
from .subspaces import Subspace, SubspaceCode

_FLAG_MAGIC = "FLAGCODE v1"
_SUB_MAGIC = "SUBCODE v1"


@dataclass
class CodeFileData:
    kind: str                 # "flag" or "subspace"
    field: FiniteField
    n: int
    dims: tuple
    tower: tuple              # (k, s) or None
    code: object              # FlagCode or SubspaceCode


def _field_line(field: FiniteField, tower) -> str:
    q = field.order
    p = field.characteristic
    e = 0
    while p ** e < q:
        e += 1
    line = f"field p={p} e={e}"
    if tower is not None:
        line += f" tower={tower[0]},{tower[1]}"
    return line


def _subspace_block(sub: Subspace) -> list:
    return [f"subspace k={sub.dim}"] + [
        " ".join(str(x) for x in row) for row in sub.basis.rows]


def format_flag_code(code: FlagCode, tower=None) -> str:
    lines = [_FLAG_MAGIC, _field_line(code.field, tower),
             f"ambient n={code.n}",
             "type " + ",".join(str(t) for t in code.dims),
             f"count {len(code)}"]
    for flag in code.members:
        lines.append("flag")
        for sub in flag.subspaces:
            lines.extend(_subspace_block(sub))
    return "\n".join(lines) + "\n"


def format_subspace_code(code: SubspaceCode, tower=None) -> str:
    lines = [_SUB_MAGIC, _field_line(code.field, tower),
             f"ambient n={code.n}",
             f"type {code.dim}",
             f"count {len(code)}"]
    for sub in code.members:
        lines.extend(_subspace_block(sub))
    return "\n".join(lines) + "\n"


def write_flag_code(code: FlagCode, path, tower=None):
    with open(path, "w") as fh:
        fh.write(format_flag_code(code, tower))


def write_subspace_code(code: SubspaceCode, path, tower=None):
    with open(path, "w") as fh:
        fh.write(format_subspace_code(code, tower))


class _Cursor:
    def __init__(self, text: str):
        self.lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())
                      if ln.strip()]
        self.pos = 0
        self.last_line = self.lines[-1][0] if self.lines else 1

    def next(self, what: str) -> tuple:
        if self.pos >= len(self.lines):
            raise CodeFileError(self.last_line, f"unexpected end of file, wanted {what}")
        item = self.lines[self.pos]
        self.pos += 1
        return item

    def done(self):
        if self.pos < len(self.lines):
            no, ln = self.lines[self.pos]
            raise CodeFileError(no, f"trailing content: {ln!r}")


def _expect(cur: _Cursor, pattern: str, what: str):
    no, ln = cur.next(what)
    m = re.fullmatch(pattern, ln)
    if m is None:
        raise CodeFileError(no, f"expected {what}, got {ln!r}")
    return no, m


def _parse_subspace(cur: _Cursor, field, n, expect_dim: int) -> Subspace:
    no, m = _expect(cur, r"subspace k=(\d+)", f"subspace k={expect_dim}")
    k = int(m.group(1))
    if k != expect_dim:
        raise CodeFileError(no, f"subspace declares k={k}, type wants {expect_dim}")
    rows = []
    for _ in range(k):
        rno, ln = cur.next("a basis row")
        toks = ln.split()
        if len(toks) != n:
            raise CodeFileError(rno, f"row has {len(toks)} entries, ambient is {n}")
        try:
            row = [int(t) for t in toks]
        except ValueError:
            raise CodeFileError(rno, f"non-integer entry in {ln!r}") from None
        if any(not 0 <= x < field.order for x in row):
            raise CodeFileError(rno, f"entry out of range [0, {field.order})")
        rows.append(row)
    sub = Subspace(field, n, rows)
    if sub.dim != k:
        raise CodeFileError(no, f"rows span dimension {sub.dim}, declared k={k}")
    return sub


def parse_code_file(text: str) -> CodeFileData:
    cur = _Cursor(text)
    no, ln = cur.next("a header")
    if ln == _FLAG_MAGIC:
        kind = "flag"
    elif ln == _SUB_MAGIC:
        kind = "subspace"
    else:
        raise CodeFileError(no, f"unknown header {ln!r}")

    no, m = _expect(cur, r"field p=(\d+) e=(\d+)(?: tower=(\d+),(\d+))?",
                    "a field line")
    p, e = int(m.group(1)), int(m.group(2))
    tower = (int(m.group(3)), int(m.group(4))) if m.group(3) else None
    try:
        field = make_field(p, e)
    except ValueError as exc:
        raise CodeFileError(no, str(exc)) from None

    _, m = _expect(cur, r"ambient n=(\d+)", "an ambient line")
    n = int(m.group(1))

    no, m = _expect(cur, r"type ([\d,]+)", "a type line")
    dims = tuple(int(t) for t in m.group(1).split(","))
    if kind == "subspace" and len(dims) != 1:
        raise CodeFileError(no, "subspace codes take a single type dimension")
    if any(not 0 < t < n for t in dims) or list(dims) != sorted(set(dims)):
        raise CodeFileError(no, f"type must be strictly increasing within (0, {n})")

    no, m = _expect(cur, r"count (\d+)", "a count line")
    count = int(m.group(1))
    if count < 1:
        raise CodeFileError(no, "count must be at least 1")

    if kind == "flag":
        members = []
        for _ in range(count):
            fno, _ = _expect(cur, r"flag", "a flag separator")
            subs = [_parse_subspace(cur, field, n, t) for t in dims]
            try:
                members.append(Flag(subs))
            except ValueError as exc:
                raise CodeFileError(fno, f"invalid flag: {exc}") from None
        cur.done()
        if len(set(members)) != count:
            raise CodeFileError(cur.last_line, "duplicate flags in file")
        code = FlagCode(members)
    else:
        members = [_parse_subspace(cur, field, n, dims[0]) for _ in range(count)]
        cur.done()
        if len(set(members)) != count:
            raise CodeFileError(cur.last_line, "duplicate subspaces in file")
        code = SubspaceCode(members)
    return CodeFileData(kind=kind, field=field, n=n, dims=dims,
                        tower=tower, code=code)


def read_code_file(path) -> CodeFileData:
    with open(path) as fh:
        return parse_code_file(fh.read())
