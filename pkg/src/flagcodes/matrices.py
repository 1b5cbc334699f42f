"""Exact matrices over a FiniteField.

Rows are tuples of integer element codes; instances are immutable and
hashable.  The hot paths (multiplication, row reduction) run on the field's
lookup tables when the field is small enough to have them, which covers
every field this library touches in practice.
"""

from .errors import (DegreeMismatchError, MixedFieldsError, ShapeError,
                     SingularMatrixError)
from .fields import FieldElement, FiniteField


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, field: FiniteField, rows, ncols: int = None):
        """rows: iterable of iterables of codes or FieldElements.

        ncols is required when rows is empty (0-row matrices arise as
        kernels of injective maps and bases of the zero subspace).
        """
        q = field.order
        out = []
        for row in rows:
            r = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.field is not field:
                        raise MixedFieldsError(f"entry from {x.field}, matrix over {field}")
                    r.append(x.code)
                elif isinstance(x, int) and 0 <= x < q:
                    r.append(x)
                else:
                    raise ValueError(f"bad entry {x!r} for {field}")
            out.append(tuple(r))
        if out:
            ncols_seen = len(out[0])
            if any(len(r) != ncols_seen for r in out):
                raise ShapeError("ragged rows")
            if ncols is not None and ncols != ncols_seen:
                raise ShapeError(f"rows have {ncols_seen} columns, expected {ncols}")
            ncols = ncols_seen
        elif ncols is None:
            raise ShapeError("empty matrix needs an explicit column count")
        if ncols < 1:
            raise ShapeError("column count must be positive")
        self.field = field
        self.rows = tuple(out)
        self.nrows = len(out)
        self.ncols = ncols
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: FiniteField, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_text(cls, field: FiniteField, text: str) -> "Matrix":
        rows = [[int(tok) for tok in line.split()]
                for line in text.strip().splitlines() if line.strip()]
        return cls(field, rows)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    # -- shape slicing --------------------------------------------------------

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def __getitem__(self, ij):
        i, j = ij
        return self.entry(i, j)

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def cols(self, j0: int, j1: int) -> "Matrix":
        """Column slice [j0:j1] as a new matrix."""
        if not 0 <= j0 <= j1 <= self.ncols:
            raise ShapeError(f"column slice [{j0}:{j1}] out of range")
        return Matrix(self.field, [r[j0:j1] for r in self.rows], j1 - j0)

    def take_rows(self, i0: int, i1: int) -> "Matrix":
        return Matrix(self.field, self.rows[i0:i1], self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows or 1)

    # -- arithmetic -----------------------------------------------------------

    def _same_field(self, other):
        if self.field is not other.field:
            raise MixedFieldsError(f"matrices over {self.field} and {other.field}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("addition needs equal shapes")
        add = self.field.add_codes
        return Matrix(self.field,
                      [[add(x, y) for x, y in zip(r, s)]
                       for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        neg = self.field.neg_code
        return Matrix(self.field, [[neg(x) for x in r] for r in self.rows], self.ncols)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Matrix":
        code = c.code if isinstance(c, FieldElement) else c
        mul = self.field.mul_codes
        return Matrix(self.field, [[mul(code, x) for x in r] for r in self.rows], self.ncols)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        return Matrix(self.field,
                      mul_code_rows(self.field, self.rows, other.rows, other.ncols),
                      other.ncols)

    __mul__ = __matmul__

    def __pow__(self, n: int):
        if self.nrows != self.ncols:
            raise ShapeError("powers need a square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        F = self.field
        out = Matrix.identity(F, self.nrows).rows
        base = self.rows
        nc = self.ncols
        while n:
            if n & 1:
                out = mul_code_rows(F, out, base, nc)
            n >>= 1
            if n:
                base = mul_code_rows(F, base, base, nc)
        return Matrix(F, out, nc)

    # -- reduction ------------------------------------------------------------

    def rref(self):
        """(reduced row echelon form, rank, pivot column tuple)."""
        rows, pivots = rref_code_rows(self.field, [list(r) for r in self.rows], self.ncols)
        return Matrix(self.field, rows, self.ncols), len(pivots), tuple(pivots)

    def rank(self) -> int:
        _, pivots = rref_code_rows(self.field, [list(r) for r in self.rows], self.ncols)
        return len(pivots)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ShapeError("inverse needs a square matrix")
        n = self.nrows
        aug = [list(r) + [1 if i == j else 0 for j in range(n)]
               for i, r in enumerate(self.rows)]
        rows, pivots = rref_code_rows(self.field, aug, 2 * n)
        if len(pivots) != n or pivots != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix(self.field, [r[n:] for r in rows], n)

    def kernel(self) -> "Matrix":
        """Basis rows of {x : M x^T = 0}; shape (ncols - rank) x ncols."""
        rows, pivots = rref_code_rows(self.field, [list(r) for r in self.rows], self.ncols)
        neg = self.field.neg_code
        piv_of_col = {c: i for i, c in enumerate(pivots)}
        out = []
        for f in range(self.ncols):
            if f in piv_of_col:
                continue
            v = [0] * self.ncols
            v[f] = 1
            for c, i in piv_of_col.items():
                v[c] = neg(rows[i][f])
            out.append(v)
        return Matrix(self.field, out, self.ncols)

    def is_zero(self) -> bool:
        return all(not any(r) for r in self.rows)

    def is_identity(self) -> bool:
        return (self.nrows == self.ncols and
                all(x == (1 if i == j else 0)
                    for i, r in enumerate(self.rows) for j, x in enumerate(r)))

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field is other.field and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.field), self.ncols, self.rows))
        return self._hash

    def __repr__(self):
        if not self.rows:
            return f"Matrix({self.field!r}, 0x{self.ncols})"
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in self.rows) + "]"


def vstack(upper: Matrix, lower: Matrix) -> Matrix:
    if upper.field is not lower.field:
        raise MixedFieldsError("stacking matrices over different fields")
    if upper.ncols != lower.ncols:
        raise ShapeError("stacking needs equal column counts")
    return Matrix(upper.field, upper.rows + lower.rows, upper.ncols)


def hstack(left: Matrix, right: Matrix) -> Matrix:
    if left.field is not right.field:
        raise MixedFieldsError("stacking matrices over different fields")
    if left.nrows != right.nrows:
        raise ShapeError("side-by-side stacking needs equal row counts")
    return Matrix(left.field, [a + b for a, b in zip(left.rows, right.rows)],
                  left.ncols + right.ncols)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    if a.field is not b.field:
        raise MixedFieldsError("blocks over different fields")
    zl = (0,) * a.ncols
    zr = (0,) * b.ncols
    rows = [r + zr for r in a.rows] + [zl + r for r in b.rows]
    return Matrix(a.field, rows, a.ncols + b.ncols)


def mul_code_rows(F: FiniteField, arows, brows, ncols):
    """Row-major code-level product; returns a list of tuples."""
    tabs = F.tables()
    out = []
    if tabs is not None:
        add, mul = tabs[0], tabs[1]
        for arow in arows:
            acc = [0] * ncols
            for aik, brow in zip(arow, brows):
                if aik:
                    mrow = mul[aik]
                    acc = [add[x][mrow[y]] for x, y in zip(acc, brow)]
            out.append(tuple(acc))
    else:
        addf, mulf = F.add_codes, F.mul_codes
        for arow in arows:
            acc = [0] * ncols
            for aik, brow in zip(arow, brows):
                if aik:
                    acc = [addf(x, mulf(aik, y)) for x, y in zip(acc, brow)]
            out.append(tuple(acc))
    return out


def rref_code_rows(F: FiniteField, rows, ncols):
    """In-place reduced row echelon form on lists of codes.

    Returns (rows, pivot column list); zero rows sink to the bottom.
    """
    tabs = F.tables()
    nrows = len(rows)
    pivots = []
    r = 0
    if tabs is not None:
        add, mul, neg, inv = tabs
        for c in range(ncols):
            pr = next((i for i in range(r, nrows) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            row = rows[r]
            pv = row[c]
            if pv != 1:
                mrow = mul[inv[pv]]
                row = [mrow[x] for x in row]
                rows[r] = row
            for i in range(nrows):
                if i != r and rows[i][c]:
                    mrow = mul[neg[rows[i][c]]]
                    rows[i] = [add[x][mrow[y]] for x, y in zip(rows[i], row)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
    else:
        for c in range(ncols):
            pr = next((i for i in range(r, nrows) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            pv_inv = F.inv_code(rows[r][c])
            rows[r] = [F.mul_codes(pv_inv, x) for x in rows[r]]
            row = rows[r]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    f = F.neg_code(rows[i][c])
                    rows[i] = [F.add_codes(x, F.mul_codes(f, y))
                               for x, y in zip(rows[i], row)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
    return rows, pivots


def matrix_order(A: Matrix, order_hint: int = None) -> int:
    """Multiplicative order of a square matrix.

    With order_hint = N (a known multiple, e.g. the ambient group order),
    the order is found by dividing out primes of N, needing only O(log N)
    matrix powers.  Without a hint, plain iteration capped at q^n - 1.
    """
    from .fields import prime_factors  # local import keeps module load light

    if A.nrows != A.ncols:
        raise ShapeError("order needs a square matrix")
    if order_hint is not None:
        if order_hint < 1:
            raise ValueError("order hint must be positive")
        if not (A ** order_hint).is_identity():
            raise ValueError(f"matrix order does not divide hint {order_hint}")
        d = order_hint
        for ell in prime_factors(order_hint):
            while d % ell == 0 and (A ** (d // ell)).is_identity():
                d //= ell
        return d
    cap = A.field.order ** A.nrows - 1
    P = A
    for i in range(1, cap + 1):
        if P.is_identity():
            return i
        P = P @ A
    raise ValueError(f"no order found within cap {cap}; matrix may be singular")


def check_degree(A: Matrix, n: int):
    if A.nrows != A.ncols or A.nrows != n:
        raise DegreeMismatchError(f"need an {n}x{n} matrix, got {A.nrows}x{A.ncols}")


def rref(M: Matrix):
    """(reduced row echelon form, rank, pivot column tuple)."""
    return M.rref()
