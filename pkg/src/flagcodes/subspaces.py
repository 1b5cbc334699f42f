"""Subspaces of GF(q)^n and constant-dimension subspace codes.

A subspace is identified with the reduced row echelon form of any generator
matrix, so equality, hashing and membership are exact.  The subspace metric
is d(U, V) = dim(U + V) - dim(U \\cap V) = 2 rank(stacked bases) - dim U -
dim V.

Codes whose members form one orbit (or a union of orbits) under a group of
isometries may carry the orbit seeds as `anchors`; the minimum distance of
such a code equals the minimum over (anchor, member) pairs, because
d(F g^x, G g^y) = d(F, G g^(y-x)).  That turns the quadratic pair scan into
a linear one without giving up exactness, and both paths are cross-checked
in the test suite.
"""

from itertools import combinations, product

from .errors import (AmbientMismatchError, BadDimensionsError,
                     EnumerationTooLargeError, MixedFieldsError)
from .fields import FiniteField
from .matrices import Matrix, rref_code_rows


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def max_distance_bound(n: int, k: int) -> int:
    """Largest possible distance between two k-dim subspaces of GF(q)^n."""
    if not 1 <= k <= n - 1:
        raise BadDimensionsError("need 1 <= k <= n-1, got k=%d, n=%d" % (k, n))
    return 2 * min(k, n - k)


def partial_spread_size_bound(n: int, k: int, q: int) -> int:
    """Upper bound (q^n - q^r) / (q^k - 1), r = n mod k, on partial spread size."""
    if not 1 <= k <= n - 1:
        raise BadDimensionsError("need 1 <= k <= n-1, got k=%d, n=%d" % (k, n))
    r = n % k
    return (q ** n - q ** r) // (q ** k - 1)


class Subspace:
    """A subspace of GF(q)^n, stored by its canonical RREF basis."""

    __slots__ = ("field", "n", "dim", "basis")

    def __init__(self, field: FiniteField, n: int, rows):
        """rows: generator vectors (codes or elements); dependent rows are fine."""
        if n < 1:
            raise BadDimensionsError("ambient dimension must be positive")
        gen = Matrix(field, rows, n)
        if gen.ncols != n:
            raise BadDimensionsError(f"rows have {gen.ncols} entries, ambient is {n}")
        reduced, rank, _ = gen.rref()
        self.field = field
        self.n = n
        self.dim = rank
        self.basis = reduced.take_rows(0, rank)

    @classmethod
    def _from_rref(cls, field: FiniteField, n: int, rref_rows: tuple) -> "Subspace":
        """Trusted constructor: rows already reduced, nonzero, echelon."""
        self = cls.__new__(cls)
        self.field = field
        self.n = n
        self.dim = len(rref_rows)
        self.basis = Matrix(field, rref_rows, n)
        return self

    @classmethod
    def spanned_by(cls, vectors, field: FiniteField, n: int) -> "Subspace":
        return cls(field, n, vectors)

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> "Subspace":
        return cls._from_rref(field, n, ())

    @classmethod
    def full(cls, field: FiniteField, n: int) -> "Subspace":
        return cls._from_rref(field, n, Matrix.identity(field, n).rows)

    @classmethod
    def standard(cls, field: FiniteField, n: int, k: int) -> "Subspace":
        """Span of the first k standard basis vectors."""
        if not 0 <= k <= n:
            raise BadDimensionsError(f"k={k} outside [0, {n}]")
        return cls._from_rref(field, n,
                              tuple(tuple(1 if j == i else 0 for j in range(n))
                                    for i in range(k)))

    def _check_mate(self, other: "Subspace"):
        if self.field is not other.field:
            raise MixedFieldsError("subspaces over different fields")
        if self.n != other.n:
            raise AmbientMismatchError(f"ambient dimensions {self.n} and {other.n}")

    def apply(self, A: Matrix) -> "Subspace":
        """Image under the right action U -> U A; A must be invertible n x n."""
        if A.nrows != self.n:
            raise AmbientMismatchError(f"{A.nrows}x{A.ncols} matrix on ambient {self.n}")
        return Subspace(self.field, self.n, (self.basis @ A).rows if self.dim else ())

    def contains_vector(self, v) -> bool:
        row = Matrix(self.field, [v], self.n).rows[0]
        F = self.field
        add, mul, neg = F.add_codes, F.mul_codes, F.neg_code
        v = list(row)
        for brow in self.basis.rows:
            c = next(j for j, x in enumerate(brow) if x)  # pivot column
            if v[c]:
                f = neg(v[c])
                v = [add(x, mul(f, y)) for x, y in zip(v, brow)]
        return not any(v)

    def contains(self, other: "Subspace") -> bool:
        self._check_mate(other)
        return all(self.contains_vector(r) for r in other.basis.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_mate(other)
        return Subspace(self.field, self.n, self.basis.rows + other.basis.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: reduce [[U, U], [V, 0]]; zero-left rows carry the meet."""
        self._check_mate(other)
        n = self.n
        z = (0,) * n
        rows = [list(r + r) for r in self.basis.rows] + \
               [list(r + z) for r in other.basis.rows]
        reduced, _ = rref_code_rows(self.field, rows, 2 * n)
        meet = [r[n:] for r in reduced if not any(r[:n]) and any(r[n:])]
        return Subspace(self.field, n, meet)

    def dual(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        if self.dim == 0:
            return Subspace.full(self.field, self.n)
        return Subspace(self.field, self.n, self.basis.kernel().rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field is other.field and self.n == other.n
                and self.basis.rows == other.basis.rows)

    def __hash__(self):
        return hash((id(self.field), self.n, self.basis.rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of GF({self.field.order})^{self.n})"


def row_space(M: Matrix) -> Subspace:
    return Subspace(M.field, M.ncols, M.rows)


def subspace_distance(U: Subspace, V: Subspace) -> int:
    """dim(U + V) - dim(U meet V), via one rank computation."""
    U._check_mate(V)
    stacked = [list(r) for r in U.basis.rows + V.basis.rows]
    _, pivots = rref_code_rows(U.field, stacked, U.n)
    return 2 * len(pivots) - U.dim - V.dim


class SubspaceCode:
    """A nonempty set of equal-dimensional subspaces of a common GF(q)^n.

    `anchors`, when given, must be members whose orbits under some isometry
    action cover the code; they license the linear-time min_distance path.
    """

    __slots__ = ("field", "n", "dim", "members", "_set", "anchors")

    def __init__(self, members, *, anchors=()):
        members = list(members)
        if not members:
            raise BadDimensionsError("a code needs at least one member")
        first = members[0]
        for m in members:
            first._check_mate(m)
            if m.dim != first.dim:
                raise BadDimensionsError(
                    f"mixed dimensions {m.dim} and {first.dim} in one code")
        if not 0 < first.dim < first.n:
            raise BadDimensionsError(
                f"code members must have 0 < dim < {first.n}, got {first.dim}")
        self.field = first.field
        self.n = first.n
        self.dim = first.dim
        self._set = frozenset(members)
        self.members = tuple(sorted(self._set, key=lambda s: s.basis.rows))
        self.anchors = tuple(anchors)
        for a in self.anchors:
            if a not in self._set:
                raise ValueError("anchors must be members of the code")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, sub):
        return sub in self._set

    def __eq__(self, other):
        if not isinstance(other, SubspaceCode):
            return NotImplemented
        return (self.field is other.field and self.n == other.n
                and self._set == other._set)

    def __hash__(self):
        return hash((id(self.field), self.n, self._set))

    def min_distance(self, full: bool = False) -> int:
        """Minimum pairwise distance; 0 for singleton codes.

        Uses the anchor shortcut when anchors are set and full is False.
        """
        if len(self.members) == 1:
            return 0
        if self.anchors and not full:
            pairs = ((a, m) for a in self.anchors for m in self.members if m != a)
        else:
            pairs = combinations(self.members, 2)
        return min(subspace_distance(u, v) for u, v in pairs)

    def attains_max_distance(self) -> bool:
        return (len(self.members) > 1
                and self.min_distance() == max_distance_bound(self.n, self.dim))

    def __repr__(self):
        return (f"SubspaceCode({len(self.members)} subspaces of dim {self.dim} "
                f"in GF({self.field.order})^{self.n})")


def code_distance(code: SubspaceCode) -> int:
    """Minimum pairwise distance, 0 for a singleton."""
    return code.min_distance()


def member_vectors(sub: Subspace) -> list:
    """All nonzero vectors of a subspace, as code tuples."""
    F = sub.field
    n = sub.n
    combos = [(0,) * n]
    tabs = F.tables()
    if tabs is not None:
        add, mul = tabs[0], tabs[1]
        for row in sub.basis.rows:
            scaled = [tuple(mul[c][x] for x in row) for c in range(F.order)]
            combos = [tuple(add[a][b] for a, b in zip(base, s))
                      for s in scaled for base in combos]
    else:
        for row in sub.basis.rows:
            scaled = [tuple(F.mul_codes(c, x) for x in row) for c in range(F.order)]
            combos = [tuple(F.add_codes(a, b) for a, b in zip(base, s))
                      for s in scaled for base in combos]
    return combos[1:]  # ordering keeps the zero vector first


# above this many enumerated vectors, spread checks fall back to pair scans
_COVER_LIMIT = 5_000_000


def is_partial_spread(code: SubspaceCode) -> bool:
    """Whether members pairwise intersect trivially.

    Two subspaces meet trivially iff they share no nonzero vector, so the
    whole check is one duplicate scan over |C| q^k vectors.  Singleton codes
    pass vacuously.
    """
    q = code.field.order
    total = len(code) * (q ** code.dim - 1)
    if total > _COVER_LIMIT:
        target = 2 * code.dim
        return all(subspace_distance(u, v) == target
                   for u, v in combinations(code.members, 2))
    seen = set()
    for m in code.members:
        for v in member_vectors(m):
            if v in seen:
                return False
            seen.add(v)
    return True


def is_spread(code: SubspaceCode) -> bool:
    """Partial spread that also covers every nonzero vector of the ambient."""
    q = code.field.order
    covered = len(code) * (q ** code.dim - 1)
    if covered != q ** code.n - 1:
        return False
    return is_partial_spread(code)


def dual_code(code: SubspaceCode) -> SubspaceCode:
    """Member-wise orthogonal complement; preserves size and distance."""
    mapping = {m: m.dual() for m in code.members}
    return SubspaceCode(mapping.values(),
                        anchors=tuple(mapping[a] for a in code.anchors))


def enumerate_grassmannian(field: FiniteField, k: int, n: int, cap: int = 10 ** 6):
    """Iterate all k-dim subspaces of GF(q)^n in a fixed order.

    The count is checked against cap before anything is yielded.
    """
    if not 0 <= k <= n or n < 1:
        raise BadDimensionsError(f"no Grassmannian for k={k}, n={n}")
    count = gaussian_binomial(n, k, field.order)
    if count > cap:
        raise EnumerationTooLargeError(f"{count} subspaces exceeds cap {cap}")
    return _grassmannian_gen(field, k, n)


def _grassmannian_gen(field, k, n):
    q = field.order
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i in range(k)
                for j in range(pivots[i] + 1, n) if j not in pivot_set]
        base = [[0] * n for _ in range(k)]
        for i, c in enumerate(pivots):
            base[i][c] = 1
        for values in product(range(q), repeat=len(free)):
            rows = [r[:] for r in base]
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield Subspace._from_rref(field, n, tuple(tuple(r) for r in rows))
