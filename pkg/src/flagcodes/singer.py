"""Companion matrices, field reduction, and Singer cyclic groups.

Let E = GF(q^k) be built over B = GF(q) with modulus p(x) and companion
matrix M.  Writing elements of E in the power basis, a |-> sum a_i M^i is a
ring isomorphism onto B[M] (phi).  Replacing every entry of a
vector or matrix over E by its k x k image yields

  * field_reduction:  subspaces of E^s  ->  subspaces of B^(ks),
    multiplying dimensions and subspace distances by k, and
  * psi:  GL(s, E) -> GL(ks, B),  a group embedding
    compatible with the right action on row spaces.

The companion matrix of a degree-n extension of B generates a Singer cyclic
subgroup of GL(n, B) of order q^n - 1, transitive on lines and hyperplanes
with scalar one-space stabilizers of order q - 1.
"""

from .errors import (AmbientMismatchError, MixedFieldsError,
                     NotADivisorError, NotExtendingError)
from .fields import FieldElement, FiniteField, extend_field
from .matrices import Matrix, matrix_order
from .subspaces import Subspace, SubspaceCode


def companion_matrix(lower, field: FiniteField) -> Matrix:
    """Companion of the monic polynomial x^k + sum lower[i] x^i over field.

    Ones on the superdiagonal, negated lower coefficients in the last row.
    """
    k = len(lower)
    if k < 1:
        raise ValueError("companion matrix needs degree >= 1")
    neg = field.neg_code
    rows = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        rows[i][i + 1] = 1
    codes = [c.code if isinstance(c, FieldElement) else c for c in lower]
    rows[k - 1] = [neg(c) for c in codes]
    return Matrix(field, rows, k)


def _companion_powers(E: FiniteField):
    """M^0 ... M^(k-1) for the companion M of E's modulus, cached on E."""
    if E.base is None:
        raise NotExtendingError("need an extension field, got a prime field")
    if E._companion_powers is None:
        M = companion_matrix(E.modulus, E.base)
        powers = [Matrix.identity(E.base, E.degree)]
        for _ in range(E.degree - 1):
            powers.append(powers[-1] @ M)
        E._companion_powers = tuple(powers)
    return E._companion_powers


def phi(a: FieldElement) -> Matrix:
    """The k x k matrix over the base field representing a under the power basis."""
    E = a.field
    powers = _companion_powers(E)
    B = E.base
    k = E.degree
    out = [[0] * k for _ in range(k)]
    add, mul = B.add_codes, B.mul_codes
    for digit, P in zip(E.decode(a.code), powers):
        if digit:
            for i in range(k):
                prow = P.rows[i]
                orow = out[i]
                out[i] = [add(x, mul(digit, y)) for x, y in zip(orow, prow)]
    return Matrix(B, out, k)


def _expanded_rows(E: FiniteField, rows):
    """Code rows over E -> blockwise-expanded code rows over E.base."""
    k = E.degree
    out = []
    for row in rows:
        blocks = [phi(FieldElement(E, c)).rows for c in row]
        for i in range(k):
            new = []
            for blk in blocks:
                new.extend(blk[i])
            out.append(new)
    return out


def field_reduction(U: Subspace) -> Subspace:
    """Subspace of E^s -> subspace of B^(ks); dimension scales by k."""
    E = U.field
    if E.base is None:
        raise NotExtendingError("field reduction needs an extension field")
    k = E.degree
    out = Subspace(E.base, k * U.n, _expanded_rows(E, U.basis.rows))
    assert out.dim == k * U.dim, "field reduction must be injective"
    return out


def psi(A: Matrix) -> Matrix:
    """GL(s, E) -> GL(ks, B), entrywise expansion into k x k blocks."""
    E = A.field
    if E.base is None:
        raise NotExtendingError("field reduction needs an extension field")
    return Matrix(E.base, _expanded_rows(E, A.rows), E.degree * A.ncols)


class CyclicMatrixGroup:
    """The cyclic group generated by one invertible matrix of known order."""

    __slots__ = ("field", "degree", "generator", "order")

    def __init__(self, generator: Matrix, order: int, verify: bool = True):
        if generator.nrows != generator.ncols:
            raise ValueError("group generator must be square")
        if verify and matrix_order(generator, order_hint=order) != order:
            raise ValueError(f"generator order differs from declared {order}")
        self.field = generator.field
        self.degree = generator.nrows
        self.generator = generator
        self.order = order

    @property
    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.degree)

    def power(self, i: int) -> Matrix:
        return self.generator ** (i % self.order)

    def elements(self):
        """All group elements, as successive generator powers."""
        F = self.field
        cur = Matrix.identity(F, self.degree)
        for _ in range(self.order):
            yield cur
            cur = cur @ self.generator

    def subgroup_of_order(self, t: int) -> "CyclicMatrixGroup":
        """The unique subgroup of order t of a cyclic group."""
        if t < 1 or self.order % t:
            raise NotADivisorError(f"{t} does not divide group order {self.order}")
        return CyclicMatrixGroup(self.generator ** (self.order // t), t,
                                 verify=False)

    def __repr__(self):
        return (f"CyclicMatrixGroup(order {self.order} in "
                f"GL({self.degree}, GF({self.field.order})))")


def singer_group(field: FiniteField, n: int) -> CyclicMatrixGroup:
    """A Singer cyclic subgroup of GL(n, field) of order q^n - 1.

    Generated by the companion matrix of the pinned degree-n modulus.
    """
    if n < 1:
        raise ValueError("Singer group needs n >= 1")
    E = extend_field(field, n)
    gen = companion_matrix(E.modulus, field)
    return CyclicMatrixGroup(gen, field.order ** n - 1, verify=True)


def subgroup_of_order(group: CyclicMatrixGroup, t: int) -> CyclicMatrixGroup:
    """The unique subgroup of order t of a cyclic group."""
    return group.subgroup_of_order(t)


def orbit_subspace(group: CyclicMatrixGroup, U: Subspace):
    """(orbit SubspaceCode, stabilizer order) under repeated generator action."""
    if U.field is not group.field:
        raise MixedFieldsError("subspace and group over different fields")
    if U.n != group.degree:
        raise AmbientMismatchError(
            f"subspace ambient {U.n}, group degree {group.degree}")
    g = group.generator
    members = [U]
    cur = U.apply(g)
    while cur != U:
        members.append(cur)
        cur = cur.apply(g)
    size = len(members)
    if group.order % size:
        raise AssertionError("orbit length does not divide the group order")
    return SubspaceCode(members, anchors=(U,)), group.order // size
