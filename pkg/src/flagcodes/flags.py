"""Flags (nested subspace chains) on GF(q)^n and flag codes.

A flag of type (t_1 < ... < t_r) is a strictly nested chain of subspaces
with those dimensions; the flag distance is the sum of the subspace
distances taken level by level.  A flag code is optimum distance when its
minimum distance attains the type's upper bound

    2 (sum of t_i with 2 t_i <= n  +  sum of (n - t_i) with 2 t_i > n).

Whether a code attains that bound is decided by its projections at the two
critical levels a = max{i : 2 t_i <= n} and b = min{i : 2 t_i >= n}: the
code is optimum distance iff both projected codes carry the full cardinality
and attain the maximum subspace distance of their dimension.  Both routes
(definition and characterization) are implemented and kept in agreement by
the tests.
"""

from dataclasses import dataclass
from math import gcd

from .errors import (AmbientMismatchError, BadDimensionsError,
                     MixedFieldsError, NotNestedError, TypeMismatchError,
                     AdditivityViolatedError)
from .matrices import Matrix
from .subspaces import (Subspace, SubspaceCode, max_distance_bound,
                        subspace_distance)


class Flag:
    """A strictly nested chain of proper nonzero subspaces."""

    __slots__ = ("field", "n", "subspaces", "dims", "_hash")

    def __init__(self, subspaces):
        subspaces = tuple(subspaces)
        if not subspaces:
            raise BadDimensionsError("a flag needs at least one subspace")
        first = subspaces[0]
        for s in subspaces:
            first._check_mate(s)
            if not 0 < s.dim < s.n:
                raise BadDimensionsError(
                    f"flag subspaces must be proper and nonzero, got dim {s.dim}")
        for lo, hi in zip(subspaces, subspaces[1:]):
            if not (lo.dim < hi.dim and hi.contains(lo)):
                raise NotNestedError(
                    f"chain breaks between dims {lo.dim} and {hi.dim}")
        self.field = first.field
        self.n = first.n
        self.subspaces = subspaces
        self.dims = tuple(s.dim for s in subspaces)
        self._hash = None

    @classmethod
    def _trusted(cls, field, n, subspaces, dims) -> "Flag":
        self = cls.__new__(cls)
        self.field = field
        self.n = n
        self.subspaces = subspaces
        self.dims = dims
        self._hash = None
        return self

    def apply(self, A: Matrix) -> "Flag":
        """Right action by an invertible matrix, level by level."""
        subs = tuple(s.apply(A) for s in self.subspaces)
        return Flag._trusted(self.field, self.n, subs, self.dims)

    def __eq__(self, other):
        if not isinstance(other, Flag):
            return NotImplemented
        return self.subspaces == other.subspaces

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(s.basis.rows for s in self.subspaces))
        return self._hash

    def __repr__(self):
        return f"Flag(type {self.dims} on GF({self.field.order})^{self.n})"


def full_type(n: int) -> tuple:
    return tuple(range(1, n))


def make_flag(subspaces) -> Flag:
    """Validate a nested chain and wrap it as a Flag."""
    return Flag(subspaces)


def flag_distance(F: Flag, G: Flag) -> int:
    if F.field is not G.field:
        raise MixedFieldsError("flags over different fields")
    if F.n != G.n:
        raise AmbientMismatchError(f"ambient dimensions {F.n} and {G.n}")
    if F.dims != G.dims:
        raise TypeMismatchError(f"flag types {F.dims} and {G.dims}")
    return sum(subspace_distance(u, v)
               for u, v in zip(F.subspaces, G.subspaces))


def flag_distance_bound(n: int, dims) -> int:
    """Largest possible distance between two flags of the given type."""
    return 2 * sum(t if 2 * t <= n else n - t for t in dims)


def critical_indices(n: int, dims):
    """(a, b): positions (1-based) of max{2 t_i <= n} and min{2 t_i >= n}.

    One of them can be None when every dimension sits on the same side of
    n/2; they coincide exactly when n is even and n/2 is a dimension.
    """
    a = b = None
    for i, t in enumerate(dims, start=1):
        if 2 * t <= n:
            a = i
        if 2 * t >= n and b is None:
            b = i
    return a, b


class FlagCode:
    """A nonempty set of flags of one type on a common ambient space.

    `anchors` as in SubspaceCode: orbit seeds that license the linear-time
    minimum distance scan.
    """

    __slots__ = ("field", "n", "dims", "members", "_set", "anchors")

    def __init__(self, members, *, anchors=()):
        members = list(members)
        if not members:
            raise BadDimensionsError("a flag code needs at least one member")
        first = members[0]
        for m in members:
            if m.field is not first.field:
                raise MixedFieldsError("flags over different fields")
            if m.n != first.n:
                raise AmbientMismatchError("flags on different ambient spaces")
            if m.dims != first.dims:
                raise TypeMismatchError(f"mixed types {m.dims} and {first.dims}")
        self.field = first.field
        self.n = first.n
        self.dims = first.dims
        self._set = frozenset(members)
        self.members = tuple(sorted(
            self._set, key=lambda f: tuple(s.basis.rows for s in f.subspaces)))
        self.anchors = tuple(anchors)
        for a in self.anchors:
            if a not in self._set:
                raise ValueError("anchors must be members of the code")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, flag):
        return flag in self._set

    def __eq__(self, other):
        if not isinstance(other, FlagCode):
            return NotImplemented
        return (self.field is other.field and self.n == other.n
                and self._set == other._set)

    def __hash__(self):
        return hash((id(self.field), self.n, self._set))

    def min_distance(self, full: bool = False) -> int:
        if len(self.members) == 1:
            return 0
        if self.anchors and not full:
            return min(flag_distance(a, m)
                       for a in self.anchors for m in self.members if m != a)
        ms = self.members
        return min(flag_distance(ms[i], ms[j])
                   for i in range(len(ms)) for j in range(i + 1, len(ms)))

    def __repr__(self):
        return (f"FlagCode({len(self.members)} flags of type {self.dims} "
                f"on GF({self.field.order})^{self.n})")


def projected_code(code: FlagCode, index: int) -> SubspaceCode:
    """The subspace code of all members' subspaces at one chain position."""
    if not 1 <= index <= len(code.dims):
        raise IndexError(f"index {index} outside type {code.dims}")
    anchors = dict.fromkeys(a.subspaces[index - 1] for a in code.anchors)
    return SubspaceCode((f.subspaces[index - 1] for f in code.members),
                        anchors=tuple(anchors))


def is_disjoint(code: FlagCode) -> bool:
    """Whether every projection keeps the full cardinality."""
    return all(len(projected_code(code, i)) == len(code)
               for i in range(1, len(code.dims) + 1))


def is_odfc_by_definition(code: FlagCode) -> bool:
    """At least two flags and minimum distance at the type bound."""
    return (len(code) > 1
            and code.min_distance() == flag_distance_bound(code.n, code.dims))


def is_odfc_by_characterization(code: FlagCode) -> bool:
    """Optimum distance decided at the critical levels only."""
    if len(code) < 2:
        return False
    a, b = critical_indices(code.n, code.dims)
    for idx in dict.fromkeys(i for i in (a, b) if i is not None):
        proj = projected_code(code, idx)
        if len(proj) != len(code) or not proj.attains_max_distance():
            return False
    return True


def union_flag_codes(codes, require_additive: bool = False) -> FlagCode:
    """Union of flag codes of one type; optionally insist nothing collapses."""
    codes = list(codes)
    if not codes:
        raise BadDimensionsError("nothing to unite")
    members = []
    anchors = []
    for c in codes:
        if c.dims != codes[0].dims:
            raise TypeMismatchError("union of different flag types")
        members.extend(c.members)
        anchors.extend(c.anchors)
    out = FlagCode(members, anchors=tuple(dict.fromkeys(anchors)))
    if require_additive and len(out) != sum(len(c) for c in codes):
        raise AdditivityViolatedError(
            f"union has {len(out)} members, parts have {sum(len(c) for c in codes)}")
    return out


def orbit_flag(group, flag: Flag):
    """(orbit FlagCode, stabilizer order) under a cyclic matrix group.

    Also verifies that the flag stabilizer is the meet of the level
    stabilizers: in a cyclic group, |Stab(F)| = gcd_i |Stab(F_i)|, i.e. the
    orbit length is the lcm of the level orbit lengths.
    """
    if flag.field is not group.field:
        raise MixedFieldsError("flag and group over different fields")
    if flag.n != group.degree:
        raise AmbientMismatchError(
            f"flag ambient {flag.n}, group degree {group.degree}")
    g = group.generator
    seed = flag
    members = [seed]
    r = len(flag.subspaces)
    level_sizes = [None] * r
    cur = seed.apply(g)
    j = 1
    while cur != seed:
        for i in range(r):
            if level_sizes[i] is None and cur.subspaces[i] == seed.subspaces[i]:
                level_sizes[i] = j
        members.append(cur)
        cur = cur.apply(g)
        j += 1
    size = j
    N = group.order
    if N % size:
        raise AssertionError("orbit length does not divide the group order")
    stab = N // size
    meet = 0
    for s in level_sizes:
        meet = gcd(meet, N // (s if s is not None else size))
    if meet != stab:
        raise AssertionError("flag stabilizer is not the meet of level stabilizers")
    return FlagCode(members, anchors=(seed,)), stab


@dataclass(frozen=True)
class OrbitalConditionReport:
    """Orbit optimality test broken into its conditions at the critical levels."""

    code: FlagCode
    orbit_size: int
    flag_stabilizer_order: int
    a_index: int
    b_index: int
    a_attains_max: bool
    b_attains_max: bool
    a_stabilizer_order: int
    b_stabilizer_order: int

    @property
    def stabilizer_condition(self) -> bool:
        # Stab(F) always sits inside both level stabilizers, so demanding
        # |Stab(F_a)| = |Stab(F_b)| <= |Stab(F)| forces equality throughout.
        return (self.a_stabilizer_order == self.b_stabilizer_order
                and self.a_stabilizer_order <= self.flag_stabilizer_order)

    @property
    def verdict(self) -> bool:
        return self.a_attains_max and self.b_attains_max and self.stabilizer_condition


def check_orbital_odfc_conditions(group, flag: Flag) -> OrbitalConditionReport:
    """Evaluate the orbit-code conditions; verdict matches is_odfc_by_definition."""
    code, stab = orbit_flag(group, flag)
    a, b = critical_indices(flag.n, flag.dims)
    if a is None:
        a = b
    if b is None:
        b = a
    N = group.order

    def level(idx):
        proj = projected_code(code, idx)
        return proj.attains_max_distance(), N // len(proj)

    a_max, a_stab = level(a)
    b_max, b_stab = (a_max, a_stab) if b == a else level(b)
    return OrbitalConditionReport(
        code=code, orbit_size=len(code), flag_stabilizer_order=stab,
        a_index=a, b_index=b,
        a_attains_max=a_max, b_attains_max=b_max,
        a_stabilizer_order=a_stab, b_stabilizer_order=b_stab)
