"""Finite fields GF(p^e), including towers GF(q^k) built over a smaller field.

Elements are carried as integer codes in [0, q).  For a prime field the code
is the residue itself; for an extension of degree e over a base of order b,
the code is the base-b positional value of the coefficient vector
(c_0, ..., c_{e-1}) with respect to the power basis of the residue x, the
constant coefficient c_0 being the least significant digit.  The encoding
nests: an element of GF(64) built over GF(4) has three GF(4) digits, each of
which is itself a 2-digit GF(2) code.

The modulus of every extension is pinned deterministically: the first monic
primitive polynomial of the right degree, candidates ordered
lexicographically by coefficient vector (constant term first, coefficients
compared by their integer codes).  Primitivity is certified by checking that
the residue of x has multiplicative order exactly q - 1 in F[x]/(f); a
reducible f cannot pass this check because its quotient's unit group is too
small to contain an element of that order.

Fields are interned: make_field with equal arguments returns the same
object, so field identity doubles as field equality.  Instances never mutate
after construction apart from idempotent lazy caches (arithmetic tables,
log/antilog), which makes them safe to share across threads.
"""

from math import gcd

from .errors import FieldConstructionError, MixedFieldsError

# full add/mul tables are built for fields up to this order
_TABLE_LIMIT = 1024
# log/antilog tables up to this order
_LOG_LIMIT = 1 << 20

_FIELD_CACHE: dict = {}


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the sizes used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict:
    """Prime factorization {p: multiplicity} by trial division."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list:
    return sorted(factorize(n))


class FieldElement:
    """An element of a FiniteField, identified by its integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field: "FiniteField", code: int):
        self.field = field
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise MixedFieldsError(
                    f"operands live in {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            # ints are accepted as codes of the same field
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add_codes(self.code, o.code))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, self.field.add_codes(self.code, self.field.neg_code(o.code)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_codes(self.code, o.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(self.field, self.field.pow_code(self.code, n))

    def inverse(self) -> "FieldElement":
        if self.code == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self.field, self.field.inv_code(self.code))

    def order(self) -> int:
        """Multiplicative order; zero has none."""
        if self.code == 0:
            raise ZeroDivisionError("multiplicative order of zero")
        return self.field.order_of_code(self.code)

    @property
    def vector(self) -> tuple:
        """Coefficient vector over the base field, low-order first.

        Prime-field elements are their own length-1 vector.
        """
        F = self.field
        if F.base is None:
            return (self,)
        return tuple(F.base.element(d) for d in F.decode(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        if isinstance(other, int):
            return 0 <= other < self.field.order and self.code == other
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __repr__(self):
        return f"{self.field.order}#{self.code}"


class FiniteField:
    """GF(p^e), possibly an extension tower over another FiniteField.

    Not constructed directly; use make_field / extend_field so instances
    are interned and moduli stay pinned.
    """

    def __init__(self, p: int, e: int, base, modulus: tuple):
        self.characteristic = p
        self.degree = e
        self.base = base  # None for prime fields
        self.order = p if base is None else base.order ** e
        # lower coefficients (p_0, ..., p_{e-1}) of the monic modulus, as
        # base-field codes; for a prime field the single coefficient of x + p_0
        self.modulus = modulus
        self._add = None
        self._mul = None
        self._neg = None
        self._inv = None
        self._log = None
        self._exp = None
        self._companion_powers = None

    # -- construction of elements ------------------------------------------

    def element(self, code: int) -> FieldElement:
        if not isinstance(code, int) or not 0 <= code < self.order:
            raise ValueError(f"element code {code!r} outside [0, {self.order})")
        return FieldElement(self, code)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, c) for c in range(self.order))

    @property
    def primitive_element(self) -> FieldElement:
        """The residue of x modulo the modulus; generates the unit group."""
        if self.base is None:
            return FieldElement(self, (-self.modulus[0]) % self.characteristic)
        return FieldElement(self, self.base.order)

    # -- code arithmetic ----------------------------------------------------

    def decode(self, code: int) -> tuple:
        """Base-field digit tuple (c_0, ..., c_{e-1}) of an element code."""
        b = self.base.order
        return tuple(code // b ** i % b for i in range(self.degree))

    def encode(self, digits) -> int:
        b = self.base.order
        code = 0
        for i, d in enumerate(digits):
            code += d * b ** i
        return code

    def add_codes(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        if self.base is None:
            return (a + b) % self.characteristic
        bb = self.base
        return self.encode(bb.add_codes(x, y) for x, y in zip(self.decode(a), self.decode(b)))

    def neg_code(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        if self.base is None:
            return (-a) % self.characteristic
        bb = self.base
        return self.encode(bb.neg_code(x) for x in self.decode(a))

    def mul_codes(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        if self.base is None:
            return a * b % self.characteristic
        prod = _poly_mul(self.base, self.decode(a), self.decode(b))
        return self.encode(_poly_rem(self.base, prod, self.modulus))

    def pow_code(self, a: int, n: int) -> int:
        if n < 0:
            a = self.inv_code(a)
            n = -n
        out = 1
        while n:
            if n & 1:
                out = self.mul_codes(out, a)
            a = self.mul_codes(a, a)
            n >>= 1
        return out

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._inv is not None:
            return self._inv[a]
        return self.pow_code(a, self.order - 2)

    def order_of_code(self, a: int) -> int:
        n = self.order - 1
        d = n
        for ell in prime_factors(n):
            while d % ell == 0 and self.pow_code(a, d // ell) == 1:
                d //= ell
        return d

    # -- lazy tables ---------------------------------------------------------

    def tables(self):
        """(add, mul, neg, inv) lookup tables, or None above the size cap.

        Built once on demand; rebuilding is idempotent, so the benign race
        under free threading costs only duplicated work.
        """
        if self.order > _TABLE_LIMIT:
            return None
        if self._mul is None:
            q = self.order
            add = [[self.add_codes(a, b) for b in range(q)] for a in range(q)]
            mul = [[self.mul_codes(a, b) for b in range(q)] for a in range(q)]
            neg = [self.neg_code(a) for a in range(q)]
            inv = [0] + [self.inv_code(a) for a in range(1, q)]
            self._add, self._neg, self._inv = add, neg, inv
            self._mul = mul  # set last: other methods key off _mul/_add checks
        return self._add, self._mul, self._neg, self._inv

    def log(self, a) -> int:
        """Discrete log base the primitive element; a may be code or element."""
        code = a.code if isinstance(a, FieldElement) else a
        if code == 0:
            raise ZeroDivisionError("log of zero")
        self._build_log()
        return self._log[code]

    def exp(self, i: int) -> FieldElement:
        """Power i of the primitive element."""
        self._build_log()
        return FieldElement(self, self._exp[i % (self.order - 1)])

    def _build_log(self):
        if self._exp is not None:
            return
        if self.order > _LOG_LIMIT:
            raise ValueError(f"log tables limited to order {_LOG_LIMIT}")
        g = self.primitive_element.code
        exp = []
        log = [0] * self.order
        c = 1
        for i in range(self.order - 1):
            exp.append(c)
            log[c] = i
            c = self.mul_codes(c, g)
        assert c == 1, "primitive element order check failed"
        self._log = log
        self._exp = exp

    def __repr__(self):
        if self.base is None or self.base.base is None:
            return f"GF({self.order})"
        return f"GF({self.order}) over {self.base!r}"

    def __reduce__(self):
        # preserve interning across pickling
        chain = []
        F = self
        while F.base is not None:
            chain.append(F.degree)
            F = F.base
        return (_rebuild_field, (F.characteristic, tuple(reversed(chain))))


def _rebuild_field(p, degrees):
    F = make_field(p, 1)
    for e in degrees:
        F = make_field(p, e, base=F)
    return F


# -- polynomial helpers over a field, coefficients as codes, low-order first --

def _poly_mul(F: FiniteField, a, b):
    out = [0] * (len(a) + len(b) - 1)
    add, mul = F.add_codes, F.mul_codes
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = add(out[i + j], mul(x, y))
    return out


def _poly_rem(F: FiniteField, a, lower):
    """Remainder of a modulo the monic polynomial x^e + sum lower[i] x^i."""
    e = len(lower)
    a = list(a)
    add, mul, neg = F.add_codes, F.mul_codes, F.neg_code
    for i in range(len(a) - 1, e - 1, -1):
        c = a[i]
        if c == 0:
            continue
        a[i] = 0
        nc = neg(c)
        for j, m in enumerate(lower):
            if m:
                a[i - e + j] = add(a[i - e + j], mul(nc, m))
    del a[e:]
    while len(a) < e:
        a.append(0)
    return a


def _poly_pow_rem(F: FiniteField, base, n: int, lower):
    out = [1] + [0] * (len(lower) - 1)
    base = _poly_rem(F, base, lower)
    while n:
        if n & 1:
            out = _poly_rem(F, _poly_mul(F, out, base), lower)
        base = _poly_rem(F, _poly_mul(F, base, base), lower)
        n >>= 1
    return out


def _is_one(poly):
    return poly[0] == 1 and not any(poly[1:])


def _residue_order_is(F: FiniteField, lower, n: int) -> bool:
    """Whether x has multiplicative order exactly n in F[x]/(x^e + ...)."""
    if lower[0] == 0:
        return False  # x divides the modulus, residue is a zero divisor
    e = len(lower)
    x = [0] * e
    if e == 1:
        x[0] = F.neg_code(lower[0])
    else:
        x[1] = 1
    if not _is_one(_poly_pow_rem(F, x, n, lower)):
        return False
    for ell in prime_factors(n):
        if _is_one(_poly_pow_rem(F, x, n // ell, lower)):
            return False
    return True


def _search_modulus(base: FiniteField, e: int) -> tuple:
    """First monic primitive degree-e polynomial over base, by lex order of
    (p_0, ..., p_{e-1})."""
    b = base.order
    n = b ** e - 1
    if b <= _TABLE_LIMIT:
        base.tables()  # the scan below is multiplication-heavy
    # The residue of x is a unit-group generator only if its norm, which is
    # (-1)^e times the constant term, generates the base units.  Whole rows
    # failing that are skipped; survivors are untouched, so the first hit
    # (and with it the pinned modulus) is the same as a full scan's.
    flip = e % 2 == 1
    good = [c for c in range(1, b)
            if base.order_of_code(base.neg_code(c) if flip else c) == b - 1]
    inner = b ** (e - 1)
    weights = [b ** (e - 2 - j) for j in range(e - 1)]
    for p0 in good:
        for idx in range(inner):
            lower = (p0,) + tuple(idx // w % b for w in weights)
            if _residue_order_is(base, lower, n):
                return lower
    raise AssertionError("no primitive polynomial found")  # unreachable


def _search_prime_modulus(p: int) -> tuple:
    """First c such that x + c has a primitive residue -c mod p."""
    n = p - 1
    ells = prime_factors(n) if n > 1 else []
    for c in range(p):
        r = (-c) % p
        if r == 0:
            continue
        if pow(r, n, p) != 1:
            continue
        if all(pow(r, n // ell, p) != 1 for ell in ells):
            return (c,)
    raise AssertionError("no primitive root found")  # unreachable


def make_field(p: int, e: int, base: FiniteField = None) -> FiniteField:
    """GF(p^e) as a degree-e extension of base (or of the prime field).

    Interned: equal arguments return the identical object, and with it the
    identical pinned modulus.
    """
    if not is_prime(p):
        raise FieldConstructionError(f"characteristic {p} is not prime")
    if e < 1:
        raise FieldConstructionError(f"extension degree {e} < 1")
    if base is not None and base.characteristic != p:
        raise FieldConstructionError(
            f"base characteristic {base.characteristic} differs from {p}")

    if base is None and e > 1:
        # GF(p^e) with no explicit base: extension over GF(p)
        return make_field(p, e, base=make_field(p, 1))

    key = (p, e, id(base))
    F = _FIELD_CACHE.get(key)
    if F is not None:
        return F
    if base is None:
        F = FiniteField(p, 1, None, _search_prime_modulus(p))
    elif e == 1:
        F = base  # a degree-1 extension adds nothing
    else:
        F = FiniteField(p, e, base, tuple(_search_modulus(base, e)))
    _FIELD_CACHE[key] = F
    return F


def extend_field(base: FiniteField, k: int) -> FiniteField:
    """Degree-k extension tower over an existing field."""
    return make_field(base.characteristic, k, base=base)


def primitive_element(F: FiniteField) -> FieldElement:
    """The residue of x modulo the modulus; generates the unit group."""
    return F.primitive_element


def element_order(a: FieldElement) -> int:
    return a.order()
