"""Exact field arithmetic: prime fields GF(p), the char-2 extensions GF(4) and
GF(8), and the rationals, plus the multiplicative/additive residue structures
that the isomorphism conditions of the classification depend on.

Finite-field elements are canonical small ints (least residue, or the bit
encoding of the least polynomial representative), so equality is ``==`` on
ints.  Rational elements are ``fractions.Fraction`` (always reduced).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class FieldError(Exception):
    pass


class NonPrimeModulus(FieldError):
    pass


class UnsupportedExtension(FieldError):
    pass


class UnsupportedField(FieldError):
    pass


class InvalidParameter(FieldError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface: total add/sub/mul/neg/inv/div on canonical elements."""

    is_finite = True

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        raise NotImplementedError

    def units(self):
        return [a for a in self.elements() if a != self.zero]

    def to_str(self, a):
        return str(a)

    def from_str(self, s):
        raise NotImplementedError

    def from_int(self, m):
        """Image of the integer m under the ring map Z -> F."""
        raise NotImplementedError

    def squares(self):
        """The set {x^2 : x in F} (zero included)."""
        return {self.mul(a, a) for a in self.elements()}

    def is_square(self, a):
        return a in self.squares()

    def poly2_irreducible(self, alpha, beta):
        """Whether t^2 + alpha*t + beta has no root in F (degree 2: irreducible)."""
        for t in self.elements():
            if self.add(self.mul(t, t), self.add(self.mul(alpha, t), beta)) == self.zero:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec() == other.spec()

    def __hash__(self):
        return hash(self.spec())

    def spec(self):
        raise NotImplementedError


class PrimeField(Field):
    """GF(p) with elements 0..p-1."""

    def __init__(self, p):
        if not _is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        if p > 97:
            raise NonPrimeModulus(f"prime modulus {p} exceeds supported bound 97")
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1
        self._inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def elements(self):
        return list(range(self.p))

    def from_str(self, s):
        return int(s) % self.p

    def from_int(self, m):
        return m % self.p

    def spec(self):
        return ("prime", self.p)

    def __repr__(self):
        return f"GF({self.p})"


# Fixed irreducible polynomials: t^2+t+1 over GF(2) for GF(4), t^3+t+1 for GF(8).
_EXT_MOD = {2: 0b111, 3: 0b1011}


class BinaryExtensionField(Field):
    """GF(2^k), k in {2,3}; elements are bit encodings of polynomials over GF(2)."""

    def __init__(self, k):
        if k not in (2, 3):
            raise UnsupportedExtension(f"only GF(4) and GF(8) extensions are supported, not 2^{k}")
        self.k = k
        self.char = 2
        self.order = 2 ** k
        self.zero = 0
        self.one = 1
        mod = _EXT_MOD[k]
        q = self.order
        self._mul = [[self._polymul(a, b, mod, k) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    @staticmethod
    def _polymul(a, b, mod, k):
        acc = 0
        bb = b
        while bb:
            if bb & 1:
                acc ^= a
            a <<= 1
            if a >> k & 1:
                a ^= mod
            bb >>= 1
        return acc

    def add(self, a, b):
        return a ^ b

    def sub(self, a, b):
        return a ^ b

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def elements(self):
        return list(range(self.order))

    def from_str(self, s):
        v = int(s)
        if not 0 <= v < self.order:
            raise ValueError(f"element {s} out of range for {self!r}")
        return v

    def from_int(self, m):
        return m % 2

    def spec(self):
        return ("ext", 2, self.k)

    def __repr__(self):
        return f"GF({self.order})"


class RationalField(Field):
    """Exact rationals; elements are reduced Fractions."""

    is_finite = False

    def __init__(self):
        self.char = 0
        self.order = None
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def elements(self):
        raise UnsupportedField("cannot enumerate the rationals")

    def to_str(self, a):
        return str(a)  # Fraction already prints as "a/b" or "a"

    def from_str(self, s):
        return Fraction(s)

    def from_int(self, m):
        return Fraction(m)

    def spec(self):
        return ("rationals",)

    def __repr__(self):
        return "Q"


def field_make(spec):
    """Build a field from a spec tuple or dict.

    Accepted forms: ("prime", p), ("ext", 2, k), ("rationals",) or the JSON
    dict form {"p": p, "k": k} with p=0 meaning the rationals.
    """
    if isinstance(spec, dict):
        p = spec.get("p", 0)
        k = spec.get("k", 1)
        if p == 0:
            spec = ("rationals",)
        elif k == 1:
            spec = ("prime", p)
        else:
            spec = ("ext", p, k)
    kind = spec[0]
    if kind == "prime":
        return PrimeField(spec[1])
    if kind == "ext":
        if spec[1] != 2:
            raise UnsupportedExtension("extensions are only supported in characteristic 2")
        return BinaryExtensionField(spec[2])
    if kind == "rationals":
        return RationalField()
    raise FieldError(f"unknown field spec {spec!r}")


def field_to_json(field):
    s = field.spec()
    if s[0] == "prime":
        return {"p": s[1], "k": 1}
    if s[0] == "ext":
        return {"p": 2, "k": s[2]}
    return {"p": 0, "k": 0}


def parse_field_name(name):
    """Parse CLI-style names: gf2, gf3, gf4, gf5, gf7, gf8, ..., or q."""
    name = name.lower()
    if name in ("q", "qq", "rationals"):
        return RationalField()
    if name.startswith("gf"):
        q = int(name[2:])
        if _is_prime(q):
            return PrimeField(q)
        if q == 4:
            return BinaryExtensionField(2)
        if q == 8:
            return BinaryExtensionField(3)
        raise UnsupportedExtension(f"GF({q}) is not supported (prime fields, GF(4), GF(8) only)")
    raise FieldError(f"unrecognized field name {name!r}")


class ResidueGroup:
    """A finite residue structure inside F (or F*), with an explicit member set."""

    def __init__(self, kind, members, multiplicative, degenerate=False):
        self.kind = kind
        self.members = frozenset(members)
        self.multiplicative = multiplicative
        self.degenerate = degenerate

    def __contains__(self, a):
        return a in self.members

    def __len__(self):
        return len(self.members)


def residue_group(field, kind, *params):
    """Materialize one of the residue structures used by the equivalence predicates.

    kinds: ("kth_powers", k) the k-th powers in F*;
           ("Gs", s)   {(x^2 - y^2 s)^2 : (x,y) != 0}, s a non-square;
           ("Hr", r)   {x^2 + r x : x in F}, char 2 (additive);
           ("Grs", r, s) {x^2 + r x y + s y^2 : (x,y) != 0}, t^2+rt+s irreducible.
    """
    if not field.is_finite:
        raise UnsupportedField("residue groups require a finite field")
    if kind == "kth_powers":
        (k,) = params
        members = {pow_elem(field, a, k) for a in field.units()}
        return ResidueGroup(("kth_powers", k), members, multiplicative=True)
    if kind == "Gs":
        (s,) = params
        if field.is_square(s):
            raise InvalidParameter("Gs requires a non-square parameter")
        members = set()
        for x in field.elements():
            for y in field.elements():
                if x == field.zero and y == field.zero:
                    continue
                n = field.sub(field.mul(x, x), field.mul(field.mul(y, y), s))
                members.add(field.mul(n, n))
        return ResidueGroup(("Gs", s), members, multiplicative=True)
    if kind == "Hr":
        (r,) = params
        if field.char != 2:
            raise InvalidParameter("Hr is only defined in characteristic 2")
        members = {field.add(field.mul(x, x), field.mul(r, x)) for x in field.elements()}
        return ResidueGroup(("Hr", r), members, multiplicative=False,
                            degenerate=(r == field.zero))
    if kind == "Grs":
        r, s = params
        if not field.poly2_irreducible(r, s):
            raise InvalidParameter("Grs requires t^2 + r t + s to be irreducible")
        members = set()
        for x in field.elements():
            for y in field.elements():
                if x == field.zero and y == field.zero:
                    continue
                members.add(field.add(field.mul(x, x),
                                      field.add(field.mul(field.mul(r, x), y),
                                                field.mul(field.mul(y, y), s))))
        return ResidueGroup(("Grs", r, s), members, multiplicative=True)
    raise FieldError(f"unknown residue group kind {kind!r}")


def pow_elem(field, a, k):
    """a^k for k >= 0 by repeated squaring on field elements."""
    acc = field.one
    base = a
    while k:
        if k & 1:
            acc = field.mul(acc, base)
        base = field.mul(base, base)
        k >>= 1
    return acc


def kth_power_index(field, k):
    """Index of the k-th powers in F* (finite fields): gcd(k, |F*|)."""
    return gcd(k, field.order - 1)
