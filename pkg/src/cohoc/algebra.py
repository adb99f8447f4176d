"""Prime fields, monomials, sparse polynomials and finitely presented graded rings.

Polynomials live in the free commutative algebra on the generators of a
presentation; the relations are only applied by the Groebner engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from sympy import isprime

from .errors import (
    DuplicateGenerator,
    InhomogeneousRelation,
    InvalidGenerator,
    MonomialOverflow,
    NonPrimeCharacteristic,
    OddGeneratorAtOddPrime,
    PresentationMismatch,
    RelationDegreeTooLow,
    UnknownGenerator,
)

EXPONENT_LIMIT = 2**32 - 1


@total_ordering
class FieldScalar:
    """An element of the prime field F_p."""

    __slots__ = ("residue", "characteristic")

    def __init__(self, value: int, characteristic: int):
        if not isprime(characteristic):
            raise NonPrimeCharacteristic(f"{characteristic} is not prime")
        self.characteristic = characteristic
        self.residue = value % characteristic

    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.characteristic != self.characteristic:
                raise PresentationMismatch("scalars of different characteristic")
            return other.residue
        if isinstance(other, int):
            return other % self.characteristic
        return NotImplemented

    def _new(self, value):
        s = object.__new__(FieldScalar)
        s.characteristic = self.characteristic
        s.residue = value % self.characteristic
        return s

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.residue)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.residue)

    def inverse(self) -> FieldScalar:
        if self.residue == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return self._new(pow(self.residue, -1, self.characteristic))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self._new(o).inverse()

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return (self.residue, self.characteristic) == (other.residue, other.characteristic)
        if isinstance(other, int):
            return self.residue == other % self.characteristic
        return NotImplemented

    def __lt__(self, other):
        return self.residue < self._coerce(other)

    def __hash__(self):
        return hash((self.residue, self.characteristic))

    def __int__(self):
        return self.residue

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"FieldScalar({self.residue}, {self.characteristic})"


@dataclass(frozen=True)
class GeneratorInfo:
    name: str
    degree: int

    def __post_init__(self):
        from .parser import is_identifier

        if not is_identifier(self.name):
            raise InvalidGenerator(f"{self.name!r} is not a valid identifier")
        if not isinstance(self.degree, int) or self.degree < 1:
            raise InvalidGenerator(f"generator {self.name} must have degree >= 1")


@dataclass(frozen=True)
class Monomial:
    exponents: tuple
    degree: int

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")
        if any(e > EXPONENT_LIMIT for e in self.exponents):
            raise MonomialOverflow("exponent exceeds 2**32 - 1")

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def support(self) -> tuple:
        return tuple(i for i, e in enumerate(self.exponents) if e)


def degrevlex_key(exps, degree):
    """Sort key for the default order: weighted degree, then reverse lex."""
    return (degree, tuple(-e for e in reversed(exps)))


class Polynomial:
    """A sparse polynomial over F_p in the generators of a presentation.

    Terms are kept as a dict from exponent tuples to residues in [1, p).
    Instances are immutable; every operation returns a new polynomial.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingPresentation, terms=None):
        self.ring = ring
        p = ring.characteristic
        clean = {}
        if terms:
            n = len(ring.generators)
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(f"monomial {exps} has wrong length for {n} generators")
                c = int(c) % p
                if c:
                    clean[exps] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        f = object.__new__(cls)
        f.ring = ring
        f._terms = terms
        f._hash = None
        return f

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(exponents, coefficient) pairs, largest monomial first (degrevlex)."""
        deg = self.ring.monomial_degree
        return sorted(self._terms.items(), key=lambda t: degrevlex_key(t[0], deg(t[0])), reverse=True)

    def monomials(self):
        return [Monomial(e, self.ring.monomial_degree(e)) for e, _ in self.items()]

    def coefficient(self, exps) -> FieldScalar:
        if isinstance(exps, Monomial):
            exps = exps.exponents
        return FieldScalar(self._terms.get(tuple(exps), 0), self.ring.characteristic)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def degrees(self) -> set:
        deg = self.ring.monomial_degree
        return {deg(e) for e in self._terms}

    @property
    def homogeneous_degree(self):
        """The common degree of all terms, or None if inhomogeneous or zero."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        ds = self.degrees()
        return max(ds) if ds else None

    def homogeneous_components(self) -> dict:
        deg = self.ring.monomial_degree
        out = {}
        for e, c in self._terms.items():
            out.setdefault(deg(e), {})[e] = c
        return {d: Polynomial._raw(self.ring, t) for d, t in sorted(out.items())}

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise PresentationMismatch("polynomials belong to different presentations")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        return Polynomial._raw(self.ring, {e: (-c) % p for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: int) -> Polynomial:
        p = self.ring.characteristic
        c = int(c) % p
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: v * c % p for e, v in self._terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return self.ring.zero()
        p = self.ring.characteristic
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = (out.get(e, 0) + ca * cb) % p
        out = {e: c for e, c in out.items() if c}
        if any(x > EXPONENT_LIMIT for e in out for x in e):
            raise MonomialOverflow("exponent exceeds 2**32 - 1")
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.signature == other.ring.signature and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.signature, frozenset(self._terms.items())))
        return self._hash

    def rebind(self, ring: RingPresentation) -> Polynomial:
        """The same terms viewed in another presentation on identical generators."""
        if ring.signature != self.ring.signature:
            raise PresentationMismatch("generators differ")
        return Polynomial._raw(ring, dict(self._terms))

    def __str__(self):
        from .parser import format_element

        return format_element(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


class RingPresentation:
    """A graded commutative F_p-algebra given by generators and relations.

    Use :func:`make_presentation` to build one; relations may be given as
    strings in the expression grammar or as polynomials over the same
    generators.
    """

    __slots__ = ("characteristic", "generators", "relations", "_index", "_weights", "_hash")

    def __init__(self, characteristic: int, generators, relations=()):
        if not isinstance(characteristic, int) or not isprime(characteristic):
            raise NonPrimeCharacteristic(f"{characteristic} is not prime")
        gens = tuple(g if isinstance(g, GeneratorInfo) else GeneratorInfo(*g) for g in generators)
        seen = set()
        for g in gens:
            if g.name in seen:
                raise DuplicateGenerator(f"generator {g.name} declared twice")
            seen.add(g.name)
            if characteristic != 2 and g.degree % 2:
                raise OddGeneratorAtOddPrime(
                    f"generator {g.name} has odd degree {g.degree}; only even degrees are supported for p != 2"
                )
        self.characteristic = characteristic
        self.generators = gens
        self._index = {g.name: i for i, g in enumerate(gens)}
        self._weights = tuple(g.degree for g in gens)
        self._hash = None
        rels = []
        for i, r in enumerate(relations):
            if isinstance(r, str):
                from .parser import parse_element

                r = parse_element(r, self)
            elif isinstance(r, Polynomial):
                r = r.rebind(self)
            else:
                raise TypeError(f"relation {i + 1} is neither a string nor a polynomial")
            if r.is_zero():
                continue
            if not r.is_homogeneous():
                raise InhomogeneousRelation(f"relation {i + 1} ({r}) is not homogeneous")
            if r.homogeneous_degree < 2:
                raise RelationDegreeTooLow(f"relation {i + 1} ({r}) has degree < 2")
            rels.append(r)
        self.relations = tuple(rels)

    @property
    def signature(self):
        return (self.characteristic, self.generators)

    @property
    def names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    @property
    def weights(self) -> tuple:
        return self._weights

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator(name) from None

    def monomial_degree(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self._weights))

    def monomial(self, exps) -> Monomial:
        exps = tuple(exps)
        return Monomial(exps, self.monomial_degree(exps))

    def zero(self) -> Polynomial:
        return Polynomial._raw(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: int) -> Polynomial:
        return Polynomial(self, {(0,) * self.ngens: c})

    def gen(self, name_or_index) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        exps = [0] * self.ngens
        exps[i] = 1
        return Polynomial._raw(self, {tuple(exps): 1})

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.ngens)]

    def from_monomial(self, exps, coeff: int = 1) -> Polynomial:
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str) -> Polynomial:
        from .parser import parse_element

        return parse_element(text, self)

    def free(self) -> RingPresentation:
        """The free graded commutative algebra on the same generators."""
        return RingPresentation(self.characteristic, self.generators, ())

    def with_relations(self, extra) -> RingPresentation:
        return RingPresentation(self.characteristic, self.generators, list(self.relations) + list(extra))

    def __eq__(self, other):
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return self.signature == other.signature and self.relations == other.relations

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.signature, self.relations))
        return self._hash

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"RingPresentation(p={self.characteristic}, [{gens}], {len(self.relations)} relations)"


def make_presentation(p: int, gens, relations=()) -> RingPresentation:
    """Validate and build a presentation.

    >>> R = make_presentation(2, [("x", 1), ("y", 1)], ["x*y"])
    >>> R
    RingPresentation(p=2, [x:1, y:1], 1 relations)
    """
    return RingPresentation(p, gens, relations)
