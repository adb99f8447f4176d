"""Buchberger's algorithm for homogeneous ideals over F_p.

Pairs are processed degree by degree (normal strategy), so stopping after
degree B leaves a basis that is correct in every degree <= B.

Internally a monomial is one Python int whose natural integer order *is* the
chosen monomial order: the weighted degree sits in the top bits, and below it
the exponents are packed so that multiplying monomials is integer addition.
For degrevlex the packed fields hold ``degree - e_i`` (last generator most
significant); for deglex they hold ``e_i`` (first generator most
significant).  Over F_2 polynomials are plain sets of such ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import Monomial, Polynomial, RingPresentation
from .errors import (
    DegreeExceedsTruncation,
    InhomogeneousElement,
    MonomialOverflow,
    PresentationMismatch,
    TruncatedBasis,
    TruncationTooSmall,
)

_FIELD = 32
_DIV = _FIELD + 1


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-compatible monomial order; ties broken by declaration order."""

    kind: str = "degrevlex"

    def __post_init__(self):
        if self.kind not in ("degrevlex", "deglex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exps, weights):
        d = sum(e * w for e, w in zip(exps, weights))
        if self.kind == "degrevlex":
            return (d, tuple(-e for e in reversed(exps)))
        return (d, tuple(exps))


DEGREVLEX = MonomialOrder("degrevlex")
DEGLEX = MonomialOrder("deglex")


def as_order(order) -> MonomialOrder:
    if order is None:
        return DEGREVLEX
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


class _Codec:
    def __init__(self, weights, kind):
        self.weights = tuple(weights)
        self.n = len(weights)
        self.kind = kind
        self.dshift = self.n * _FIELD
        self.fmask = (1 << _FIELD) - 1
        self.guard = sum(1 << (i * _DIV + _FIELD) for i in range(self.n))

    def encode(self, exps):
        d = sum(e * w for e, w in zip(exps, self.weights))
        if d >= 1 << _FIELD:
            raise MonomialOverflow("monomial degree too large for the engine")
        key = d << self.dshift
        if self.kind == "degrevlex":
            for i, e in enumerate(exps):
                key |= (d - e) << (i * _FIELD)
        else:
            n = self.n
            for i, e in enumerate(exps):
                key |= e << ((n - 1 - i) * _FIELD)
        return key

    def degree(self, key):
        return key >> self.dshift

    def decode(self, key):
        m = self.fmask
        if self.kind == "degrevlex":
            d = key >> self.dshift
            return tuple(d - ((key >> (i * _FIELD)) & m) for i in range(self.n))
        n = self.n
        return tuple((key >> ((n - 1 - i) * _FIELD)) & m for i in range(n))

    def divpack(self, exps):
        key = 0
        for i, e in enumerate(exps):
            key |= e << (i * _DIV)
        return key


class _Entry:
    __slots__ = ("lead", "exps", "div", "terms", "degree")

    def __init__(self, lead, exps, div, terms, degree):
        self.lead = lead
        self.exps = exps
        self.div = div
        self.terms = terms
        self.degree = degree


class _Engine:
    """Mutable working state of one basis computation."""

    def __init__(self, ring: RingPresentation, order: MonomialOrder):
        self.p = ring.characteristic
        self.codec = _Codec(ring.weights, order.kind)
        self.entries = []
        self._hits = {}
        self._misses = {}

    # -- conversion -------------------------------------------------------
    def to_internal(self, f: Polynomial):
        enc = self.codec.encode
        if self.p == 2:
            return {enc(e) for e in f._terms}
        return {enc(e): c for e, c in f._terms.items()}

    def to_poly(self, ring, terms):
        dec = self.codec.decode
        if self.p == 2:
            return Polynomial._raw(ring, {dec(k): 1 for k in terms})
        return Polynomial._raw(ring, {dec(k): c for k, c in terms.items()})

    # -- reduction --------------------------------------------------------
    def reducer(self, key):
        hit = self._hits.get(key)
        if hit is not None:
            return hit
        count = len(self.entries)
        if self._misses.get(key) == count:
            return None
        guard = self.codec.guard
        probe = self.codec.divpack(self.codec.decode(key)) | guard
        d = key >> self.codec.dshift
        for g in self.entries:
            if g.degree <= d and (probe - g.div) & guard == guard:
                self._hits[key] = g
                return g
        self._misses[key] = count
        return None

    def reduce(self, f, full=True):
        """Reduce ``f`` (consumed) modulo the current entries."""
        if self.p == 2:
            return self._reduce2(f, full)
        return self._reducep(f, full)

    def _reduce2(self, f, full):
        rest = set()
        while f:
            m = max(f)
            g = self.reducer(m)
            if g is None:
                if not full:
                    return f | rest
                f.discard(m)
                rest.add(m)
                continue
            shift = m - g.lead
            f ^= {k + shift for k in g.terms}
        return rest

    def _reducep(self, f, full):
        p = self.p
        rest = {}
        while f:
            m = max(f)
            g = self.reducer(m)
            if g is None:
                if not full:
                    f.update(rest)
                    return f
                rest[m] = f.pop(m)
                continue
            shift = m - g.lead
            c = f[m]
            for k, v in g.terms.items():
                k += shift
                x = (f.get(k, 0) - c * v) % p
                if x:
                    f[k] = x
                else:
                    del f[k]
        return rest

    def monic(self, f):
        if self.p == 2:
            return f
        lead = max(f)
        inv = pow(f[lead], -1, self.p)
        if inv == 1:
            return f
        p = self.p
        return {k: c * inv % p for k, c in f.items()}

    def make_entry(self, f):
        lead = max(f)
        exps = self.codec.decode(lead)
        return _Entry(lead, exps, self.codec.divpack(exps), f, self.codec.degree(lead))

    def add(self, entry):
        self.entries.append(entry)
        self._misses.clear()

    def shifted(self, g, shift):
        if self.p == 2:
            return {k + shift for k in g.terms}
        return {k + shift: c for k, c in g.terms.items()}

    def spoly(self, g, h, lcm):
        a = self.shifted(g, lcm - g.lead)
        b = self.shifted(h, lcm - h.lead)
        if self.p == 2:
            return a ^ b
        p = self.p
        for k, c in b.items():
            x = (a.get(k, 0) - c) % p
            if x:
                a[k] = x
            else:
                del a[k]
        return a


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """Reduced (possibly degree-truncated) Groebner basis of relations + extra.

    ``truncation`` is either an int B, meaning every obstruction of degree
    <= B has been resolved, or the string ``"complete"``.
    """

    ring: RingPresentation
    order: MonomialOrder
    elements: tuple
    truncation: object
    extra: tuple = ()
    _engine: _Engine = field(default=None, repr=False, compare=False)

    @property
    def is_complete(self) -> bool:
        return self.truncation == "complete"

    def leading_monomials(self) -> list:
        return [Monomial(g.exps, g.degree) for g in self._engine.entries]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


class MonomialIdeal:
    """A monomial ideal given by a minimal generating antichain."""

    __slots__ = ("generators", "weights")

    def __init__(self, generators, weights=None):
        gens = sorted(set(tuple(g) for g in generators))
        minimal = [g for g in gens if not any(h != g and _divides(h, g) for h in gens)]
        self.generators = tuple(minimal)
        self.weights = tuple(weights) if weights is not None else None

    def contains(self, exps) -> bool:
        return any(_divides(g, exps) for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"MonomialIdeal({list(self.generators)})"


def _coerce_extra(ring, extra):
    out = []
    for f in extra:
        if isinstance(f, str):
            f = ring.parse(f)
        elif f.ring.signature != ring.signature:
            raise PresentationMismatch("extra generator from a different presentation")
        elif f.ring is not ring:
            f = f.rebind(ring)
        if not f.is_homogeneous():
            raise InhomogeneousElement(f"{f} is not homogeneous")
        out.append(f)
    return tuple(out)


def groebner_basis(ring: RingPresentation, extra=(), order=None, truncation="complete", criteria=True) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by the relations of
    ``ring`` together with ``extra``.

    ``criteria`` switches Gebauer-Moeller pair pruning on or off; the result
    does not depend on it.
    """
    order = as_order(order)
    extra = _coerce_extra(ring, extra)
    if truncation != "complete":
        if not isinstance(truncation, int) or truncation < 0:
            raise ValueError("truncation must be a non-negative int or 'complete'")
    return _cached_basis(ring, extra, order, truncation, bool(criteria))


@lru_cache(maxsize=256)
def _cached_basis(ring, extra, order, truncation, criteria):
    gens = [f for f in ring.relations + extra if f]
    top = max((f.homogeneous_degree for f in gens), default=0)
    if truncation != "complete" and truncation < max((r.homogeneous_degree for r in ring.relations), default=0):
        raise TruncationTooSmall(f"truncation {truncation} is below the top relation degree")
    eng = _Engine(ring, order)
    codec = eng.codec
    inputs = {}
    for f in gens:
        inputs.setdefault(f.homogeneous_degree, []).append(eng.to_internal(f))
    pairs = {}  # degree -> list of (lcm key, lcm exps, i, j)

    def update(t):
        h = eng.entries[t]
        new = []
        for i, g in enumerate(eng.entries[:t]):
            lcm = _lcm(g.exps, h.exps)
            new.append((lcm, i, _coprime(g.exps, h.exps)))
        if criteria:
            # old pairs made redundant by h
            for d, plist in pairs.items():
                keep = []
                for key, lcm, i, j in plist:
                    if (
                        _divides(h.exps, lcm)
                        and _lcm(eng.entries[i].exps, h.exps) != lcm
                        and _lcm(eng.entries[j].exps, h.exps) != lcm
                    ):
                        continue
                    keep.append((key, lcm, i, j))
                pairs[d] = keep
            # chain criterion among the new pairs
            lcms = [c[0] for c in new]
            survivors = []
            for a, (lcm, i, cop) in enumerate(new):
                if any(b != a and lcms[b] != lcm and _divides(lcms[b], lcm) for b in range(len(new))):
                    continue
                survivors.append((lcm, i, cop))
            # one pair per lcm; drop the lcm class entirely if any member is coprime
            by_lcm = {}
            for lcm, i, cop in survivors:
                by_lcm.setdefault(lcm, []).append((i, cop))
            new = []
            for lcm, members in by_lcm.items():
                if any(cop for _, cop in members):
                    continue
                new.append((lcm, members[0][0], False))
        for lcm, i, cop in new:
            if criteria and cop:
                continue
            key = codec.encode(lcm)
            pairs.setdefault(codec.degree(key), []).append((key, lcm, i, t))

    d = 0
    while True:
        pending = [k for k in pairs if pairs[k]] + list(inputs)
        if not pending:
            break
        d = min(pending)
        if truncation != "complete" and d > truncation:
            break
        candidates = []
        for key, lcm, i, j in sorted(pairs.pop(d, []), reverse=True):
            candidates.append(eng.spoly(eng.entries[i], eng.entries[j], key))
        candidates.extend(inputs.pop(d, []))
        fresh = []
        for f in candidates:
            r = eng.reduce(f, full=True)
            if r:
                e = eng.make_entry(eng.monic(r))
                eng.add(e)
                fresh.append(len(eng.entries) - 1)
        if fresh:
            _interreduce(eng, fresh)
            for t in fresh:
                update(t)
    elements = tuple(eng.to_poly(ring, g.terms) for g in eng.entries)
    order_key = lambda pair: (pair[1].degree, pair[1].lead)  # noqa: E731
    ranked = sorted(zip(elements, eng.entries), key=order_key)
    eng.entries = [e for _, e in ranked]
    eng._hits.clear()
    eng._misses.clear()
    return GroebnerBasis(ring, order, tuple(f for f, _ in ranked), truncation, extra, eng)


def _interreduce(eng, fresh):
    """Tail-reduce the elements found in one degree against everything.

    A tail monomial of a degree-d element is smaller than its lead, so the
    only possible reducers are elements with strictly smaller leads; the
    element itself and larger ones never interfere.
    """
    for t in fresh:
        g = eng.entries[t]
        if eng.p == 2:
            tail = eng.reduce(set(g.terms) - {g.lead}, full=True)
            g.terms = tail | {g.lead}
        else:
            tail = eng.reduce({k: c for k, c in g.terms.items() if k != g.lead}, full=True)
            tail[g.lead] = g.terms[g.lead]
            g.terms = tail


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``gb`` (zero iff f is in the ideal)."""
    if f.ring.signature != gb.ring.signature:
        raise PresentationMismatch("polynomial and basis live in different presentations")
    if not gb.is_complete and f and f.degree > gb.truncation:
        raise DegreeExceedsTruncation(f"degree {f.degree} exceeds truncation {gb.truncation}")
    eng = gb._engine
    return eng.to_poly(gb.ring, eng.reduce(eng.to_internal(f), full=True))


def leading_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    if not gb.is_complete:
        raise TruncatedBasis("the leading ideal needs a complete basis")
    return MonomialIdeal((g.exps for g in gb._engine.entries), gb.ring.weights)


def monomials_of_degree(weights, d):
    """Every exponent vector of weighted degree exactly d."""
    n = len(weights)
    out = []
    acc = [0] * n

    def rec(i, left):
        if i == n - 1:
            if left % weights[i] == 0:
                acc[i] = left // weights[i]
                out.append(tuple(acc))
                acc[i] = 0
            return
        w = weights[i]
        for e in range(left // w + 1):
            acc[i] = e
            rec(i + 1, left - e * w)
        acc[i] = 0

    if n == 0:
        return [()] if d == 0 else []
    if d < 0:
        return []
    rec(0, d)
    return out


def standard_monomials(gb: GroebnerBasis, degree: int) -> list:
    """Degree-d monomials outside the leading ideal, largest first.

    Their residues form a basis of the degree-d piece of the quotient.
    """
    if not gb.is_complete and degree > gb.truncation:
        raise DegreeExceedsTruncation(f"degree {degree} exceeds truncation {gb.truncation}")
    leads = [g.exps for g in gb._engine.entries if g.degree <= degree]
    weights = gb.ring.weights
    out = [m for m in monomials_of_degree(weights, degree) if not any(_divides(g, m) for g in leads)]
    out.sort(key=lambda m: gb.order.key(m, weights), reverse=True)
    return [Monomial(m, degree) for m in out]
