"""Exact Hilbert/Poincare series of graded quotients.

A series is kept as ``numerator / prod(1 - t^d)`` with an integer numerator.
Equality is decided by cross-multiplying, never numerically.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .groebner import MonomialIdeal, groebner_basis, leading_ideal


class IntegerPolynomial:
    """Polynomial in t with arbitrary-precision integer coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        c = list(coefficients)
        while c and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(int(x) for x in c)

    @classmethod
    def one_minus_t(cls, d: int) -> IntegerPolynomial:
        c = [0] * (d + 1)
        c[0] = 1
        c[d] -= 1
        return cls(c)

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> IntegerPolynomial:
        return cls([0] * d + [c])

    @classmethod
    def parse(cls, text: str) -> IntegerPolynomial:
        """Read e.g. ``t^{15} + 2 t^{13} - t + 1`` or ``1 + 2*t^2``."""
        s = text.replace("{", "").replace("}", "").replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        coeffs = Counter()
        pos = 0
        term = re.compile(r"([+-]?)(\d*)\*?(t(?:\^(\d+))?)?")
        while pos < len(s):
            m = term.match(s, pos)
            if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot read polynomial near {s[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                e = int(m.group(4)) if m.group(4) else 1
            else:
                e = 0
            coeffs[e] += sign * c
            pos = m.end()
            if pos < len(s) and s[pos] not in "+-":
                raise ValueError(f"cannot read polynomial near {s[pos:]!r}")
        top = max(coeffs) if coeffs else 0
        return cls([coeffs.get(i, 0) for i in range(top + 1)])

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else None

    def is_zero(self):
        return not self.coefficients

    def lowest_degree(self):
        for i, c in enumerate(self.coefficients):
            if c:
                return i
        return None

    def __getitem__(self, i):
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other):
        other = _as_ipoly(other)
        n = max(len(self), len(other))
        return IntegerPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntegerPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-_as_ipoly(other))

    def __rsub__(self, other):
        return _as_ipoly(other) - self

    def __mul__(self, other):
        other = _as_ipoly(other)
        if self.is_zero() or other.is_zero():
            return IntegerPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def times_one_minus_t(self, d: int) -> IntegerPolynomial:
        out = list(self.coefficients) + [0] * d
        for i, c in enumerate(self.coefficients):
            out[i + d] -= c
        return IntegerPolynomial(out)

    def divmod(self, divisor: IntegerPolynomial):
        """Euclidean division; the divisor's leading coefficient must be +-1."""
        divisor = _as_ipoly(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.coefficients[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coefficients)
        dd = divisor.degree
        q = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead
            if c:
                q[i - dd] = c
                for j, b in enumerate(divisor.coefficients):
                    rem[i - dd + j] -= c * b
        return IntegerPolynomial(q), IntegerPolynomial(rem)

    def divide_one_minus_t(self, d: int):
        """Exact quotient by (1 - t^d), or None if it does not divide."""
        c = list(self.coefficients)
        if not c:
            return IntegerPolynomial()
        n = len(c)
        q = [0] * n
        for i in range(n):
            q[i] = c[i] + (q[i - d] if i >= d else 0)
        if any(q[i] for i in range(max(n - d, 0), n)):
            return None
        return IntegerPolynomial(q[: max(n - d, 0)])

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntegerPolynomial([other])
        if not isinstance(other, IntegerPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "t" if i == 1 else f"t^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coefficients)})"


def _as_ipoly(x):
    if isinstance(x, IntegerPolynomial):
        return x
    if isinstance(x, int):
        return IntegerPolynomial([x])
    raise TypeError(f"cannot treat {x!r} as an integer polynomial")


def _prod_one_minus(degrees):
    out = IntegerPolynomial([1])
    for d in degrees:
        out = out.times_one_minus_t(d)
    return out


@dataclass(frozen=True)
class HilbertFunction:
    """Graded dimensions in degrees 0..B."""

    dimensions: tuple

    def __getitem__(self, d):
        return self.dimensions[d]

    def __len__(self):
        return len(self.dimensions)

    def __iter__(self):
        return iter(self.dimensions)

    @property
    def bound(self):
        return len(self.dimensions) - 1


class HilbertSeries:
    """``numerator / prod_{d in denominator_degrees} (1 - t^d)`` in canonical form."""

    __slots__ = ("numerator", "denominator_degrees")
    __hash__ = None

    def __init__(self, numerator, denominator_degrees=(), canonical=True):
        num = _as_ipoly(numerator) if not isinstance(numerator, (list, tuple)) else IntegerPolynomial(numerator)
        dens = sorted(int(d) for d in denominator_degrees)
        if any(d < 1 for d in dens):
            raise ValueError("denominator degrees must be positive")
        if canonical:
            num, dens = _cancel(num, dens)
        self.numerator = num
        self.denominator_degrees = tuple(dens)

    @property
    def denominator(self) -> IntegerPolynomial:
        return _prod_one_minus(self.denominator_degrees)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.equals_rational(other.numerator, other.denominator)

    def equals_rational(self, numerator, denominator) -> bool:
        """Exact equality with ``numerator/denominator`` (any integer polynomials)."""
        return self.numerator * _as_ipoly(denominator) == _as_ipoly(numerator) * self.denominator

    def _combine(self, other, sign):
        mine = Counter(self.denominator_degrees)
        theirs = Counter(other.denominator_degrees)
        common = mine | theirs
        a = self.numerator * _prod_one_minus((common - mine).elements())
        b = other.numerator * _prod_one_minus((common - theirs).elements())
        return HilbertSeries(a + b if sign > 0 else a - b, common.elements())

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def times(self, poly) -> HilbertSeries:
        return HilbertSeries(self.numerator * _as_ipoly(poly), self.denominator_degrees)

    def times_one_minus_t(self, d: int) -> HilbertSeries:
        return HilbertSeries(self.numerator.times_one_minus_t(d), self.denominator_degrees)

    def shift(self, d: int) -> HilbertSeries:
        return self.times(IntegerPolynomial.monomial(d))

    def is_polynomial(self) -> bool:
        return not self.denominator_degrees

    def as_polynomial(self):
        return self.numerator if self.is_polynomial() else None

    def expand(self, bound: int) -> HilbertFunction:
        return expand(self, bound)

    def __str__(self):
        num = str(self.numerator)
        if not self.denominator_degrees:
            return num
        dens = "".join("(1-t)" if d == 1 else f"(1-t^{d})" for d in self.denominator_degrees)
        return f"({num}) / ({dens})"

    def __repr__(self):
        return f"HilbertSeries({str(self)!r})"


def _cancel(num, dens):
    dens = list(dens)
    changed = True
    while changed and not num.is_zero():
        changed = False
        for d in sorted(set(dens), reverse=True):
            q = num.divide_one_minus_t(d)
            if q is not None:
                num = q
                dens.remove(d)
                changed = True
                break
    if num.is_zero():
        dens = []
    return num, sorted(dens)


@dataclass(frozen=True)
class NotPolynomial:
    """Witness that a product of a series with (1 - t^d) factors is no polynomial.

    ``remainder`` is the non-zero remainder of the numerator product modulo
    the series denominator; ``lowest_degree`` is its lowest non-zero degree.
    """

    remainder: IntegerPolynomial
    denominator: IntegerPolynomial
    lowest_degree: int

    def __bool__(self):
        return False


def expand(series: HilbertSeries, bound: int) -> HilbertFunction:
    """Power-series coefficients of ``series`` in degrees 0..bound."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    c = [series.numerator[i] for i in range(bound + 1)]
    for d in series.denominator_degrees:
        for i in range(d, bound + 1):
            c[i] += c[i - d]
    return HilbertFunction(tuple(c))


def clear_parameters(series: HilbertSeries, degrees):
    """``series * prod(1 - t^d)`` as an IntegerPolynomial, or a NotPolynomial witness."""
    top = _prod_one_minus(degrees) * series.numerator
    q, r = top.divmod(series.denominator)
    if r.is_zero():
        return q
    return NotPolynomial(r, series.denominator, r.lowest_degree())


def _numerator(gens, weights, memo):
    key = gens
    if key in memo:
        return memo[key]
    if not gens:
        return IntegerPolynomial([1])
    n = len(weights)
    count = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                count[i] += 1
    isolated = [g for g in gens if all(count[i] == 1 for i, e in enumerate(g) if e)]
    if isolated:
        rest = tuple(g for g in gens if g not in isolated)
        out = _numerator(rest, weights, memo)
        for g in isolated:
            out = out.times_one_minus_t(sum(e * w for e, w in zip(g, weights)))
        memo[key] = out
        return out
    best = max(range(n), key=lambda i: (count[i], -i))
    exps = sorted(g[best] for g in gens if g[best] and any(e for j, e in enumerate(g) if j != best))
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if i == best else 0 for i in range(n))
    plus = _minimalize(gens + (pivot,))
    colon = _minimalize(tuple(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens))
    out = _numerator(plus, weights, memo) + IntegerPolynomial.monomial(e * weights[best]) * _numerator(colon, weights, memo)
    memo[key] = out
    return out


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    kept = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


def monomial_ideal_series(ideal, gens) -> HilbertSeries:
    """Series of the free commutative ring on ``gens`` modulo a monomial ideal.

    ``gens`` is a list of GeneratorInfo or of positive degrees.
    """
    weights = tuple(g if isinstance(g, int) else g.degree for g in gens)
    generators = ideal.generators if isinstance(ideal, MonomialIdeal) else tuple(ideal)
    num = _numerator(_minimalize(tuple(tuple(g) for g in generators)), weights, {})
    return HilbertSeries(num, weights)


def poincare_series(ring, order=None, extra=()) -> HilbertSeries:
    """P(R/<extra>; t) via the leading ideal of a Groebner basis."""
    gb = groebner_basis(ring, extra, order)
    return monomial_ideal_series(leading_ideal(gb), ring.generators)


def hilbert_function(ring, bound, order=None, extra=()) -> HilbertFunction:
    return expand(poincare_series(ring, order, extra), bound)
