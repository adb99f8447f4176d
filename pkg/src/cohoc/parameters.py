"""Krull dimension, systems of parameters and (filter-)regular sequences.

Every test here is decided through exact Hilbert series.  For a homogeneous
element z of degree d acting on a graded ring A there is an exact sequence

    0 -> ann(z)(-d) -> A(-d) -> A -> A/z -> 0

so ``P(A/z) - (1 - t^d) P(A) = t^d P(ann z)``.  The element is regular iff
this difference vanishes and filter-regular iff it is a polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Polynomial, RingPresentation
from .errors import DimensionMismatch, InhomogeneousElement, PresentationMismatch, SearchSpaceTooLarge
from .groebner import groebner_basis, leading_ideal, standard_monomials
from .hilbert import HilbertSeries, IntegerPolynomial, NotPolynomial, clear_parameters, monomial_ideal_series


@dataclass(frozen=True)
class ParameterSet:
    ring: RingPresentation
    elements: tuple

    def __post_init__(self):
        elems = []
        for f in self.elements:
            if isinstance(f, str):
                f = self.ring.parse(f)
            elif f.ring.signature != self.ring.signature:
                raise PresentationMismatch("parameter from a different presentation")
            elif f.ring is not self.ring:
                f = f.rebind(self.ring)
            d = f.homogeneous_degree
            if d is None or d < 1:
                raise InhomogeneousElement(f"parameter {f} must be homogeneous of positive degree")
            elems.append(f)
        object.__setattr__(self, "elements", tuple(elems))

    @property
    def degrees(self) -> tuple:
        return tuple(f.homogeneous_degree for f in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def replace(self, position: int, element) -> ParameterSet:
        """Copy with the 1-based ``position`` replaced by ``element``."""
        elems = list(self.elements)
        elems[position - 1] = element
        return ParameterSet(self.ring, tuple(elems))

    def prefix(self, k: int) -> tuple:
        return self.elements[:k]


def as_parameters(ring, params) -> ParameterSet:
    if isinstance(params, ParameterSet):
        if params.ring.signature != ring.signature:
            raise PresentationMismatch("parameters belong to another presentation")
        return params
    return ParameterSet(ring, tuple(params))


def _independent(supports, n):
    """Largest set of variables containing no support mask (DFS with bound)."""
    best = 0

    def rec(i, chosen, size):
        nonlocal best
        if size + (n - i) <= best:
            return
        if i == n:
            best = size
            return
        bit = 1 << i
        with_i = chosen | bit
        if not any(s & with_i == s for s in supports):
            rec(i + 1, with_i, size + 1)
        rec(i + 1, chosen, size)

    rec(0, 0, 0)
    return best


def krull_dimension(ring: RingPresentation, extra=(), order=None) -> int:
    """Krull dimension of R/<extra>, read off the leading monomial ideal."""
    ideal = leading_ideal(groebner_basis(ring, extra, order))
    supports = set()
    for g in ideal:
        mask = 0
        for i, e in enumerate(g):
            if e:
                mask |= 1 << i
        supports.add(mask)
    return _independent(supports, ring.ngens)


def quotient_series(ring, elements=(), order=None) -> HilbertSeries:
    gb = groebner_basis(ring, tuple(elements), order)
    return monomial_ideal_series(leading_ideal(gb), ring.generators)


def _missing_pure_power(ring, elements):
    """Name of a generator with no pure power in the leading ideal, if any."""
    ideal = leading_ideal(groebner_basis(ring, tuple(elements)))
    for i, name in enumerate(ring.names):
        if not any(g[i] and sum(g) == g[i] for g in ideal):
            return name
    return None


@dataclass(frozen=True)
class HsopResult:
    value: bool
    krull_dimension: int
    size: int
    quotient_top_degree: int | None = None
    offending_generator: str | None = None

    def __bool__(self):
        return self.value


def is_hsop(ring: RingPresentation, params) -> HsopResult:
    """Do ``params`` form a homogeneous system of parameters of ``ring``?

    The witness is the top degree of the finite quotient, or a generator
    that survives to infinitely many degrees.
    """
    params = as_parameters(ring, params)
    dim = krull_dimension(ring)
    offending = _missing_pure_power(ring, params.elements)
    if offending is not None:
        return HsopResult(False, dim, len(params), None, offending)
    top = quotient_series(ring, params.elements).numerator.degree
    return HsopResult(len(params) == dim, dim, len(params), top, None)


@dataclass(frozen=True)
class RegularityResult:
    value: bool
    failing_index: int | None = None
    difference: HilbertSeries | None = None

    def __bool__(self):
        return self.value


def _step_differences(ring, params):
    previous = quotient_series(ring)
    for k, (f, d) in enumerate(zip(params.elements, params.degrees), start=1):
        current = quotient_series(ring, params.prefix(k))
        yield k, d, current - previous.times_one_minus_t(d)
        previous = current


def is_regular_sequence(ring: RingPresentation, seq) -> RegularityResult:
    """Exact test via P(R_k) = (1 - t^d_k) P(R_{k-1}) at every step (1-based index)."""
    seq = as_parameters(ring, seq)
    for k, _, diff in _step_differences(ring, seq):
        if not diff.numerator.is_zero():
            return RegularityResult(False, k, diff)
    return RegularityResult(True)


@dataclass(frozen=True)
class FilterStep:
    index: int
    degree: int
    filter_regular: bool
    annihilator: object
    top_degree: int | None


@dataclass(frozen=True)
class FilterRegularityReport:
    steps: tuple
    hsop: HsopResult

    @property
    def filter_regular(self) -> bool:
        return bool(self.hsop) and all(s.filter_regular for s in self.steps)

    @property
    def first_failure(self):
        for s in self.steps:
            if not s.filter_regular:
                return s.index
        return None

    @property
    def top_degrees(self) -> tuple:
        return tuple(s.top_degree for s in self.steps)

    def __bool__(self):
        return self.filter_regular


def filter_regular_report(ring: RingPresentation, seq) -> FilterRegularityReport:
    """Per-step filter-regularity with annihilator series (filter degree data)."""
    seq = as_parameters(ring, seq)
    steps = []
    for k, d, diff in _step_differences(ring, seq):
        if diff.is_polynomial():
            num = diff.numerator
            low = num.lowest_degree()
            assert low is None or low >= d, "annihilator difference below degree d"
            ann = IntegerPolynomial(num.coefficients[d:])
            steps.append(FilterStep(k, d, True, ann, ann.degree))
        else:
            steps.append(FilterStep(k, d, False, clear_parameters(diff, ()), None))
    return FilterRegularityReport(tuple(steps), is_hsop(ring, seq))


@dataclass(frozen=True)
class ExistenceCertificate:
    fixed_degrees: tuple
    degree: int
    count: int
    exists: bool
    quotient_top_degree: int | None = None

    @property
    def verdict(self) -> str:
        return "exists" if self.exists else "unknown"

    @property
    def parameter_degrees(self) -> tuple:
        """Degrees of the hsop (over a finite extension) whose existence is certified."""
        return self.fixed_degrees + (self.degree,) * self.count

    def __bool__(self):
        return self.exists


def graded_piece(ring: RingPresentation, degree: int) -> list:
    """Basis of R^(degree) as polynomials (standard monomials)."""
    gb = groebner_basis(ring)
    return [ring.from_monomial(m.exponents) for m in standard_monomials(gb, degree)]


def pars_existence(ring: RingPresentation, fixed, degree: int) -> ExistenceCertificate:
    """Is R/<fixed, R^(degree)> finite-dimensional?

    If so, some finite extension K of F_p carries an hsop of R_K made of
    ``fixed`` plus dim R - |fixed| elements of the given degree.  K is never
    constructed.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    fixed = as_parameters(ring, fixed)
    dim = krull_dimension(ring)
    rest = krull_dimension(ring, fixed.elements)
    if rest != dim - len(fixed):
        raise DimensionMismatch(
            f"R/<fixed> has dimension {rest}, expected dim R - |fixed| = {dim - len(fixed)}"
        )
    elements = fixed.elements + tuple(graded_piece(ring, degree))
    series = quotient_series(ring, elements)
    exists = series.is_polynomial()
    top = series.numerator.degree if exists else None
    return ExistenceCertificate(fixed.degrees, degree, rest, exists, top)


def candidate_count(ring, max_degree) -> int:
    p = ring.characteristic
    return sum(p ** len(graded_piece(ring, e)) - 1 for e in range(1, max_degree + 1))


def homogeneous_elements(ring, degree):
    """All non-zero elements of R^(degree), by lexicographic coefficient vector."""
    basis = graded_piece(ring, degree)
    p = ring.characteristic
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if any(coeffs):
            f = ring.zero()
            for c, b in zip(coeffs, basis):
                if c:
                    f = f + b.scale(c)
            yield f


def replacement_search(ring: RingPresentation, params, slot: int, max_degree: int, budget: int = 2**32) -> list:
    """Every element of degree <= max_degree that can replace the parameter at
    1-based ``slot`` while keeping an hsop.  An empty list means none exists
    over F_p.
    """
    params = as_parameters(ring, params)
    if not 1 <= slot <= len(params):
        raise IndexError(f"slot {slot} out of range 1..{len(params)}")
    total = candidate_count(ring, max_degree)
    if total > budget:
        raise SearchSpaceTooLarge(f"{total} candidates exceed the budget of {budget}")
    found = []
    seen = {}
    p = ring.characteristic
    for e in range(1, max_degree + 1):
        for f in homogeneous_elements(ring, e):
            lead = f.items()[0][1]
            monic = f.scale(pow(lead, -1, p)) if p != 2 else f
            if monic not in seen:
                seen[monic] = bool(is_hsop(ring, params.replace(slot, monic)))
            if seen[monic]:
                found.append(f)
    return found
