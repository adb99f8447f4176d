"""Graded ring homomorphisms given on generators, and the generation degree."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Polynomial, RingPresentation
from .errors import DegreeMismatch, PresentationMismatch, UnvalidatedMorphism
from .groebner import groebner_basis, leading_ideal, normal_form, standard_monomials
from .hilbert import expand, monomial_ideal_series


@dataclass(frozen=True)
class RingMorphism:
    """Degree-preserving map sending the i-th source generator to ``images[i]``."""

    source: RingPresentation
    target: RingPresentation
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.source.ngens:
            raise DegreeMismatch(f"expected {self.source.ngens} images, got {len(self.images)}")
        imgs = []
        for g, f in zip(self.source.generators, self.images):
            if isinstance(f, str):
                f = self.target.parse(f)
            elif f.ring.signature != self.target.signature:
                raise PresentationMismatch(f"image of {g.name} is not in the target")
            elif f.ring is not self.target:
                f = f.rebind(self.target)
            if f and f.homogeneous_degree != g.degree:
                raise DegreeMismatch(f"image of {g.name} (degree {g.degree}) is {f}, not of that degree")
            imgs.append(f)
        object.__setattr__(self, "images", tuple(imgs))

    def image(self, name: str) -> Polynomial:
        return self.images[self.source.index(name)]

    def substitute(self, f: Polynomial) -> Polynomial:
        """Plain substitution, without reducing in the target."""
        if f.ring.signature != self.source.signature:
            raise PresentationMismatch("element is not in the source")
        powers = {}

        def power(i, e):
            if (i, e) not in powers:
                powers[i, e] = self.images[i] ** e
            return powers[i, e]

        out = self.target.zero()
        for exps, c in f.terms.items():
            term = self.target.constant(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out


def make_morphism(source, target, images) -> RingMorphism:
    """``images`` is a list in generator order or a dict keyed by generator name."""
    if isinstance(images, dict):
        missing = [n for n in source.names if n not in images]
        if missing:
            raise DegreeMismatch(f"no image given for {', '.join(missing)}")
        images = [images[n] for n in source.names]
    return RingMorphism(source, target, tuple(images))


def identity(ring: RingPresentation) -> RingMorphism:
    return RingMorphism(ring, ring, tuple(ring.gens()))


def apply(m: RingMorphism, f: Polynomial) -> Polynomial:
    """Image of ``f`` in normal form with respect to the target relations."""
    return normal_form(m.substitute(f), groebner_basis(m.target))


@dataclass(frozen=True)
class MorphismCheck:
    value: bool
    failing_index: int | None = None
    failing_relation: Polynomial | None = None
    remainder: Polynomial | None = None

    def __bool__(self):
        return self.value


def validate_morphism(m: RingMorphism) -> MorphismCheck:
    """Every source relation must map to zero in the target (first failure, 1-based)."""
    for k, rel in enumerate(m.source.relations, start=1):
        r = apply(m, rel)
        if r:
            return MorphismCheck(False, k, rel, r)
    return MorphismCheck(True)


@dataclass(frozen=True)
class GendegReport:
    """Generation degree of the target as a module over the image.

    ``hilbert_function`` is that of target/<images>; when the quotient is
    finite it runs up to the top degree, which is the generation degree.
    """

    gendeg: float
    hilbert_function: tuple
    generator_degrees: tuple
    offending_generator: str | None = None

    @property
    def finite(self) -> bool:
        return self.gendeg != math.inf


def gendeg(m: RingMorphism, bound: int = 40) -> GendegReport:
    """Smallest d with target = Im(m) * target^{<= d}, by graded Nakayama.

    This is the top non-zero degree of target/<positive-degree images>;
    infinite if that quotient is infinite-dimensional, in which case the
    Hilbert function is reported up to ``bound``.
    """
    check = validate_morphism(m)
    if not check:
        raise UnvalidatedMorphism(f"relation {check.failing_index} does not map to zero")
    images = tuple(f for f in m.images if f)
    gb = groebner_basis(m.target, images)
    ideal = leading_ideal(gb)
    series = monomial_ideal_series(ideal, m.target.generators)
    if not series.is_polynomial():
        offending = next(
            name
            for i, name in enumerate(m.target.names)
            if not any(g[i] and sum(g) == g[i] for g in ideal)
        )
        return GendegReport(math.inf, expand(series, bound).dimensions, (), offending)
    hf = tuple(series.numerator.coefficients)
    top = len(hf) - 1
    degrees = tuple(d for d in range(top + 1) for _ in standard_monomials(gb, d))
    return GendegReport(top, hf, degrees)
