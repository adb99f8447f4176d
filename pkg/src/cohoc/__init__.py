"""Exact commutative algebra over prime fields for completeness tests of
presented modular cohomology rings."""

from .algebra import (
    FieldScalar,
    GeneratorInfo,
    Monomial,
    Polynomial,
    RingPresentation,
    make_presentation,
    poly_add,
    poly_mul,
)
from .criteria import (
    Bundle,
    CriterionReport,
    benson_threshold,
    compare_all,
    king_gen,
    king_rel,
    symonds_test,
)
from .documents import load_document, save_document
from .groebner import (
    DEGLEX,
    DEGREVLEX,
    GroebnerBasis,
    MonomialIdeal,
    MonomialOrder,
    groebner_basis,
    leading_ideal,
    normal_form,
    standard_monomials,
)
from .hilbert import (
    HilbertFunction,
    HilbertSeries,
    IntegerPolynomial,
    NotPolynomial,
    clear_parameters,
    expand,
    monomial_ideal_series,
    poincare_series,
)
from .morphism import RingMorphism, apply, gendeg, identity, make_morphism, validate_morphism
from .parameters import (
    ParameterSet,
    filter_regular_report,
    is_hsop,
    is_regular_sequence,
    krull_dimension,
    pars_existence,
    replacement_search,
)
from .parser import parse_element

__all__ = [name for name in dir() if not name.startswith("_")]
