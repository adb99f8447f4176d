import pytest

from cohoc.algebra import GeneratorInfo, make_presentation
from cohoc.groebner import MonomialIdeal, groebner_basis, standard_monomials
from cohoc.hilbert import (
    HilbertSeries,
    IntegerPolynomial,
    NotPolynomial,
    clear_parameters,
    expand,
    monomial_ideal_series,
    poincare_series,
)

P = IntegerPolynomial.parse
GENS_11 = [GeneratorInfo("x", 1), GeneratorInfo("y", 1)]


def test_free_ring_series():
    s = monomial_ideal_series(MonomialIdeal([]), GENS_11)
    assert s == HilbertSeries(IntegerPolynomial([1]), (1, 1))


def test_xy_series():
    s = monomial_ideal_series(MonomialIdeal([(1, 1)]), GENS_11)
    assert s.equals_rational(P("1 - t^2"), P("1 - 2*t + t^2"))
    assert list(s.expand(5).dimensions) == [1, 2, 2, 2, 2, 2]


def test_squares_series():
    s = monomial_ideal_series(MonomialIdeal([(2, 0), (0, 2)]), GENS_11)
    assert s.is_polynomial()
    assert s.as_polynomial() == P("1 + 2*t + t^2")


def test_truncated_polynomial_ring():
    R = make_presentation(2, [("x", 1)], ["x^3"])
    assert poincare_series(R).as_polynomial() == P("1 + t + t^2")


def test_expand():
    assert list(expand(HilbertSeries(IntegerPolynomial([1]), (1,)), 3).dimensions) == [1, 1, 1, 1]
    assert list(expand(HilbertSeries(P("1 + t"), (1,)), 3).dimensions) == [1, 2, 2, 2]


def test_expand_matches_standard_monomials(s9):
    series = poincare_series(s9)
    gb = groebner_basis(s9)
    dims = expand(series, 12).dimensions
    assert list(dims) == [len(standard_monomials(gb, d)) for d in range(13)]


def test_clear_parameters():
    free = HilbertSeries(IntegerPolynomial([1]), (1,))
    assert clear_parameters(free, (1,)) == IntegerPolynomial([1])
    assert clear_parameters(free, (2,)) == P("1 + t")
    q = clear_parameters(HilbertSeries(IntegerPolynomial([1]), (1, 1)), (1,))
    assert isinstance(q, NotPolynomial) and not q


def test_print_format():
    s = HilbertSeries(P("1 + 2*t^2 + t^3"), (1, 2))
    assert str(s) == "(1 + 2*t^2 + t^3) / ((1-t)(1-t^2))"
    assert str(P("t^{15} + 2 t^{13} - t + 1")) == "1 - t + 2*t^13 + t^15"


def test_canonical_cancellation():
    s = HilbertSeries(P("1 - t^2"), (1, 1))
    assert s.denominator_degrees == (1,)
    assert str(s) == "(1 + t) / ((1-t))"
    assert s == HilbertSeries(P("1 + t"), (1,))


def test_series_arithmetic():
    a = HilbertSeries(IntegerPolynomial([1]), (1,))
    b = HilbertSeries(IntegerPolynomial([1]), (2,))
    assert (a - a).numerator.is_zero()
    assert list((a + b).expand(4).dimensions) == [2, 1, 2, 1, 2]
    assert a.times_one_minus_t(1).as_polynomial() == IntegerPolynomial([1])
    assert list(a.shift(2).expand(3).dimensions) == [0, 0, 1, 1]


def test_integer_polynomial_division():
    f = P("1 - t^6")
    assert f.divide_one_minus_t(3) == P("1 + t^3")
    assert f.divide_one_minus_t(4) is None
    q, r = P("t^3 + 2*t + 1").divmod(P("t + 1"))
    assert q * P("t + 1") + r == P("t^3 + 2*t + 1")
    assert P("2*t^2 + 1")(3) == 19


def test_s9_series_has_generator_denominator(s9):
    s = poincare_series(s9)
    assert s.numerator(1) > 0
    assert set(s.denominator_degrees) <= {g.degree for g in s9.generators}


def test_order_independent_series(s9):
    assert poincare_series(s9, "deglex") == poincare_series(s9)


@pytest.mark.parametrize("n", [0, 1, 5])
def test_monomial_ideal_series_power_of_single_variable(n):
    gens = [GeneratorInfo("x", 2)]
    s = monomial_ideal_series(MonomialIdeal([(n + 1,)]), gens)
    assert s.as_polynomial() == IntegerPolynomial([1 if d % 2 == 0 else 0 for d in range(2 * n + 1)])
