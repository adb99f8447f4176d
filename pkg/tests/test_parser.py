import pytest

from cohoc.algebra import make_presentation
from cohoc.errors import ExpressionSyntaxError, UnknownGenerator
from cohoc.parser import format_element, parse_element, tokenize


def test_zeta_tilde_elements(s9):
    z4 = parse_element("b_1_0^6+b_6_0", s9)
    assert z4.homogeneous_degree == 6
    assert len(z4) == 2
    z1 = parse_element("b_2_0^2+c_4_0", s9)
    assert z1.homogeneous_degree == 4


def test_unknown_generator():
    R = make_presentation(2, [("x", 1)], [])
    with pytest.raises(UnknownGenerator) as info:
        parse_element("x + q", R)
    assert info.value.name == "q"
    assert info.value.position == 4


@pytest.mark.parametrize(
    "text, position",
    [("x y", 2), ("x^", 2), ("x*^2", 2), ("2 3", 2), ("x+", 2), ("", 0), ("x - - y", 4)],
)
def test_syntax_errors_carry_position(text, position):
    R = make_presentation(2, [("x", 1), ("y", 1)], [])
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_element(text, R)
    assert info.value.position == position
    assert isinstance(info.value, SyntaxError)


def test_coefficients_reduce_mod_p():
    R = make_presentation(3, [("x", 2), ("y", 2)], [])
    assert parse_element("2*x^2 - x^2", R) == parse_element("x^2", R)
    assert parse_element("3*x", R).is_zero()
    assert parse_element("-x + y", R) == parse_element("2*x + y", R)
    assert parse_element("4", R) == R.one()


def test_star_optional_after_coefficient():
    R = make_presentation(5, [("x", 2)], [])
    assert parse_element("3x", R) == parse_element("3*x", R)


def test_repeated_factors_multiply(xy):
    assert parse_element("x*x*y^2*y", xy) == parse_element("x^2*y^3", xy)


def test_print_format(xy):
    assert format_element(xy.zero()) == "0"
    assert str(parse_element("y^2 + x^2 + x*y", xy)) == "x^2 + x*y + y^2"
    R = make_presentation(7, [("a", 2)], [])
    assert str(parse_element("3*a^2 + 1", R)) == "3*a^2 + 1"


def test_round_trip_s9(s9):
    for rel in s9.relations:
        assert parse_element(str(rel), s9) == rel


def test_tokenize():
    kinds = [t[0] for t in tokenize("2*b_1_0^3 - c")]
    assert kinds == ["num", "op", "ident", "op", "num", "op", "ident", "end"]
