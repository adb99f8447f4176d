import pytest

from cohoc.algebra import FieldScalar, GeneratorInfo, Monomial, make_presentation, poly_add, poly_mul
from cohoc.errors import (
    DuplicateGenerator,
    InhomogeneousRelation,
    InvalidGenerator,
    MonomialOverflow,
    NonPrimeCharacteristic,
    OddGeneratorAtOddPrime,
    PresentationMismatch,
    RelationDegreeTooLow,
)


def test_free_presentation():
    R = make_presentation(2, [("x", 1)], [])
    assert R.names == ("x",)
    assert R.relations == ()


def test_s9_presentation(s9):
    assert [g.degree for g in s9.generators] == [1, 2, 3, 3, 4, 5, 6, 7]
    assert s9.names[0] == "b_1_0" and s9.names[-1] == "b_7_17"
    assert len(s9.relations) == 10
    assert all(r.is_homogeneous() for r in s9.relations)


def test_odd_generator_at_odd_prime():
    with pytest.raises(OddGeneratorAtOddPrime):
        make_presentation(3, [("x", 1)], [])
    make_presentation(3, [("x", 2)], [])


@pytest.mark.parametrize("p", [0, 1, 4, 9, 15])
def test_non_prime(p):
    with pytest.raises(NonPrimeCharacteristic):
        make_presentation(p, [("x", 2)], [])


def test_presentation_validation():
    with pytest.raises(DuplicateGenerator):
        make_presentation(2, [("x", 1), ("x", 2)], [])
    with pytest.raises(InhomogeneousRelation):
        make_presentation(2, [("x", 1), ("y", 2)], ["x^2 + x"])
    with pytest.raises(RelationDegreeTooLow):
        make_presentation(2, [("x", 1), ("y", 1)], ["x + y"])
    with pytest.raises(InvalidGenerator):
        make_presentation(2, [("x", 0)], [])
    with pytest.raises(InvalidGenerator):
        make_presentation(2, [("2x", 1)], [])


def test_generator_info_and_monomial():
    g = GeneratorInfo("b_1_0", 1)
    assert g.degree == 1
    m = Monomial((2, 1), 4)
    assert m.divides(Monomial((3, 1), 5))
    assert not m.divides(Monomial((1, 3), 5))
    assert m.support() == (0, 1)


def test_exponent_overflow():
    R = make_presentation(2, [("x", 1)], [])
    x = R.gen("x")
    big = x ** (2**31)
    with pytest.raises(MonomialOverflow):
        big * big * x


def test_field_scalar():
    a = FieldScalar(3, 7)
    assert int(a + 5) == 1
    assert int(a * a) == 2
    assert int(a.inverse()) == 5
    assert int(a / 3) == 1
    assert int(-a) == 4
    with pytest.raises(ZeroDivisionError):
        FieldScalar(0, 7).inverse()
    with pytest.raises(NonPrimeCharacteristic):
        FieldScalar(1, 8)


def test_characteristic_two_arithmetic(xy):
    x, y = xy.gens()
    assert not poly_add(x, x)
    assert poly_mul(x + y, x + y) == x**2 + y**2
    assert poly_mul(x + y, x) == xy.parse("x^2 + x*y")


def test_homogeneous_product_degree(xy):
    f = xy.parse("x^2 + x*y")
    g = xy.parse("y^3")
    assert (f * g).homogeneous_degree == 5
    assert (f + g).homogeneous_degree is None


def test_odd_characteristic_coefficients():
    R = make_presentation(5, [("u", 2), ("v", 4)], [])
    u, v = R.gens()
    f = u.scale(3) + v
    assert (f + f).coefficient((1, 0)) == FieldScalar(1, 5)
    assert (f - f).is_zero()
    assert (u * u).scale(5).is_zero()


def test_mismatched_rings(xy):
    other = make_presentation(2, [("x", 1), ("y", 1)], ["x*y"])
    with pytest.raises(PresentationMismatch):
        poly_add(xy.gen("x"), other.gen("x"))
