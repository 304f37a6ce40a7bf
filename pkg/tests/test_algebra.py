from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monosemi.algebra import (
    DensePolynomial,
    as_rational,
    interpolate,
    rational_from_str,
    rational_to_str,
)

F = Fraction

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)


def test_eval_identity_polynomial():
    p = DensePolynomial.identity()
    assert p(5) == 5


def test_eval_moment_polynomial_values():
    # (3m^2 + m)/2 at m=4 and (5m^3 + 4m^2 + m)/2 at m=3
    p2 = DensePolynomial([0, F(1, 2), F(3, 2)])
    assert p2(4) == 26
    p3 = DensePolynomial([0, F(1, 2), 2, F(5, 2)])
    assert p3(3) == 87


def test_interpolate_constant_and_linear():
    assert interpolate([(0, 1), (1, 1)]) == DensePolynomial.constant(1)
    assert interpolate([(1, 1), (2, 2), (3, 3)]) == DensePolynomial.identity()


def test_interpolate_quadratic_moment_data():
    # degree drops out of the data: (0,0),(1,2),(2,7),(3,15),(4,26) -> (3m^2+m)/2
    p = interpolate([(0, 0), (1, 2), (2, 7), (3, 15), (4, 26)])
    assert p == DensePolynomial([0, F(1, 2), F(3, 2)])


def test_interpolate_rejects_duplicate_abscissa():
    with pytest.raises(ValueError, match="duplicate"):
        interpolate([(1, 1), (1, 2)])


def test_poly_arith_golden():
    x = DensePolynomial.identity()
    assert x * x == DensePolynomial([0, 0, 1])
    # (x^2 - 2) x - (3/2) x = x^3 - (7/2) x
    lhs = DensePolynomial([-2, 0, 1]) * x - F(3, 2) * x
    assert lhs == DensePolynomial([0, F(-7, 2), 0, 1])
    p = DensePolynomial([1, 2, 3])
    assert p + DensePolynomial.zero() == p


def test_zero_polynomial_shape():
    z = DensePolynomial([0, 0, 0])
    assert z.is_zero()
    assert z.degree == 0
    assert z.coeffs == (F(0),)


def test_leading_coefficient_nonzero_invariant():
    p = DensePolynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert p.leading_coefficient() == 2


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        DensePolynomial([0.5])
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_rational_wire_format():
    assert rational_to_str(F(29, 10)) == "29/10"
    assert rational_to_str(F(4, 2)) == "2"
    assert rational_to_str(-3) == "-3"
    assert rational_from_str("29/10") == F(29, 10)
    assert rational_from_str("-7") == -7


@given(rationals, rationals, rationals)
def test_rational_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    # reduction to lowest terms is idempotent
    again = F(a.numerator, a.denominator)
    assert (again.numerator, again.denominator) == (a.numerator, a.denominator)


@given(st.lists(rationals, min_size=1, max_size=6), st.lists(rationals, min_size=1, max_size=6))
def test_poly_mul_degree_and_commutativity(cs, ds):
    p, q = DensePolynomial(cs), DensePolynomial(ds)
    assert p * q == q * p
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(
    st.lists(
        st.tuples(st.integers(min_value=-20, max_value=20), rationals),
        min_size=1,
        max_size=6,
        unique_by=lambda t: t[0],
    )
)
def test_interpolate_reproduces_inputs_exactly(points):
    p = interpolate(points)
    assert p.degree <= len(points) - 1
    for x, y in points:
        assert p(x) == y
