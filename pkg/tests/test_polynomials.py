import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recdomain import CoefficientPole, Polynomial, RationalIndexFunction
from recdomain.poly import polynomial_roots, real_roots


def test_trailing_zeros_are_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree() == 1
    assert p.coeffs == (1 + 0j, 2 + 0j)
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial().degree() == -1


def test_evaluation_scalar_and_array():
    p = Polynomial([1, -2, 3])  # 1 - 2x + 3x^2
    assert p(2) == 1 - 4 + 12
    xs = np.array([0.0, 1.0, 2.0])
    assert np.allclose(p(xs), [1, 2, 9])
    assert Polynomial()(5.0) == 0


def test_arithmetic_and_derivative():
    p = Polynomial([1, 1])
    q = Polynomial([-1, 1])
    assert (p * q).coeffs == (-1 + 0j, 0j, 1 + 0j)  # x^2 - 1
    assert (p + q).coeffs == (0j, 2 + 0j)
    assert Polynomial([3, 2, 5]).derivative().coeffs == (2 + 0j, 10 + 0j)
    assert Polynomial([7]).derivative().is_zero()


def test_falling_factorial_matches_products():
    for i in range(5):
        p = Polynomial.falling(i)
        for t in (0.0, 1.5, -2.0, 3 + 1j):
            expected = 1
            for m in range(i):
                expected *= t - m
            assert abs(p(t) - expected) <= 1e-12 * (1 + abs(expected))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False,
                                   allow_infinity=False), min_size=1, max_size=5),
       st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False))
def test_shifted_is_composition(coeffs, offset, x):
    p = Polynomial(coeffs)
    shifted = p.shifted(offset)
    direct = p(x + offset)
    assert abs(shifted(x) - direct) <= 1e-9 * (1 + abs(direct))


def test_conjugate_coefficients_give_real_square():
    p = Polynomial([1 + 2j, -3j, 0.5])
    square = p * p.conjugate_coefficients()
    for t in np.linspace(-4, 4, 9):
        val = square(t)
        assert abs(val.imag) <= 1e-12 * (1 + abs(val))
        assert val.real >= -1e-12


def test_roots_of_simple_quadratic():
    roots = polynomial_roots(Polynomial([2, -3, 1]))  # (x-1)(x-2)
    assert abs(roots[0] - 1) < 1e-12 and abs(roots[1] - 2) < 1e-12
    assert real_roots(Polynomial([1, 0, 1])) == []  # x^2 + 1


def test_rational_function_rejects_integer_pole():
    with pytest.raises(CoefficientPole) as exc:
        RationalIndexFunction(Polynomial([1]), Polynomial([-3, 1]), n_min=0)
    assert exc.value.index == 3
    # valid once the start index clears the pole
    f = RationalIndexFunction(Polynomial([1]), Polynomial([-3, 1]), n_min=4)
    assert f(4) == 1.0
    with pytest.raises(CoefficientPole):
        f(3)


def test_rational_helpers():
    c = RationalIndexFunction.constant(2.5)
    assert c(17) == 2.5
    z = RationalIndexFunction.zero()
    assert z(0) == 0 and z.numerator.is_zero()
