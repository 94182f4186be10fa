import cmath
import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recdomain import (OutsideDomain, PoleAtX, abs_majorant_value, gf_value,
                       multinomial_coefficient, partial_sums, run_constant)

from conftest import radius_for_target


class TestGfValue:
    def test_fibonacci_point(self):
        assert gf_value((1, 1), 0.5) == 4.0

    def test_x_zero(self):
        assert gf_value((2j, -5, 17), 0.0) == 1.0

    def test_pole_detection(self):
        # 1 - 1.5 + 0.5 = 0: x = 1 is a characteristic root
        with pytest.raises(PoleAtX):
            gf_value((1.5, -0.5), 1.0)


class TestMultinomial:
    def test_compositions_of_four(self):
        # independent oracle: compositions of n into parts {1, 2} satisfy
        # comp(n) = comp(n-1) + comp(n-2), comp(0) = comp(1) = 1
        comp = [1, 1]
        for _ in range(5):
            comp.append(comp[-1] + comp[-2])
        assert comp[4] == 5
        assert multinomial_coefficient((1, 1), 4) == 5

    def test_single_power(self):
        assert multinomial_coefficient((2,), 3) == 8

    def test_empty_tuple(self):
        for k in range(1, 5):
            assert multinomial_coefficient((1,) * k, 0) == 1

    def test_matches_exact_engine_run(self):
        for k in (1, 2, 3):
            for alphas in itertools.product((-2, -1, 0, 1, 2), repeat=k):
                exact = run_constant([Fraction(a) for a in alphas], 10).values
                for n in range(11):
                    assert multinomial_coefficient(alphas, n) == exact[n]

    def test_fraction_inputs_stay_exact(self):
        alphas = (Fraction(1, 2), Fraction(-1, 3))
        exact = run_constant(alphas, 8).values
        for n in range(9):
            value = multinomial_coefficient(alphas, n)
            assert value == exact[n]
            assert isinstance(value, (int, Fraction))


class TestMajorant:
    def test_positive_coefficients_match_gf(self):
        assert abs_majorant_value((1, 1), 0.5) == 4.0

    def test_moduli_example(self):
        # 1 / (1 - 0.75 - 0.125) = 8
        assert abs(abs_majorant_value((1.5, -0.5), 0.5) - 8.0) <= 1e-12

    def test_all_zero(self):
        assert abs_majorant_value((0, 0, 0), 123.0) == 1.0

    def test_outside_domain(self):
        with pytest.raises(OutsideDomain):
            abs_majorant_value((1, 1), 0.7)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=2, allow_nan=False,
                                   allow_infinity=False), min_size=1, max_size=4),
       st.floats(min_value=0.0, max_value=0.2),
       st.floats(min_value=0.0, max_value=2 * cmath.pi))
def test_majorant_dominates_gf(alphas, r, theta):
    x = r * cmath.exp(1j * theta)
    total = sum(abs(a) * r ** (j + 1) for j, a in enumerate(alphas))
    if total >= 0.99:
        return
    assert abs(gf_value(alphas, x)) <= abs_majorant_value(alphas, x) + 1e-12


def test_series_matches_closed_form_on_random_specs():
    rng = np.random.default_rng(11)
    for _ in range(20):
        k = int(rng.integers(1, 6))
        alphas = [rng.uniform(0.1, 2.0) * cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))
                  for _ in range(k)]
        r = radius_for_target([abs(a) for a in alphas], 0.5)
        x = r * cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))
        series = partial_sums(run_constant(alphas, 200), x, 200)[-1]
        assert abs(series - gf_value(alphas, x)) <= 1e-8
