"""Numeric oracle tests for the fractal special functions.

Oracles: fixed-order brute-force partial sums computed in this file, the
classical libm functions at alpha=1, mpmath's independent gamma, and the
closed form E_(1/2)(1) = e*erfc(-1).
"""

import math

import mpmath
import pytest

from fracquat import (
    GammaRangeError,
    JSeries,
    SeriesConvergenceError,
    cos_alpha,
    cos_alpha_jseries,
    gamma_one_plus,
    limit_definition_derivative_at_zero,
    ml_exp,
    ml_exp_jseries,
    series_shift_derivative,
    sin_alpha,
    sin_alpha_jseries,
)


def brute_ml(alpha, u, terms=80):
    return sum(u**k / math.gamma(1 + k * alpha) for k in range(terms))


def brute_sin(alpha, u, terms=60):
    return sum(
        (-1) ** k * u ** (2 * k + 1) / math.gamma(1 + (2 * k + 1) * alpha)
        for k in range(terms)
    )


def brute_cos(alpha, u, terms=60):
    return sum((-1) ** k * u ** (2 * k) / math.gamma(1 + 2 * k * alpha) for k in range(terms))


class TestGamma:
    def test_trivial_values(self):
        assert gamma_one_plus(0.7, 0) == 1.0
        assert gamma_one_plus(0.5, 2) == 1.0
        assert abs(gamma_one_plus(0.5, 1) - 0.886226925452758) < 1e-12

    def test_against_independent_gamma(self):
        # mpmath implements gamma independently of libm
        for alpha in (0.3, 0.5, 0.75, 1.0):
            k = 0
            while k * alpha <= 30:
                ours = gamma_one_plus(alpha, k)
                ref = float(mpmath.gamma(1 + k * alpha))
                assert abs(ours - ref) <= 1e-10 * ref
                k += 1

    def test_range_error(self):
        with pytest.raises(GammaRangeError):
            gamma_one_plus(1.0, 200)

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            gamma_one_plus(0.5, -1)
        with pytest.raises(ValueError):
            gamma_one_plus(0.0, 1)
        with pytest.raises(ValueError):
            gamma_one_plus(1.5, 1)


class TestMlExp:
    def test_zero_argument(self):
        for alpha in (0.2, 0.5, 1.0):
            assert ml_exp(alpha, 0) == 1

    def test_classical_exponential(self):
        assert abs(ml_exp(1.0, 1.0) - math.e) <= 1e-12
        for u in (-3.0, -1.0, 0.5, 2.0, 5.0):
            assert abs(ml_exp(1.0, u) - math.exp(u)) <= 1e-12

    def test_half_order_against_brute_force(self):
        value = ml_exp(0.5, 1.0, 1e-9)
        assert abs(value - brute_ml(0.5, 1.0)) <= 1e-9

    def test_half_order_closed_form(self):
        # E_(1/2)(1) = e * erfc(-1)
        assert abs(ml_exp(0.5, 1.0, 1e-9) - math.e * math.erfc(-1)) <= 1e-9
        assert abs(ml_exp(0.5, 1.0, 1e-9) - 5.008980) <= 1e-6

    def test_complex_argument(self):
        u = 0.3 + 0.4j
        assert abs(ml_exp(0.5, u, 1e-10) - brute_ml(0.5, u)) <= 1e-10

    def test_non_convergence(self):
        with pytest.raises(SeriesConvergenceError) as err:
            ml_exp(0.5, 1e8, 1e-12)
        assert err.value.last_term_magnitude > 0

    def test_tol_validation(self):
        with pytest.raises(ValueError):
            ml_exp(0.5, 1.0, 0.0)


class TestTrig:
    def test_zero_argument(self):
        assert sin_alpha(0.5, 0) == 0
        assert cos_alpha(0.5, 0) == 1

    def test_classical_values(self):
        assert abs(sin_alpha(1.0, 1.0) - 0.841470984) <= 1e-9
        assert abs(cos_alpha(1.0, 1.0) - 0.540302306) <= 1e-9

    def test_classical_grid(self):
        u = -5.0
        while u <= 5.0:
            assert abs(sin_alpha(1.0, u) - math.sin(u)) <= 1e-12
            assert abs(cos_alpha(1.0, u) - math.cos(u)) <= 1e-12
            u += 0.5

    def test_half_order_against_brute_force(self):
        assert abs(sin_alpha(0.5, 1.0, 1e-10) - brute_sin(0.5, 1.0)) <= 1e-10
        assert abs(cos_alpha(0.5, 1.0, 1e-10) - brute_cos(0.5, 1.0)) <= 1e-10


class TestJSeries:
    def test_ml_shift_is_identity_one_shorter(self):
        s = ml_exp_jseries(0.5, 6)
        out = series_shift_derivative(s)
        assert out.coeffs == (1,) * 6
        assert out.truncation_order == 5

    def test_sin_shift_gives_cos(self):
        s = sin_alpha_jseries(0.5, 7)
        out = series_shift_derivative(s)
        assert out.coeffs == cos_alpha_jseries(0.5, 6).coeffs

    def test_cos_shift_gives_minus_sin(self):
        s = cos_alpha_jseries(0.5, 8)
        out = series_shift_derivative(s)
        minus_sin = tuple(-c for c in sin_alpha_jseries(0.5, 7).coeffs)
        assert out.coeffs == minus_sin

    def test_single_term_shift(self):
        s = JSeries(0.5, (0, 0, 0, 1))  # J_3
        assert series_shift_derivative(s).coeffs == (0, 0, 1)

    def test_repeated_shift_reaches_zero(self):
        s = JSeries(0.7, (2, -1, 3, 0.5, 1j))
        for _ in range(s.truncation_order + 1):
            s = series_shift_derivative(s)
        assert s.is_zero()

    def test_shift_relation_termwise(self):
        # coefficient k of the shift equals coefficient k+1 of the input
        s = JSeries(0.4, (3, 1, 4, 1, 5))
        out = series_shift_derivative(s)
        assert out.coeffs == s.coeffs[1:]

    def test_numeric_evaluation_matches_ml_exp(self):
        s = ml_exp_jseries(0.5, 60)
        x = 1.3
        assert abs(s.evaluate(x) - ml_exp(0.5, x**0.5, 1e-13)) < 1e-10

    def test_needs_at_least_one_coefficient(self):
        with pytest.raises(ValueError):
            JSeries(0.5, ())


class TestLimitDefinition:
    STEPS = [10.0**-k for k in range(3, 13)]

    def test_power_alpha_constant_quotient(self):
        report = limit_definition_derivative_at_zero(lambda x: x**0.5, 0.5, self.STEPS)
        assert report.converged
        g = math.gamma(1.5)
        assert all(abs(q - g) < 1e-12 for q in report.quotients)
        assert abs(report.estimate - g) <= 1e-10

    def test_power_two_alpha_goes_to_zero(self):
        report = limit_definition_derivative_at_zero(lambda x: x**1.0, 0.5, self.STEPS)
        assert report.converged
        assert abs(report.estimate) < 1e-4

    def test_ml_exp_composite(self):
        f = lambda x: ml_exp(0.5, x**0.5, 1e-14)
        report = limit_definition_derivative_at_zero(f, 0.5, self.STEPS)
        assert report.converged
        assert abs(report.estimate - 1.0) < 1e-4

    def test_divergent_sequence_reported(self):
        report = limit_definition_derivative_at_zero(lambda x: x**0.1, 0.5, self.STEPS)
        assert not report.converged

    def test_step_validation(self):
        with pytest.raises(ValueError):
            limit_definition_derivative_at_zero(lambda x: x, 0.5, [0.1])
        with pytest.raises(ValueError):
            limit_definition_derivative_at_zero(lambda x: x, 0.5, [0.1, 0.2])
        with pytest.raises(ValueError):
            limit_definition_derivative_at_zero(lambda x: x, 0.5, [0.1, -0.2])
