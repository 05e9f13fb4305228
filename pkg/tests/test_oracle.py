import math

import numpy as np
import pytest

from starkvdw.hydrogen import derived_constants
from starkvdw.interaction import delta_E_general
from starkvdw.oracle import (
    OracleFailure,
    QuadratureSpec,
    _ground_vector,
    aux_fg_quadrature,
    degenerate_pt_check,
    kspace_shift,
    matrix_element_check,
    run_specfun_suite,
)
from starkvdw.specfun import aux_f, aux_g

DATA = derived_constants()


class TestQuadratureSpec:
    def test_defaults_valid(self):
        spec = QuadratureSpec()
        assert spec.abs_tol > 0 and spec.rel_tol > 0

    def test_bad_tolerances(self):
        with pytest.raises(ValueError):
            QuadratureSpec(abs_tol=0.0)
        with pytest.raises(ValueError):
            QuadratureSpec(rel_tol=-1e-3)

    def test_eta_sequence_must_decrease(self):
        with pytest.raises(ValueError, match="decreasing"):
            QuadratureSpec(eta_sequence=(1e-7, 2e-7))
        with pytest.raises(ValueError, match="floor"):
            QuadratureSpec(eta_sequence=(1e-7, 0.0))


class TestAuxQuadrature:
    def test_small_x_limit(self):
        f, _ = aux_fg_quadrature(1e-4)
        assert abs(f - math.pi / 2) < 1e-3

    def test_large_x_asymptote(self):
        x = 1e3
        f, _ = aux_fg_quadrature(x)
        assert abs(x * f - 1.0) < 2e-6

    def test_matches_specfun_at_one(self):
        f, g = aux_fg_quadrature(1.0)
        assert aux_f(1.0) == pytest.approx(f, rel=1e-10)
        assert aux_g(1.0) == pytest.approx(g, rel=1e-10)

    def test_equivalence_grid(self):
        for x in np.geomspace(1e-2, 1e2, 9):
            x = float(x)
            f, g = aux_fg_quadrature(x)
            assert aux_f(x) == pytest.approx(f, rel=1e-8)
            assert aux_g(x) == pytest.approx(g, rel=1e-8)

    def test_domain(self):
        with pytest.raises(ValueError):
            aux_fg_quadrature(0.0)

    def test_suite_report(self):
        report = run_specfun_suite()
        assert report.passed
        assert report.max_rel_error <= report.threshold


class TestKspaceShift:
    def test_matches_closed_form_sample(self):
        for theta, x in ((math.pi / 2, 0.1), (0.0, 1.0), (math.pi / 4, 10.0)):
            r = x / DATA.k0
            oracle = kspace_shift(r, theta, 1e5, 1e5)
            exact = delta_E_general(r, theta, 1e5, 1e5)
            assert oracle == pytest.approx(exact, rel=1e-3)

    def test_bilinear_sign_flip(self):
        r = 1.0 / DATA.k0
        plus = kspace_shift(r, 0.3, 1e5, 1e5)
        minus = kspace_shift(r, 0.3, 1e5, -1e5)
        assert minus == -plus

    def test_extrapolation_guard(self):
        r = 1.0 / DATA.k0
        strict = QuadratureSpec(abs_tol=1e-300, rel_tol=1e-14)
        with pytest.raises(OracleFailure, match="extrapolation"):
            kspace_shift(r, math.pi / 2, 1e5, 1e5, spec=strict)

    def test_r_guard(self):
        with pytest.raises(ValueError):
            kspace_shift(1e-12, 0.0, 1e5, 1e5)

    def test_custom_eta_sequence(self):
        r = 1.0 / DATA.k0
        spec = QuadratureSpec(rel_tol=1e-3, eta_sequence=tuple(f * r for f in (0.2, 0.1, 0.05, 0.025)))
        value = kspace_shift(r, math.pi / 2, 1e5, 1e5, spec=spec)
        exact = delta_E_general(r, math.pi / 2, 1e5, 1e5)
        assert value == pytest.approx(exact, rel=1e-3)

    def test_regulator_eta_scale(self):
        r = 1.0 / DATA.k0
        spec = QuadratureSpec(rel_tol=1e-3, regulator_eta=0.2 * r)
        value = kspace_shift(r, math.pi / 2, 1e5, 1e5, spec=spec)
        exact = delta_E_general(r, math.pi / 2, 1e5, 1e5)
        assert value == pytest.approx(exact, rel=1e-4)
        with pytest.raises(ValueError):
            QuadratureSpec(regulator_eta=0.0)


class TestMatrixElementCheck:
    def test_zero_field_vanishes(self):
        report = matrix_element_check(E=0.0, Eprime=5e4)
        assert report.passed
        assert report.details["four_state_sum"] == 0.0

    def test_atom_exchange_symmetry(self):
        a = matrix_element_check(E=2e4, Eprime=1.3e4)
        b = matrix_element_check(E=1.3e4, Eprime=2e4)
        assert a.details["four_state_prefactor"] == pytest.approx(
            b.details["four_state_prefactor"], rel=1e-12
        )

    def test_four_state_sum_measures_four(self):
        # the literal sum over the four normalized intermediate states,
        # both operator orderings, with the first-order dressed state
        report = matrix_element_check()
        assert report.details["four_state_prefactor"] == pytest.approx(4.0, rel=1e-12)

    def test_closure_sum_measures_eight(self):
        # completing the intermediate basis recovers the reference
        # coefficient: the full dipole-product sum equals the product of
        # the two induced permanent dipoles
        report = matrix_element_check()
        assert report.details["closure_prefactor"] == pytest.approx(8.0, rel=1e-9)

    def test_exact_channel_weights(self):
        report = matrix_element_check()
        channels = report.details["exact_channel_weights"]
        assert channels["ground"] == pytest.approx(8.0, rel=0.01)
        assert abs(channels["single"]) < 1e-4
        assert abs(channels["double"]) < 1e-4

    def test_reference_comparison_is_reported(self):
        # the check against the claimed coefficient 8 fails by exactly a
        # factor of two and the report carries the term decomposition
        report = matrix_element_check()
        assert report.details["expected_prefactor"] == 8.0
        assert not report.passed
        assert report.max_rel_error == pytest.approx(0.5, abs=1e-10)
        assert len(report.details["per_state_terms"]) == 4


class TestDegeneratePtCheck:
    def test_passes(self):
        report = degenerate_pt_check()
        assert report.passed
        assert report.max_rel_error <= report.threshold

    def test_first_order_coefficient(self):
        report = degenerate_pt_check()
        measured = report.details["first_order_measured"]
        expected = -math.sqrt(2.0) * DATA.gamma
        assert measured == pytest.approx(expected, rel=1e-4)

    def test_second_order_coefficient(self):
        report = degenerate_pt_check()
        measured = report.details["second_order_measured"]
        expected = -((1.5) ** 6) * DATA.gamma ** 2 / math.sqrt(2.0)
        assert measured == pytest.approx(expected, rel=1e-4)

    def test_coefficient_ratio_is_field_free_constant(self):
        report = degenerate_pt_check()
        ratio = report.details["second_order_measured"] / report.details["first_order_measured"] ** 2
        assert ratio == pytest.approx(-(1.5 ** 6) / (2.0 * math.sqrt(2.0)), rel=1e-4)

    def test_m_one_amplitudes_vanish(self):
        report = degenerate_pt_check()
        assert report.details["m1_amplitude"] <= 1e-14

    def test_residual_scales_as_cube(self):
        report = degenerate_pt_check()
        assert report.details["fit_residual_ratio"] == pytest.approx(8.0, abs=2.0)

    def test_manifold_structure(self):
        report = degenerate_pt_check()
        assert report.details["splitting_linearity_error"] < 1e-3
        assert report.details["manifold_pair_overlap"] > 1.0 - 1e-6

    def test_zero_field_ground_state(self):
        vec = _ground_vector(DATA, 0.0)
        assert vec[0] == pytest.approx(1.0, abs=1e-14)
        assert np.max(np.abs(vec[1:])) < 1e-14

    def test_requires_positive_probe(self):
        with pytest.raises(ValueError):
            degenerate_pt_check(E=0.0)
