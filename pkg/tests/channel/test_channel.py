"""
Unit tests for the thermal noise channel.
"""

import math

import pytest
import numpy as np

from thermalNoise.channel import (
    K_BOLTZMANN_SI,
    GadParams,
    KrausChannel,
    RelaxationSpec,
    ThermalBathSpec,
    amplitude_damping_kraus,
    apply_channel,
    compose_gamma,
    gad_closed_form,
    gad_kraus,
    gamma_from_time,
    p_from_temperature,
    temperature_from_p,
    time_from_gamma,
    validate_cptp,
)
from thermalNoise.linalg import is_hermitian, is_psd
from thermalNoise.states import (
    DensityOperator,
    equilibrium_state,
    named_state,
    overlap_probability,
    pure_to_density,
    random_density_operator,
)


class TestGadParams:
    """Tests for GadParams."""

    @pytest.mark.parametrize("p, gamma", [(-0.1, 0.5), (0.5, 1.5), (float("inf"), 0.0)])
    def test_rejects_out_of_range(self, p, gamma):
        """Test that values outside [0, 1] raise."""
        with pytest.raises(ValueError):
            GadParams(p, gamma)

    def test_equality(self):
        """Test value equality and hashing."""
        assert GadParams(0.5, 0.2) == GadParams(0.5, 0.2)
        assert len({GadParams(0.5, 0.2), GadParams(0.5, 0.2)}) == 1


class TestGadKraus:
    """Tests for gad_kraus."""

    def test_identity_at_zero_coupling(self):
        """Test that p = 1, gamma = 0 gives {I, 0, 0, 0}."""
        ops = gad_kraus(GadParams(1.0, 0.0)).operators
        assert len(ops) == 4
        np.testing.assert_allclose(ops[0], np.eye(2))
        for op in ops[1:]:
            np.testing.assert_array_equal(op, np.zeros((2, 2)))

    @pytest.mark.parametrize("gamma", [0.0, 0.3, 1.0])
    def test_amplitude_damping_limit(self, gamma):
        """Test that p = 1 leaves the two amplitude-damping operators."""
        ops = gad_kraus(GadParams(1.0, gamma)).operators
        np.testing.assert_allclose(ops[0], np.diag([1, np.sqrt(1 - gamma)]))
        np.testing.assert_allclose(ops[1], [[0, np.sqrt(gamma)], [0, 0]])
        np.testing.assert_array_equal(ops[2], np.zeros((2, 2)))
        np.testing.assert_array_equal(ops[3], np.zeros((2, 2)))
        for mine, reference in zip(ops[:2], amplitude_damping_kraus(gamma).operators):
            np.testing.assert_allclose(mine, reference, atol=1e-15)

    def test_completeness(self, unit_grid):
        """Test that the completeness residual stays below 1e-14 on the grid."""
        for p in unit_grid:
            for gamma in unit_grid:
                report = validate_cptp(gad_kraus(GadParams(p, gamma)))
                assert report.residual < 1e-14
                assert report.passed

    def test_operators_read_only(self):
        """Test that stored operators cannot be modified."""
        ops = gad_kraus(GadParams(0.5, 0.5)).operators
        with pytest.raises(ValueError):
            ops[0][0, 0] = 2.0


class TestKrausChannel:
    """Tests for KrausChannel and validate_cptp."""

    def test_incomplete_rejected(self):
        """Test that an incomplete set raises by default."""
        with pytest.raises(ValueError, match="not complete"):
            KrausChannel([np.eye(2), np.eye(2)])

    def test_report_on_incomplete_set(self):
        """Test the residual of {I, I}."""
        report = validate_cptp(KrausChannel([np.eye(2), np.eye(2)], require_complete=False))
        assert report.residual == pytest.approx(1.0)
        assert not report.passed
        assert report.operator_norms == pytest.approx([1.0, 1.0])

    def test_report_on_pauli(self):
        """Test the residual of {X}."""
        report = validate_cptp(KrausChannel([[[0, 1], [1, 0]]]))
        assert report.residual == 0.0
        assert report.passed

    def test_inconsistent_shapes(self):
        """Test that operators of different sizes raise."""
        with pytest.raises(ValueError):
            KrausChannel([np.eye(2), np.eye(4)], require_complete=False)


class TestApplyChannel:
    """Tests for apply_channel and gad_closed_form."""

    def test_identity_channel(self, input_states):
        """Test that {I} leaves every state unchanged."""
        identity = KrausChannel([np.eye(2)])
        for rho in input_states.values():
            np.testing.assert_allclose(apply_channel(identity, rho).matrix, rho.matrix, atol=1e-15)

    @pytest.mark.parametrize("p", [0.0, 0.3, 0.5, 1.0])
    def test_full_coupling_thermalizes(self, p, input_states):
        """Test that gamma = 1 sends every state to diag(p, 1-p)."""
        channel = gad_kraus(GadParams(p, 1.0))
        for rho in input_states.values():
            np.testing.assert_allclose(apply_channel(channel, rho).matrix, np.diag([p, 1 - p]), atol=1e-12)

    def test_ground_state_example(self):
        """Test p = 1/2, gamma = 1/2 on |0><0| gives diag(0.75, 0.25)."""
        out = apply_channel(gad_kraus(GadParams(0.5, 0.5)), pure_to_density(named_state("0")))
        np.testing.assert_allclose(out.matrix, np.diag([0.75, 0.25]), atol=1e-12)

    def test_dimension_mismatch(self):
        """Test that a two-qubit state raises."""
        with pytest.raises(ValueError, match="Dimension mismatch"):
            apply_channel(gad_kraus(GadParams(0.5, 0.5)), DensityOperator(np.eye(4) / 4))

    def test_kraus_matches_closed_form(self, rng):
        """Test entrywise agreement on random states and parameters."""
        for _ in range(2000):
            params = GadParams(rng.uniform(), rng.uniform())
            rho = random_density_operator(rng)
            kraus = apply_channel(gad_kraus(params), rho).matrix
            closed = gad_closed_form(params, rho).matrix
            assert np.max(np.abs(kraus - closed)) < 1e-12

    def test_zero_coupling_is_identity(self, input_states):
        """Test that gamma = 0 leaves states unchanged."""
        for rho in input_states.values():
            out = gad_closed_form(GadParams(0.3, 0.0), rho)
            np.testing.assert_allclose(out.matrix, rho.matrix, atol=1e-15)

    @pytest.mark.parametrize("gamma", [0.0, 0.2, 0.75, 1.0])
    def test_plus_state_overlap(self, gamma):
        """Test Pr{|+>} = (1 + sqrt(1-gamma))/2 at p = 3/4."""
        out = gad_closed_form(GadParams(0.75, gamma), pure_to_density(named_state("+")))
        expected = (1 + np.sqrt(1 - gamma)) / 2
        assert overlap_probability(out, named_state("+")) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("p", [0.0, 0.4, 1.0])
    def test_ground_population_at_strong_coupling(self, p):
        """Test rho'00 = 0.8 p + 0.2 at gamma = 0.8 from |0>."""
        out = gad_closed_form(GadParams(p, 0.8), pure_to_density(named_state("0")))
        assert out.matrix[0, 0].real == pytest.approx(0.8 * p + 0.2, abs=1e-12)

    def test_closed_form_rejects_two_qubits(self):
        """Test that the closed form only accepts one qubit."""
        with pytest.raises(ValueError):
            gad_closed_form(GadParams(0.5, 0.5), DensityOperator(np.eye(4) / 4))

    def test_outputs_are_states(self, rng, coarse_grid):
        """Test trace, Hermiticity and positivity of outputs."""
        for p in coarse_grid:
            for gamma in coarse_grid:
                out = apply_channel(gad_kraus(GadParams(p, gamma)), random_density_operator(rng)).matrix
                assert abs(np.trace(out) - 1) < 1e-12
                assert is_hermitian(out, 1e-12)
                assert is_psd(out, 1e-9)

    def test_fixed_point(self, unit_grid):
        """Test that diag(p, 1-p) is invariant."""
        for p in unit_grid:
            for gamma in unit_grid:
                rho = equilibrium_state(p)
                out = apply_channel(gad_kraus(GadParams(p, gamma)), rho)
                np.testing.assert_allclose(out.matrix, rho.matrix, atol=1e-12)

    def test_coherence_contraction(self, rng, unit_grid):
        """Test |rho'01| = sqrt(1-gamma) |rho01|."""
        rho = random_density_operator(rng)
        for gamma in unit_grid:
            out = apply_channel(gad_kraus(GadParams(0.3, gamma)), rho)
            assert abs(out.matrix[0, 1]) == pytest.approx(np.sqrt(1 - gamma) * abs(rho.matrix[0, 1]), abs=1e-12)

    def test_semigroup(self, rng):
        """Test that two applications compose into one with combined coupling."""
        for _ in range(100):
            p, g1, g2 = rng.uniform(size=3)
            rho = random_density_operator(rng)
            twice = apply_channel(gad_kraus(GadParams(p, g2)), apply_channel(gad_kraus(GadParams(p, g1)), rho))
            once = apply_channel(gad_kraus(GadParams(p, compose_gamma(g1, g2))), rho)
            np.testing.assert_allclose(twice.matrix, once.matrix, atol=1e-12)


class TestParameterMaps:
    """Tests for the temperature and interaction-time maps."""

    def test_ln3_ratio(self):
        """Test that gap/(k T) = ln 3 gives p = 3/4."""
        assert p_from_temperature(ThermalBathSpec(math.log(3), 1.0)) == pytest.approx(0.75, abs=1e-12)

    def test_monotone_decreasing(self):
        """Test that p falls as T grows."""
        temperatures = np.linspace(0.05, 20.0, 50)
        values = [p_from_temperature(ThermalBathSpec(1.0, t)) for t in temperatures]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(0.5 < v < 1.0 for v in values)

    def test_limits(self):
        """Test p -> 1 at low and p -> 1/2 at high temperature."""
        assert p_from_temperature(ThermalBathSpec(1.0, 1e-3)) == pytest.approx(1.0, abs=1e-12)
        assert p_from_temperature(ThermalBathSpec(1.0, 1e12)) == pytest.approx(0.5, abs=1e-12)

    def test_si_units(self):
        """Test the SI Boltzmann constant with a gap of k_B * 300 K at 300 K."""
        bath = ThermalBathSpec(K_BOLTZMANN_SI * 300.0, 300.0, K_BOLTZMANN_SI)
        assert p_from_temperature(bath) == pytest.approx(1 / (1 + math.exp(-1)), abs=1e-12)

    @pytest.mark.parametrize("gap, temperature", [(1.0, 0.0), (0.0, 1.0), (1.0, -2.0), (1.0, float("inf"))])
    def test_invalid_bath(self, gap, temperature):
        """Test that non-positive or infinite values raise."""
        with pytest.raises(ValueError):
            ThermalBathSpec(gap, temperature)

    def test_temperature_round_trip(self):
        """Test that temperature_from_p inverts p_from_temperature."""
        for t in (0.5, 1.0, 7.5):
            p = p_from_temperature(ThermalBathSpec(2.0, t))
            assert temperature_from_p(p, 2.0) == pytest.approx(t, rel=1e-10)

    @pytest.mark.parametrize("p", [0.5, 1.0, 0.3])
    def test_temperature_from_p_out_of_range(self, p):
        """Test that p outside (1/2, 1) raises."""
        with pytest.raises(ValueError):
            temperature_from_p(p, 1.0)

    def test_gamma_from_time(self):
        """Test gamma at t = 0, t = tau1 and t = 100 tau1."""
        assert gamma_from_time(RelaxationSpec(0.0, 2.0)) == 0.0
        assert gamma_from_time(RelaxationSpec(2.0, 2.0)) == pytest.approx(1 - 1 / math.e, abs=1e-12)
        assert abs(gamma_from_time(RelaxationSpec(200.0, 2.0)) - 1.0) < 1e-10

    def test_gamma_monotone(self):
        """Test that gamma grows with interaction time."""
        values = [gamma_from_time(RelaxationSpec(t, 1.0)) for t in np.linspace(0, 5, 20)]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("t, tau1", [(-1.0, 1.0), (1.0, 0.0), (1.0, -1.0)])
    def test_invalid_relaxation(self, t, tau1):
        """Test that negative times or non-positive tau1 raise."""
        with pytest.raises(ValueError):
            RelaxationSpec(t, tau1)

    def test_time_round_trip(self):
        """Test that time_from_gamma inverts gamma_from_time."""
        assert time_from_gamma(gamma_from_time(RelaxationSpec(3.0, 1.5)), 1.5) == pytest.approx(3.0, rel=1e-12)
        with pytest.raises(ValueError):
            time_from_gamma(1.0, 1.0)

    def test_compose_gamma_matches_time_addition(self):
        """Test that composing couplings adds interaction times."""
        g1 = gamma_from_time(RelaxationSpec(0.4, 1.0))
        g2 = gamma_from_time(RelaxationSpec(0.9, 1.0))
        assert compose_gamma(g1, g2) == pytest.approx(gamma_from_time(RelaxationSpec(1.3, 1.0)), abs=1e-12)
