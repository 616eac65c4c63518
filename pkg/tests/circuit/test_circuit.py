"""
Unit tests for gate-level circuits and the simulator construction.
"""

import pytest
import numpy as np

from thermalNoise.channel import GadParams, amplitude_damping_kraus, apply_channel, gad_closed_form
from thermalNoise.circuit import (
    A_WIRE,
    E_WIRE,
    Q_WIRE,
    Circuit,
    Gate,
    GateKind,
    circuit_unitary,
    controlled_u_circuit,
    gad_dilation_circuit,
    gad_simulator_circuit,
    gate_embedding,
    purification_circuit,
    ry_matrix,
    simulate_channel,
    u_thermal_circuit,
    xi_from_gamma,
    xi_p_from_p,
)
from thermalNoise.dilation import attenuator_model, reduce, u_thermal, u_tilde
from thermalNoise.linalg import is_unitary, permute_subsystems
from thermalNoise.states import (
    DensityOperator,
    basis_state,
    ket_p,
    named_state,
    overlap_probability,
    pure_to_density,
    purified_equilibrium,
)

CNOT_01 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


class TestGate:
    """Tests for Gate validation and matrices."""

    def test_rejects_same_wires(self):
        """Test that a CNOT on one wire raises."""
        with pytest.raises(ValueError, match="distinct"):
            Gate.cnot(1, 1)

    def test_rejects_non_finite_angle(self):
        """Test that RY needs a finite angle."""
        with pytest.raises(ValueError):
            Gate.ry(float("nan"), 0)

    def test_rejects_non_unitary_controlled_u(self):
        """Test that CONTROLLED_U needs a unitary."""
        with pytest.raises(ValueError):
            Gate.controlled_u(0, 1, 2 * np.eye(2))

    def test_rejects_gate_outside_width(self):
        """Test that a gate on a missing wire raises."""
        with pytest.raises(ValueError, match="does not fit"):
            Circuit(2, [Gate.x(2)])

    def test_rejects_width(self):
        """Test that widths outside 1..3 raise."""
        with pytest.raises(ValueError):
            Circuit(4)
        with pytest.raises(ValueError):
            Circuit(0)

    def test_cnot_matrix(self):
        """Test the CNOT matrix with wire 0 as control."""
        np.testing.assert_array_equal(circuit_unitary(Circuit(2, [Gate.cnot(0, 1)])), CNOT_01)

    def test_reversed_cnot(self):
        """Test the CNOT controlled by the less significant wire."""
        expected = np.eye(4)[[0, 3, 2, 1]]
        np.testing.assert_array_equal(circuit_unitary(Circuit(2, [Gate.cnot(1, 0)])), expected)

    def test_embedding_on_middle_wire(self):
        """Test that X on wire 1 of three flips the middle bit."""
        u = gate_embedding(Gate.x(1), 3)
        np.testing.assert_array_equal(u @ basis_state("000").vector, basis_state("010").vector)

    def test_census(self):
        """Test gate counting per kind."""
        c = Circuit(2, [Gate.cnot(0, 1), Gate.ry(0.1, 0), Gate.cnot(1, 0)])
        assert c.gate_census() == {GateKind.CNOT: 2, GateKind.RY: 1}
        assert len(c) == 3


class TestAngles:
    """Tests for ry_matrix and the angle maps."""

    def test_ry_values(self):
        """Test R_y at 0 and pi."""
        np.testing.assert_allclose(ry_matrix(0.0), np.eye(2))
        np.testing.assert_allclose(ry_matrix(np.pi), [[0, -1], [1, 0]], atol=1e-15)

    @pytest.mark.parametrize("gamma, expected", [(0.0, 0.0), (1.0, -np.pi / 2), (0.5, -np.pi / 4)])
    def test_xi_from_gamma(self, gamma, expected):
        """Test the coupling angle."""
        assert xi_from_gamma(gamma) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("p, expected", [(1.0, 0.0), (0.0, np.pi), (0.5, np.pi / 2)])
    def test_xi_p_from_p(self, p, expected):
        """Test the preparation angle."""
        assert xi_p_from_p(p) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("value", [-0.01, 1.01])
    def test_angle_ranges(self, value):
        """Test that out-of-range parameters raise."""
        with pytest.raises(ValueError):
            xi_from_gamma(value)
        with pytest.raises(ValueError):
            xi_p_from_p(value)

    def test_preparation(self, unit_grid):
        """Test R_y(xi_p)|0> = sqrt(p)|0> + sqrt(1-p)|1>."""
        for p in unit_grid:
            np.testing.assert_allclose(ry_matrix(xi_p_from_p(p)) @ [1, 0], ket_p(p).vector, atol=1e-12)

    def test_rotation_equals_u_tilde(self, unit_grid):
        """Test u_tilde(gamma) = R_y(2 xi) and R_y(xi) X R_y(-xi) X."""
        x = np.array([[0, 1], [1, 0]])
        for gamma in unit_grid:
            xi = xi_from_gamma(gamma)
            np.testing.assert_allclose(ry_matrix(2 * xi), u_tilde(gamma), atol=1e-12)
            np.testing.assert_allclose(ry_matrix(xi) @ x @ ry_matrix(-xi) @ x, u_tilde(gamma), atol=1e-12)


class TestConstructions:
    """Tests for the decomposition chain."""

    def test_controlled_u_blocks(self, unit_grid):
        """Test the control-|0> block is I and the control-|1> block is u_tilde."""
        for gamma in unit_grid:
            u = circuit_unitary(controlled_u_circuit(xi_from_gamma(gamma)))
            np.testing.assert_allclose(u[:2, :2], np.eye(2), atol=1e-12)
            np.testing.assert_allclose(u[2:, 2:], u_tilde(gamma), atol=1e-12)
            np.testing.assert_allclose(u[:2, 2:], np.zeros((2, 2)), atol=1e-12)
            np.testing.assert_allclose(u[2:, :2], np.zeros((2, 2)), atol=1e-12)

    def test_controlled_u_example(self):
        """Test the control-|1> block at gamma = 0.36."""
        u = circuit_unitary(controlled_u_circuit(xi_from_gamma(0.36)))
        np.testing.assert_allclose(u[2:, 2:], [[0.8, 0.6], [-0.6, 0.8]], atol=1e-12)

    def test_controlled_u_matches_gate(self):
        """Test the decomposition against the CONTROLLED_U gate."""
        gamma = 0.42
        decomposed = circuit_unitary(controlled_u_circuit(xi_from_gamma(gamma)))
        direct = circuit_unitary(Circuit(2, [Gate.controlled_u(0, 1, u_tilde(gamma))]))
        np.testing.assert_allclose(decomposed, direct, atol=1e-12)

    def test_controlled_u_shape(self):
        """Test two CNOTs and two RY with opposite angles."""
        c = controlled_u_circuit(0.3)
        assert [g.kind for g in c.gates] == [GateKind.CNOT, GateKind.RY, GateKind.CNOT, GateKind.RY]
        assert c.gates[1].angle == -0.3
        assert c.gates[3].angle == 0.3

    def test_u_thermal_circuit(self, unit_grid):
        """Test that the three-stage circuit reproduces u_thermal."""
        for gamma in unit_grid:
            u = circuit_unitary(u_thermal_circuit(gamma))
            np.testing.assert_allclose(u, u_thermal(gamma), atol=1e-12)

    def test_u_thermal_circuit_wires(self):
        """Test placing the attenuator on wires (2, 0) of three."""
        u = circuit_unitary(u_thermal_circuit(0.3, qwire=2, ewire=0, width=3))
        # move (Q, E, idle) = wires (2, 0, 1) back into natural order
        expected = permute_subsystems(np.kron(u_thermal(0.3), np.eye(2)), [2, 2, 2], [2, 0, 1])
        np.testing.assert_allclose(u, expected, atol=1e-12)

    def test_empty_circuit(self):
        """Test that an empty circuit has the identity unitary."""
        np.testing.assert_array_equal(circuit_unitary(Circuit(2)), np.eye(4))

    def test_purification_circuit(self, unit_grid):
        """Test |00> -> sqrt(p)|00> + sqrt(1-p)|11>."""
        for p in unit_grid:
            state = circuit_unitary(purification_circuit(p)) @ basis_state("00").vector
            np.testing.assert_allclose(state, purified_equilibrium(p).vector, atol=1e-12)

    def test_wire_validation(self):
        """Test that coinciding or missing wires raise."""
        with pytest.raises(ValueError):
            u_thermal_circuit(0.5, qwire=1, ewire=1)
        with pytest.raises(ValueError):
            controlled_u_circuit(0.1, control=0, target=2, width=2)


class TestSimulatorCircuit:
    """Tests for gad_simulator_circuit and simulate_channel."""

    def test_census(self):
        """Test five CNOT and two RY after the preparation, three RY in total."""
        c = gad_simulator_circuit(GadParams(0.5, 0.5))
        assert c.width == 3
        assert c.gates[0] == Gate.ry(xi_p_from_p(0.5), A_WIRE)
        assert Circuit(3, c.gates[1:]).gate_census() == {GateKind.CNOT: 5, GateKind.RY: 2}
        assert c.gate_census() == {GateKind.CNOT: 5, GateKind.RY: 3}

    def test_purification_gate(self):
        """Test that the first CNOT copies the auxiliary wire onto the environment."""
        c = gad_simulator_circuit(GadParams(0.5, 0.5))
        assert c.gates[1] == Gate.cnot(A_WIRE, E_WIRE)

    def test_unitary(self):
        """Test that the simulator unitary is unitary."""
        assert is_unitary(circuit_unitary(gad_simulator_circuit(GadParams(0.3, 0.9))))

    def test_empty_circuit_keeps_input(self, input_states):
        """Test that an empty circuit returns the input."""
        for rho in input_states.values():
            np.testing.assert_allclose(simulate_channel(Circuit(3), rho).matrix, rho.matrix, atol=1e-15)

    @pytest.mark.parametrize("gamma", [0.0, 0.1, 0.5, 0.9, 1.0])
    def test_ground_overlap_at_half(self, gamma):
        """Test Pr{|0>} = 1 - gamma/2 at p = 1/2."""
        out = simulate_channel(gad_simulator_circuit(GadParams(0.5, gamma)), pure_to_density(named_state("0")))
        assert overlap_probability(out, named_state("0")) == pytest.approx(1 - gamma / 2, abs=1e-12)

    @pytest.mark.parametrize("p", [0.0, 0.3, 0.5, 1.0])
    def test_ground_overlap_at_strong_coupling(self, p):
        """Test Pr{|0>} = 0.8 p + 0.2 at gamma = 0.8."""
        out = simulate_channel(gad_simulator_circuit(GadParams(p, 0.8)), pure_to_density(named_state("0")))
        assert overlap_probability(out, named_state("0")) == pytest.approx(0.8 * p + 0.2, abs=1e-12)

    @pytest.mark.parametrize("gamma", [0.0, 0.3, 0.75, 1.0])
    def test_plus_overlap(self, gamma):
        """Test Pr{|+>} = (1 + sqrt(1-gamma))/2 at p = 3/4."""
        out = simulate_channel(gad_simulator_circuit(GadParams(0.75, gamma)), pure_to_density(named_state("+")))
        assert overlap_probability(out, named_state("+")) == pytest.approx((1 + np.sqrt(1 - gamma)) / 2, abs=1e-12)

    def test_matches_closed_form(self, input_states, unit_grid):
        """Test the circuit against the closed form on the full grid."""
        for p in unit_grid:
            for gamma in unit_grid:
                params = GadParams(p, gamma)
                c = gad_simulator_circuit(params)
                for rho in input_states.values():
                    out = simulate_channel(c, rho).matrix
                    assert np.max(np.abs(out - gad_closed_form(params, rho).matrix)) < 1e-12

    def test_amplitude_damping(self, input_states):
        """Test that p = 1 gives rho'00 = (1-gamma) rho00 + gamma."""
        gamma = 0.45
        c = gad_simulator_circuit(GadParams(1.0, gamma))
        for rho in input_states.values():
            out = simulate_channel(c, rho)
            assert out.matrix[0, 0].real == pytest.approx((1 - gamma) * rho.matrix[0, 0].real + gamma, abs=1e-12)
            np.testing.assert_allclose(out.matrix, apply_channel(amplitude_damping_kraus(gamma), rho).matrix, atol=1e-12)

    def test_dilation_circuit_with_prepared_environment(self, input_states):
        """Test the preparation-free circuit with |0> (x) |p> on (E, A)."""
        params = GadParams(0.65, 0.4)
        env = named_state("0").tensor(ket_p(params.p))
        c = gad_dilation_circuit(params)
        assert c.gate_census() == {GateKind.CNOT: 5, GateKind.RY: 2}
        model = attenuator_model(params)
        for rho in input_states.values():
            np.testing.assert_allclose(
                simulate_channel(c, rho, env_init=env).matrix, reduce(model, rho).matrix, atol=1e-12
            )

    def test_principal_on_other_wire(self):
        """Test a principal wire other than 0."""
        c = Circuit(2, [Gate.cnot(0, 1)])
        # environment |1> on wire 0 flips the principal wire 1
        out = simulate_channel(c, pure_to_density(named_state("0")), principal=1, env_init=named_state("1"))
        np.testing.assert_allclose(out.matrix, np.diag([0, 1]), atol=1e-15)

    def test_dimension_mismatch(self):
        """Test that mismatched inputs raise."""
        c = gad_simulator_circuit(GadParams(0.5, 0.5))
        with pytest.raises(ValueError):
            simulate_channel(c, DensityOperator(np.eye(4) / 4))
        with pytest.raises(ValueError):
            simulate_channel(c, pure_to_density(named_state("0")), env_init=named_state("0"))

    def test_wire_layout(self):
        """Test the wire constants."""
        assert (Q_WIRE, E_WIRE, A_WIRE) == (0, 1, 2)
