"""
Pytest configuration file.
"""

import pytest
import tempfile
from pathlib import Path

import numpy as np

from thermalNoise.states import named_state, pure_to_density, random_density_operator


FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def rng():
    """A seeded random generator."""
    return np.random.default_rng(1234)


@pytest.fixture
def input_states():
    """The standard single-qubit inputs: basis states, superpositions and one random mixed state."""
    states = {label: pure_to_density(named_state(label)) for label in ("0", "1", "+", "-", "+i")}
    states["mixed"] = random_density_operator(np.random.default_rng(7))
    return states


@pytest.fixture
def unit_grid():
    """The values 0, 0.1, ..., 1."""
    return [round(0.1 * i, 12) for i in range(11)]


@pytest.fixture
def coarse_grid():
    """Five values spanning [0, 1]."""
    return [0.0, 0.25, 0.5, 0.75, 1.0]


@pytest.fixture
def qasm_fixtures_dir():
    """Directory of the golden QASM files."""
    return FIXTURES_DIR / "qasm"
