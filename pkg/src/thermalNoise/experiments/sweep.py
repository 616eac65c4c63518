#!/usr/bin/env python3
"""
Parameter Sweeps

Runs the thermal noise simulator circuit over a grid of ``p`` or ``gamma``
values and records, per grid point, the overlap probability of the noisy
output with a reference state three ways:

- ``exact``: from the dense simulation of the gate-level circuit
- ``theory``: from the closed-form channel output
- ``sampled_freq``: a relative frequency over ``shots`` binomial draws

Results export to CSV with pandas.
"""

import io
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Union

import numpy as np
import pandas as pd

from thermalNoise.channel import GadParams, gad_closed_form
from thermalNoise.circuit import gad_simulator_circuit, simulate_channel
from thermalNoise.states import (
    PureState,
    named_state,
    overlap_probability,
    pure_to_density,
    validate_probability,
)

# Configure logging
logger = logging.getLogger(__name__)

SWEPT_PARAMETERS = ("p", "gamma")
GRID_SNAP_TOL = 1e-12
MAX_GRID_POINTS = 1_000_000
CSV_COLUMNS = ["param", "exact", "theory", "sampled_freq", "shots"]
CSV_FLOAT_FORMAT = "%.12g"

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator, None]


class SweepSpec:
    """What to sweep, around which fixed parameter, from which input state."""

    def __init__(
        self,
        swept: str,
        grid: Sequence[float],
        fixed: float,
        input_state: PureState,
        reference_state: Optional[PureState] = None,
        shots: int = 0,
        seed: int = 0,
        input_label: Optional[str] = None,
        curve: Optional[Callable[[float], float]] = None,
    ):
        """
        Initialize the sweep specification.

        Args:
            swept: ``"p"`` or ``"gamma"``
            grid: Values of the swept parameter, each in [0, 1]
            fixed: Value of the other parameter
            input_state: Single-qubit input state
            reference_state: Measurement reference; the input state when omitted
            shots: Binomial draws per point; 0 disables sampling
            seed: Root seed of the per-point random streams
            input_label: Human-readable name of the input state
            curve: Optional known closed-form curve of the overlap probability

        Raises:
            ValueError: If any field is invalid
        """
        if swept not in SWEPT_PARAMETERS:
            raise ValueError(f"swept must be one of {SWEPT_PARAMETERS}, got {swept!r}")
        grid = [validate_probability(v, f"grid value {v}") for v in grid]
        if not grid:
            raise ValueError("The sweep grid is empty")
        other = "gamma" if swept == "p" else "p"
        fixed = validate_probability(fixed, other)
        if int(shots) != shots or shots < 0:
            raise ValueError(f"shots must be a non-negative integer, got {shots}")
        reference_state = reference_state if reference_state is not None else input_state
        for name, state in (("input_state", input_state), ("reference_state", reference_state)):
            if state.dim != 2:
                raise ValueError(f"{name} must be a single-qubit state, got dimension {state.dim}")

        self.swept = swept
        self.grid = grid
        self.fixed = fixed
        self.input_state = input_state
        self.reference_state = reference_state
        self.shots = int(shots)
        self.seed = int(seed)
        self.input_label = input_label
        self.curve = curve

    @property
    def fixed_name(self) -> str:
        return "gamma" if self.swept == "p" else "p"

    def params_at(self, value: float) -> GadParams:
        """Return the channel parameters at one grid value."""
        if self.swept == "p":
            return GadParams(value, self.fixed)
        return GadParams(self.fixed, value)

    def __repr__(self) -> str:
        return (
            f"SweepSpec(swept={self.swept!r}, points={len(self.grid)}, "
            f"{self.fixed_name}={self.fixed!r}, shots={self.shots}, seed={self.seed})"
        )


class SweepRow(NamedTuple):
    """One grid point of a sweep."""

    param: float
    exact: float
    theory: float
    sampled_freq: Optional[float]
    shots: int


class SweepResult:
    """The rows of a sweep, in grid order."""

    def __init__(self, spec: SweepSpec, rows: List[SweepRow]):
        self.spec = spec
        self.rows = rows

    def __len__(self) -> int:
        return len(self.rows)

    def to_dataframe(self) -> pd.DataFrame:
        """Return the rows as a DataFrame with the CSV columns; missing samples are NaN."""
        records = [
            {
                "param": row.param,
                "exact": row.exact,
                "theory": row.theory,
                "sampled_freq": float("nan") if row.sampled_freq is None else row.sampled_freq,
                "shots": row.shots,
            }
            for row in self.rows
        ]
        return pd.DataFrame(records, columns=CSV_COLUMNS)

    def max_abs_error(self) -> float:
        """Return the largest ``|exact - theory|`` over the rows."""
        return max(abs(row.exact - row.theory) for row in self.rows)

    def max_curve_error(self) -> Optional[float]:
        """Return the largest ``|exact - curve(param)|``, or None without a known curve."""
        if self.spec.curve is None:
            return None
        return max(abs(row.exact - self.spec.curve(row.param)) for row in self.rows)

    def max_sampling_error(self) -> Optional[float]:
        """Return the largest ``|sampled_freq - exact|``, or None when nothing was sampled."""
        sampled = [row for row in self.rows if row.sampled_freq is not None]
        if not sampled:
            return None
        return max(abs(row.sampled_freq - row.exact) for row in sampled)


class SweepPreset(NamedTuple):
    """A named sweep reproducing one measured probability curve."""

    swept: str
    fixed: float
    input_label: str
    curve: Callable[[float], float]
    description: str


PRESETS: Dict[str, SweepPreset] = {
    "ground-vs-gamma": SweepPreset(
        "gamma", 0.5, "0", lambda g: 1.0 - g / 2.0, "Pr{|0>} = 1 - gamma/2 at p = 1/2"
    ),
    "ground-vs-p": SweepPreset(
        "p", 0.8, "0", lambda p: 0.8 * p + 0.2, "Pr{|0>} = 0.8 p + 0.2 at gamma = 0.8"
    ),
    "plus-vs-gamma": SweepPreset(
        "gamma",
        0.75,
        "+",
        lambda g: (1.0 + math.sqrt(1.0 - g)) / 2.0,
        "Pr{|+>} = (1 + sqrt(1 - gamma))/2 at p = 3/4",
    ),
}


def preset_spec(name: str, grid: Optional[Sequence[float]] = None, shots: int = 0, seed: int = 0) -> SweepSpec:
    """
    Build the ``SweepSpec`` of a named preset.

    Raises:
        ValueError: If the preset name is unknown
    """
    try:
        preset = PRESETS[name]
    except KeyError:
        raise ValueError(f"Unknown preset {name!r}; expected one of {', '.join(PRESETS)}") from None
    grid = parse_grid("0:1:0.1") if grid is None else grid
    return SweepSpec(
        preset.swept,
        grid,
        preset.fixed,
        named_state(preset.input_label),
        shots=shots,
        seed=seed,
        input_label=preset.input_label,
        curve=preset.curve,
    )


def parse_grid(text: str) -> List[float]:
    """
    Parse a grid written as ``start:stop:step`` (both ends inclusive) or a single value.

    Points within ``GRID_SNAP_TOL`` of ``stop`` count as reaching it, and
    every point is rounded to 12 decimals to drop accumulated rounding.

    Raises:
        ValueError: If the text is malformed, ``step <= 0``, ``stop < start``
            or the grid exceeds ``MAX_GRID_POINTS`` points
    """
    parts = text.strip().split(":")
    try:
        numbers = [float(part) for part in parts]
    except ValueError:
        raise ValueError(f"Malformed grid {text!r}; expected start:stop:step") from None
    if len(numbers) == 1:
        return numbers
    if len(numbers) != 3:
        raise ValueError(f"Malformed grid {text!r}; expected start:stop:step")
    start, stop, step = numbers
    if not all(np.isfinite(numbers)):
        raise ValueError(f"Grid {text!r} has non-finite values")
    if step <= 0:
        raise ValueError(f"Grid step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"Grid stop {stop} lies below start {start}")

    intervals = (stop - start) / step + GRID_SNAP_TOL
    if not math.isfinite(intervals) or intervals >= MAX_GRID_POINTS:
        raise ValueError(f"Grid {text!r} has more than {MAX_GRID_POINTS} points")
    count = int(math.floor(intervals)) + 1
    values = [start + i * step for i in range(count)]
    if abs(values[-1] - stop) <= GRID_SNAP_TOL * max(1.0, abs(stop)):
        values[-1] = stop
    return [round(v, 12) for v in values]


def sample_shots(probability: float, shots: int, seed: SeedLike = None) -> int:
    """
    Draw the number of successes among ``shots`` measurements with success ``probability``.

    A single binomial draw replaces per-shot simulation; for one two-outcome
    measurement both have the same distribution.

    Args:
        probability: Success probability in [0, 1]
        shots: Number of measurements
        seed: An integer seed, a ``SeedSequence`` or a ready ``Generator``

    Raises:
        ValueError: If the probability or shot count is invalid
    """
    probability = validate_probability(probability, "probability")
    if int(shots) != shots or shots < 0:
        raise ValueError(f"shots must be a non-negative integer, got {shots}")
    rng = np.random.default_rng(seed)
    return int(rng.binomial(int(shots), probability))


def _evaluate_point(spec: SweepSpec, value: float, seed: np.random.SeedSequence) -> SweepRow:
    params = spec.params_at(value)
    rho = pure_to_density(spec.input_state)
    output = simulate_channel(gad_simulator_circuit(params), rho)
    exact = overlap_probability(output, spec.reference_state)
    theory = overlap_probability(gad_closed_form(params, rho), spec.reference_state)

    sampled = None
    if spec.shots > 0:
        sampled = sample_shots(exact, spec.shots, seed) / spec.shots
    logger.debug(f"{spec.swept}={value}: exact={exact:.12g} theory={theory:.12g} sampled={sampled}")
    return SweepRow(value, exact, theory, sampled, spec.shots)


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """
    Evaluate every grid point of a sweep.

    Each point draws from its own stream spawned from ``spec.seed``, so the
    result depends on neither the worker count nor the completion order.

    Args:
        spec: The sweep
        workers: Number of threads; 1 evaluates sequentially

    Returns:
        The rows in grid order
    """
    logger.info(f"Running sweep over {len(spec.grid)} {spec.swept} values ({spec.fixed_name}={spec.fixed})")
    seeds = np.random.SeedSequence(spec.seed).spawn(len(spec.grid))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda args: _evaluate_point(spec, *args), zip(spec.grid, seeds)))
    else:
        rows = [_evaluate_point(spec, value, seed) for value, seed in zip(spec.grid, seeds)]

    result = SweepResult(spec, rows)
    logger.info(f"Sweep finished: {len(rows)} points, max |exact - theory| = {result.max_abs_error():.3e}")
    return result


def format_csv(result: SweepResult) -> str:
    """Render a result as CSV text: a ``# seed=`` line, the header, one line per point."""
    if not result.rows:
        raise ValueError("Cannot export an empty sweep result")
    buffer = io.StringIO()
    buffer.write(f"# seed={result.spec.seed}\n")
    result.to_dataframe().to_csv(
        buffer,
        index=False,
        float_format=CSV_FLOAT_FORMAT,
        na_rep="",
        lineterminator="\n",
    )
    return buffer.getvalue()


def export_csv(result: SweepResult, path: Union[str, Path]) -> Path:
    """
    Write a result to a CSV file, creating parent directories.

    Raises:
        ValueError: If the result has no rows
        OSError: If the file cannot be written; the message names the path
    """
    path = Path(path)
    text = format_csv(result)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise OSError(f"Cannot write CSV to {path}: {e}") from e
    logger.info(f"Wrote {len(result)} rows to {path}")
    return path
