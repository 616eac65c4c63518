"""
Parameter sweeps of the thermal noise simulator and their CSV export.
"""

from .sweep import (
    PRESETS,
    SweepPreset,
    SweepResult,
    SweepRow,
    SweepSpec,
    export_csv,
    format_csv,
    parse_grid,
    preset_spec,
    run_sweep,
    sample_shots,
)

__all__ = [
    "PRESETS",
    "SweepPreset",
    "SweepResult",
    "SweepRow",
    "SweepSpec",
    "export_csv",
    "format_csv",
    "parse_grid",
    "preset_spec",
    "run_sweep",
    "sample_shots",
]
