"""
OpenQASM 2.0 emission and parsing of simulator circuits.
"""

from .qasm import (
    DEFAULT_WIRE_MAPPING,
    QasmError,
    QasmInstruction,
    QasmProgram,
    default_mapping,
    emit,
    format_angle,
    from_circuit,
    parse,
    to_circuit,
)

__all__ = [
    "DEFAULT_WIRE_MAPPING",
    "QasmError",
    "QasmInstruction",
    "QasmProgram",
    "default_mapping",
    "emit",
    "format_angle",
    "from_circuit",
    "parse",
    "to_circuit",
]
