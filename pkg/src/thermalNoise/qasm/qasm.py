#!/usr/bin/env python3
"""
OpenQASM 2.0 Emitter and Parser

Serializes circuits to the OpenQASM 2.0 dialect produced by graphical circuit
composers and reads that dialect back. Only a subset of the language is
understood: the version header, ``include`` (ignored), ``qreg``/``creg``
declarations and the ``ry``, ``cx``, ``x``, ``measure`` and ``barrier``
statements. Anything else is an error.

Circuit wires and physical qubit indices are related by an explicit mapping.
For the three-wire simulator the default places the preparation rotation on
``q[1]`` and the principal qubit on ``q[2]``.
"""

import logging
import math
import re
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from thermalNoise.circuit import A_WIRE, E_WIRE, Q_WIRE, Circuit, Gate, GateKind

# Configure logging
logger = logging.getLogger(__name__)

QASM_VERSION = "2.0"
INCLUDE_FILE = "qelib1.inc"
QREG_NAME = "q"
CREG_NAME = "c"

# wire -> physical qubit index for the three-wire simulator
DEFAULT_WIRE_MAPPING = {Q_WIRE: 2, E_WIRE: 0, A_WIRE: 1}

ANGLE_SIGNIFICANT_DIGITS = 15

_GATE_NAMES = {GateKind.X: "x", GateKind.RY: "ry", GateKind.CNOT: "cx"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>//[^\n]*)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<arrow>->)
  | (?P<sym>[\[\](),;*/+\-])
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


class QasmError(ValueError):
    """A syntax or semantic error in QASM source, with its position."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class QasmInstruction(NamedTuple):
    """One statement: a gate, a measurement or a barrier."""

    name: str
    params: Tuple[float, ...]
    qubits: Tuple[Tuple[str, int], ...]
    clbits: Tuple[Tuple[str, int], ...] = ()


class QasmProgram:
    """A parsed or generated OpenQASM 2.0 program."""

    def __init__(
        self,
        qregs: Dict[str, int],
        cregs: Optional[Dict[str, int]] = None,
        instructions: Iterable[QasmInstruction] = (),
        version: str = QASM_VERSION,
    ):
        """
        Initialize the program.

        Raises:
            QasmError: If the version is unsupported or an operand does not
                reference a declared register within bounds
        """
        if version != QASM_VERSION:
            raise QasmError(f"unsupported QASM version {version!r}; expected {QASM_VERSION}")
        self.version = version
        self.qregs = dict(qregs)
        self.cregs = dict(cregs or {})
        self.instructions: List[QasmInstruction] = list(instructions)
        for instruction in self.instructions:
            for reg, index in instruction.qubits:
                _check_operand(self.qregs, reg, index, "qubit")
            for reg, index in instruction.clbits:
                _check_operand(self.cregs, reg, index, "bit")

    @property
    def num_qubits(self) -> int:
        return sum(self.qregs.values())

    def qubit_offsets(self) -> Dict[str, int]:
        """Return the flat index of the first qubit of each register, in declaration order."""
        offsets, total = {}, 0
        for name, size in self.qregs.items():
            offsets[name] = total
            total += size
        return offsets

    def to_text(self) -> str:
        """Render the program, one statement per line, LF line endings."""
        lines = [f"OPENQASM {self.version};", f'include "{INCLUDE_FILE}";']
        lines += [f"qreg {name}[{size}];" for name, size in self.qregs.items()]
        lines += [f"creg {name}[{size}];" for name, size in self.cregs.items()]
        for instruction in self.instructions:
            lines.append(_render_instruction(instruction))
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, QasmProgram):
            return NotImplemented
        return (self.version, self.qregs, self.cregs, self.instructions) == (
            other.version,
            other.qregs,
            other.cregs,
            other.instructions,
        )

    def __repr__(self) -> str:
        return f"QasmProgram(qregs={self.qregs}, cregs={self.cregs}, instructions={len(self.instructions)})"


def _check_operand(registers: Dict[str, int], reg: str, index: int, kind: str, token=None) -> None:
    line, column = (token.line, token.column) if token is not None else (None, None)
    if reg not in registers:
        raise QasmError(f"undeclared register {reg!r}", line, column)
    if not 0 <= index < registers[reg]:
        raise QasmError(
            f"{kind} index {index} out of range for register {reg!r} of size {registers[reg]}",
            line,
            column,
        )


def format_angle(angle: float) -> str:
    """Render an angle in radians with ``ANGLE_SIGNIFICANT_DIGITS`` significant digits."""
    text = format(float(angle) + 0.0, f".{ANGLE_SIGNIFICANT_DIGITS}g")
    return "0" if text == "-0" else text


def _render_instruction(instruction: QasmInstruction) -> str:
    operands = ",".join(f"{reg}[{index}]" for reg, index in instruction.qubits)
    if instruction.name == "measure":
        (creg, cindex), = instruction.clbits
        return f"measure {operands} -> {creg}[{cindex}];"
    if instruction.params:
        params = ",".join(format_angle(a) for a in instruction.params)
        return f"{instruction.name}({params}) {operands};"
    return f"{instruction.name} {operands};"


def default_mapping(width: int) -> Dict[int, int]:
    """Return the default wire -> physical index mapping for a circuit width."""
    if width == len(DEFAULT_WIRE_MAPPING):
        return dict(DEFAULT_WIRE_MAPPING)
    return {w: w for w in range(width)}


def _check_bijection(mapping: Dict[int, int], width: int, what: str) -> None:
    if sorted(mapping.keys()) != list(range(width)) or sorted(mapping.values()) != list(range(width)):
        raise ValueError(f"{what} mapping {mapping} is not a bijection on 0..{width - 1}")


def from_circuit(
    c: Circuit,
    mapping: Optional[Dict[int, int]] = None,
    measure: Optional[Iterable[int]] = None,
) -> QasmProgram:
    """
    Build the QASM program of a circuit.

    Rotation angles are rounded to ``ANGLE_SIGNIFICANT_DIGITS`` significant
    digits, the precision ``emit`` renders them with.

    Args:
        c: A circuit made of ``X``, ``RY`` and ``CNOT`` gates
        mapping: Wire -> physical qubit index; ``default_mapping`` when omitted
        measure: Wires to measure at the end, each into the classical bit
            with its physical index

    Raises:
        ValueError: If the mapping is not a bijection or a gate kind has no
            QASM counterpart
    """
    mapping = default_mapping(c.width) if mapping is None else dict(mapping)
    _check_bijection(mapping, c.width, "Wire")

    instructions = []
    for gate in c.gates:
        if gate.kind not in _GATE_NAMES:
            raise ValueError(f"{gate.kind.name} gates cannot be written as QASM")
        # angles carry the emitted precision, so parse(emit(c)) gives back these instructions
        params = (float(format_angle(gate.angle)),) if gate.kind is GateKind.RY else ()
        qubits = tuple((QREG_NAME, mapping[w]) for w in gate.wires)
        instructions.append(QasmInstruction(_GATE_NAMES[gate.kind], params, qubits))
    for wire in measure or ():
        physical = mapping[int(wire)]
        instructions.append(
            QasmInstruction("measure", (), ((QREG_NAME, physical),), ((CREG_NAME, physical),))
        )
    return QasmProgram({QREG_NAME: c.width}, {CREG_NAME: c.width}, instructions)


def emit(
    c: Circuit,
    mapping: Optional[Dict[int, int]] = None,
    measure: Optional[Iterable[int]] = None,
) -> str:
    """Return the OpenQASM 2.0 text of a circuit; see ``from_circuit``."""
    return from_circuit(c, mapping, measure).to_text()


class _Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    line, line_start = 1, 0
    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        value = match.group()
        column = match.start() - line_start + 1
        if kind == "bad":
            raise QasmError(f"unexpected character {value!r}", line, column)
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, value, line, column))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = match.start() + value.rindex("\n") + 1
    return tokens


class _Parser:
    """Recursive-descent parser over the token list."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.qregs: Dict[str, int] = {}
        self.cregs: Dict[str, int] = {}
        self.instructions: List[QasmInstruction] = []

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, expected: str) -> _Token:
        token = self._peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else _Token("eof", "", 1, 1)
            raise QasmError(f"unexpected end of input, expected {expected}", last.line, last.column)
        self.pos += 1
        return token

    def _expect(self, text: str) -> _Token:
        token = self._next(repr(text))
        if token.text != text:
            raise QasmError(f"expected {text!r}, got {token.text!r}", token.line, token.column)
        return token

    def _expect_kind(self, kind: str, description: str) -> _Token:
        token = self._next(description)
        if token.kind != kind:
            raise QasmError(f"expected {description}, got {token.text!r}", token.line, token.column)
        return token

    def parse(self) -> QasmProgram:
        header = self._next("'OPENQASM'")
        if header.text != "OPENQASM":
            raise QasmError("program must start with 'OPENQASM 2.0;'", header.line, header.column)
        version = self._expect_kind("number", "a version number")
        if version.text != QASM_VERSION:
            raise QasmError(
                f"unsupported QASM version {version.text!r}; expected {QASM_VERSION}",
                version.line,
                version.column,
            )
        self._expect(";")

        while self._peek() is not None:
            self._statement()
        return QasmProgram(self.qregs, self.cregs, self.instructions, version.text)

    def _statement(self) -> None:
        token = self._expect_kind("id", "a statement")
        name = token.text
        if name == "include":
            self._expect_kind("string", "a file name")
            self._expect(";")
        elif name in ("qreg", "creg"):
            self._declaration(token)
        elif name == "ry":
            self._expect("(")
            angle = self._expression()
            self._expect(")")
            qubit = self._operand(self.qregs, "qubit")
            self._expect(";")
            self.instructions.append(QasmInstruction("ry", (angle,), (qubit,)))
        elif name == "cx":
            control = self._operand(self.qregs, "qubit")
            self._expect(",")
            target = self._operand(self.qregs, "qubit")
            self._expect(";")
            if control == target:
                raise QasmError("cx control and target must differ", token.line, token.column)
            self.instructions.append(QasmInstruction("cx", (), (control, target)))
        elif name == "x":
            qubit = self._operand(self.qregs, "qubit")
            self._expect(";")
            self.instructions.append(QasmInstruction("x", (), (qubit,)))
        elif name == "measure":
            qubit = self._operand(self.qregs, "qubit")
            self._expect_kind("arrow", "'->'")
            bit = self._operand(self.cregs, "bit")
            self._expect(";")
            self.instructions.append(QasmInstruction("measure", (), (qubit,), (bit,)))
        elif name == "barrier":
            qubits = [self._operand(self.qregs, "qubit")]
            while self._peek() is not None and self._peek().text == ",":
                self.pos += 1
                qubits.append(self._operand(self.qregs, "qubit"))
            self._expect(";")
            self.instructions.append(QasmInstruction("barrier", (), tuple(qubits)))
        else:
            raise QasmError(f"unsupported gate or statement {name!r}", token.line, token.column)

    def _declaration(self, keyword: _Token) -> None:
        name = self._expect_kind("id", "a register name")
        self._expect("[")
        size_token = self._expect_kind("number", "a register size")
        if not size_token.text.isdigit() or int(size_token.text) == 0:
            raise QasmError(f"invalid register size {size_token.text!r}", size_token.line, size_token.column)
        self._expect("]")
        self._expect(";")
        if name.text in self.qregs or name.text in self.cregs:
            raise QasmError(f"register {name.text!r} declared twice", name.line, name.column)
        registers = self.qregs if keyword.text == "qreg" else self.cregs
        registers[name.text] = int(size_token.text)

    def _operand(self, registers: Dict[str, int], kind: str) -> Tuple[str, int]:
        reg = self._expect_kind("id", f"a {kind} register")
        bracket = self._peek()
        if bracket is None or bracket.text != "[":
            raise QasmError(
                f"malformed {kind} reference {reg.text!r}; expected {reg.text}[index]",
                reg.line,
                reg.column,
            )
        self.pos += 1
        index_token = self._expect_kind("number", "an index")
        if not index_token.text.isdigit():
            raise QasmError(f"malformed index {index_token.text!r}", index_token.line, index_token.column)
        self._expect("]")
        index = int(index_token.text)
        _check_operand(registers, reg.text, index, kind, index_token)
        return reg.text, index

    # expression := term (('+' | '-') term)*
    def _expression(self) -> float:
        value = self._term()
        while self._peek() is not None and self._peek().text in ("+", "-"):
            op = self._next("an operator").text
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    # term := factor (('*' | '/') factor)*
    def _term(self) -> float:
        value = self._factor()
        while self._peek() is not None and self._peek().text in ("*", "/"):
            op = self._next("an operator")
            rhs = self._factor()
            if op.text == "*":
                value *= rhs
            elif rhs == 0:
                raise QasmError("division by zero in angle", op.line, op.column)
            else:
                value /= rhs
        return value

    # factor := ('-' | '+') factor | number | 'pi' | '(' expression ')'
    def _factor(self) -> float:
        token = self._next("an angle")
        if token.text in ("-", "+"):
            value = self._factor()
            return -value if token.text == "-" else value
        if token.kind == "number":
            return float(token.text)
        if token.text == "pi":
            return math.pi
        if token.text == "(":
            value = self._expression()
            self._expect(")")
            return value
        raise QasmError(f"unexpected {token.text!r} in angle", token.line, token.column)


def parse(text: str) -> QasmProgram:
    """
    Parse OpenQASM 2.0 source in the supported subset.

    Raises:
        QasmError: On any syntax error, unsupported statement, unsupported
            version or out-of-range register reference; the error carries the
            line and column
    """
    program = _Parser(text).parse()
    logger.debug(f"Parsed {len(program.instructions)} QASM instructions")
    return program


def to_circuit(prog: QasmProgram, mapping: Optional[Dict[int, int]] = None) -> Circuit:
    """
    Convert a program back into a circuit.

    Qubits are numbered across registers in declaration order. ``measure`` and
    ``barrier`` carry no unitary action and are dropped.

    Args:
        prog: The program
        mapping: Physical qubit index -> wire; the inverse of
            ``default_mapping`` when omitted

    Raises:
        ValueError: If a used qubit has no wire in the mapping
    """
    width = prog.num_qubits
    if mapping is None:
        mapping = {physical: wire for wire, physical in default_mapping(width).items()}
    mapping = dict(mapping)
    offsets = prog.qubit_offsets()

    def wire_of(operand: Tuple[str, int]) -> int:
        physical = offsets[operand[0]] + operand[1]
        if physical not in mapping:
            raise ValueError(f"Qubit {operand[0]}[{operand[1]}] has no wire in the mapping")
        return mapping[physical]

    gates = []
    for instruction in prog.instructions:
        if instruction.name in ("measure", "barrier"):
            continue
        wires = [wire_of(q) for q in instruction.qubits]
        if instruction.name == "ry":
            gates.append(Gate.ry(instruction.params[0], wires[0]))
        elif instruction.name == "cx":
            gates.append(Gate.cnot(wires[0], wires[1]))
        elif instruction.name == "x":
            gates.append(Gate.x(wires[0]))
        else:
            raise ValueError(f"Instruction {instruction.name!r} has no circuit counterpart")

    circuit_width = max([width] + [w + 1 for w in mapping.values()])
    return Circuit(circuit_width, gates)
