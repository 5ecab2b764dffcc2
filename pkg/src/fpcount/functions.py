"""Local transition functions: lookup tables, formulas and circuits.

All three representations describe a boolean function of ``k`` positional
arguments.  Argument ``j`` (1-based) is written ``xj`` in formula text; in a
system it is bound to the j-th vertex of the ascending closed neighbourhood.

Table bit order: the entry for ``(v1, ..., vk)`` lives at index
``sum(vj << (k - j))``, i.e. the first argument is the most significant bit.

Formula grammar (loosest binding first)::

    expr    := xor ('|' xor)*
    xor     := conj ('^' conj)*
    conj    := unary ('&' unary)*
    unary   := '!' unary | atom
    atom    := 'x' DIGITS | '0' | '1' | '(' expr ')'
             | ('maj' | 's00' | 's10') '(' expr ',' expr ',' expr ')'
             | ('and' | 'or' | 'xor') '(' expr (',' expr)* ')'

A chain ``a & b & c`` parses to one n-ary node; parentheses keep nesting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Sequence, Union

import numpy as np

from .errors import ArityCapExceeded, FormulaSyntaxError, ValidationError

DEFAULT_ARITY_CAP = 20


# ---------------------------------------------------------------------------
# Lookup tables


@dataclass(frozen=True)
class TruthTable:
    arity: int
    bits: str

    def __post_init__(self):
        if self.arity < 0:
            raise ValidationError("table arity must be non-negative")
        if len(self.bits) != 1 << self.arity:
            raise ValidationError(
                f"table of arity {self.arity} needs {1 << self.arity} bits, got {len(self.bits)}"
            )
        if self.bits.strip("01"):
            raise ValidationError("table bits must be a string of 0/1 characters")

    @classmethod
    def from_array(cls, arity: int, values) -> "TruthTable":
        arr = np.asarray(values, dtype=np.uint8)
        return cls(arity, (arr + 48).tobytes().decode("ascii"))

    @cached_property
    def array(self) -> np.ndarray:
        return np.frombuffer(self.bits.encode("ascii"), dtype=np.uint8) - 48

    def __getitem__(self, index: int) -> int:
        return 1 if self.bits[index] == "1" else 0

    def __len__(self):
        return len(self.bits)


def table_index(args: Sequence[int]) -> int:
    idx = 0
    for v in args:
        idx = (idx << 1) | (1 if v else 0)
    return idx


# ---------------------------------------------------------------------------
# Formula AST


class Formula:
    """Base class of formula nodes.  Nodes are immutable trees."""

    symbol = ""

    @property
    def children(self) -> tuple:
        return ()

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Var(Formula):
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValidationError("variable indices are 1-based")


@dataclass(frozen=True)
class Const(Formula):
    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValidationError("constants are 0 or 1")


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    @property
    def children(self):
        return (self.child,)


@dataclass(frozen=True, init=False)
class _NAry(Formula):
    operands: tuple = field()

    def __init__(self, *operands):
        if not operands:
            raise ValidationError(f"{type(self).__name__} needs at least one operand")
        object.__setattr__(self, "operands", tuple(operands))

    @property
    def children(self):
        return self.operands


class And(_NAry):
    symbol = "&"


class Or(_NAry):
    symbol = "|"


class Xor(_NAry):
    symbol = "^"


@dataclass(frozen=True)
class _Ternary(Formula):
    a: Formula
    b: Formula
    c: Formula

    @property
    def children(self):
        return (self.a, self.b, self.c)


class Maj3(_Ternary):
    """(a & b) | (a & c) | (b & c)"""

    symbol = "maj"


class S00(_Ternary):
    """a | (b & c)"""

    symbol = "s00"


class S10(_Ternary):
    """a & (b | c)"""

    symbol = "s10"


# ---------------------------------------------------------------------------
# Circuits

GATE_OPS = ("in", "const", "not", "and", "or", "xor", "maj", "s00", "s10")
_GATE_ARITY = {"not": 1, "maj": 3, "s00": 3, "s10": 3}


@dataclass(frozen=True)
class Gate:
    op: str
    args: tuple

    def __post_init__(self):
        if self.op not in GATE_OPS:
            raise ValidationError(f"unknown gate operator {self.op!r}")
        object.__setattr__(self, "args", tuple(int(a) for a in self.args))
        if self.op in ("in", "const") and len(self.args) != 1:
            raise ValidationError(f"{self.op} gate takes exactly one parameter")
        if self.op in _GATE_ARITY and len(self.args) != _GATE_ARITY[self.op]:
            raise ValidationError(f"{self.op} gate takes {_GATE_ARITY[self.op]} operands")
        if self.op in ("and", "or", "xor") and not self.args:
            raise ValidationError(f"{self.op} gate needs at least one operand")


@dataclass(frozen=True)
class Circuit:
    """Gates in topological order; operator gates reference earlier gates by index."""

    arity: int
    gates: tuple
    output: int

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        seen_inputs = []
        for pos, gate in enumerate(self.gates):
            if gate.op == "in":
                seen_inputs.append(gate.args[0])
            elif gate.op == "const":
                if gate.args[0] not in (0, 1):
                    raise ValidationError("const gate value must be 0 or 1")
            elif any(r < 0 or r >= pos for r in gate.args):
                raise ValidationError(f"gate {pos} must reference earlier gates only")
        if sorted(seen_inputs) != list(range(1, self.arity + 1)):
            raise ValidationError(f"circuit of arity {self.arity} needs input gates 1..{self.arity} exactly once")
        if not 0 <= self.output < len(self.gates):
            raise ValidationError("circuit output gate out of range")

    @property
    def size(self) -> int:
        return len(self.gates)


FunctionRepr = Union[TruthTable, Formula, Circuit]


# ---------------------------------------------------------------------------
# Evaluation


def _eval_formula(node, args):
    # works for python ints and numpy uint8 arrays alike
    if isinstance(node, Var):
        return args[node.index - 1]
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Not):
        return _eval_formula(node.child, args) ^ 1
    if isinstance(node, And):
        return reduce(lambda p, q: p & q, (_eval_formula(c, args) for c in node.operands))
    if isinstance(node, Or):
        return reduce(lambda p, q: p | q, (_eval_formula(c, args) for c in node.operands))
    if isinstance(node, Xor):
        return reduce(lambda p, q: p ^ q, (_eval_formula(c, args) for c in node.operands))
    a, b, c = (_eval_formula(ch, args) for ch in node.children)
    if isinstance(node, Maj3):
        return (a & b) | (a & c) | (b & c)
    if isinstance(node, S00):
        return a | (b & c)
    if isinstance(node, S10):
        return a & (b | c)
    raise TypeError(f"not a formula node: {node!r}")


def _eval_gate(op, vals):
    if op == "not":
        return vals[0] ^ 1
    if op == "and":
        return reduce(lambda p, q: p & q, vals)
    if op == "or":
        return reduce(lambda p, q: p | q, vals)
    if op == "xor":
        return reduce(lambda p, q: p ^ q, vals)
    a, b, c = vals
    if op == "maj":
        return (a & b) | (a & c) | (b & c)
    if op == "s00":
        return a | (b & c)
    return a & (b | c)


def _eval_circuit(circuit: Circuit, args):
    values = []
    for gate in circuit.gates:
        if gate.op == "in":
            values.append(args[gate.args[0] - 1])
        elif gate.op == "const":
            values.append(gate.args[0])
        else:
            values.append(_eval_gate(gate.op, [values[r] for r in gate.args]))
    return values[circuit.output]


def evaluate_many(repr: FunctionRepr, columns):
    """Evaluate on column vectors (one uint8 array per argument); returns an array."""
    if isinstance(repr, TruthTable):
        idx = np.zeros(len(columns[0]) if columns else 1, dtype=np.int64)
        for col in columns:
            idx = (idx << 1) | col
        return repr.array[idx]
    if isinstance(repr, Circuit):
        out = _eval_circuit(repr, columns)
    else:
        out = _eval_formula(repr, columns)
    size = len(columns[0]) if columns else 1
    return np.broadcast_to(np.asarray(out, dtype=np.uint8), (size,))


def arity_of(repr: FunctionRepr) -> int | None:
    """Declared arity for tables/circuits; highest variable index for formulas."""
    if isinstance(repr, (TruthTable, Circuit)):
        return repr.arity
    return max_var_index(repr)


def max_var_index(node: Formula) -> int:
    best = 0
    stack = [node]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Var):
            best = max(best, cur.index)
        stack.extend(cur.children)
    return best


def evaluate(repr: FunctionRepr, args: Sequence[int]) -> int:
    """Value of ``repr`` at the argument tuple ``args``."""
    args = [1 if a else 0 for a in args]
    if isinstance(repr, TruthTable):
        if len(args) != repr.arity:
            raise ValidationError(f"expected {repr.arity} arguments, got {len(args)}")
        return repr[table_index(args)]
    if isinstance(repr, Circuit):
        if len(args) != repr.arity:
            raise ValidationError(f"expected {repr.arity} arguments, got {len(args)}")
        return int(_eval_circuit(repr, args))
    if max_var_index(repr) > len(args):
        raise ValidationError(f"formula references x{max_var_index(repr)} but only {len(args)} arguments given")
    return int(_eval_formula(repr, args))


def to_table(repr: FunctionRepr, arity: int, cap: int = DEFAULT_ARITY_CAP) -> TruthTable:
    """Tabulate a formula or circuit over all ``2**arity`` inputs."""
    if isinstance(repr, TruthTable):
        if repr.arity != arity:
            raise ValidationError(f"table has arity {repr.arity}, expected {arity}")
        return repr
    if arity > cap:
        raise ArityCapExceeded(f"arity {arity} exceeds table conversion cap {cap}")
    if isinstance(repr, Circuit) and repr.arity != arity:
        raise ValidationError(f"circuit has arity {repr.arity}, expected {arity}")
    if isinstance(repr, Formula) and max_var_index(repr) > arity:
        raise ValidationError(f"formula references x{max_var_index(repr)} beyond arity {arity}")
    idx = np.arange(1 << arity, dtype=np.int64)
    columns = [((idx >> (arity - 1 - j)) & 1).astype(np.uint8) for j in range(arity)]
    return TruthTable.from_array(arity, evaluate_many(repr, columns))


# ---------------------------------------------------------------------------
# Dualization


def dualize(repr: FunctionRepr) -> FunctionRepr:
    """Return the dual function ``x -> not f(not x)`` in the same representation.

    Formulas and circuits swap And/Or, S00/S10 and the two constants;
    Maj3 is self-dual.  An Xor with an even number of operands needs an extra
    parity flip, which toggles an existing constant operand when there is one
    and otherwise appends ``1``.
    """
    if isinstance(repr, TruthTable):
        flipped = repr.bits[::-1].translate(str.maketrans("01", "10"))
        return TruthTable(repr.arity, flipped)
    if isinstance(repr, Circuit):
        return _dualize_circuit(repr)
    return _dualize_formula(repr)


def _dualize_formula(node):
    if isinstance(node, Var):
        return node
    if isinstance(node, Const):
        return Const(1 - node.value)
    if isinstance(node, Not):
        return Not(_dualize_formula(node.child))
    kids = [_dualize_formula(c) for c in node.children]
    if isinstance(node, And):
        return Or(*kids)
    if isinstance(node, Or):
        return And(*kids)
    if isinstance(node, Xor):
        if len(kids) % 2 == 0:
            for pos, kid in enumerate(kids):
                if isinstance(kid, Const):
                    kids[pos] = Const(1 - kid.value)
                    break
            else:
                kids.append(Const(1))
        return Xor(*kids)
    if isinstance(node, Maj3):
        return Maj3(*kids)
    if isinstance(node, S00):
        return S10(*kids)
    if isinstance(node, S10):
        return S00(*kids)
    raise TypeError(f"not a formula node: {node!r}")


_DUAL_OP = {"and": "or", "or": "and", "s00": "s10", "s10": "s00"}


def _dualize_circuit(circuit: Circuit) -> Circuit:
    gates = []
    remap = {}
    for pos, gate in enumerate(circuit.gates):
        if gate.op == "const":
            new = Gate("const", (1 - gate.args[0],))
        elif gate.op == "in":
            new = gate
        else:
            args = tuple(remap[r] for r in gate.args)
            if gate.op == "xor" and len(args) % 2 == 0:
                gates.append(Gate("const", (1,)))
                args = args + (len(gates) - 1,)
            new = Gate(_DUAL_OP.get(gate.op, gate.op), args)
        gates.append(new)
        remap[pos] = len(gates) - 1
    return Circuit(circuit.arity, tuple(gates), remap[circuit.output])


# ---------------------------------------------------------------------------
# Syntactic properties

_BASIS_NAME = {And: "And", Or: "Or", Xor: "Xor", Not: "Not", Const: "Const", Maj3: "Maj3", S00: "S00", S10: "S10"}
_GATE_BASIS = {"and": "And", "or": "Or", "xor": "Xor", "not": "Not", "const": "Const",
               "maj": "Maj3", "s00": "S00", "s10": "S10"}


def syntactic_basis(repr: Formula | Circuit) -> frozenset:
    """Names of the operator kinds occurring in a formula or circuit."""
    if isinstance(repr, Circuit):
        used = {_GATE_BASIS[g.op] for g in _reachable_gates(repr) if g.op != "in"}
        return frozenset(used)
    found = set()
    stack = [repr]
    while stack:
        node = stack.pop()
        if not isinstance(node, Var):
            found.add(_BASIS_NAME[type(node)])
        stack.extend(node.children)
    return frozenset(found)


def _reachable_gates(circuit: Circuit):
    live = {circuit.output}
    for pos in range(len(circuit.gates) - 1, -1, -1):
        if pos in live and circuit.gates[pos].op not in ("in", "const"):
            live.update(circuit.gates[pos].args)
    return [circuit.gates[p] for p in sorted(live)]


def formula_size(node: Formula) -> int:
    """Number of symbols (variables, constants and operators) in the formula."""
    count = 0
    stack = [node]
    while stack:
        cur = stack.pop()
        count += 1
        stack.extend(cur.children)
    return count


def formula_to_circuit(node: Formula, arity: int) -> Circuit:
    """Flatten a formula into a circuit, binarizing n-ary operators and sharing equal subterms."""
    if max_var_index(node) > arity:
        raise ValidationError(f"formula references x{max_var_index(node)} beyond arity {arity}")
    gates = [Gate("in", (j,)) for j in range(1, arity + 1)]
    memo = {}

    def emit(op, args):
        key = (op, args)
        if key not in memo:
            gates.append(Gate(op, args))
            memo[key] = len(gates) - 1
        return memo[key]

    def build(cur):
        if isinstance(cur, Var):
            return cur.index - 1
        if isinstance(cur, Const):
            return emit("const", (cur.value,))
        kids = [build(c) for c in cur.children]
        if isinstance(cur, Not):
            return emit("not", (kids[0],))
        if isinstance(cur, _Ternary):
            return emit(cur.symbol, tuple(kids))
        op = {And: "and", Or: "or", Xor: "xor"}[type(cur)]
        if len(kids) == 1:
            return emit(op, (kids[0],))
        acc = kids[0]
        for k in kids[1:]:
            acc = emit(op, (acc, k))
        return acc

    out = build(node)
    return Circuit(arity, tuple(gates), out)


# ---------------------------------------------------------------------------
# Parsing and printing

_TOKEN = re.compile(r"\s*(?:(x\d+)|(maj|s00|s10|and|or|xor)\b|([01])(?![0-9])|([!&^|(),]))")
_NAMED_TERNARY = {"maj": Maj3, "s00": S00, "s10": S10}
_NAMED_NARY = {"and": And, "or": Or, "xor": Xor}


class _Parser:
    def __init__(self, text, arity):
        self.text = text
        self.arity = arity
        self.tokens = []
        pos = 0
        stripped_end = len(text.rstrip())
        while pos < stripped_end:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise FormulaSyntaxError(f"unexpected character {text[pos:pos + 1]!r}", pos)
            start = m.start(m.lastindex)
            self.tokens.append((m.group(m.lastindex), start))
            pos = m.end()
        self.tokens.append((None, len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, expected=None):
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            shown = "end of input" if tok is None else repr(tok)
            raise FormulaSyntaxError(f"expected {expected!r}, found {shown}", pos)
        self.i += 1
        return tok, pos

    def parse(self):
        node = self.level(0)
        tok, pos = self.tokens[self.i]
        if tok is not None:
            raise FormulaSyntaxError(f"unexpected {tok!r}", pos)
        return node

    _LEVELS = (("|", Or), ("^", Xor), ("&", And))

    def level(self, depth):
        if depth == len(self._LEVELS):
            return self.unary()
        sym, cls = self._LEVELS[depth]
        operands = [self.level(depth + 1)]
        while self.peek() == sym:
            self.take()
            operands.append(self.level(depth + 1))
        return operands[0] if len(operands) == 1 else cls(*operands)

    def unary(self):
        if self.peek() == "!":
            self.take()
            return Not(self.unary())
        return self.atom()

    def atom(self):
        tok, pos = self.take()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of input", pos)
        if tok.startswith("x"):
            idx = int(tok[1:])
            if idx < 1:
                raise FormulaSyntaxError("variable indices start at x1", pos)
            if self.arity is not None and idx > self.arity:
                raise FormulaSyntaxError(f"variable {tok} exceeds arity {self.arity}", pos)
            return Var(idx)
        if tok in ("0", "1"):
            return Const(int(tok))
        if tok == "(":
            node = self.level(0)
            self.take(")")
            return node
        if tok in _NAMED_TERNARY or tok in _NAMED_NARY:
            self.take("(")
            args = [self.level(0)]
            while self.peek() == ",":
                self.take()
                args.append(self.level(0))
            self.take(")")
            if tok in _NAMED_TERNARY:
                if len(args) != 3:
                    raise FormulaSyntaxError(f"{tok} takes exactly 3 arguments", pos)
                return _NAMED_TERNARY[tok](*args)
            return _NAMED_NARY[tok](*args)
        raise FormulaSyntaxError(f"unexpected {tok!r}", pos)


def parse_formula(text: str, arity: int | None = None) -> Formula:
    """Parse formula text; ``arity`` (if given) bounds the variable indices."""
    return _Parser(text, arity).parse()


_PREC = {Or: 1, Xor: 2, And: 3}


def format_formula(node: Formula) -> str:
    """Print a formula so that :func:`parse_formula` reproduces the same AST."""
    if isinstance(node, Var):
        return f"x{node.index}"
    if isinstance(node, Const):
        return str(node.value)
    if isinstance(node, Not):
        inner = format_formula(node.child)
        return "!" + (f"({inner})" if type(node.child) in _PREC else inner)
    if isinstance(node, _Ternary):
        return f"{node.symbol}({', '.join(format_formula(c) for c in node.children)})"
    if len(node.operands) == 1:
        name = {And: "and", Or: "or", Xor: "xor"}[type(node)]
        return f"{name}({format_formula(node.operands[0])})"
    prec = _PREC[type(node)]
    parts = []
    for child in node.operands:
        text = format_formula(child)
        if type(child) in _PREC and _PREC[type(child)] <= prec and len(child.operands) > 1:
            text = f"({text})"
        parts.append(text)
    return f" {node.symbol} ".join(parts)
