"""Seeded random instances for the tests."""

from __future__ import annotations

import random

from fpcount.functions import (
    And,
    Circuit,
    Const,
    Gate,
    Maj3,
    Not,
    Or,
    S00,
    S10,
    TruthTable,
    Var,
    Xor,
)
from fpcount.system import Network, System


def random_network(rng: random.Random, n: int, p: float = None) -> Network:
    p = rng.uniform(0.1, 0.5) if p is None else p
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Network.from_edges(n, edges)


def random_table(rng: random.Random, k: int) -> TruthTable:
    return TruthTable(k, "".join(rng.choice("01") for _ in range(1 << k)))


def random_formula(rng: random.Random, k: int, depth: int = 3):
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.08:
            return Const(rng.randint(0, 1))
        return Var(rng.randint(1, k))
    kind = rng.choice(["not", "and", "or", "xor", "maj", "s00", "s10"])
    sub = lambda: random_formula(rng, k, depth - 1)
    if kind == "not":
        return Not(sub())
    if kind in ("and", "or", "xor"):
        cls = {"and": And, "or": Or, "xor": Xor}[kind]
        return cls(*(sub() for _ in range(rng.randint(2, 3))))
    cls = {"maj": Maj3, "s00": S00, "s10": S10}[kind]
    return cls(sub(), sub(), sub())


def random_circuit(rng: random.Random, k: int, extra: int = 4) -> Circuit:
    order = list(range(1, k + 1))
    rng.shuffle(order)
    gates = [Gate("in", (j,)) for j in order]
    if not gates:
        gates.append(Gate("const", (rng.randint(0, 1),)))
    for _ in range(rng.randint(1, extra)):
        op = rng.choice(["not", "and", "or", "xor", "maj", "s00", "s10", "const"])
        pos = len(gates)
        if op == "const":
            gates.append(Gate("const", (rng.randint(0, 1),)))
        elif op == "not":
            gates.append(Gate("not", (rng.randrange(pos),)))
        elif op in ("maj", "s00", "s10"):
            gates.append(Gate(op, tuple(rng.randrange(pos) for _ in range(3))))
        else:
            gates.append(Gate(op, tuple(rng.randrange(pos) for _ in range(rng.randint(1, 3)))))
    return Circuit(k, tuple(gates), len(gates) - 1)


def xor_function(rng: random.Random, k: int):
    terms = [Var(j) for j in range(1, k + 1) if rng.random() < 0.5]
    if rng.random() < 0.5:
        terms.append(Const(1))
    if not terms:
        return Const(rng.randint(0, 1))
    node = Xor(*terms) if len(terms) > 1 else terms[0]
    return Not(node) if rng.random() < 0.2 else node


def and_function(rng: random.Random, k: int, own_index: int, op=And):
    r = rng.random()
    if r < 0.08:
        return Const(rng.randint(0, 1))
    members = [j for j in range(1, k + 1) if rng.random() < 0.5]
    if rng.random() < 0.5 and own_index not in members:
        members.append(own_index)
    if not members:
        members = [rng.randint(1, k)]
    return op(*(Var(j) for j in sorted(members))) if len(members) > 1 else Var(members[0])


def random_system(rng: random.Random, n: int, kind: str) -> System:
    g = random_network(rng, n)
    funcs = []
    for v in g.vertices:
        scope = g.scope(v)
        k = len(scope)
        own = scope.index(v) + 1
        if kind == "table":
            funcs.append(random_table(rng, k))
        elif kind == "formula":
            funcs.append(random_formula(rng, k))
        elif kind == "circuit":
            funcs.append(random_circuit(rng, k))
        elif kind == "xor":
            funcs.append(xor_function(rng, k))
        elif kind == "and":
            funcs.append(and_function(rng, k, own))
        elif kind == "or":
            funcs.append(and_function(rng, k, own, op=Or))
        else:
            raise ValueError(kind)
    return System(g, tuple(funcs))
