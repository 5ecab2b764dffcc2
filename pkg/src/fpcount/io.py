"""SystemFile: a JSON document describing a system.

::

    {
      "n": 3,
      "edges": [[1, 2], [2, 3]],
      "functions": [
        {"vertex": 1, "args": [1, 2], "table": "0111"},
        {"vertex": 2, "args": [1, 2, 3], "formula": "maj(x1, x2, x3)"},
        {"vertex": 3, "args": [2, 3],
         "circuit": {"gates": [["in", 1], ["in", 2], ["xor", 0, 1]], "output": 2}}
      ],
      "schedule": [[1, 3], [2]]
    }

``args`` must equal the ascending closed neighbourhood of the vertex.  A
table lists ``f(args)`` for all argument tuples in increasing binary order,
first argument most significant.  Formula text follows the grammar of
:func:`~fpcount.functions.parse_formula`, variable ``xj`` being the j-th
entry of ``args``.  Circuit gates are ``[op, operand, ...]``; an ``in``
gate names its (1-based) argument, other gates name earlier gates by index.
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import ValidationError
from .functions import Circuit, Gate, TruthTable, format_formula, parse_formula
from .system import Network, System, UpdateSchedule


def system_to_dict(s: System, schedule: Optional[UpdateSchedule] = None) -> dict:
    functions = []
    for v in s.network.vertices:
        f = s.function(v)
        entry = {"vertex": v, "args": list(s.scopes[v - 1])}
        if isinstance(f, TruthTable):
            entry["table"] = f.bits
        elif isinstance(f, Circuit):
            entry["circuit"] = {
                "gates": [[g.op, *g.args] for g in f.gates],
                "output": f.output,
            }
        else:
            entry["formula"] = format_formula(f)
        functions.append(entry)
    doc = {"n": s.n, "edges": [list(e) for e in sorted(s.network.edges)], "functions": functions}
    if schedule is not None:
        doc["schedule"] = [sorted(step) for step in schedule.steps]
    return doc


def dumps_system(s: System, schedule: Optional[UpdateSchedule] = None) -> str:
    return json.dumps(system_to_dict(s, schedule), indent=2, sort_keys=True) + "\n"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValidationError(message)


def system_from_dict(doc: dict) -> tuple:
    """``(system, schedule or None)`` from a parsed SystemFile document."""
    _require(isinstance(doc, dict), "system file must be a JSON object")
    n = doc.get("n")
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 0, "'n' must be a non-negative integer")
    raw_edges = doc.get("edges", [])
    _require(isinstance(raw_edges, list), "'edges' must be a list")
    edges = []
    for e in raw_edges:
        _require(isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e),
                 f"edge {e!r} must be a pair of integers")
        edges.append(tuple(e))
    network = Network.from_edges(n, edges)
    _require(len(set(network.edges)) == len(edges), "duplicate edge in 'edges'")
    entries = doc.get("functions")
    _require(isinstance(entries, list) and len(entries) == n, f"'functions' must list exactly {n} entries")
    by_vertex = {}
    for entry in entries:
        _require(isinstance(entry, dict), "function entries must be objects")
        v = entry.get("vertex")
        _require(isinstance(v, int) and 1 <= v <= n, f"function entry has bad vertex {v!r}")
        _require(v not in by_vertex, f"vertex {v} has two function entries")
        scope = network.scope(v)
        _require(entry.get("args") == list(scope),
                 f"vertex {v}: args must be the ascending closed neighbourhood {list(scope)}")
        kinds = [k for k in ("table", "formula", "circuit") if k in entry]
        _require(len(kinds) == 1, f"vertex {v}: give exactly one of table, formula, circuit")
        by_vertex[v] = _function(entry, kinds[0], len(scope), v)
    system = System(network, tuple(by_vertex[v] for v in network.vertices))
    schedule = None
    if "schedule" in doc:
        steps = doc["schedule"]
        _require(isinstance(steps, list) and all(isinstance(st, list) for st in steps),
                 "'schedule' must be a list of vertex lists")
        schedule = UpdateSchedule(tuple(steps))
        schedule.validate(n)
    return system, schedule


def _function(entry: dict, kind: str, arity: int, v: int):
    value = entry[kind]
    if kind == "table":
        _require(isinstance(value, str), f"vertex {v}: table must be a bit string")
        _require(len(value) == 1 << arity, f"vertex {v}: table needs {1 << arity} bits, got {len(value)}")
        return TruthTable(arity, value)
    if kind == "formula":
        _require(isinstance(value, str), f"vertex {v}: formula must be a string")
        return parse_formula(value, arity)
    _require(isinstance(value, dict) and "gates" in value and "output" in value,
             f"vertex {v}: circuit needs 'gates' and 'output'")
    gates = []
    for g in value["gates"]:
        _require(isinstance(g, list) and g and isinstance(g[0], str), f"vertex {v}: bad gate {g!r}")
        gates.append(Gate(g[0], tuple(g[1:])))
    return Circuit(arity, tuple(gates), value["output"])


def loads_system(text: str) -> tuple:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"system file is not valid JSON: {exc}") from None
    return system_from_dict(doc)


def read_system(path: str) -> tuple:
    with open(path, encoding="utf-8") as fh:
        return loads_system(fh.read())


def write_system(path: str, s: System, schedule: Optional[UpdateSchedule] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_system(s, schedule))
