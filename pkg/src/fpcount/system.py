"""Boolean dynamical systems: networks, local functions, schedules, fixed points.

Vertices are the integers ``1..n``.  A configuration is a tuple of ``n`` bits,
position ``i - 1`` holding the state of vertex ``i``.  The function of vertex
``i`` reads its arguments in the ascending order of ``{i} | N(i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ValidationError
from .functions import Circuit, Formula, FunctionRepr, TruthTable, evaluate, max_var_index

Configuration = tuple  # tuple[int, ...] of 0/1


@dataclass(frozen=True)
class Network:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("vertex count must be non-negative")
        normalized = set()
        for edge in self.edges:
            u, v = edge
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValidationError(f"edge {edge} has an endpoint outside 1..{self.n}")
            if u == v:
                raise ValidationError(f"loop at vertex {u} is not allowed")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Network":
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adjacency.values()), default=0)

    def scope(self, v: int) -> tuple:
        """Ascending closed neighbourhood of ``v``: the argument order of f_v."""
        return tuple(sorted(self.adjacency[v] | {v}))


def neighbors(network: Network, U: Iterable[int]) -> frozenset:
    """Vertices outside ``U`` adjacent to some member of ``U``."""
    U = frozenset(U)
    for u in U:
        if not 1 <= u <= network.n:
            raise ValidationError(f"vertex {u} out of range 1..{network.n}")
    out = set()
    for u in U:
        out |= network.adjacency[u]
    return frozenset(out - U)


@dataclass(frozen=True)
class System:
    network: Network
    functions: tuple

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(self.functions))
        if len(self.functions) != self.network.n:
            raise ValidationError(f"expected {self.network.n} functions, got {len(self.functions)}")
        for v, f in zip(self.network.vertices, self.functions):
            k = len(self.network.scope(v))
            if isinstance(f, (TruthTable, Circuit)):
                if f.arity != k:
                    raise ValidationError(f"function of vertex {v} has arity {f.arity}, expected {k}")
            elif isinstance(f, Formula):
                if max_var_index(f) > k:
                    raise ValidationError(
                        f"formula of vertex {v} references x{max_var_index(f)} but vertex has {k} arguments"
                    )
            else:
                raise ValidationError(f"vertex {v}: unsupported function representation {type(f).__name__}")

    @property
    def n(self) -> int:
        return self.network.n

    def function(self, v: int) -> FunctionRepr:
        return self.functions[v - 1]

    def scope(self, v: int) -> tuple:
        return self.network.scope(v)

    @cached_property
    def scopes(self) -> tuple:
        return tuple(self.network.scope(v) for v in self.network.vertices)

    def local_value(self, v: int, config: Sequence[int]) -> int:
        return evaluate(self.functions[v - 1], [config[u - 1] for u in self.scopes[v - 1]])

    def representation(self) -> str:
        """``table``, ``formula``, ``circuit`` or ``mixed``."""
        kinds = {_kind(f) for f in self.functions}
        if len(kinds) == 1:
            return kinds.pop()
        return "mixed" if kinds else "table"


def _kind(f) -> str:
    if isinstance(f, TruthTable):
        return "table"
    if isinstance(f, Circuit):
        return "circuit"
    return "formula"


@dataclass(frozen=True)
class UpdateSchedule:
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(frozenset(s) for s in self.steps))

    def validate(self, n: int) -> None:
        for t, step in enumerate(self.steps, 1):
            for v in step:
                if not 1 <= v <= n:
                    raise ValidationError(f"schedule step {t} names vertex {v} outside 1..{n}")

    def __len__(self):
        return len(self.steps)


def configuration(bits: Iterable, n: int | None = None) -> Configuration:
    if isinstance(bits, str):
        bits = [c for c in bits.strip()]
    out = []
    for b in bits:
        if b in (0, 1, "0", "1", True, False):
            out.append(int(b))
        else:
            raise ValidationError(f"configuration entries must be bits, got {b!r}")
    if n is not None and len(out) != n:
        raise ValidationError(f"configuration has length {len(out)}, expected {n}")
    return tuple(out)


def _check_config(system: System, config) -> None:
    if len(config) != system.n:
        raise ValidationError(f"configuration has length {len(config)}, expected {system.n}")


def global_transition(system: System, U: Iterable[int], config: Sequence[int]) -> Configuration:
    """Apply the activity functions for vertex set ``U`` simultaneously."""
    _check_config(system, config)
    U = frozenset(U)
    return tuple(
        system.local_value(v, config) if v in U else config[v - 1]
        for v in system.network.vertices
    )


def global_map(system: System, schedule: UpdateSchedule, config: Sequence[int]) -> Configuration:
    schedule.validate(system.n)
    state = tuple(config)
    for step in schedule.steps:
        state = global_transition(system, step, state)
    return state


def is_local_fixed_point(system: System, U: Iterable[int], config: Sequence[int]) -> bool:
    _check_config(system, config)
    return all(system.local_value(v, config) == config[v - 1] for v in set(U))


def is_fixed_point(system: System, config: Sequence[int]) -> bool:
    return is_local_fixed_point(system, system.network.vertices, config)


def synchronous_schedule(n: int, steps: int = 1) -> UpdateSchedule:
    return UpdateSchedule(tuple(range(1, n + 1)) for _ in range(steps))
