"""Exact fixed-point counting engines and the dichotomy dispatcher.

Every engine returns an exact Python ``int``.  ``count_brute`` is the
reference; the other engines only run when their precondition holds and
raise :class:`~fpcount.errors.EngineNotApplicable` otherwise.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional

import numpy as np

from .errors import (
    BruteCapExceeded,
    DecompositionTooWide,
    NonLinearFunction,
    NotAndOrSystem,
    ScopeNotCovered,
)
from .functions import (
    DEFAULT_ARITY_CAP,
    And,
    Circuit,
    Const,
    Not,
    Or,
    TruthTable,
    Var,
    Xor,
    dualize,
    evaluate_many,
    to_table,
)
from .graphs import (
    Digraph,
    TreeDecomposition,
    closure_graph,
    decomposition_problems,
    has_vertex_cover_one,
    is_planar,
    scc_condensation,
    tree_decomposition,
)
from .post import and_set, classify, linear_coefficients
from .system import Network, System

DEFAULT_BRUTE_CAP = 26
DEFAULT_WIDTH_CAP = 12


@dataclass(frozen=True)
class Caps:
    brute: int = DEFAULT_BRUTE_CAP
    arity: int = DEFAULT_ARITY_CAP
    width: int = DEFAULT_WIDTH_CAP


# ---------------------------------------------------------------------------
# Brute force


def _fixed_point_indices(s: System, cap: int, condition: Optional[dict], arity_cap: int) -> np.ndarray:
    n = s.n
    if n > cap:
        raise BruteCapExceeded(f"brute-force enumeration of 2^{n} configurations exceeds cap 2^{cap}")
    evaluators = []
    for v in s.network.vertices:
        f = s.function(v)
        k = len(s.scopes[v - 1])
        if not isinstance(f, TruthTable) and k <= arity_cap:
            f = to_table(f, k, arity_cap)
        evaluators.append(f)
    order = sorted(s.network.vertices, key=lambda v: len(s.scopes[v - 1]))
    chunk = 1 << min(n, 20)
    survivors = []
    for start in range(0, 1 << n, chunk):
        idx = np.arange(start, min(start + chunk, 1 << n), dtype=np.int64)
        for v, b in (condition or {}).items():
            idx = idx[((idx >> (n - v)) & 1) == b]
        for v in order:
            if not len(idx):
                break
            cols = [((idx >> (n - u)) & 1).astype(np.uint8) for u in s.scopes[v - 1]]
            own = ((idx >> (n - v)) & 1).astype(np.uint8)
            idx = idx[evaluate_many(evaluators[v - 1], cols) == own]
        survivors.append(idx)
    return np.concatenate(survivors) if survivors else np.zeros(0, dtype=np.int64)


def count_brute(
    s: System,
    cap: int = DEFAULT_BRUTE_CAP,
    condition: Optional[dict] = None,
    arity_cap: int = DEFAULT_ARITY_CAP,
) -> int:
    """Count fixed points by enumerating all ``2**n`` configurations.

    ``condition`` optionally pins vertices to values (``{vertex: bit}``), in
    which case only the fixed points agreeing with it are counted.
    """
    return int(len(_fixed_point_indices(s, cap, condition, arity_cap)))


def fixed_points(s: System, cap: int = DEFAULT_BRUTE_CAP, condition: Optional[dict] = None) -> list:
    """All fixed points as configurations, in increasing binary order (vertex 1 most significant)."""
    n = s.n
    return [
        tuple((int(i) >> (n - v)) & 1 for v in range(1, n + 1))
        for i in _fixed_point_indices(s, cap, condition, DEFAULT_ARITY_CAP)
    ]


# ---------------------------------------------------------------------------
# Linear systems over GF(2)


def _formula_linear_form(node):
    """(constant, argument mask) for Xor/Not/Const/Var formulas, else None."""
    if isinstance(node, Var):
        return 0, 1 << node.index
    if isinstance(node, Const):
        return node.value, 0
    if isinstance(node, Not):
        inner = _formula_linear_form(node.child)
        return None if inner is None else (inner[0] ^ 1, inner[1])
    if isinstance(node, Xor) or (isinstance(node, (And, Or)) and len(node.operands) == 1):
        c, m = 0, 0
        for child in node.operands:
            part = _formula_linear_form(child)
            if part is None:
                return None
            c ^= part[0]
            m ^= part[1]
        return c, m
    return None


def _circuit_linear_form(circuit: Circuit):
    forms = []
    for gate in circuit.gates:
        if gate.op == "in":
            form = (0, 1 << gate.args[0])
        elif gate.op == "const":
            form = (gate.args[0], 0)
        elif gate.op == "not":
            prev = forms[gate.args[0]]
            form = None if prev is None else (prev[0] ^ 1, prev[1])
        elif gate.op == "xor" or (gate.op in ("and", "or") and len(gate.args) == 1):
            parts = [forms[r] for r in gate.args]
            if any(p is None for p in parts):
                form = None
            else:
                form = (0, 0)
                for p in parts:
                    form = (form[0] ^ p[0], form[1] ^ p[1])
        else:
            form = None
        forms.append(form)
    return forms[circuit.output]


def linear_form(f, arity: int, arity_cap: int = DEFAULT_ARITY_CAP):
    """``(a0, [a1..ak])`` for a linear function in any representation, else None.

    Formulas and circuits are read syntactically first (parity of occurrences
    and constant folding); a semantic table check is the fallback when the
    arity fits under ``arity_cap``.
    """
    if isinstance(f, TruthTable):
        coeffs = linear_coefficients(f)
        return None if coeffs is None else (coeffs[0], list(coeffs[1:]))
    form = _circuit_linear_form(f) if isinstance(f, Circuit) else _formula_linear_form(f)
    if form is not None:
        c, mask = form
        return c, [(mask >> j) & 1 for j in range(1, arity + 1)]
    if arity <= arity_cap:
        return linear_form(to_table(f, arity, arity_cap), arity)
    return None


def gf2_solve(rows, n_vars: int) -> tuple:
    """Reduce affine equations over GF(2).

    Each row is an int: bit 0 is the constant term, bit ``v`` the coefficient
    of variable ``v`` (1..n_vars); the row asserts the sum is 0.  Returns
    ``(consistent, rank)``.
    """
    basis = {}
    for row in rows:
        while row > 1:
            lead = row.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = row
                break
            row ^= pivot
        if row == 1:
            return False, len(basis)
    return True, len(basis)


def linear_equations(s: System, arity_cap: int = DEFAULT_ARITY_CAP) -> list:
    rows = []
    for v in s.network.vertices:
        scope = s.scopes[v - 1]
        form = linear_form(s.function(v), len(scope), arity_cap)
        if form is None:
            raise NonLinearFunction(f"function of vertex {v} is not linear", vertex=v)
        c, coeffs = form
        row = c | (1 << v)
        for u, a in zip(scope, coeffs):
            if a:
                row ^= 1 << u
        rows.append(row)
    return rows


def linear_rank(s: System, arity_cap: int = DEFAULT_ARITY_CAP) -> tuple:
    """``(consistent, rank)`` of the fixed-point equations of a linear system."""
    return gf2_solve(linear_equations(s, arity_cap), s.n)


def count_linear(s: System, arity_cap: int = DEFAULT_ARITY_CAP) -> int:
    consistent, rank = linear_rank(s, arity_cap)
    return (1 << (s.n - rank)) if consistent else 0


# ---------------------------------------------------------------------------
# Generic tree-decomposition dynamic programming
#
# A vertex state is an int: bit 1 is the vertex's boolean label, bit 0 says the
# vertex is "satisfied" (it may be forgotten).  Two states of the same vertex
# coming from different subtrees merge by OR-ing the satisfied bit.


def _rooted(td: TreeDecomposition):
    adj = td.tree_adjacency
    order, parent = [0], {0: None}
    for node in order:
        for nxt in adj[node]:
            if nxt not in parent:
                parent[nxt] = node
                order.append(nxt)
    children = defaultdict(list)
    for node in order[1:]:
        children[parent[node]].append(node)
    return order, children


def _tree_dp(td: TreeDecomposition, initial: dict, charges: dict) -> int:
    """Count labelings; ``charges[bag]`` is a list of ``(key, verts) -> key | None`` callables."""
    order, children = _rooted(td)
    verts_of = {i: tuple(sorted(td.bags[i])) for i in range(len(td.bags))}
    tables = {}
    for node in reversed(order):
        verts = verts_of[node]
        table = {key: 1 for key in product(*(initial[v] for v in verts))}
        for child in children[node]:
            table = _join(table, verts, _project(tables.pop(child), verts_of[child], set(verts)))
        for charge in charges.get(node, ()):
            updated = defaultdict(int)
            for key, cnt in table.items():
                new = charge(key, verts)
                if new is not None:
                    updated[new] += cnt
            table = updated
        tables[node] = table
    root_table = tables[order[0]]
    return sum(cnt for key, cnt in root_table.items() if all(s & 1 for s in key))


def _project(table: dict, verts: tuple, keep: set) -> tuple:
    """Forget vertices outside ``keep``; unsatisfied forgotten vertices drop the entry."""
    kept_pos = [i for i, v in enumerate(verts) if v in keep]
    dropped_pos = [i for i, v in enumerate(verts) if v not in keep]
    out = defaultdict(int)
    for key, cnt in table.items():
        if all(key[i] & 1 for i in dropped_pos):
            out[tuple(key[i] for i in kept_pos)] += cnt
    return tuple(verts[i] for i in kept_pos), out


def _join(table: dict, verts: tuple, projected) -> dict:
    shared, child_table = projected
    if not shared:
        total = sum(child_table.values())
        return {key: cnt * total for key, cnt in table.items()} if total else {}
    pos = [verts.index(v) for v in shared]
    by_labels = defaultdict(list)
    for ckey, ccnt in child_table.items():
        by_labels[tuple(s >> 1 for s in ckey)].append((ckey, ccnt))
    out = defaultdict(int)
    for key, cnt in table.items():
        for ckey, ccnt in by_labels.get(tuple(key[p] >> 1 for p in pos), ()):
            merged = list(key)
            for p, s in zip(pos, ckey):
                merged[p] |= s
            out[tuple(merged)] += cnt * ccnt
    return out


def _designator(td: TreeDecomposition) -> Callable:
    """``scope -> index of the first bag containing it`` (None if no bag does)."""
    holding = defaultdict(list)
    for i, bag in enumerate(td.bags):
        for v in bag:
            holding[v].append(i)

    def designate(scope) -> Optional[int]:
        scope = set(scope)
        anchor = min(scope, key=lambda v: len(holding[v]))
        for i in holding[anchor]:
            if scope <= td.bags[i]:
                return i
        return None

    return designate


# ---------------------------------------------------------------------------
# Treewidth DP over the closure graph


def count_twdp(
    s: System,
    td: Optional[TreeDecomposition] = None,
    arity_cap: int = DEFAULT_ARITY_CAP,
    strategy: str = "min_fill",
) -> int:
    """Count fixed points as solutions of the per-vertex constraints ``x_i = f_i(scope)``.

    ``td`` must decompose :func:`~fpcount.graphs.closure_graph` of ``s``;
    each constraint is charged to the first bag containing its scope.
    """
    tables = [to_table(s.function(v), len(s.scopes[v - 1]), arity_cap) for v in s.network.vertices]
    closure = closure_graph(s)
    if td is None:
        td = tree_decomposition(closure, strategy)
    else:
        problems = decomposition_problems(closure, td)
        if problems:
            raise ScopeNotCovered("invalid decomposition of the closure graph: " + "; ".join(problems))
    charges = defaultdict(list)
    designate = _designator(td)
    for v in s.network.vertices:
        scope = s.scopes[v - 1]
        bag = designate(scope)
        if bag is None:
            raise ScopeNotCovered(f"no bag contains the scope {scope} of vertex {v}")
        charges[bag].append(_vertex_constraint(v, scope, tables[v - 1]))
    initial = {v: (1, 3) for v in s.network.vertices}
    return _tree_dp(td, initial, charges)


def _vertex_constraint(v: int, scope: tuple, table: TruthTable) -> Callable:
    bits = table.bits
    cache = {}

    def charge(key, verts):
        pos = cache.get(verts)
        if pos is None:
            pos = cache[verts] = ([verts.index(u) for u in scope], verts.index(v))
        arg_pos, own = pos
        idx = 0
        for p in arg_pos:
            idx = (idx << 1) | (key[p] >> 1)
        return key if (bits[idx] == "1") == bool(key[own] >> 1) else None

    return charge


# ---------------------------------------------------------------------------
# AND / OR systems


def _formula_and_form(node):
    """('and', positions) / ('const', b) for Var/And-of-vars/Const formulas, else None."""
    if isinstance(node, Const):
        return "const", node.value
    if isinstance(node, Var):
        return "and", frozenset([node.index])
    if isinstance(node, And):
        acc = set()
        for child in node.operands:
            part = _formula_and_form(child)
            if part is None or part[0] != "and":
                return None
            acc |= part[1]
        return "and", frozenset(acc)
    return None


def _circuit_and_form(circuit: Circuit):
    forms = []
    for gate in circuit.gates:
        if gate.op == "in":
            forms.append(("and", frozenset([gate.args[0]])))
        elif gate.op == "const":
            forms.append(("const", gate.args[0]))
        elif gate.op == "and":
            parts = [forms[r] for r in gate.args]
            if all(p is not None and p[0] == "and" for p in parts):
                forms.append(("and", frozenset().union(*(p[1] for p in parts))))
            else:
                forms.append(None)
        else:
            forms.append(None)
    return forms[circuit.output]


def and_form(f, arity: int, arity_cap: int = DEFAULT_ARITY_CAP):
    """``('and', J)`` with 1-based argument positions J, ``('const', b)``, or None."""
    if isinstance(f, TruthTable):
        J = and_set(f)
        if J is not None:
            return ("and", frozenset(J)) if J else ("const", 1)
        return ("const", 0) if "1" not in f.bits else None
    form = _circuit_and_form(f) if isinstance(f, Circuit) else _formula_and_form(f)
    if form is not None:
        return form
    if arity <= arity_cap:
        return and_form(to_table(f, arity, arity_cap), arity)
    return None


def and_or_kind(s: System, arity_cap: int = DEFAULT_ARITY_CAP) -> tuple:
    """``('and' | 'or', forms)`` where forms are AND-forms (of the dual system for 'or')."""
    first_bad = None
    for kind in ("and", "or"):
        forms = []
        for v in s.network.vertices:
            f = s.function(v)
            if kind == "or":
                f = dualize(f)
            form = and_form(f, len(s.scopes[v - 1]), arity_cap)
            if form is None:
                if first_bad is None:
                    first_bad = v
                break
            forms.append(form)
        else:
            return kind, forms
    raise NotAndOrSystem(
        f"vertex {first_bad} is neither an AND nor a constant (and the system is not all-OR either)",
        vertex=first_bad,
    )


def _and_or_problem(s: System, arity_cap: int, strategy: str):
    """Forced-value propagation plus the condensation DP setup.

    Returns ``(count, None)`` when propagation settles everything (or finds a
    contradiction), else ``(None, (td, initial, charges))``.
    """
    kind, forms = and_or_kind(s, arity_cap)
    n = s.n
    J = {}
    forced = {}
    for v, form in zip(s.network.vertices, forms):
        if form[0] == "const":
            forced[v] = form[1]
        else:
            scope = s.scopes[v - 1]
            J[v] = frozenset(scope[p - 1] for p in form[1])

    users = defaultdict(list)
    for i, members in J.items():
        for j in members:
            users[j].append(i)
    queue = list(forced)
    queue += [i for i, members in J.items() if not members and i not in forced]
    for i in queue[len(forced):]:
        forced[i] = 1
    while queue:
        j = queue.pop()
        for i in users[j]:
            if i in forced:
                continue
            if forced[j] == 0:
                forced[i] = 0
                queue.append(i)
            elif all(forced.get(u) == 1 for u in J[i]):
                forced[i] = 1
                queue.append(i)
    for i, members in J.items():
        if i in forced and all(u in forced for u in members):
            if forced[i] != min((forced[u] for u in members), default=1):
                return 0, None

    free = [v for v in range(1, n + 1) if v not in forced]
    if not free:
        return 1, None
    relabel = {v: k for k, v in enumerate(free, 1)}
    arcs = set()
    for i in free:
        for j in J[i]:
            if j not in forced:
                arcs.add((relabel[j], relabel[i]))
    cond = scc_condensation(Digraph(len(free), frozenset(arcs)))
    ell = len(cond.components)
    dag = Network(ell, frozenset((a + 1, b + 1) for a, b in cond.dag_edges))
    td = tree_decomposition(dag, strategy)
    # states: 3 = label 1, 1 = label 0 witnessed, 0 = label 0 not yet witnessed
    initial = {c + 1: (3, 1 if cond.self_witnessed[c] else 0) for c in range(ell)}
    charges = defaultdict(list)
    designate = _designator(td)
    for a, b in cond.dag_edges:
        charges[designate((a + 1, b + 1))].append(_witness_edge(a + 1, b + 1))
    return None, (td, initial, charges)


def and_or_width(s: System, arity_cap: int = DEFAULT_ARITY_CAP, strategy: str = "min_fill") -> int:
    """Width of the condensation decomposition the AND/OR engine would use (-1 if none is needed)."""
    count, problem = _and_or_problem(s, arity_cap, strategy)
    return -1 if problem is None else problem[0].width


def count_and_or(
    s: System,
    width_cap: int = DEFAULT_WIDTH_CAP,
    arity_cap: int = DEFAULT_ARITY_CAP,
    strategy: str = "min_fill",
) -> int:
    """Count fixed points of a system of AND functions (or of OR functions) and constants.

    1. Propagate forced values: a constant fixes its vertex; a forced 0 in J_i
       forces x_i = 0; J_i entirely forced to 1 forces x_i = 1.
    2. On the remaining vertices build the dependency digraph (arc j -> i for
       j in J_i) and condense it; a component is constant on every fixed point.
    3. Count component labelings: label 1 needs every predecessor at 1; label
       0 needs a predecessor at 0 unless the component witnesses itself (two or
       more members, or a self-loop).  The count runs as a DP over a tree
       decomposition of the condensation, tracking the 0-witness per component.

    OR systems are handled through their duals, which have the same count.
    """
    count, problem = _and_or_problem(s, arity_cap, strategy)
    if problem is None:
        return count
    td, initial, charges = problem
    if td.width > width_cap:
        raise DecompositionTooWide(f"condensation decomposition width {td.width} exceeds cap {width_cap}")
    return _tree_dp(td, initial, charges)


def _witness_edge(pred: int, comp: int) -> Callable:
    def charge(key, verts):
        p, c = verts.index(pred), verts.index(comp)
        if key[p] >> 1:
            return key
        if key[c] == 3:
            return None
        if key[c] == 0:
            key = key[:c] + (1,) + key[c + 1:]
        return key

    return charge


# ---------------------------------------------------------------------------
# Dispatch

LEMMAS = {
    "linear": "linear functions: fixed points are the solutions of an affine system over GF(2), counted by Gaussian elimination",
    "andor": "AND (or dually OR) functions: dependency-graph condensation counted by witness-tracking tree-decomposition DP",
    "twdp": "bounded treewidth: one constraint per vertex over its closed neighbourhood, counted by tree-decomposition DP on the closure graph",
    "brute": "no tractable branch applies: exhaustive enumeration of all configurations",
}


@dataclass
class DispatchReport:
    engine: str
    theorem: str
    representation: str
    branch: str
    lemma: str
    reasons: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    function_classes: dict = field(default_factory=dict)
    graph: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "engine": self.engine,
            "theorem": self.theorem,
            "representation": self.representation,
            "branch": self.branch,
            "lemma": self.lemma,
            "reasons": list(self.reasons),
            "warnings": list(self.warnings),
            "function_classes": dict(self.function_classes),
            "graph": dict(self.graph),
        }


def _all_linear(s: System, arity_cap: int) -> bool:
    try:
        linear_equations(s, arity_cap)
    except NonLinearFunction:
        return False
    return True


def _hard_lookup_classes(s: System, arity_cap: int) -> list:
    """Which of E2 / V2 / D2 the instance's functions sit inside (all three when unknown)."""
    flags = {"E2": True, "V2": True, "D2": True}
    for v in s.network.vertices:
        k = len(s.scopes[v - 1])
        if k > arity_cap:
            return ["E2", "V2", "D2"]
        report = classify(to_table(s.function(v), k, arity_cap), cap=arity_cap)
        flags["E2"] &= report.E
        flags["V2"] &= report.V
        flags["D2"] &= report.D2
    named = [name for name, ok in flags.items() if ok]
    return named or ["E2", "V2", "D2"]


def dispatch(s: System, caps: Caps = Caps()) -> tuple:
    """Pick the engine the dichotomy theorems allow and run it.

    Order: linear, then AND/OR (formula and circuit representations only),
    then treewidth DP on the closure graph, then brute force with a warning.
    """
    rep = s.representation()
    theorem = "lookup" if rep == "table" else "formula"
    report = DispatchReport(engine="", theorem=theorem, representation=rep, branch="", lemma="")
    report.graph = {"n": s.n, "edges": len(s.network.edges), "max_degree": s.network.max_degree()}

    def done(engine, branch, count):
        report.engine = engine
        report.branch = branch
        report.lemma = LEMMAS[engine]
        return report, count

    linear = _all_linear(s, caps.arity)
    report.function_classes["all_linear"] = linear
    if linear:
        report.reasons.append("every local function is linear (class L)")
        return done("linear", "linear", count_linear(s, caps.arity))

    andor_kind = None
    if theorem == "formula":
        try:
            andor_kind, _ = and_or_kind(s, caps.arity)
        except NotAndOrSystem:
            pass
        report.function_classes["all_and"] = andor_kind == "and"
        report.function_classes["all_or"] = andor_kind == "or"
        if andor_kind is not None:
            cls = "E" if andor_kind == "and" else "V"
            try:
                count = count_and_or(s, caps.width, caps.arity)
            except DecompositionTooWide as exc:
                report.warnings.append(f"AND/OR engine not usable: {exc}")
            else:
                report.reasons.append(f"every local function is in {cls} (constants or {andor_kind.upper()}s of variables)")
                return done("andor", andor_kind, count)
    else:
        report.reasons.append("lookup tables: the AND/OR engine is reserved for succinct representations")

    max_arity = max((len(sc) for sc in s.scopes), default=0)
    # the closure graph holds a clique per scope, so skip it when tables are out of reach anyway
    closure_width = tree_decomposition(closure_graph(s)).width if max_arity <= caps.arity else None
    report.graph["closure_width"] = closure_width
    twdp_branch = "bounded-treewidth" if theorem == "lookup" else "bounded-degree"
    if max_arity > caps.arity:
        report.warnings.append(f"largest closed neighbourhood has {max_arity} arguments, above the table cap {caps.arity}")
    elif closure_width > caps.width:
        report.warnings.append(f"closure graph width {closure_width} exceeds the width cap {caps.width}")
    else:
        if theorem == "formula":
            report.reasons.append(
                f"largest closed neighbourhood has {max_arity} arguments: formulas convert to tables (formula -> lookup reduction)"
            )
        report.reasons.append(f"closure graph has heuristic treewidth {closure_width} <= {caps.width}")
        return done("twdp", twdp_branch, count_twdp(s, arity_cap=caps.arity))

    planar, _ = is_planar(s.network)
    report.graph["planar"] = planar
    report.graph["vertex_cover_one"] = has_vertex_cover_one(s.network)
    if theorem == "lookup":
        hard = _hard_lookup_classes(s, caps.arity)
        branch = "intractable-lookup"
        report.function_classes["hard_classes"] = hard
        report.warnings.append(
            "lookup dichotomy, intractable branch: functions outside L "
            f"(within {' / '.join(hard)}) on a network class containing all planar graphs; "
            "falling back to exponential enumeration"
        )
    elif andor_kind is not None:
        branch = "intractable-formula-2"
        report.warnings.append(
            "formula dichotomy, intractable condition 2: E2 or V2 functions on a network class "
            "containing all planar graphs; falling back to exponential enumeration"
        )
    else:
        branch = "intractable-formula-1"
        report.warnings.append(
            "formula dichotomy, intractable condition 1: functions outside L, E and V (so S00, S10 or D2 "
            "is present) with unbounded degree; falling back to exponential enumeration"
        )
    report.engine, report.branch, report.lemma = "brute", branch, LEMMAS["brute"]
    if s.n > caps.brute:
        raise BruteCapExceeded(f"{branch}: brute force over {s.n} vertices exceeds cap {caps.brute}")
    return done("brute", branch, count_brute(s, caps.brute, arity_cap=caps.arity))


ENGINES = {
    "brute": lambda s, caps: count_brute(s, caps.brute, arity_cap=caps.arity),
    "linear": lambda s, caps: count_linear(s, caps.arity),
    "andor": lambda s, caps: count_and_or(s, caps.width, caps.arity),
    "twdp": lambda s, caps: count_twdp(s, arity_cap=caps.arity),
}


def predict_branches(s: System, caps: Caps = Caps()) -> dict:
    """Branch each dichotomy theorem assigns to ``s`` under both representations, without counting."""
    linear = _all_linear(s, caps.arity)
    max_arity = max((len(sc) for sc in s.scopes), default=0)
    closure_width = tree_decomposition(closure_graph(s)).width if max_arity <= caps.arity else None
    small = closure_width is not None and closure_width <= caps.width
    if linear:
        lookup = "linear"
    elif small:
        lookup = "bounded-treewidth"
    else:
        lookup = "intractable-lookup"
    if linear:
        formula = "linear"
    else:
        try:
            kind, _ = and_or_kind(s, caps.arity)
        except NotAndOrSystem:
            kind = None
        if kind is not None and and_or_width(s, caps.arity) <= caps.width:
            formula = kind
        elif small:
            formula = "bounded-degree"
        else:
            formula = "intractable-formula-2" if kind is not None else "intractable-formula-1"
    return {
        "lookup": lookup,
        "formula": formula,
        "closure_width": closure_width,
        "max_degree": s.network.max_degree(),
        "max_arity": max_arity,
    }
