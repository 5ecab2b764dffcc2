"""Hardness gadgets as concrete generators, each with its exact count identity.

Generators emit formula systems built from the basis operator of the
target class.  :func:`as_lookup` converts any of them to truth tables.
The side conditions of the hardness arguments (planarity, degree at most
four) are checked by separate validators; the count identities hold
without them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .errors import ValidationError
from .functions import And, Maj3, Or, S00, S10, Var, to_table
from .graphs import faces, is_planar, validate_rotation_system
from .system import Network, System


@dataclass(frozen=True)
class HornFormula:
    """Clauses ``(neg, pos)`` meaning ``(!x_neg | x_pos)``."""

    n: int
    clauses: tuple

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple((int(a), int(b)) for a, b in self.clauses))
        _check_vars(self.n, self.clauses)


@dataclass(frozen=True)
class PositiveFormula:
    """Clauses ``(a, b)`` meaning ``(x_a | x_b)``."""

    n: int
    clauses: tuple

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple((int(a), int(b)) for a, b in self.clauses))
        _check_vars(self.n, self.clauses)


def _check_vars(n: int, clauses) -> None:
    if n < 0:
        raise ValidationError("variable count must be non-negative")
    for clause in clauses:
        for x in clause:
            if not 1 <= x <= n:
                raise ValidationError(f"clause {clause} uses variable {x} outside 1..{n}")


@dataclass(frozen=True)
class BipartiteGraph:
    n: int
    part1: frozenset
    part2: frozenset
    edges: frozenset

    def __post_init__(self):
        p1, p2 = frozenset(self.part1), frozenset(self.part2)
        if p1 & p2 or p1 | p2 != set(range(1, self.n + 1)):
            raise ValidationError("parts must partition the vertices 1..n")
        object.__setattr__(self, "part1", p1)
        object.__setattr__(self, "part2", p2)
        object.__setattr__(self, "edges", Network(self.n, frozenset(map(tuple, self.edges))).edges)
        for u, v in self.edges:
            if (u in p1) == (v in p1):
                raise ValidationError(f"edge ({u}, {v}) does not cross the bipartition")

    @classmethod
    def from_network(cls, g: Network) -> "BipartiteGraph":
        """2-colour ``g``; the smallest vertex of each component goes to the first part."""
        colour = {}
        for s in g.vertices:
            if s in colour:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in g.adjacency[v]:
                    if w not in colour:
                        colour[w] = 1 - colour[v]
                        stack.append(w)
                    elif colour[w] == colour[v]:
                        raise ValidationError("graph is not bipartite")
        return cls(
            g.n,
            frozenset(v for v, c in colour.items() if c == 0),
            frozenset(v for v, c in colour.items() if c == 1),
            g.edges,
        )

    @property
    def network(self) -> Network:
        return Network(self.n, self.edges)


# ---------------------------------------------------------------------------
# Horn-2CNF to AND / OR systems


def _clause_network(n: int, clauses) -> Network:
    return Network(n, frozenset((a, b) for a, b in clauses if a != b))


def _join(op, scope, members):
    pos = sorted({scope.index(u) + 1 for u in members})
    if len(pos) == 1:
        return Var(pos[0])
    return op(*(Var(p) for p in pos))


def horn_to_and_system(h: HornFormula) -> System:
    """Vertex ``i`` computes ``x_i`` AND every ``x_j`` with a clause ``(!x_j | x_i)``.

    A fixed point forces ``x_i = x_i & x_j``, that is ``x_i -> x_j``, which is
    the clause read backwards; the counts agree because complementing every
    variable maps one family of models bijectively onto the other.
    """
    g = _clause_network(h.n, h.clauses)
    feeds = {v: {v} for v in g.vertices}
    for neg, pos in h.clauses:
        feeds[pos].add(neg)
    return System(g, tuple(_join(And, g.scope(v), feeds[v]) for v in g.vertices))


def horn_to_or_system(h: HornFormula) -> System:
    """Vertex ``i`` computes ``x_i`` OR every ``x_j`` with a clause ``(!x_i | x_j)``."""
    g = _clause_network(h.n, h.clauses)
    feeds = {v: {v} for v in g.vertices}
    for neg, pos in h.clauses:
        feeds[neg].add(pos)
    return System(g, tuple(_join(Or, g.scope(v), feeds[v]) for v in g.vertices))


def bipartite_to_horn(g: BipartiteGraph) -> HornFormula:
    """One clause ``(x_u | !x_v)`` per edge, ``u`` in the first part.

    Independent sets correspond to models via: ``u`` is chosen iff ``x_u = 0``,
    ``v`` is chosen iff ``x_v = 1``.
    """
    clauses = []
    for a, b in sorted(g.edges):
        u, v = (a, b) if a in g.part1 else (b, a)
        clauses.append((v, u))
    return HornFormula(g.n, tuple(clauses))


# ---------------------------------------------------------------------------
# Amplifier and the vertex-cover construction


def amplifier_vertices(h: int) -> dict:
    """Vertex numbers of an h-amplifier: ``{('a', r): .., ('b', r): .., ('c', r): ..}``."""
    out = {}
    for r in range(h + 1):
        out["a", r] = r + 1
        out["b", r] = h + 2 + r
        out["c", r] = 2 * h + 3 + r
    return out


def _amplifier_edges(h: int, ids: dict) -> set:
    edges = set()
    for r in range(h + 1):
        for u in "ac":
            edges.add((ids[u, r], ids["b", r]))
            if r:
                edges.add((ids[u, r], ids[u, r - 1]))
    return edges


def _amplifier_functions(h: int, ids: dict, scope_of) -> dict:
    """Functions of every amplifier vertex except the anchors a_0 and c_0."""
    out = {}
    for r in range(h + 1):
        b = ids["b", r]
        sc = scope_of(b)
        out[b] = Maj3(Var(sc.index(b) + 1), Var(sc.index(ids["a", r]) + 1), Var(sc.index(ids["c", r]) + 1))
        if r:
            for u in "ac":
                v = ids[u, r]
                out[v] = Var(scope_of(v).index(ids[u, r - 1]) + 1)
    return out


def amplifier(h: int) -> System:
    """The 3(h+1)-vertex amplifier: chains a_0..a_h and c_0..c_h copy forward,
    b_r is the majority of itself, a_r and c_r, and the anchors keep their value."""
    if h < 0:
        raise ValidationError("amplifier parameter must be non-negative")
    ids = amplifier_vertices(h)
    g = Network(3 * (h + 1), frozenset(_amplifier_edges(h, ids)))
    funcs = _amplifier_functions(h, ids, g.scope)
    for u in "ac":
        v = ids[u, 0]
        funcs[v] = Var(g.scope(v).index(v) + 1)
    return System(g, tuple(funcs[v] for v in g.vertices))


@dataclass(frozen=True)
class VertexCoverGadget:
    system: System
    modulus: int
    graph_vertices: tuple  # system vertex of each graph vertex 1..|U|
    edge_vertices: dict  # graph edge -> system vertex
    triples: tuple  # (edge-vertex, graph vertex, edge-vertex) triples that received an amplifier
    amplifiers: tuple  # per triple, the dict of amplifier vertex numbers


def subdivision(g: Network) -> tuple:
    """The graph with every edge ``{i, j}`` split by a new edge-vertex; edge-vertices follow 1..n."""
    edge_ids = {e: g.n + k for k, e in enumerate(sorted(g.edges), 1)}
    edges = set()
    for (i, j), e in edge_ids.items():
        edges.add((i, e))
        edges.add((j, e))
    return Network(g.n + len(edge_ids), frozenset(edges)), edge_ids


def face_triples(base: Network, rotation: dict, n_original: int) -> list:
    """Triples (e1, j, e2) of consecutive vertices on a face walk with j original
    and e1 != e2, deduplicated by the unordered pair {e1, e2}."""
    seen = {}
    for walk in faces(rotation):
        L = len(walk)
        for t in range(L):
            j = walk[t]
            if j > n_original:
                continue
            e1, e2 = walk[t - 1], walk[(t + 1) % L]
            if e1 == e2:
                continue
            key = (min(e1, e2), max(e1, e2))
            seen.setdefault(key, (key[0], j, key[1]))
    return [seen[k] for k in sorted(seen)]


def vc_to_d2_system(g: BipartiteGraph | Network, embedding: Optional[dict] = None) -> VertexCoverGadget:
    """System whose fixed-point count is ``2 * #VC(g)`` modulo ``2^(m+2)`` (m = number of vertices).

    The base system keeps every graph vertex fixed (identity) and gives each
    edge-vertex the majority of itself and its two endpoints.  For every
    face-consecutive triple (edge-vertex, vertex, edge-vertex) an
    (m+1)-amplifier is attached, its anchors a_0 and c_0 identified with the
    two edge-vertices; the identified vertices keep their majority function.

    ``embedding`` is a rotation system of the subdivided graph; when omitted
    one is computed.
    """
    net = g.network if isinstance(g, BipartiteGraph) else g
    m = net.n
    base, edge_ids = subdivision(net)
    if embedding is None:
        planar, embedding = is_planar(base)
        if not planar:
            raise ValidationError("graph is not planar")
    else:
        validate_rotation_system(base, embedding)
    triples = face_triples(base, embedding, m)
    h = m + 1
    edges = set(base.edges)
    amps = []
    next_id = base.n
    for e1, _, e2 in triples:
        ids = {("a", 0): e1, ("c", 0): e2}
        for key, _ in sorted(amplifier_vertices(h).items(), key=lambda kv: kv[1]):
            if key not in ids:
                next_id += 1
                ids[key] = next_id
        edges |= _amplifier_edges(h, ids)
        amps.append(ids)
    network = Network(next_id, frozenset(edges))
    funcs = {v: Var(network.scope(v).index(v) + 1) for v in range(1, m + 1)}
    for (i, j), e in edge_ids.items():
        sc = network.scope(e)
        funcs[e] = Maj3(Var(sc.index(i) + 1), Var(sc.index(e) + 1), Var(sc.index(j) + 1))
    for ids in amps:
        funcs.update(_amplifier_functions(h, ids, network.scope))
    system = System(network, tuple(funcs[v] for v in network.vertices))
    return VertexCoverGadget(
        system=system,
        modulus=1 << (m + 2),
        graph_vertices=tuple(range(1, m + 1)),
        edge_vertices=dict(edge_ids),
        triples=tuple(triples),
        amplifiers=tuple(amps),
    )


# ---------------------------------------------------------------------------
# Positive 2CNF to star systems


def _require_clauses(h: PositiveFormula) -> None:
    if not h.clauses:
        raise ValidationError("star gadgets need at least one clause")


def _star(leaves: int) -> Network:
    centre = leaves + 1
    return Network(centre, frozenset((i, centre) for i in range(1, leaves + 1)))


def pos2sat_to_s10_star(h: PositiveFormula) -> System:
    """Star with centre ``n+1``; the centre computes ``x_{n+1} & C_1 & ... & C_m``
    through a left-to-right chain of S10 gates; leaves keep their value."""
    _require_clauses(h)
    n = h.n
    centre = Var(n + 1)
    (a, b), rest = h.clauses[0], h.clauses[1:]
    acc = S10(centre, Var(a), Var(b))
    for a, b in rest:
        acc = S10(acc, Var(a), Var(b))
    leaf = S10(Var(1), Var(1), Var(1))
    return System(_star(n), (leaf,) * n + (acc,))


def _balanced(clauses: list, leaf, node):
    if len(clauses) == 1:
        return leaf(*clauses[0])
    half = len(clauses) // 2
    return node(_balanced(clauses[:half], leaf, node), _balanced(clauses[half:], leaf, node))


def pos2sat_to_s00_star(h: PositiveFormula) -> System:
    """Star over the extra leaf x_0 (vertex 1) and x_i (vertex i+1); centre n+2 computes
    ``S00(x_0, A, x_centre)`` where A is a balanced S00 tree of the clauses."""
    _require_clauses(h)
    n = h.n
    x0 = Var(1)
    A = _balanced(
        list(h.clauses),
        lambda a, b: S00(Var(a + 1), Var(b + 1), Var(b + 1)),
        lambda left, right: S00(x0, left, right),
    )
    centre = S00(x0, A, Var(n + 2))
    leaf = S00(Var(1), Var(1), Var(1))
    return System(_star(n + 1), (leaf,) * (n + 1) + (centre,))


def pos2sat_to_d2_star(h: PositiveFormula) -> System:
    """Same star as the S00 gadget; the centre is a balanced majority tree with
    clause leaves ``Maj(x_a, x_b, x_centre)`` and inner nodes ``Maj(left, right, x_0)``."""
    _require_clauses(h)
    n = h.n
    x0, xc = Var(1), Var(n + 2)
    centre = _balanced(
        list(h.clauses),
        lambda a, b: Maj3(Var(a + 1), Var(b + 1), xc),
        lambda left, right: Maj3(left, right, x0),
    )
    leaf = Maj3(Var(1), Var(1), Var(1))
    return System(_star(n + 1), (leaf,) * (n + 1) + (centre,))


def as_lookup(s: System) -> System:
    """The same system with every function converted to a truth table."""
    return System(s.network, tuple(to_table(s.function(v), len(s.scopes[v - 1])) for v in s.network.vertices))


# ---------------------------------------------------------------------------
# Reference counters and identities


def count_sat_2cnf(n: int, clauses, positive: bool) -> int:
    """Models of a 2CNF by enumeration; Horn clauses are ``(neg, pos)`` pairs."""
    total = 0
    for bits in product((0, 1), repeat=n):
        if positive:
            ok = all(bits[a - 1] or bits[b - 1] for a, b in clauses)
        else:
            ok = all((not bits[a - 1]) or bits[b - 1] for a, b in clauses)
        total += ok
    return total


def count_horn_sat(h: HornFormula) -> int:
    return count_sat_2cnf(h.n, h.clauses, positive=False)


def count_positive_sat(h: PositiveFormula) -> int:
    return count_sat_2cnf(h.n, h.clauses, positive=True)


def count_independent_sets(g: Network) -> int:
    return sum(
        all(not (bits[u - 1] and bits[v - 1]) for u, v in g.edges)
        for bits in product((0, 1), repeat=g.n)
    )


def count_vertex_covers(g: Network) -> int:
    return sum(
        all(bits[u - 1] or bits[v - 1] for u, v in g.edges)
        for bits in product((0, 1), repeat=g.n)
    )


def unused_variables(h: PositiveFormula) -> int:
    used = {x for clause in h.clauses for x in clause}
    return h.n - len(used)


def d2_star_expected(h: PositiveFormula, n_sat: int) -> int:
    """``2 #sat + 2^(n+1) - 2^(u+1)`` with u unused variables (u = 0 gives the usual form)."""
    u = unused_variables(h)
    return 2 * n_sat + (1 << (h.n + 1)) - (1 << (u + 1))


IDENTITIES = {
    "horn-and": "#fp = #sat",
    "horn-or": "#fp = #sat",
    "s10-star": "#fp = #sat + 2^n",
    "s00-star": "#fp = #sat + 2^(n+1)",
    "d2-star": "#fp = 2*#sat + 2^(n+1) - 2^(u+1), u = number of variables in no clause",
    "vc-d2": "#fp = 2*#VC (mod 2^(m+2))",
    "bip-horn": "#sat = #independent_sets",
    "amplifier": "1 fixed point when x_a0 = x_c0, 2^(h+1) otherwise",
}


# ---------------------------------------------------------------------------
# Text formats


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith(("c", "%")):
            yield lineno, line


def parse_dimacs(text: str, kind: str) -> HornFormula | PositiveFormula:
    """Parse a DIMACS CNF of 2-literal clauses; ``kind`` is ``'horn'`` or ``'positive'``."""
    if kind not in ("horn", "positive"):
        raise ValueError("kind must be 'horn' or 'positive'")
    header = None
    literals = []
    for lineno, line in _data_lines(text):
        if line.startswith("p"):
            m = re.fullmatch(r"p\s+cnf\s+(\d+)\s+(\d+)", line)
            if not m or header is not None:
                raise ValidationError(f"line {lineno}: bad or repeated header")
            header = int(m.group(1)), int(m.group(2))
            continue
        if header is None:
            raise ValidationError(f"line {lineno}: clause before the 'p cnf' header")
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError:
            raise ValidationError(f"line {lineno}: non-integer literal") from None
    if header is None:
        raise ValidationError("missing 'p cnf n m' header")
    n, m = header
    clauses, current = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(current)
            current = []
        else:
            current.append(lit)
    if current:
        raise ValidationError("last clause is not terminated by 0")
    if len(clauses) != m:
        raise ValidationError(f"header announces {m} clauses, found {len(clauses)}")
    out = []
    for k, clause in enumerate(clauses, 1):
        if len(clause) != 2:
            raise ValidationError(f"clause {k} has {len(clause)} literals, expected 2")
        if any(abs(l) > n for l in clause):
            raise ValidationError(f"clause {k} uses a variable above {n}")
        if kind == "positive":
            if min(clause) < 0:
                raise ValidationError(f"clause {k} has a negative literal")
            out.append(tuple(clause))
        else:
            neg = [-l for l in clause if l < 0]
            pos = [l for l in clause if l > 0]
            if len(neg) != 1 or len(pos) != 1:
                raise ValidationError(f"clause {k} needs exactly one positive and one negative literal")
            out.append((neg[0], pos[0]))
    cls = PositiveFormula if kind == "positive" else HornFormula
    return cls(n, tuple(out))


def write_dimacs(h: HornFormula | PositiveFormula) -> str:
    lines = [f"p cnf {h.n} {len(h.clauses)}"]
    for a, b in h.clauses:
        lines.append(f"{a} {b} 0" if isinstance(h, PositiveFormula) else f"-{a} {b} 0")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Network:
    """Edge-list graph: header ``p edge n m`` then lines ``e u v``."""
    header = None
    edges = []
    for lineno, line in _data_lines(text):
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge" or header is not None:
                raise ValidationError(f"line {lineno}: bad or repeated header")
            header = int(parts[2]), int(parts[3])
        elif parts[0] == "e" and len(parts) == 3:
            if header is None:
                raise ValidationError(f"line {lineno}: edge before the 'p edge' header")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValidationError(f"line {lineno}: expected 'e u v'")
    if header is None:
        raise ValidationError("missing 'p edge n m' header")
    if len(edges) != header[1]:
        raise ValidationError(f"header announces {header[1]} edges, found {len(edges)}")
    return Network.from_edges(header[0], edges)


def write_graph(g: Network) -> str:
    return "\n".join([f"p edge {g.n} {len(g.edges)}"] + [f"e {u} {v}" for u, v in sorted(g.edges)]) + "\n"


# ---------------------------------------------------------------------------
# Side-condition validators


def planar_degree_four_problems(g: Network) -> list:
    """Reasons ``g`` falls outside planar max-degree-4 graphs (empty when it fits)."""
    problems = []
    if g.max_degree() > 4:
        problems.append(f"maximum degree {g.max_degree()} exceeds 4")
    if not is_planar(g)[0]:
        problems.append("graph is not planar")
    return problems


def clause_graph(h: HornFormula | PositiveFormula) -> Network:
    return _clause_network(h.n, h.clauses)
