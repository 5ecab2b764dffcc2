"""Network-side analysis: SCCs, planarity, vertex covers, tree decompositions."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .errors import ValidationError
from .system import Network, System


# ---------------------------------------------------------------------------
# Directed graphs and strongly connected components


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValidationError(f"arc ({u}, {v}) has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def successors(self) -> dict:
        succ = {v: [] for v in range(1, self.n + 1)}
        for u, v in sorted(self.edges):
            succ[u].append(v)
        return succ


@dataclass(frozen=True)
class Condensation:
    """SCCs ``components`` (topologically ordered, sources first) and the DAG between them.

    ``dag_edges`` maps a component pair ``(a, b)`` to the original arcs
    running from component ``a`` to component ``b``; ``internal_edges[c]``
    holds the arcs inside component ``c``.
    """

    components: tuple
    component_of: dict
    dag_edges: dict
    internal_edges: tuple
    self_witnessed: tuple

    def __len__(self):
        return len(self.components)

    def predecessors(self, c: int) -> list:
        return sorted(a for (a, b) in self.dag_edges if b == c)

    def expand(self) -> frozenset:
        """The original arc set, reassembled from the condensation."""
        arcs = set()
        for group in self.internal_edges:
            arcs |= group
        for group in self.dag_edges.values():
            arcs |= group
        return frozenset(arcs)


def strongly_connected_components(d: Digraph) -> list:
    """Tarjan's algorithm, iterative; components come out sinks first."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    out = []
    counter = 0
    succ = d.successors
    for root in range(1, d.n + 1):
        if root in index:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, pos = work[-1]
            nbrs = succ[v]
            if pos < len(nbrs):
                work[-1] = (v, pos + 1)
                w = nbrs[pos]
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(tuple(sorted(comp)))
    return out


def scc_condensation(d: Digraph) -> Condensation:
    comps = list(reversed(strongly_connected_components(d)))
    component_of = {v: c for c, members in enumerate(comps) for v in members}
    internal = [set() for _ in comps]
    dag = {}
    for u, v in d.edges:
        cu, cv = component_of[u], component_of[v]
        if cu == cv:
            internal[cu].add((u, v))
        else:
            dag.setdefault((cu, cv), set()).add((u, v))
    witnessed = tuple(
        len(members) >= 2 or (members[0], members[0]) in internal[c]
        for c, members in enumerate(comps)
    )
    return Condensation(
        components=tuple(comps),
        component_of=component_of,
        dag_edges={k: frozenset(v) for k, v in sorted(dag.items())},
        internal_edges=tuple(frozenset(s) for s in internal),
        self_witnessed=witnessed,
    )


# ---------------------------------------------------------------------------
# Planarity


def _nx_graph(g: Network) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    return G


def is_planar(g: Network) -> tuple:
    """``(True, rotation)`` for planar graphs, ``(False, None)`` otherwise.

    ``rotation`` maps every vertex to its neighbours in clockwise order.
    The test itself is networkx's left-right planarity algorithm.
    """
    planar, emb = nx.check_planarity(_nx_graph(g))
    if not planar:
        return False, None
    rotation = {v: tuple(emb.neighbors_cw_order(v)) if v in emb else () for v in g.vertices}
    return True, rotation


def faces(rotation: dict) -> list:
    """Face boundary walks of a rotation system, each a list of vertices.

    The walk leaves ``v`` towards the neighbour that follows the arrival
    vertex in ``v``'s cyclic order.
    """
    position = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()}
    seen = set()
    walks = []
    for v in sorted(rotation):
        for u in rotation[v]:
            if (v, u) in seen:
                continue
            walk = []
            a, b = v, u
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                nbrs = rotation[b]
                c = nbrs[(position[b][a] + 1) % len(nbrs)]
                a, b = b, c
            walks.append(walk)
    return walks


def _components(adjacency: dict) -> list:
    seen = set()
    comps = []
    for s in sorted(adjacency):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def euler_characteristics(rotation: dict) -> list:
    """``|V| - |E| + |F|`` per connected component (2 for every planar embedding)."""
    walks = faces(rotation)
    out = []
    for comp in _components({v: set(ns) for v, ns in rotation.items()}):
        members = set(comp)
        n_edges = sum(len(rotation[v]) for v in comp) // 2
        n_faces = sum(1 for w in walks if w[0] in members) if n_edges else 1
        out.append(len(comp) - n_edges + n_faces)
    return out


def validate_rotation_system(g: Network, rotation: dict) -> None:
    """Raise unless ``rotation`` is a planar rotation system of ``g``."""
    if set(rotation) != set(g.vertices):
        raise ValidationError("rotation system must list every vertex exactly once")
    for v in g.vertices:
        nbrs = rotation[v]
        if len(set(nbrs)) != len(nbrs) or set(nbrs) != set(g.adjacency[v]):
            raise ValidationError(f"rotation at vertex {v} does not match its neighbours")
    if any(chi != 2 for chi in euler_characteristics(rotation)):
        raise ValidationError("rotation system is not a planar embedding")


# ---------------------------------------------------------------------------
# Simple structural checks


def has_vertex_cover_one(g: Network) -> bool:
    if not g.edges:
        return True
    u, v = min(g.edges)
    return any(all(c in e for e in g.edges) for c in (u, v))


def closure_graph(s: System | Network) -> Network:
    """Network in which every closed neighbourhood ``{i} | N(i)`` is a clique."""
    g = s.network if isinstance(s, System) else s
    edges = set(g.edges)
    for v in g.vertices:
        scope = g.scope(v)
        for a in range(len(scope)):
            for b in range(a + 1, len(scope)):
                edges.add((scope[a], scope[b]))
    return Network(g.n, frozenset(edges))


def connected_components(g: Network) -> list:
    return _components({v: set(ns) for v, ns in g.adjacency.items()})


# ---------------------------------------------------------------------------
# Tree decompositions


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple
    tree_edges: tuple = field(default=())

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @cached_property
    def tree_adjacency(self) -> dict:
        adj = {i: [] for i in range(len(self.bags))}
        for a, b in self.tree_edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def elimination_order(g: Network, strategy: str = "min_fill") -> list:
    """Greedy elimination order; ties go to the lowest vertex index."""
    if strategy not in ("min_fill", "min_degree"):
        raise ValueError(f"unknown strategy {strategy!r}")
    adj = {v: set(ns) for v, ns in g.adjacency.items()}

    def score(v):
        if strategy == "min_degree":
            return len(adj[v])
        nbrs = sorted(adj[v])
        missing = 0
        for i, a in enumerate(nbrs):
            row = adj[a]
            for b in nbrs[i + 1:]:
                if b not in row:
                    missing += 1
        return missing

    current = {v: score(v) for v in adj}
    heap = [(s, v) for v, s in current.items()]
    heapq.heapify(heap)
    order = []
    while heap:
        s, v = heapq.heappop(heap)
        if v not in adj or current[v] != s:
            continue
        order.append(v)
        nbrs = adj.pop(v)
        del current[v]
        for a in nbrs:
            adj[a].discard(v)
            adj[a] |= nbrs - {a}
        touched = set(nbrs)
        if strategy == "min_fill":
            for a in nbrs:
                touched |= adj[a]
        for w in touched:
            new = score(w)
            if new != current[w]:
                current[w] = new
                heapq.heappush(heap, (new, w))
    return order


def decomposition_from_order(g: Network, order: list) -> TreeDecomposition:
    if not order:
        return TreeDecomposition((frozenset(),), ())
    pos = {v: i for i, v in enumerate(order)}
    adj = {v: set(ns) for v, ns in g.adjacency.items()}
    bags = []
    parents = []
    for v in order:
        later = {u for u in adj[v] if pos[u] > pos[v]}
        bags.append(frozenset(later | {v}))
        parents.append(pos[min(later, key=pos.__getitem__)] if later else None)
        for a in later:
            adj[a] |= later - {a}
    edges = [(i, p) for i, p in enumerate(parents) if p is not None]
    roots = [i for i, p in enumerate(parents) if p is None]
    edges += list(zip(roots, roots[1:]))
    return TreeDecomposition(tuple(bags), tuple(edges))


def tree_decomposition(g: Network, strategy: str = "min_fill") -> TreeDecomposition:
    """Heuristic decomposition from a greedy elimination order (width is an upper bound)."""
    return decomposition_from_order(g, elimination_order(g, strategy))


def decomposition_problems(g: Network, td: TreeDecomposition) -> list:
    """Violated decomposition properties, as human-readable strings (empty when valid)."""
    problems = []
    k = len(td.bags)
    if k == 0:
        return ["decomposition has no bags"]
    if len(td.tree_edges) != k - 1:
        problems.append(f"tree has {len(td.tree_edges)} edges, expected {k - 1}")
    adj = td.tree_adjacency
    if len(_components({i: set(adj[i]) for i in range(k)})) != 1:
        problems.append("bag tree is not connected")
    holders = {v: [] for v in g.vertices}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if v not in holders:
                problems.append(f"bag {i} contains unknown vertex {v}")
            else:
                holders[v].append(i)
    for v, where in holders.items():
        if not where:
            problems.append(f"vertex {v} is in no bag")
            continue
        inside = set(where)
        if len(_components({i: {j for j in adj[i] if j in inside} for i in inside})) != 1:
            problems.append(f"bags containing vertex {v} are not connected")
    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for bag in td.bags):
            problems.append(f"edge {(u, v)} is in no bag")
    return problems


def is_valid_decomposition(g: Network, td: TreeDecomposition) -> bool:
    return not decomposition_problems(g, td)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphReport:
    n: int
    edges: int
    max_degree: int
    planar: bool
    vertex_cover_one: bool
    width: int
    components: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def graph_report(g: Network, strategy: str = "min_fill") -> GraphReport:
    planar, _ = is_planar(g)
    return GraphReport(
        n=g.n,
        edges=len(g.edges),
        max_degree=g.max_degree(),
        planar=planar,
        vertex_cover_one=has_vertex_cover_one(g),
        width=tree_decomposition(g, strategy).width,
        components=len(connected_components(g)),
    )
