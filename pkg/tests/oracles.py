"""Reference implementations used only by the tests.

Everything here is written from the raw definitions and shares no code with
the package beyond its data types, so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations, product

from fpcount.functions import And, Circuit, Const, Maj3, Not, Or, S00, S10, TruthTable, Var, Xor


# ---------------------------------------------------------------------------
# Evaluation and fixed points


def eval_formula(node, args) -> int:
    if isinstance(node, Var):
        return args[node.index - 1]
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Not):
        return 1 - eval_formula(node.child, args)
    if isinstance(node, And):
        return int(all(eval_formula(c, args) for c in node.operands))
    if isinstance(node, Or):
        return int(any(eval_formula(c, args) for c in node.operands))
    if isinstance(node, Xor):
        return sum(eval_formula(c, args) for c in node.operands) % 2
    x, y, z = (eval_formula(c, args) for c in (node.a, node.b, node.c))
    if isinstance(node, Maj3):
        return int(x + y + z >= 2)
    if isinstance(node, S00):
        return int(x or (y and z))
    if isinstance(node, S10):
        return int(x and (y or z))
    raise TypeError(node)


def eval_circuit(circuit: Circuit, args) -> int:
    vals = []
    for g in circuit.gates:
        a = g.args
        if g.op == "in":
            v = args[a[0] - 1]
        elif g.op == "const":
            v = a[0]
        elif g.op == "not":
            v = 1 - vals[a[0]]
        elif g.op == "and":
            v = int(all(vals[r] for r in a))
        elif g.op == "or":
            v = int(any(vals[r] for r in a))
        elif g.op == "xor":
            v = sum(vals[r] for r in a) % 2
        else:
            x, y, z = (vals[r] for r in a)
            v = {"maj": int(x + y + z >= 2), "s00": int(x or (y and z)), "s10": int(x and (y or z))}[g.op]
        vals.append(v)
    return vals[circuit.output]


def eval_any(f, args) -> int:
    if isinstance(f, TruthTable):
        idx = 0
        for a in args:
            idx = 2 * idx + a
        return int(f.bits[idx])
    if isinstance(f, Circuit):
        return eval_circuit(f, args)
    return eval_formula(f, args)


def naive_fixed_points(system) -> list:
    n = system.n
    scopes = [system.network.scope(v) for v in range(1, n + 1)]
    out = []
    for x in product((0, 1), repeat=n):
        if all(eval_any(system.functions[v], [x[u - 1] for u in scopes[v]]) == x[v] for v in range(n)):
            out.append(x)
    return out


def naive_count(system) -> int:
    return len(naive_fixed_points(system))


def table_of(f, arity: int) -> str:
    return "".join(str(eval_any(f, list(a))) for a in product((0, 1), repeat=arity))


# ---------------------------------------------------------------------------
# Post classes from the raw definitions


def reference_classes(bits: str) -> dict:
    k = (len(bits) - 1).bit_length()
    tuples = list(product((0, 1), repeat=k))
    f = {t: int(bits[i]) for i, t in enumerate(tuples)}
    neg = lambda t: tuple(1 - x for x in t)

    R0 = f[(0,) * k] == 0
    R1 = f[(1,) * k] == 1
    M = all(f[a] <= f[b] for a in tuples for b in tuples if all(x <= y for x, y in zip(a, b)))
    D = all(f[neg(a)] == 1 - f[a] for a in tuples)
    L = any(
        all(f[t] == (c[0] + sum(ci * ti for ci, ti in zip(c[1:], t))) % 2 for t in tuples)
        for c in product((0, 1), repeat=k + 1)
    )
    subsets = [J for r in range(k + 1) for J in combinations(range(k), r)]
    is_zero = all(v == 0 for v in f.values())
    is_one = all(v == 1 for v in f.values())
    E = is_zero or any(all(f[t] == int(all(t[j] for j in J)) for t in tuples) for J in subsets)
    V = is_one or any(all(f[t] == int(any(t[j] for j in J)) for t in tuples) for J in subsets)
    N = is_zero or is_one or any(
        all(f[t] == t[j] for t in tuples) or all(f[t] == 1 - t[j] for t in tuples) for j in range(k)
    )

    def separating(group, b):
        return any(all(t[i] == b for t in group) for i in range(k))

    def S(b):
        return separating([t for t in tuples if f[t] == b], b)

    def S2(b):
        pre = [t for t in tuples if f[t] == b]
        return all(separating([s, t], b) for s in pre for t in pre)

    S0, S1 = S(0), S(1)
    out = dict(R0=R0, R1=R1, M=M, D=D, L=L, E=E, V=V, N=N, S0=S0, S1=S1, S0_2=S2(0), S1_2=S2(1))
    out["D2"] = D and M
    out["S00"] = S0 and M and R0
    out["S10"] = S1 and M and R1
    out["E2"] = E and out["S10"]
    out["V2"] = V and out["S00"]
    return out


# ---------------------------------------------------------------------------
# Planarity by Kuratowski-subdivision search


K5_EDGES = list(combinations(range(5), 2))
K33_EDGES = [(i, j) for i in range(3) for j in range(3, 6)]


def _reduce(adj: dict) -> dict:
    """Drop vertices of degree <= 1 repeatedly (they lie on no subdivision)."""
    adj = {v: set(ns) for v, ns in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if len(adj[v]) <= 1:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                changed = True
    return adj


def _route(adj, pairs, used) -> bool:
    """Internally vertex-disjoint paths joining every pair, avoiding ``used``."""
    if not pairs:
        return True
    (s, t), rest = pairs[0], pairs[1:]

    def walk(v, path_set):
        for w in adj[v]:
            if w == t:
                if _route(adj, rest, used | path_set):
                    return True
            elif w not in used and w not in path_set:
                if walk(w, path_set | {w}):
                    return True
        return False

    return walk(s, frozenset())


def has_kuratowski_subdivision(n: int, edges) -> bool:
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    adj = _reduce(adj)
    verts = sorted(adj)
    deg4 = [v for v in verts if len(adj[v]) >= 4]
    for branch in combinations(deg4, 5):
        pairs = [(branch[i], branch[j]) for i, j in K5_EDGES]
        if _route(adj, pairs, frozenset(branch)):
            return True
    deg3 = [v for v in verts if len(adj[v]) >= 3]
    for six in combinations(deg3, 6):
        for left in combinations(six, 3):
            if six[0] not in left:
                continue
            right = [v for v in six if v not in left]
            pairs = [(a, b) for a in left for b in right]
            if _route(adj, pairs, frozenset(six)):
                return True
    return False


# ---------------------------------------------------------------------------
# Transfer matrices for path systems


def path_count_transfer(tables) -> int:
    """Fixed points of a path system with vertex functions ``tables[i]`` (bit strings).

    End vertices have 2 arguments, inner vertices 3, in ascending order.
    The count is u^T M_2 ... M_{n-1} w over states (x_{i-1}, x_i).
    """
    n = len(tables)
    states = [(a, b) for a in (0, 1) for b in (0, 1)]
    # vector over (x1, x2) satisfying vertex 1's constraint
    vec = {s: int(int(tables[0][2 * s[0] + s[1]]) == s[0]) for s in states}
    for i in range(1, n - 1):
        nxt = {s: 0 for s in states}
        for (a, b), cnt in vec.items():
            if not cnt:
                continue
            for c in (0, 1):
                if int(tables[i][4 * a + 2 * b + c]) == b:
                    nxt[(b, c)] += cnt
        vec = nxt
    return sum(cnt for (a, b), cnt in vec.items() if int(tables[-1][2 * a + b]) == b)


def matrix_power_count(inner: str, first: str, last: str, n: int) -> int:
    """Closed form for a path whose inner vertices all share ``inner``: u^T M^(n-2) w."""
    states = [(a, b) for a in (0, 1) for b in (0, 1)]
    M = [[0] * 4 for _ in range(4)]
    for i, (a, b) in enumerate(states):
        for j, (b2, c) in enumerate(states):
            if b2 == b and int(inner[4 * a + 2 * b + c]) == b:
                M[i][j] = 1

    def mul(A, B):
        return [[sum(A[i][k] * B[k][j] for k in range(4)) for j in range(4)] for i in range(4)]

    P = [[int(i == j) for j in range(4)] for i in range(4)]
    base, e = M, n - 2
    while e:
        if e & 1:
            P = mul(P, base)
        base = mul(base, base)
        e >>= 1
    u = [int(int(first[2 * a + b]) == a) for a, b in states]
    w = [int(int(last[2 * a + b]) == b) for a, b in states]
    return sum(u[i] * P[i][j] * w[j] for i in range(4) for j in range(4))
