"""Membership of concrete boolean functions in Post classes.

Only finitely many concrete functions are ever classified (those of one
system); nothing here reasons about whole classes.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .errors import ArityCapExceeded, BudgetExceeded
from .functions import DEFAULT_ARITY_CAP, TruthTable

DEFAULT_SEPARATION_BUDGET = 1_000_000


@dataclass(frozen=True)
class PostReport:
    arity: int
    R0: bool
    R1: bool
    M: bool
    D: bool
    L: bool
    E: bool
    V: bool
    N: bool
    S0: bool
    S1: bool
    # None when the level-2 check exceeded its subset budget
    S0_2: Optional[bool]
    S1_2: Optional[bool]
    D2: bool
    S00: bool
    S10: bool
    E2: bool
    V2: bool
    linear_coefficients: Optional[tuple]
    # for E (resp. V): the index set J, or None when the function is the constant 0 (resp. 1)
    and_set: Optional[tuple]
    or_set: Optional[tuple]
    constant: Optional[int]

    def as_dict(self) -> dict:
        d = asdict(self)
        for key in ("linear_coefficients", "and_set", "or_set"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d

    def classes(self) -> list:
        """Names of the classes the function belongs to, in a fixed order."""
        names = ["R0", "R1", "M", "D", "L", "E", "V", "N", "S0", "S1", "S0_2", "S1_2",
                 "D2", "S00", "S10", "E2", "V2"]
        return [name for name in names if getattr(self, name)]


def _bit(table: TruthTable, idx: int) -> int:
    return 1 if table.bits[idx] == "1" else 0


def is_monotone(table: TruthTable) -> bool:
    k = table.arity
    bits = table.bits
    for idx in range(1 << k):
        if bits[idx] == "1":
            for j in range(k):
                up = idx | (1 << j)
                if up != idx and bits[up] == "0":
                    return False
    return True


def is_self_dual(table: TruthTable) -> bool:
    bits = table.bits
    top = len(bits) - 1
    return all(bits[idx] != bits[top - idx] for idx in range(len(bits)))


def linear_coefficients(table: TruthTable) -> Optional[tuple]:
    """``(a0, a1, ..., ak)`` with ``f = a0 ^ a1 x1 ^ ... ^ ak xk``, or None if f is not affine."""
    k = table.arity
    a0 = _bit(table, 0)
    coeffs = [_bit(table, 1 << (k - 1 - j)) ^ a0 for j in range(k)]
    mask = 0
    for j, a in enumerate(coeffs):
        if a:
            mask |= 1 << (k - 1 - j)
    for idx in range(1 << k):
        if _bit(table, idx) != a0 ^ (bin(idx & mask).count("1") & 1):
            return None
    return (a0, *coeffs)


def _constant(table: TruthTable) -> Optional[int]:
    if "1" not in table.bits:
        return 0
    if "0" not in table.bits:
        return 1
    return None


def and_set(table: TruthTable) -> Optional[tuple]:
    """Index set J (1-based) with ``f = min over J`` (J empty means the constant 1), if any."""
    k = table.arity
    full = (1 << k) - 1
    if _bit(table, full) != 1:
        return None
    J = tuple(j + 1 for j in range(k) if _bit(table, full & ~(1 << (k - 1 - j))) == 0)
    mask = sum(1 << (k - j) for j in J)
    for idx in range(1 << k):
        if _bit(table, idx) != (1 if idx & mask == mask else 0):
            return None
    return J


def or_set(table: TruthTable) -> Optional[tuple]:
    """Index set J with ``f = max over J`` (J empty means the constant 0), if any."""
    k = table.arity
    if _bit(table, 0) != 0:
        return None
    J = tuple(j + 1 for j in range(k) if _bit(table, 1 << (k - 1 - j)) == 1)
    mask = sum(1 << (k - j) for j in J)
    for idx in range(1 << k):
        if _bit(table, idx) != (1 if idx & mask else 0):
            return None
    return J


def is_in_N(table: TruthTable) -> bool:
    """Projection, negated projection, or constant."""
    if _constant(table) is not None:
        return True
    k = table.arity
    for j in range(k):
        shift = k - 1 - j
        proj = "".join("1" if (idx >> shift) & 1 else "0" for idx in range(1 << k))
        if table.bits == proj or table.bits == proj.translate(str.maketrans("01", "10")):
            return True
    return False


def _preimage(table: TruthTable, b: int) -> list:
    ch = "1" if b else "0"
    return [idx for idx, c in enumerate(table.bits) if c == ch]


def is_b_separating(
    table: TruthTable,
    b: int,
    level: Optional[int] = None,
    budget: int = DEFAULT_SEPARATION_BUDGET,
) -> bool:
    """Membership in S_b (``level=None``) or S_b^level.

    A tuple set is b-separating when some coordinate equals ``b`` throughout.
    At a finite level every subset of ``f^-1(b)`` with at most ``level``
    members must be b-separating (Post's definition, where the ``level``
    tuples need not be distinct); this is what makes S_0^k a subclass of R_1.
    """
    k = table.arity
    full = (1 << k) - 1
    pre = _preimage(table, b)

    def separating(group) -> bool:
        if b == 1:
            acc = full
            for t in group:
                acc &= t
            return acc != 0
        acc = 0
        for t in group:
            acc |= t
        return acc != full

    if level is None:
        return k > 0 and separating(pre)
    if level < 1:
        raise ValueError("separation level must be at least 1")
    work = sum(comb(len(pre), size) for size in range(1, min(level, len(pre)) + 1))
    if work > budget:
        raise BudgetExceeded(f"level-{level} separation check needs {work} subsets (budget {budget})")
    for size in range(1, min(level, len(pre)) + 1):
        for group in combinations(pre, size):
            if not separating(group):
                return False
    return True


def classify(
    table: TruthTable,
    cap: int = DEFAULT_ARITY_CAP,
    budget: int = DEFAULT_SEPARATION_BUDGET,
) -> PostReport:
    if table.arity > cap:
        raise ArityCapExceeded(f"arity {table.arity} exceeds classification cap {cap}")
    k = table.arity
    full = (1 << k) - 1
    R0 = _bit(table, 0) == 0
    R1 = _bit(table, full) == 1
    M = is_monotone(table)
    D = is_self_dual(table)
    coeffs = linear_coefficients(table)
    const = _constant(table)
    J_and = and_set(table)
    J_or = or_set(table)
    E = J_and is not None or const == 0
    V = J_or is not None or const == 1
    S0 = is_b_separating(table, 0)
    S1 = is_b_separating(table, 1)
    S0_2 = _maybe(lambda: is_b_separating(table, 0, 2, budget))
    S1_2 = _maybe(lambda: is_b_separating(table, 1, 2, budget))
    S10 = S1 and M and R1
    S00 = S0 and M and R0
    return PostReport(
        arity=k,
        R0=R0,
        R1=R1,
        M=M,
        D=D,
        L=coeffs is not None,
        E=E,
        V=V,
        N=is_in_N(table),
        S0=S0,
        S1=S1,
        S0_2=S0_2,
        S1_2=S1_2,
        D2=D and M,
        S00=S00,
        S10=S10,
        E2=E and S10,
        V2=V and S00,
        linear_coefficients=coeffs,
        and_set=J_and if E else None,
        or_set=J_or if V else None,
        constant=const,
    )


def _maybe(check):
    try:
        return check()
    except BudgetExceeded:
        return None
