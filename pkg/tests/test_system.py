import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from fpcount.errors import ValidationError
from fpcount.functions import Not, TruthTable, Var
from fpcount.system import (
    Network,
    System,
    UpdateSchedule,
    configuration,
    global_map,
    global_transition,
    is_fixed_point,
    is_local_fixed_point,
    neighbors,
)

from generators import random_system


def path3():
    return Network.from_edges(3, [(1, 2), (2, 3)])


def swap():
    # f_1 = x_2, f_2 = x_1; scopes are (1, 2) for both
    return System(Network.from_edges(2, [(1, 2)]), (Var(2), Var(1)))


def negation():
    return System(Network(1, frozenset()), (Not(Var(1)),))


class TestNetwork:
    def test_normalises_edges(self):
        g = Network.from_edges(3, [(2, 1), (3, 2)])
        assert g.edges == {(1, 2), (2, 3)}
        assert g.scope(2) == (1, 2, 3)
        assert g.degree(2) == 2 and g.max_degree() == 2

    @pytest.mark.parametrize("edges", [[(1, 1)], [(0, 1)], [(1, 4)]])
    def test_rejects(self, edges):
        with pytest.raises(ValidationError):
            Network.from_edges(3, edges)

    def test_neighbors(self):
        assert neighbors(path3(), {2}) == {1, 3}
        assert neighbors(path3(), {1, 2}) == {3}
        assert neighbors(Network(1, frozenset()), {1}) == frozenset()
        with pytest.raises(ValidationError):
            neighbors(path3(), {4})


class TestSystem:
    def test_arity_checked(self):
        with pytest.raises(ValidationError):
            System(path3(), (TruthTable(2, "0101"),) * 3)
        with pytest.raises(ValidationError):
            System(Network(1, frozenset()), (Var(2),))
        with pytest.raises(ValidationError):
            System(Network(1, frozenset()), ())

    def test_representation(self):
        assert swap().representation() == "formula"
        mixed = System(Network.from_edges(2, [(1, 2)]), (Var(1), TruthTable(2, "0011")))
        assert mixed.representation() == "mixed"


class TestTransitions:
    def test_empty_update_set(self):
        assert global_transition(swap(), set(), (0, 1)) == (0, 1)

    def test_swap(self):
        assert global_transition(swap(), {1, 2}, (0, 1)) == (1, 0)

    def test_negation(self):
        assert global_transition(negation(), {1}, (0,)) == (1,)

    def test_global_map(self):
        s = swap()
        assert global_map(s, UpdateSchedule(()), (0, 1)) == (0, 1)
        assert global_map(s, UpdateSchedule(({1}, {2})), (0, 1)) == (1, 1)

    def test_schedule_validation(self):
        with pytest.raises(ValidationError):
            global_map(swap(), UpdateSchedule(({3},)), (0, 1))

    def test_length_checked(self):
        with pytest.raises(ValidationError):
            global_transition(swap(), {1}, (0,))

    def test_fixed_points(self):
        ident = System(path3(), (Var(1), Var(2), Var(2)))
        assert all(is_fixed_point(ident, c) for c in product((0, 1), repeat=3))
        assert not is_fixed_point(negation(), (0,))
        assert is_fixed_point(swap(), (1, 1))
        assert is_local_fixed_point(swap(), {1}, (1, 1))
        assert not is_local_fixed_point(swap(), {2}, (0, 1))

    def test_configuration_parsing(self):
        assert configuration("0110") == (0, 1, 1, 0)
        with pytest.raises(ValidationError):
            configuration("012")
        with pytest.raises(ValidationError):
            configuration("01", 3)


seeds = st.integers(min_value=0, max_value=10**9)


def _random_schedule(rng, n, length):
    return UpdateSchedule(tuple({v for v in range(1, n + 1) if rng.random() < 0.5} for _ in range(length)))


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_fixed_points_are_schedule_independent(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    s = random_system(rng, n, rng.choice(["table", "formula", "circuit"]))
    for config in product((0, 1), repeat=n):
        fixed = is_fixed_point(s, config)
        stays = all(global_map(s, _random_schedule(rng, n, rng.randint(1, 4)), config) == config for _ in range(100))
        if fixed:
            assert stays
        # a non-fixed configuration moves under the synchronous single step
        assert fixed == (global_transition(s, range(1, n + 1), config) == config)


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_locality(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    s = random_system(rng, n, "table")
    U = {v for v in range(1, n + 1) if rng.random() < 0.5}
    x = tuple(rng.randint(0, 1) for _ in range(n))
    for i in range(1, n + 1):
        scope = set(s.scope(i))
        y = tuple(x[v - 1] if v in scope else rng.randint(0, 1) for v in range(1, n + 1))
        assert global_transition(s, U, x)[i - 1] == global_transition(s, U, y)[i - 1]


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_composition(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    s = random_system(rng, n, "formula")
    a, b = _random_schedule(rng, n, 3), _random_schedule(rng, n, 2)
    x = tuple(rng.randint(0, 1) for _ in range(n))
    joined = UpdateSchedule(a.steps + b.steps)
    assert global_map(s, joined, x) == global_map(s, b, global_map(s, a, x))
