import random

import pytest

from rerail.games import GameArena, solve

import oracles


def two_loops():
    # vertex 0: choice point, vertex 1: even loop, vertex 2: odd loop
    return GameArena(owners=[0, 0, 0], colors=[2, 0, 1],
                     edges=[[1, 2], [1], [2]])


def test_arena_basics():
    arena = two_loops()
    assert arena.vertex_count == 3
    assert arena.vertex_name(1) == "1"
    named = GameArena([0], [0], [[0]], names=["start"])
    assert named.vertex_name(0) == "start"


def test_arena_edges_sorted_deduped():
    arena = GameArena([0, 1], [0, 1], [[1, 0, 1], [0]])
    assert arena.edges[0] == [0, 1]


@pytest.mark.parametrize("owners,colors,edges", [
    ([0, 1], [0], [[1], [0]]),          # length mismatch
    ([0, 1], [0, 1], [[1], []]),        # dead end
    ([0], [0], [[1]]),                  # target out of range
    ([2], [0], [[0]]),                  # bad owner
    ([0], [-1], [[0]]),                 # negative color
])
def test_arena_rejects(owners, colors, edges):
    with pytest.raises(ValueError):
        GameArena(owners, colors, edges)


def test_arena_initial_out_of_range():
    with pytest.raises(ValueError):
        GameArena([0], [0], [[0]], initial=3)


def test_dump_table():
    arena = two_loops()
    lines = arena.dump_table().splitlines()
    assert lines[0] == 'vertex 0 owner 0 color 2 name "0" succ 1 2'
    assert lines[2] == 'vertex 2 owner 0 color 1 name "2" succ 2'
    assert arena.dump_table().endswith("\n")


def test_solve_chooses_even_loop():
    w0, w1 = solve(two_loops())
    assert w0 == {0, 1}
    assert w1 == {2}


def test_solve_opponent_forces_odd_loop():
    arena = GameArena(owners=[1, 0, 0], colors=[2, 0, 1],
                      edges=[[1, 2], [1], [2]])
    w0, w1 = solve(arena)
    assert w0 == {1}
    assert w1 == {0, 2}


def test_solve_min_color_wins_on_cycle():
    # a single forced cycle through colors 1 and 2: minimum is odd
    arena = GameArena([0, 1], [1, 2], [[1], [0]])
    w0, w1 = solve(arena)
    assert w0 == set()
    assert w1 == {0, 1}


def test_solve_matches_strategy_enumeration():
    rng = random.Random(21)
    for _ in range(120):
        arena = oracles.random_arena(rng, 1 + rng.randrange(6), rng.randrange(4))
        w0, w1 = solve(arena)
        assert w0 | w1 == set(range(arena.vertex_count))
        assert not (w0 & w1)
        assert w0 == oracles.solve_by_strategies(arena)


def test_winning_region_is_a_trap():
    rng = random.Random(22)
    for _ in range(60):
        arena = oracles.random_arena(rng, 2 + rng.randrange(7), rng.randrange(4))
        w0, _ = solve(arena)
        for v in w0:
            succ_in = [w for w in arena.edges[v] if w in w0]
            if arena.owners[v] == 0:
                assert succ_in
            else:
                assert len(succ_in) == len(arena.edges[v])
