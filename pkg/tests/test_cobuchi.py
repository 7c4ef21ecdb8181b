import random

import pytest

from rerail.cobuchi import (Chain, CoBuchiAutomaton, Rlta, build_rlta_chain,
                            chain_color, chain_falling_violations, chain_member,
                            compute_Rij, decompose_rerailing,
                            inclusion_hd_cobuchi, inclusion_table, parse_chain,
                            residual_tracking_single, serialize_chain)
from rerail.lasso import LassoWord, enumerate_lassos, parse_lasso
from rerail.raf import Alphabet, AutomatonStructure, RafError

import oracles

AB = Alphabet(("a", "b"))
ABCD = Alphabet(("a", "b", "c", "d"))


def universal(alphabet=AB):
    return CoBuchiAutomaton(alphabet, 1,
                            [(0, x, 0, 2) for x in range(len(alphabet))], 0)


def empty_language(alphabet=AB):
    return CoBuchiAutomaton(alphabet, 1,
                            [(0, x, 0, 1) for x in range(len(alphabet))], 0)


def test_cobuchi_rejects_other_colors():
    with pytest.raises(ValueError):
        CoBuchiAutomaton(AB, 1, [(0, 0, 0, 0), (0, 1, 0, 2)], 0)


def test_cobuchi_rejects_incomplete():
    with pytest.raises(ValueError):
        CoBuchiAutomaton(AB, 1, [(0, 0, 0, 2)], 0)


def test_from_structure_and_accepting_successors(hd5):
    level = CoBuchiAutomaton.from_structure(hd5)
    assert level.accepting_successors(0, 0) == [1]
    assert level.accepting_successors(0, 2) == []   # both c-moves are rejecting
    assert level.accepting_successors(3, 2) == [2]


def test_chain_basics(uniform_chain):
    assert len(uniform_chain) == 3
    assert uniform_chain.level(1).state_count == 2
    assert uniform_chain.level(2).state_count == 3
    assert uniform_chain.alphabet == ABCD


def test_chain_needs_shared_alphabet():
    with pytest.raises(ValueError):
        Chain([universal(AB), universal(Alphabet(("a", "c")))])
    with pytest.raises(ValueError):
        Chain([])
    assert len(Chain([], alphabet=AB)) == 0


def test_chain_colors_frozen(uniform_chain):
    expected = {
        ";c": 3, ";d": 3, "d;c": 3,
        ";a": 2, ";b": 2, ";b.c": 2,
        ";c.a": 1,
        ";a.d": 0,
    }
    for text, color in expected.items():
        w = parse_lasso(text, ABCD)
        assert chain_color(uniform_chain, w) == color
        assert chain_member(uniform_chain, w) == (color % 2 == 0)


def test_chain_color_matches_oracle(uniform_chain):
    for w in enumerate_lassos(4, 2, 2):
        assert chain_color(uniform_chain, w) == oracles.chain_color(uniform_chain, w)


def test_falling_violations_absent(uniform_chain):
    assert chain_falling_violations(uniform_chain, 2, 3) == []


def test_falling_violation_detected():
    only_a = CoBuchiAutomaton(AB, 1, [(0, 0, 0, 2), (0, 1, 0, 1)], 0)
    rising = Chain([only_a, universal()])
    violations = chain_falling_violations(rising, 1, 2)
    assert violations
    assert violations[0] == (2, LassoWord((), (1,)))


def test_chain_roundtrip(uniform_chain):
    text = serialize_chain(uniform_chain)
    again = parse_chain(text)
    assert serialize_chain(again) == text
    assert len(again) == 3


@pytest.mark.parametrize("text,hint", [
    ("", "cocoa 1"),
    ("raf 1\n", "cocoa 1"),
    ("cocoa 1\nnope\n", "count"),
    ("cocoa 1\ncount x\n", "count"),
    ("cocoa 1\ncount 1\n", "automaton 1"),
    ("cocoa 1\ncount 1\nautomaton 2\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0 2\n",
     "consecutively"),
    ("cocoa 1\ncount 1\nautomaton 1\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0 2\n"
     "automaton 2\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0 2\n",
     "trailing"),
    ("cocoa 1\ncount 1\nautomaton 1\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0 3\n",
     "co-Buchi"),
])
def test_parse_chain_errors(text, hint):
    with pytest.raises(RafError) as err:
        parse_chain(text)
    assert hint in str(err.value)


def test_decompose_shape(minimal5):
    chain = decompose_rerailing(minimal5)
    assert len(chain) == minimal5.max_color == 3
    for i in (1, 2, 3):
        level = chain.level(i)
        assert isinstance(level, CoBuchiAutomaton)
        assert level.state_count == minimal5.state_count


def test_decompose_requires_complete():
    partial = AutomatonStructure(AB, 1, [(0, 0, 0, 2)], 0)
    with pytest.raises(ValueError):
        decompose_rerailing(partial)


def test_decompose_color_is_max_dominating(minimal5):
    chain = decompose_rerailing(minimal5)
    for w in enumerate_lassos(4, 2, 2):
        assert chain_color(chain, w) == max(oracles.dominating_colors(minimal5, w))


def test_decompose_preserves_deterministic_languages():
    rng = random.Random(31)
    for _ in range(20):
        aut = oracles.random_dpw(rng, 1 + rng.randrange(5), 2, 4)
        chain = decompose_rerailing(aut)
        assert len(chain) == aut.max_color
        for w in enumerate_lassos(2, 3, 3):
            assert chain_member(chain, w) == oracles.member_parity_det(aut, w)


def test_residual_tracker_alternates(hd5):
    tracker, state_map = residual_tracking_single(CoBuchiAutomaton.from_structure(hd5))
    assert state_map == [0, 1, 0, 1, 0]
    assert tracker.state_count == 2
    assert tracker.initial == 0
    assert tracker.delta == [[1, 1, 1], [0, 0, 0]]


def test_residual_tracker_rejects_language_nondeterminism():
    one = Alphabet(("a",))
    split = CoBuchiAutomaton(one, 2, [(0, 0, 0, 2), (0, 0, 1, 1), (1, 0, 1, 1)], 0)
    with pytest.raises(ValueError, match="splits on symbol"):
        residual_tracking_single(split)


def test_rlta_validation():
    with pytest.raises(ValueError):
        Rlta(AB, 2, [[0, 1]], 0)
    with pytest.raises(ValueError):
        Rlta(AB, 1, [[0]], 0)
    with pytest.raises(ValueError):
        Rlta(AB, 1, [[0, 1]], 0)
    with pytest.raises(ValueError):
        Rlta(AB, 1, [[0, 0]], 1)


def test_rlta_step_and_states_along():
    tracker = Rlta(AB, 2, [[1, 0], [0, 1]], 0, names=["even", "odd"])
    assert tracker.step(0, 0) == 1
    assert tracker.state_name(1) == "odd"
    w = LassoWord((0,), (1,))
    assert tracker.states_along(w, 5) == [0, 1, 1, 1, 1]
    assert tracker == Rlta(AB, 2, [[1, 0], [0, 1]], 0)
    assert tracker != Rlta(AB, 2, [[1, 1], [0, 1]], 0)


def test_build_rlta_uniform(uniform_chain):
    rlta, tuples = build_rlta_chain(uniform_chain)
    assert rlta.state_count == 1
    assert tuples == ((0, 0, 0),)
    assert rlta.delta == [[0, 0, 0, 0]]


def test_build_rlta_collapse(collapse_chain):
    for level in collapse_chain.levels:
        tracker, _ = residual_tracking_single(level)
        assert tracker.state_count == 3
    rlta, _ = build_rlta_chain(collapse_chain)
    assert rlta.state_count == 1


def test_compute_rij_bounds(collapse_chain):
    trackers = [residual_tracking_single(a) for a in collapse_chain.levels]
    with pytest.raises(ValueError):
        compute_Rij(collapse_chain, trackers, 0, 3)
    with pytest.raises(ValueError):
        compute_Rij(collapse_chain, trackers, -1, 0)


def test_inclusion_tiny():
    u, e = universal(), empty_language()
    assert inclusion_hd_cobuchi(e, 0, u, 0)
    assert inclusion_hd_cobuchi(u, 0, u, 0)
    assert not inclusion_hd_cobuchi(u, 0, e, 0)


def test_inclusion_classes_on_hd_example(hd5):
    level = CoBuchiAutomaton.from_structure(hd5)
    table = inclusion_table(level, level)
    classes = {frozenset(p for p in range(5)
                         if (q, p) in table and (p, q) in table)
               for q in range(5)}
    assert classes == {frozenset({0, 2, 4}), frozenset({1, 3})}


def test_inclusion_sound_against_bounded_search():
    rng = random.Random(33)
    for _ in range(15):
        a = oracles.random_cobuchi_automaton(rng, 1 + rng.randrange(3), 2)
        det = oracles.random_dpw(rng, 1 + rng.randrange(3), 2, 1)
        b = CoBuchiAutomaton(det.alphabet, det.state_count,
                             [(s, x, d, c + 1) for (s, x, d, c) in det.transitions],
                             det.initial)
        assert inclusion_hd_cobuchi(b, b.initial, b, b.initial)
        if inclusion_hd_cobuchi(a, a.initial, b, b.initial):
            for w in enumerate_lassos(2, 3, 3):
                assert (not oracles.member_cobuchi(a, w)) or oracles.member_cobuchi(b, w)
