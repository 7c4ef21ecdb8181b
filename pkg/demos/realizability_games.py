"""Parity games and realizability of input/output specifications.

First a handcrafted four-vertex parity game is solved directly, to show
what the winning regions mean.  Then a specification automaton over a
combined input/output alphabet is turned into a realizability game: the
system commits to an output, the environment answers with an input, and
nondeterminism among equally colored successors is resolved by the player
the color favors the least.  A one-state specification asking for
infinitely many grants is realizable; asking the output to mirror the
input of the same step is not, because the output is committed first.
"""

from rerail import (Alphabet, AutomatonStructure, GameArena, IoAlphabet,
                    build_realizability_game, realizability, solve)


def warm_up():
    # Player 0 wins a play iff the least color seen infinitely often is
    # even.  From "start" the owner (player 0) can head into the color-0
    # self-loop at "calm"; the "storm"/"shelter" cycle has least color 1
    # and its exit is controlled by player 1, who never takes it.
    arena = GameArena(owners=[0, 1, 1, 0],
                      colors=[1, 0, 1, 2],
                      edges=[[1, 2], [1], [2, 3], [2]],
                      initial=0,
                      names=["start", "calm", "storm", "shelter"])
    print("A four-vertex arena:")
    print(arena.dump_table())
    w0, w1 = solve(arena)
    print("player 0 wins from: %s" % sorted(arena.vertex_name(v) for v in w0))
    print("player 1 wins from: %s" % sorted(arena.vertex_name(v) for v in w1))
    assert w0 == {0, 1} and w1 == {2, 3}
    print()


def main():
    warm_up()

    # Inputs: r = request, n = no request.  Outputs: g = grant, w = wait.
    io = IoAlphabet(Alphabet(("r", "n")), Alphabet(("g", "w")))
    print("Combined alphabet (input-major): %s"
          % ", ".join(io.combined.symbols))
    print()

    # Specification 1: grant infinitely often.  One state; any letter whose
    # output half is g has color 0, the rest color 1.
    grants = [(0, io.combined_index(xi, yi), 0, 0 if yi == 0 else 1)
              for xi in range(2) for yi in range(2)]
    spec_live = AutomatonStructure(io.combined, 1, grants, 0,
                                   state_names={0: "hub"})
    arena = build_realizability_game(spec_live, io)
    print("Game for 'grant infinitely often' (%d vertices):"
          % arena.vertex_count)
    print(arena.dump_table())
    verdict = realizability(spec_live, io)
    print("realizable: %s - the system simply always grants,"
          " whatever the input." % verdict)
    assert verdict
    print()

    # Specification 2: every step, grant exactly when requested.  A word
    # that ever mismatches falls into an odd-colored sink.  A machine that
    # could peek at the current input would satisfy this, but the game
    # commits the output first, so the environment mismatches at will.
    match = {("r", "g"): True, ("r", "w"): False,
             ("n", "g"): False, ("n", "w"): True}
    trans = []
    for xi, x in enumerate(io.inputs.symbols):
        for yi, y in enumerate(io.outputs.symbols):
            sym = io.combined_index(xi, yi)
            if match[(x, y)]:
                trans.append((0, sym, 0, 0))
            else:
                trans.append((0, sym, 1, 1))
            trans.append((1, sym, 1, 1))
    spec_echo = AutomatonStructure(io.combined, 2, trans, 0,
                                   state_names={0: "ok", 1: "mismatch"})
    verdict = realizability(spec_echo, io)
    print("'output mirrors the same step's input' realizable: %s" % verdict)
    assert not verdict
    print("After the system picks g the environment answers n; after w it")
    print("answers r.  One mismatch reaches the sink and the least color")
    print("seen from then on is 1, so the environment wins everywhere.")


if __name__ == "__main__":
    main()
