"""The minimization pipeline, stage by stage.

minimize_rerailing runs: decompose the automaton into a chain of co-Buchi
levels, build the joint residual tracker, turn every level into a floating
automaton (keep only accepting transitions, label states with tracker
states, then minimize), and recursively reassemble a minimal
color-homogeneous rerailing automaton from the floating chain.  This script
walks a four-state parity automaton through the stages and checks the
result against the input on bounded lassos.
"""

from rerail import (Alphabet, AutomatonStructure, bounded_equivalence,
                    check_color_homogeneous, decompose_rerailing, format_lasso,
                    minimize_rerailing, residualize_chain,
                    verify_rerailing_bounded)


def main():
    ab = Alphabet(("a", "b"))
    # Four states, colors 0..2.  States 2 and 3 duplicate the roles of 0 and
    # 1, so half of the automaton is redundant.
    dpw = AutomatonStructure(ab, 4,
                             [(0, 0, 1, 2), (0, 1, 2, 1),
                              (1, 0, 0, 2), (1, 1, 3, 1),
                              (2, 0, 3, 0), (2, 1, 2, 1),
                              (3, 0, 2, 0), (3, 1, 3, 1)], 0)
    print("Input: %d states, colors %s." % (dpw.state_count, dpw.colors))
    print()

    chain = decompose_rerailing(dpw)
    print("Stage 1 - decompose: %d co-Buchi levels, sizes %s."
          % (len(chain.levels), [lvl.state_count for lvl in chain.levels]))

    fchain = residualize_chain(chain)
    print("Stage 2 - residualize: joint tracker has %d state(s); floating"
          % fchain.rlta.state_count)
    print("levels keep only accepting transitions and are minimized:")
    for idx, f in enumerate(fchain.levels, start=1):
        print("  level %d: %d floating state(s) %s, %d transitions"
              % (idx, f.state_count,
                 [f.state_name(q) for q in range(f.state_count)],
                 len(f.transitions())))
    print()

    out = minimize_rerailing(dpw)
    print("Stage 3 - rebuild: %d states." % out.state_count)
    print("State names record the floating states they were assembled from:")
    for q in range(out.state_count):
        print("  state %d = %r" % (q, out.state_name(q)))
    print()

    print("Output transitions (color-homogeneous: one color per state/letter):")
    for (src, sym, dst, color) in out.transitions:
        print("  %d -%s:%d-> %d" % (src, out.alphabet.symbols[sym], color, dst))
    assert check_color_homogeneous(out)
    print()

    diff = bounded_equivalence(out, "rerailing", dpw, "parity-det", 4, 4)
    if diff is None:
        print("Language check: output agrees with the input on every lasso")
        print("with stem and cycle up to 4.")
    else:
        print("Language check FAILED at", format_lasso(diff, ab))
    assert verify_rerailing_bounded(out, 3, 3) == []
    print("The output satisfies the rerailing property on all 3/3 lassos.")

    again = minimize_rerailing(out)
    print("Minimizing the output again: %d states (a fixed point)."
          % again.state_count)
    print()

    # Second input: "no two a in a row", with state 2 duplicating state 0.
    # The language has three distinct residuals, so no automaton for it can
    # go below three states.
    safety = AutomatonStructure(ab, 4,
                                [(0, 0, 1, 0), (0, 1, 2, 0),
                                 (1, 0, 3, 1), (1, 1, 2, 0),
                                 (2, 0, 1, 0), (2, 1, 0, 0),
                                 (3, 0, 3, 1), (3, 1, 3, 1)], 0)
    small = minimize_rerailing(safety)
    assert bounded_equivalence(small, "rerailing", safety, "parity-det",
                               4, 4) is None
    print("A 4-state automaton for 'never aa' (one state duplicated) comes")
    print("out with %d states: the duplicate pair fuses, and the rest must"
          % small.state_count)
    print("stay apart because the three residual languages differ.")


if __name__ == "__main__":
    main()
