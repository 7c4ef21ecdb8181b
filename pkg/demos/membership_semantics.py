"""Acceptance semantics on lasso words, side by side.

A rerailing automaton is complete and nondeterministic, every transition
carries a color, and a word is accepted iff the MAXIMUM over all runs of the
dominating color (the least color occurring infinitely often along the run)
is even.  That differs from existential parity acceptance, where one even
run suffices.  This script builds a three-state automaton where the two
semantics disagree, shows why, and then checks the defining rerailing
property on bounded lassos - which that automaton fails and any
deterministic parity automaton passes.
"""

from rerail import (Alphabet, AutomatonStructure, format_lasso,
                    member_parity_det, member_parity_exists, member_rerailing,
                    parse_lasso, verify_rerailing_bounded)


def main():
    a_only = Alphabet(("a",))
    # From state 0 the single letter branches: one run settles into a color-0
    # self-loop, the other into a color-1 self-loop.
    fork = AutomatonStructure(a_only, 3,
                              [(0, 0, 1, 0), (0, 0, 2, 1),
                               (1, 0, 1, 0), (2, 0, 2, 1)],
                              0, state_names={0: "fork", 1: "even", 2: "odd"})
    w = parse_lasso(";a", a_only)
    print("The word a^w has two runs: dominating colors 0 (even) and 1 (odd).")
    print("  existential parity accepts it:  %s" % member_parity_exists(fork, w))
    print("  rerailing semantics accepts it: %s" % member_rerailing(fork, w))
    print("Rerailing takes the maximum dominating color, here 1, which is odd.")
    print()

    failures = verify_rerailing_bounded(fork, 2, 2)
    print("Is the fork automaton a rerailing automaton?  The defining property")
    print("asks that wherever a run can still achieve dominating color d, some")
    print("reachable position pins the color down to a single value >= d with")
    print("the evenness of the verdict.  Bounded check says:")
    for verdict in failures[:1]:
        (state, pos), d, reason = verdict.violations[0]
        print("  lasso %r, member=%s, first violation at state %s: %s"
              % (format_lasso(verdict.lasso, a_only), verdict.member, state,
                 reason))
    print("  (%d lassos within bounds 2/2 violate the property)" % len(failures))
    print()

    ab = Alphabet(("a", "b"))
    # Deterministic parity automaton for "infinitely many a": a is colored 0,
    # b is colored 1, so the dominating color is 0 iff a never runs out.
    dpw = AutomatonStructure(ab, 1, [(0, 0, 0, 0), (0, 1, 0, 1)], 0)
    print("A deterministic parity automaton has one run per word, so all")
    print("semantics coincide and the rerailing property holds trivially:")
    for text in (";a", ";b", ";a.b", "b;b.a"):
        w = parse_lasso(text, ab)
        verdicts = (member_rerailing(dpw, w), member_parity_exists(dpw, w),
                    member_parity_det(dpw, w))
        assert len(set(verdicts)) == 1
        print("  %-8s -> %s" % (text, verdicts[0]))
    assert verify_rerailing_bounded(dpw, 3, 3) == []
    print("  bounded rerailing check at 3/3: no violations")


if __name__ == "__main__":
    main()
