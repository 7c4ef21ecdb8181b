"""Realizability checking of rerailing-automaton specifications.

The combined alphabet pairs every input letter with every output letter.  A
specification is realizable when the system player wins the parity game in
which, from each automaton state, the system commits to an output, the
environment answers with an input (selecting a color class of successors),
and the nondeterminism inside the class is resolved by the system on odd
colors and by the environment on even ones.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .build import check_color_homogeneous
from .games import GameArena, solve
from .raf import Alphabet


@dataclass(frozen=True)
class IoAlphabet:
    """An input/output split; combined symbols are named `<in>|<out>`.

    The combined alphabet is the full product in input-major order (the
    input component varies slowest).
    """

    inputs: Alphabet
    outputs: Alphabet

    def __post_init__(self):
        for symbol in tuple(self.inputs.symbols) + tuple(self.outputs.symbols):
            if "|" in symbol:
                raise ValueError("'|' is reserved for combined symbol names")

    @property
    def combined(self):
        return Alphabet(tuple("%s|%s" % (i, o)
                              for i in self.inputs.symbols for o in self.outputs.symbols))

    def combined_index(self, input_index, output_index):
        return input_index * len(self.outputs) + output_index

    def split_index(self, combined_index):
        return divmod(combined_index, len(self.outputs))


def build_realizability_game(r, io):
    """Parity game deciding realizability of the specification automaton.

    Vertices: automaton states (system), state/output pairs (environment),
    and color classes of successors — system-owned on odd colors,
    environment-owned on even ones.  Class vertices carry their color; all
    others the automaton's maximum color.
    """
    if r.alphabet != io.combined:
        raise ValueError("specification alphabet must be the combined "
                         "input/output alphabet (input-major, '<in>|<out>' names)")
    if not check_color_homogeneous(r):
        warnings.warn("specification is not color-homogeneous; the game is "
                      "built anyway but the construction is only proven for "
                      "color-homogeneous automata")
    top = r.max_color
    ids = {}
    owners = []
    colors = []
    edges = []
    names = []

    def vertex(key, owner, color, name):
        if key not in ids:
            ids[key] = len(owners)
            owners.append(owner)
            colors.append(color)
            edges.append([])
            names.append(name)
        return ids[key]

    for q in range(r.state_count):
        vertex(("q", q), 0, top, r.state_name(q))
    for q in range(r.state_count):
        for yi in range(len(io.outputs)):
            out_id = vertex(("y", q, yi), 1, top,
                            "%s / %s" % (r.state_name(q), io.outputs.symbols[yi]))
            edges[ids[("q", q)]].append(out_id)
            for xi in range(len(io.inputs)):
                sym = io.combined_index(xi, yi)
                classes = {}
                for (dst, c) in r.successors(q, sym):
                    classes.setdefault(c, set()).add(dst)
                for c in sorted(classes):
                    members = frozenset(classes[c])
                    label = "{%s}:%d" % (",".join(r.state_name(m)
                                                  for m in sorted(members)), c)
                    class_id = vertex(("c", members, c), 0 if c % 2 else 1, c, label)
                    if class_id == len(owners) - 1:
                        for member in sorted(members):
                            edges[class_id].append(ids[("q", member)])
                    edges[out_id].append(class_id)
    return GameArena(owners, colors, edges, initial=ids[("q", r.initial)], names=names)


def realizability(r, io):
    """Whether some output strategy keeps every resulting word in the language."""
    arena = build_realizability_game(r, io)
    w0, _w1 = solve(arena)
    return arena.initial in w0
