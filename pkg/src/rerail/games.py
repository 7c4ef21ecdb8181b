"""Vertex-colored parity games and a recursive solver.

Player 0 wins a play iff the lowest vertex color occurring infinitely often
is even.  Arenas must be total: every vertex needs at least one successor.
"""

from __future__ import annotations

import sys


class GameArena:
    """Game graph with vertex owners (0 or 1), vertex colors, and edge lists."""

    def __init__(self, owners, colors, edges, initial=0, names=None):
        self.owners = list(owners)
        self.colors = list(colors)
        n = len(self.owners)
        if len(self.colors) != n:
            raise ValueError("owners and colors must have equal length")
        if not 0 <= initial < n:
            raise ValueError("initial vertex out of range")
        self.initial = initial
        cleaned = []
        for v, succ in enumerate(edges):
            row = sorted(set(succ))
            if not row:
                raise ValueError("vertex %d has no successor (arena must be total)" % v)
            for w in row:
                if not 0 <= w < n:
                    raise ValueError("edge target out of range: %d -> %d" % (v, w))
            cleaned.append(row)
        if len(cleaned) != n:
            raise ValueError("edge list length mismatch")
        self.edges = cleaned
        for v in range(n):
            if self.owners[v] not in (0, 1):
                raise ValueError("vertex %d has owner %r" % (v, self.owners[v]))
            if self.colors[v] < 0:
                raise ValueError("vertex %d has negative color" % v)
        self.names = list(names) if names is not None else None

    @property
    def vertex_count(self):
        return len(self.owners)

    def vertex_name(self, v):
        if self.names is not None:
            return self.names[v]
        return str(v)

    def dump_table(self):
        """Human/machine readable table: one line per vertex."""
        out = []
        for v in range(self.vertex_count):
            succ = " ".join(str(w) for w in self.edges[v])
            out.append("vertex %d owner %d color %d name \"%s\" succ %s"
                       % (v, self.owners[v], self.colors[v], self.vertex_name(v), succ))
        return "\n".join(out) + "\n"


def solve(arena):
    """Winning regions (player 0 set, player 1 set) of the whole arena.

    Classic recursive decomposition on the minimum color; deterministic since
    all regions are computed as sets with ascending-index iteration.
    """
    n = arena.vertex_count
    owners = arena.owners
    colors = arena.colors
    edges = arena.edges
    preds = [[] for _ in range(n)]
    for v in range(n):
        for w in edges[v]:
            preds[w].append(v)

    def attractor(targets, player, alive):
        attr = set(targets)
        counts = {}
        queue = sorted(targets)
        while queue:
            u = queue.pop()
            for v in preds[u]:
                if v not in alive or v in attr:
                    continue
                if owners[v] == player:
                    attr.add(v)
                    queue.append(v)
                else:
                    if v not in counts:
                        counts[v] = sum(1 for w in edges[v] if w in alive)
                    counts[v] -= 1
                    if counts[v] == 0:
                        attr.add(v)
                        queue.append(v)
        return attr

    def recurse(alive):
        if not alive:
            return set(), set()
        c = min(colors[v] for v in alive)
        p = c & 1
        targets = {v for v in alive if colors[v] == c}
        a = attractor(targets, p, alive)
        w0, w1 = recurse(alive - a)
        opponent = w1 if p == 0 else w0
        if not opponent:
            return (set(alive), set()) if p == 0 else (set(), set(alive))
        b = attractor(opponent, 1 - p, alive)
        w0b, w1b = recurse(alive - b)
        if p == 0:
            return w0b, w1b | b
        return w0b | b, w1b

    limit = sys.getrecursionlimit()
    want = n + 1000
    if want > limit:
        sys.setrecursionlimit(want)
    try:
        return recurse(set(range(n)))
    finally:
        if want > limit:
            sys.setrecursionlimit(limit)
