"""Construction of minimal rerailing automata and the bounded property verifier.

The recursive construction walks a floating chain: in each call it collects,
inside the current context automaton, the words whose highest accepting level
has the evenness of the call's color parameter, minimizes the collected
automaton modulo context markings, recurses into its maximal SCCs with the
next color, and stitches the returned state groups together with transitions
one color below.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cobuchi import decompose_rerailing
from .floating import (empty_floating, level0_floating, max_accepting_sccs,
                       minimize_floating, product_floating, residualize_chain,
                       restrict_floating, safe_subset, union_floating,
                       FloatingAutomaton)
from .lasso import LassoProduct, achievable_dominating_colors, enumerate_lassos
from .raf import AutomatonStructure, validate_complete


@dataclass
class BuildState:
    """Global state/transition accumulator shared across recursive calls."""

    names: list = field(default_factory=list)
    transitions: set = field(default_factory=set)
    state_index: dict = field(default_factory=dict)
    _outgoing: set = field(default_factory=set)

    @property
    def state_count(self):
        return len(self.names)

    def new_state(self, name):
        base = name if name else "·"
        candidate = base
        serial = 1
        while candidate in self.state_index:
            serial += 1
            candidate = "%s#%d" % (base, serial)
        index = len(self.names)
        self.names.append(candidate)
        self.state_index[candidate] = index
        return index

    def has_outgoing(self, state, symbol):
        return (state, symbol) in self._outgoing

    def add_transition(self, src, sym, dst, color):
        if not (0 <= src < self.state_count and 0 <= dst < self.state_count):
            raise ValueError("transition endpoints must exist before linking")
        self.transitions.add((src, sym, dst, color))
        self._outgoing.add((src, sym))


def recurse_build(ctx, i, chain, acc, optimized_jloop=False):
    """One recursion step; returns (global state, context state) pairs.

    The context automaton must consist of a single maximal SCC except at the
    top-level call.  Every context state ends up represented by at least one
    returned global state.
    """
    if ctx.rlta != chain.rlta:
        raise ValueError("context must share the chain's tracker")
    n = len(chain.levels)
    if i > n + 1:
        raise RuntimeError(
            "recursion at color %d exceeds the chain length %d; "
            "the level languages are not weakly falling" % (i, n))
    ab = empty_floating(chain.rlta, marked=True)
    j_start = i if optimized_jloop else 1
    for j in range(j_start, n + 1):
        prod = product_floating(ctx, chain.levels[j - 1])
        if j % 2 == i % 2:
            ab = union_floating(ab, prod)
        else:
            doomed = set()
            for q in range(ab.state_count):
                for q2 in range(prod.state_count):
                    if (ab.marking[q] == prod.marking[q2]
                            and ab.labels[q] == prod.labels[q2]
                            and safe_subset(ab, q, prod, q2)):
                        doomed.add(q)
                        break
            if doomed:
                ab = restrict_floating(ab, set(range(ab.state_count)) - doomed)
    ab = minimize_floating(ab)
    new_states = []
    covered = set()
    for (members, _trans) in max_accepting_sccs(ab):
        sub = restrict_floating(ab, members)
        for (gid, sub_state) in recurse_build(sub, i + 1, chain, acc, optimized_jloop):
            new_states.append((gid, sub.marking[sub_state]))
        covered.update(ab.marking[q] for q in members)
    for qc in range(ctx.state_count):
        if qc not in covered:
            new_states.append((acc.new_state(ctx.state_name(qc)), qc))
    for (gid, qc) in new_states:
        for x in range(len(ctx.alphabet)):
            if acc.has_outgoing(gid, x):
                continue
            dst_ctx = ctx.step(qc, x)
            if dst_ctx is None:
                continue
            targets = [g2 for (g2, qc2) in new_states if qc2 == dst_ctx]
            if not targets:
                raise RuntimeError("context successor %d lost during recursion" % dst_ctx)
            for g2 in targets:
                acc.add_transition(gid, x, g2, i - 1)
    return new_states


def build_minimal(chain, optimized_jloop=False):
    """Minimal rerailing automaton for the language of a floating chain."""
    ctx0 = level0_floating(chain.rlta)
    if ctx0.state_count == 1:
        ctx0 = FloatingAutomaton(ctx0.alphabet, 1, ctx0.delta, ctx0.labels,
                                 ctx0.rlta, names=[""])
    acc = BuildState()
    pairs = recurse_build(ctx0, 1, chain, acc, optimized_jloop)
    initial = min(gid for (gid, s) in pairs if s == chain.rlta.initial)
    result = AutomatonStructure(chain.alphabet, acc.state_count,
                                sorted(acc.transitions), initial,
                                state_names=dict(enumerate(acc.names)))
    missing = validate_complete(result)
    if missing:
        raise RuntimeError("construction left %d state/symbol pairs without "
                           "transitions: %s" % (len(missing), missing[:5]))
    return result


def minimize_rerailing(aut, optimized_jloop=False):
    """End-to-end minimization of a complete rerailing automaton.

    Decomposes into a chain of co-Buchi levels, builds the residual tracker,
    residualizes every level and reassembles the minimal automaton.  The
    rerailing property of the input is assumed, not checked here.
    """
    missing = validate_complete(aut)
    if missing:
        raise ValueError("input automaton incomplete at %s" % (missing[:5],))
    chain = decompose_rerailing(aut)
    fchain = residualize_chain(chain)
    return build_minimal(fchain, optimized_jloop)


def check_color_homogeneous(aut):
    """Whether all outgoing transitions of each (state, symbol) share a color."""
    for q in range(aut.state_count):
        for x in range(len(aut.alphabet)):
            if len({c for (_dst, c) in aut.successors(q, x)}) > 1:
                return False
    return True


@dataclass(frozen=True)
class RerailingVerdict:
    """Outcome of the bounded rerailing-property check for one lasso.

    violations lists ((state, position), dominating color d, reason); the
    lasso breaches the property iff violations is non-empty.
    """

    lasso: object
    member: bool
    violations: tuple

    def __bool__(self):
        return not self.violations


def _check_lasso(aut, lasso):
    product = LassoProduct(aut, lasso)
    analysis = product.analysis()
    start = product.node(aut.initial, 0)
    member = max(achievable_dominating_colors(product, start)) % 2 == 0
    violations = []
    for node in sorted(product.reachable_nodes):
        achievable = achievable_dominating_colors(product, node)
        uniform = analysis.uniform_reachable(node)
        for d in sorted(achievable):
            parity_ok = [c for c in uniform if (c % 2 == 0) == member]
            if any(c >= d for c in parity_ok):
                continue
            if not uniform:
                reason = "no-uniform-successor"
            elif not parity_ok:
                reason = "parity-mismatch"
            else:
                reason = "color-decrease"
            violations.append(((product.node_state(node), product.node_position(node)),
                               d, reason))
    if violations:
        return RerailingVerdict(lasso, member, tuple(violations))
    return None


def verify_rerailing_bounded(aut, stem_bound, cycle_bound):
    """Check the rerailing property on every lasso within the bounds.

    A lasso passes when from every reachable product node and every
    achievable dominating color d, some node is reachable whose only
    achievable color c is a single value with c >= d and the evenness of the
    membership verdict.  Returns the verdicts of failing lassos only.
    """
    missing = validate_complete(aut)
    if missing:
        raise ValueError("input automaton incomplete at %s" % (missing[:5],))
    failures = []
    for lasso in enumerate_lassos(len(aut.alphabet), stem_bound, cycle_bound):
        verdict = _check_lasso(aut, lasso)
        if verdict is not None:
            failures.append(verdict)
    return failures
