"""Non-Zenoness via the reduced guessing zone graph.

Nodes carry a guess set Y of relevant clocks: clocks whose pending zero
checks are promised to be justified by an earlier reset.  A zero check
on a relevant clock outside Y is only allowed when some positive delay
could have happened first, which is exactly what makes a cycle through
a clear node (Y empty) extendable into a time-diverging run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dbm import Dbm, lt
from .extrapolation import extrapolate
from .liveness import EdgeLabels, find_lasso, prune_to_unblocked, sccs
from .model import TimedAutomaton, relevant_clocks
from .zonegraph import (
    DEFAULT_NODE_LIMIT,
    TAU,
    AnnotatedZoneGraph,
    KindArg,
    ResourceLimitError,
    Verdict,
    _build_cached,
    as_kind,
    profile_for,
)

_TAU_INFO = EdgeLabels(is_tau=True)


@dataclass(frozen=True)
class RgzgNode:
    state: str
    zone: Dbm
    guess: frozenset[str]

    @property
    def clear(self) -> bool:
        return not self.guess


def rgzg_successors(
    a: TimedAutomaton, kind: KindArg, n: RgzgNode
) -> list[tuple[str, RgzgNode]]:
    """Successors of one node, straight from the definition.

    An action edge needs the source zone to stay consistent with the
    guard plus strict positivity of every relevant clock outside Y; the
    new guess set keeps only relevant clocks that can still be 0.  A tau
    edge clears a non-empty guess set.
    """
    kind = as_kind(kind)
    idx = a.clock_index
    profile = profile_for(a, kind)
    rl = relevant_clocks(a)
    pos = tuple((0, idx[c], lt(0)) for c in sorted(rl - n.guess, key=idx.get))
    out: list[tuple[str, RgzgNode]] = []
    for t in a.outgoing(n.state):
        entries = t.guard.dbm_entries(idx)
        if not n.zone.consistent_with(entries + pos):
            continue
        zc = n.zone.constrain(entries)
        z = zc.reset(idx[c] for c in t.resets).up()
        if kind is not None:
            z = extrapolate(kind, z, profile)
        zero = {c for c in rl if idx[c] in z.zero_clocks()}
        guess = (n.guess | t.resets) & zero
        out.append((t.label, RgzgNode(t.target, z, frozenset(guess))))
    if n.guess:
        out.append((TAU, RgzgNode(n.state, n.zone, frozenset())))
    return out


def explore_rgzg(
    a: TimedAutomaton,
    kind: KindArg,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> AnnotatedZoneGraph:
    """Reachable reduced guessing zone graph, tau self-loops omitted."""
    b = _build_cached(a, as_kind(kind), node_limit)
    zg = b.graph
    bit_clock = {bit: c for c, bit in b.clock_bit.items()}

    def names(mask: int) -> frozenset[str]:
        return frozenset(bit_clock[1 << i] for i in range(mask.bit_length()) if mask >> i & 1)

    init = (0, b.rl_mask & b.node_zero_rl[0])
    keys: list[tuple[int, int]] = [init]
    seen = {init: 0}
    edges: list[tuple[int, str, int]] = []
    edge_info: list[EdgeLabels] = []
    frontier = 0
    while frontier < len(keys):
        src = frontier
        zi, y = keys[frontier]
        frontier += 1
        succs: list[tuple[str, tuple[int, int], EdgeLabels]] = []
        for ei in b.out_edges[zi]:
            if b.edge_zero_blocked[ei] & ~y:
                continue  # some relevant clock outside Y cannot leave 0
            dst = zg.edges[ei][2]
            y2 = (y | (b.edge_reset_mask[ei] & b.rl_mask)) & b.node_zero_rl[dst]
            succs.append((zg.edges[ei][1], (dst, y2), zg.edge_info[ei]))
        if y:
            succs.append((TAU, (zi, 0), _TAU_INFO))
        for label, key, info in succs:
            di = seen.get(key)
            if di is None:
                if len(keys) >= node_limit:
                    raise ResourceLimitError(node_limit)
                di = len(keys)
                seen[key] = di
                keys.append(key)
            edges.append((src, label, di))
            edge_info.append(info)

    nodes = tuple(
        RgzgNode(zg.nodes[zi].state, zg.nodes[zi].zone, names(y)) for zi, y in keys
    )
    return AnnotatedZoneGraph(
        annotation="guess-set",
        nodes=nodes,
        edges=tuple(edges),
        edge_info=tuple(edge_info),
        initial=0,
    )


def check_nonzeno(
    a: TimedAutomaton,
    kind: KindArg,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Verdict:
    """Does the automaton have a run along which time diverges?

    True iff some unblocked component of the reduced guessing zone graph
    contains a clear node and at least one action edge.
    """
    g = explore_rgzg(a, kind, node_limit)
    for comp in sccs(g):
        if comp.trivial:
            continue
        for sub in prune_to_unblocked(g, comp):
            clear = [v for v in sub.nodes if g.nodes[v].clear]
            if not clear:
                continue
            if all(g.edge_info[e].is_tau for e in sub.edges):
                continue
            return Verdict(True, find_lasso(g, sub, clear[0]))
    return Verdict(False)
