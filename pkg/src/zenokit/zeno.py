"""Zenoness checks.

For lift-safe abstractions the slow zone graph decides the question
directly: slow mode forbids resetting any clock that the guard already
forces to 1 or above, so an infinite slow path can be squeezed below
any time budget.  For the remaining abstractions a guessed set W of
lifted clocks splits the work: edges lifting a clock must have it in W,
edges resetting a clock must keep it out, and any cycle obeying both
rules yields a Zeno run.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .dbm import Dbm, lt
from .extrapolation import AbstractionKind, extrapolate, is_lift_safe
from .liveness import EdgeLabels, Lasso, find_lasso, sccs
from .model import TimedAutomaton, lifted_clocks
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


class LiftSafetyError(ValueError):
    """The slow zone graph is only sound for lift-safe abstractions."""


@dataclass(frozen=True)
class SzgNode:
    state: str
    zone: Dbm
    mode: str  # "free" or "slow"


@dataclass(frozen=True)
class WNode:
    state: str
    zone: Dbm
    allowed: frozenset[str]


def _require_lift_safe(kind: AbstractionKind | None) -> None:
    if kind is not None and not is_lift_safe(kind):
        raise LiftSafetyError(
            f"abstraction {kind.name!r} is not lift-safe; use check_zeno_general"
        )


def szg_successors(
    a: TimedAutomaton, kind: KindArg, n: SzgNode
) -> list[tuple[str, SzgNode]]:
    """Successors in the slow zone graph, straight from the definition.

    Free nodes behave like the plain zone graph and may switch to slow
    via tau.  Slow nodes only take transitions whose every reset clock
    is still consistent with x<1 in the guarded zone.
    """
    kind = as_kind(kind)
    _require_lift_safe(kind)
    idx = a.clock_index
    profile = profile_for(a, kind)
    out: list[tuple[str, SzgNode]] = []
    for t in a.outgoing(n.state):
        zc = n.zone.constrain(t.guard.dbm_entries(idx))
        if zc.is_empty:
            continue
        if n.mode == "slow" and not all(
            zc.consistent_with([(idx[c], 0, lt(1))]) for c in t.resets
        ):
            continue
        z = zc.reset(idx[c] for c in t.resets).up()
        if kind is not None:
            z = extrapolate(kind, z, profile)
        out.append((t.label, SzgNode(t.target, z, n.mode)))
    if n.mode == "free":
        out.append((TAU, SzgNode(n.state, n.zone, "slow")))
    return out


def explore_szg(
    a: TimedAutomaton,
    kind: KindArg,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> AnnotatedZoneGraph:
    """Reachable slow zone graph: a free copy of the zone graph plus its slow twin."""
    kind = as_kind(kind)
    _require_lift_safe(kind)
    b = _build_cached(a, kind, node_limit)
    zg = b.graph
    keys: list[tuple[int, bool]] = [(0, False)]  # (zone-graph node, slow?)
    seen = {keys[0]: 0}
    edges: list[tuple[int, str, int]] = []
    edge_info: list[EdgeLabels] = []
    frontier = 0
    while frontier < len(keys):
        src = frontier
        zi, slow = keys[frontier]
        frontier += 1
        succs: list[tuple[str, tuple[int, bool], EdgeLabels]] = []
        for ei in b.out_edges[zi]:
            if slow and not b.edge_slow_ok[ei]:
                continue
            succs.append((zg.edges[ei][1], (zg.edges[ei][2], slow), zg.edge_info[ei]))
        if not slow:
            succs.append((TAU, (zi, True), _TAU_INFO))
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
        SzgNode(zg.nodes[zi].state, zg.nodes[zi].zone, "slow" if slow else "free")
        for zi, slow in keys
    )
    return AnnotatedZoneGraph(
        annotation="mode-flag",
        nodes=nodes,
        edges=tuple(edges),
        edge_info=tuple(edge_info),
        initial=0,
    )


def check_zeno_liftsafe(
    a: TimedAutomaton,
    kind: KindArg,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Verdict:
    """True iff the slow-mode half of the slow zone graph contains a cycle.

    The slow half mirrors the zone graph with slow-unsafe edges dropped,
    so the cycle search runs on the zone graph directly and the tau
    switch into slow mode is spliced into the witness prefix.
    """
    kind = as_kind(kind)
    _require_lift_safe(kind)
    b = _build_cached(a, kind, node_limit)
    zg = b.graph
    slow_edges = [i for i in range(len(zg.edges)) if b.edge_slow_ok[i]]
    for comp in sccs(zg, edges=slow_edges):
        if comp.trivial:
            continue
        inner = find_lasso(zg, comp, comp.nodes[0], cover_resets=False)
        return Verdict(True, Lasso(inner.prefix + (TAU,), inner.cycle))
    return Verdict(False)


def w_restricted_graph(
    a: TimedAutomaton,
    kind: KindArg,
    allowed: frozenset[str],
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> AnnotatedZoneGraph:
    """The zone graph under the two W rules (lifted clocks in W, resets out)."""
    b = _build_cached(a, as_kind(kind), node_limit)
    zg = b.graph
    wmask = sum(b.clock_bit[c] for c in allowed)
    edges = []
    edge_info = []
    for i, e in enumerate(zg.edges):
        if b.edge_lift_mask[i] & ~wmask:
            continue
        if b.edge_reset_mask[i] & wmask:
            continue
        edges.append(e)
        edge_info.append(zg.edge_info[i])
    nodes = tuple(WNode(n.state, n.zone, allowed) for n in zg.nodes)
    return AnnotatedZoneGraph(
        annotation="w-restricted",
        nodes=nodes,
        edges=tuple(edges),
        edge_info=tuple(edge_info),
        initial=0,
    )


def check_zeno_general(
    a: TimedAutomaton,
    kind: KindArg,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Verdict:
    """Zenoness for any abstraction, enumerating guess sets W over lifted clocks.

    Subsets come in ascending size, ties broken by clock declaration
    order, so verdicts and witnesses are reproducible.  The cycle must
    obey the W rules; the path reaching it is unrestricted.
    """
    b = _build_cached(a, as_kind(kind), node_limit)
    zg = b.graph
    lf = [c for c in a.clocks if c in lifted_clocks(a)]
    nedges = len(zg.edges)
    for size in range(len(lf) + 1):
        for combo in combinations(lf, size):
            wmask = sum(b.clock_bit[c] for c in combo)
            keep = [
                i
                for i in range(nedges)
                if not (b.edge_lift_mask[i] & ~wmask)
                and not (b.edge_reset_mask[i] & wmask)
            ]
            for comp in sccs(zg, edges=keep):
                if comp.trivial:
                    continue
                lasso = find_lasso(zg, comp, comp.nodes[0], cover_resets=False)
                return Verdict(True, lasso)
    return Verdict(False)


def check_zeno(
    a: TimedAutomaton,
    kind: KindArg,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Verdict:
    """Zenoness dispatch: slow zone graph when lift-safe, W guessing otherwise."""
    kind = as_kind(kind)
    if kind is None or is_lift_safe(kind):
        return check_zeno_liftsafe(a, kind, node_limit)
    return check_zeno_general(a, kind, node_limit)
