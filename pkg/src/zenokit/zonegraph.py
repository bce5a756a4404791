"""Abstract zone graph construction.

Successors follow the action-then-delay convention: constrain by the
guard, reset, let time elapse, then extrapolate.  Exploration is
breadth-first with exact-node deduplication, so node numbering is
reproducible run to run.

The module also builds, once per exploration, the per-edge facts the
non-Zeno and Zeno checks need (which guards force a clock to zero,
which resets stay consistent with x<1, ...), so those checks can run as
pure bitmask graph searches on top of one zone-graph build.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .dbm import INF, Dbm, _successor
from .extrapolation import AbstractionKind, extrapolate, resolve_kind
from .liveness import EdgeLabels, Lasso
from .model import (
    BoundProfile,
    TimedAutomaton,
    bounded_clocks,
    compute_bound_profile,
    guard_lifted_clocks,
    relevant_clocks,
)

TAU = "τ"

DEFAULT_NODE_LIMIT = 1_000_000


class ResourceLimitError(RuntimeError):
    """Raised when an exploration would exceed its node budget."""

    def __init__(self, limit: int):
        super().__init__(f"node limit exceeded: more than {limit} nodes reachable")
        self.limit = limit


@dataclass(frozen=True)
class ZgNode:
    state: str
    zone: Dbm


@dataclass(frozen=True)
class AnnotatedZoneGraph:
    """An explored graph; nodes carry (state, zone) plus an annotation."""

    annotation: str  # "plain", "guess-set", "mode-flag" or "w-restricted"
    nodes: tuple
    edges: tuple[tuple[int, str, int], ...]
    edge_info: tuple[EdgeLabels, ...]
    initial: int


@dataclass(frozen=True)
class Verdict:
    answer: bool
    witness: Lasso | None = None


KindArg = str | AbstractionKind | None


def as_kind(kind: KindArg) -> AbstractionKind | None:
    """Accept an abstraction by object or CLI name; None means no abstraction."""
    if kind is None or isinstance(kind, AbstractionKind):
        return kind
    return resolve_kind(kind)


def profile_for(a: TimedAutomaton, kind: KindArg) -> BoundProfile | None:
    kind = as_kind(kind)
    return None if kind is None else compute_bound_profile(a, kind.profile_kind)


def initial(a: TimedAutomaton, kind: KindArg) -> ZgNode:
    """The root node: the time closure of the all-zeros valuation, abstracted."""
    kind = as_kind(kind)
    z = Dbm.point(a.dim).up()
    if kind is not None:
        z = extrapolate(kind, z, profile_for(a, kind))
    return ZgNode(a.initial, z)


def post(a: TimedAutomaton, kind: KindArg, node: ZgNode, t) -> ZgNode | None:
    """Abstract successor of `node` under transition `t`, or None if disabled."""
    kind = as_kind(kind)
    zc = node.zone.constrain(t.guard.dbm_entries(a.clock_index))
    if zc.is_empty:
        return None
    z = zc.reset(a.clock_index[c] for c in t.resets).up()
    if kind is not None:
        z = extrapolate(kind, z, profile_for(a, kind))
    return ZgNode(t.target, z)


@dataclass
class _Build:
    """One explored zone graph plus cached per-edge/per-node analysis bits."""

    graph: AnnotatedZoneGraph
    a: TimedAutomaton
    kind: AbstractionKind | None
    clock_bit: dict[str, int]
    rl_mask: int
    lf_mask: int
    out_edges: list[list[int]] = field(default_factory=list)
    edge_trans: list = field(default_factory=list)
    edge_zero_blocked: list[int] = field(default_factory=list)  # relevant clocks forced to 0 by zone&guard
    edge_slow_ok: list[bool] = field(default_factory=list)  # every reset clock can still be below 1
    edge_reset_mask: list[int] = field(default_factory=list)
    edge_lift_mask: list[int] = field(default_factory=list)
    node_zero_rl: list[int] = field(default_factory=list)  # relevant clocks that can be 0 in the node's zone


def _build(a: TimedAutomaton, kind: AbstractionKind | None, node_limit: int) -> _Build:
    profile = profile_for(a, kind)
    idx = a.clock_index
    dim = a.dim
    clock_bit = {c: 1 << i for i, c in enumerate(a.clocks)}
    rl = relevant_clocks(a)
    rl_mask = sum(clock_bit[c] for c in rl)
    lf_mask = 0
    widen = kind is not None
    plus = widen and kind.formula == "plus"
    low = np.zeros(dim, dtype=np.int64)
    up = np.zeros(dim, dtype=np.int64)
    if widen:
        for i, (lo, hi) in enumerate(zip(profile.lower, profile.upper), start=1):
            low[i] = -INF if lo is None else lo
            up[i] = -INF if hi is None else hi
    # static per-transition data
    by_state: dict[str, list] = {s: [] for s in a.states}
    for t in a.transitions:
        entries = list(t.guard.dbm_entries(idx))
        ent_arr = np.array(entries, dtype=np.int64).reshape(len(entries), 3)
        reset_idx = np.array(sorted(idx[c] for c in t.resets), dtype=np.int64)
        reset_mask = sum(clock_bit[c] for c in t.resets)
        lift_mask = sum(clock_bit[c] for c in guard_lifted_clocks(t.guard))
        lf_mask |= lift_mask
        labels = EdgeLabels(bounded=bounded_clocks(t.guard), resets=t.resets)
        by_state[t.source].append((t, ent_arr, reset_idx, reset_mask, lift_mask, labels))

    root = initial(a, kind)
    nodes: list[ZgNode] = [root]
    seen: dict[ZgNode, int] = {root: 0}
    edges: list[tuple[int, str, int]] = []
    edge_info: list[EdgeLabels] = []
    b = _Build(
        graph=None,  # filled below
        a=a,
        kind=kind,
        clock_bit=clock_bit,
        rl_mask=rl_mask,
        lf_mask=lf_mask,
    )

    root_zero = 0
    for c in rl:
        if root.zone.bound(0, idx[c]) == 1:
            root_zero |= clock_bit[c]
    b.node_zero_rl.append(root_zero)
    b.out_edges.append([])
    flags = np.empty(3, dtype=np.int64)
    frontier = 0
    while frontier < len(nodes):
        src = frontier
        node = nodes[src]
        frontier += 1
        src_view = node.zone._view()
        for t, ent_arr, reset_idx, reset_mask, lift_mask, labels in by_state[node.state]:
            out = np.empty((dim, dim), dtype=np.int64)
            code = _successor(src_view, out, ent_arr, reset_idx, low, up, plus, widen, flags)
            if code == 0:
                continue
            if code == 2:
                raise AssertionError("extrapolation emptied a non-empty zone")
            zb = int(flags[0]) & rl_mask
            slow_ok = bool(flags[1])
            succ = ZgNode(t.target, Dbm(dim, out.tobytes()))
            di = seen.get(succ)
            if di is None:
                if len(nodes) >= node_limit:
                    raise ResourceLimitError(node_limit)
                di = len(nodes)
                seen[succ] = di
                nodes.append(succ)
                b.node_zero_rl.append(int(flags[2]) & rl_mask)
                b.out_edges.append([])
            ei = len(edges)
            edges.append((src, t.label, di))
            edge_info.append(labels)
            b.out_edges[src].append(ei)
            b.edge_trans.append(t)
            b.edge_zero_blocked.append(zb)
            b.edge_slow_ok.append(slow_ok)
            b.edge_reset_mask.append(reset_mask)
            b.edge_lift_mask.append(lift_mask)

    b.graph = AnnotatedZoneGraph(
        annotation="plain",
        nodes=tuple(nodes),
        edges=tuple(edges),
        edge_info=tuple(edge_info),
        initial=0,
    )
    return b


@lru_cache(maxsize=16)
def _build_cached(a: TimedAutomaton, kind: AbstractionKind | None, node_limit: int) -> _Build:
    """Small cache: one automaton's builds across kinds fit, big corpora do not pile up."""
    return _build(a, kind, node_limit)


def explore(
    a: TimedAutomaton,
    kind: KindArg,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> AnnotatedZoneGraph:
    """Breadth-first closure of the initial node under all transitions."""
    return _build_cached(a, as_kind(kind), node_limit).graph
