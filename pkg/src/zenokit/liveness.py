"""Graph machinery shared by the liveness checks.

Works on any explored graph object exposing `nodes`, `edges` (triples of
source index, label, target index), `edge_info` aligned with `edges`,
and `initial`.  Everything here is deterministic: components are sorted
by smallest node index, spliced edges are picked by ascending index and
connecting paths come from breadth-first trees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class EdgeLabels:
    """Liveness-relevant facts about one edge.

    bounded: clocks whose guard keeps them below some constant.
    resets: clocks the transition resets.
    """

    bounded: frozenset[str] = frozenset()
    resets: frozenset[str] = frozenset()
    is_tau: bool = False


@dataclass(frozen=True)
class Scc:
    nodes: tuple[int, ...]
    edges: tuple[int, ...]  # indices of edges internal to the component
    trivial: bool


@dataclass(frozen=True)
class Lasso:
    prefix: tuple[str, ...]
    cycle: tuple[str, ...]


def sccs(g, edges: Iterable[int] | None = None) -> list[Scc]:
    """Strongly connected components, optionally over an edge subset.

    A component is trivial when it has no internal edge, i.e. it is a
    single node without a self-loop.
    """
    n = len(g.nodes)
    sel = list(range(len(g.edges))) if edges is None else sorted(edges)
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in sel:
        adj[g.edges[e][0]].append(g.edges[e][2])

    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    comps: list[list[int]] = []
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            if pi < len(adj[v]):
                work[-1][1] = pi + 1
                w = adj[v][pi]
                if index[w] == -1:
                    work.append([w, 0])
                elif on_stack[w]:
                    if index[w] < low[v]:
                        low[v] = index[w]
            else:
                work.pop()
                if work and low[v] < low[work[-1][0]]:
                    low[work[-1][0]] = low[v]
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(sorted(comp))

    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    internal: list[list[int]] = [[] for _ in comps]
    for e in sel:
        s, _, d = g.edges[e]
        if comp_of[s] == comp_of[d]:
            internal[comp_of[s]].append(e)
    out = [
        Scc(tuple(comp), tuple(es), trivial=not es)
        for comp, es in zip(comps, internal)
    ]
    out.sort(key=lambda c: c.nodes[0])
    return out


def prune_to_unblocked(g, comp: Scc) -> list[Scc]:
    """Shrink a component to sub-components whose bounded clocks all get reset.

    Repeatedly drops edges that bound a clock nobody in the current
    component resets, then recurses into the surviving components.  A
    cycle touring everything that remains can be iterated forever
    without any clock blocking it.
    """
    if comp.trivial:
        return []
    resets: set[str] = set()
    for e in comp.edges:
        resets |= g.edge_info[e].resets
    keep = [e for e in comp.edges if g.edge_info[e].bounded <= resets]
    if len(keep) == len(comp.edges):
        return [comp]
    out: list[Scc] = []
    for sub in sccs(g, edges=keep):
        if not sub.trivial:
            out.extend(prune_to_unblocked(g, sub))
    return out


def _bfs_path(g, edges: Sequence[int], start: int, goal: int) -> list[str] | None:
    """Shortest label path start -> goal over the given edges, or None."""
    if start == goal:
        return []
    adj: dict[int, list[tuple[int, str]]] = {}
    for e in edges:
        s, lbl, d = g.edges[e]
        adj.setdefault(s, []).append((d, lbl))
    parent: dict[int, tuple[int, str]] = {start: (start, "")}
    queue: deque[int] = deque([start])
    while queue:
        v = queue.popleft()
        for d, lbl in adj.get(v, ()):
            if d in parent:
                continue
            parent[d] = (v, lbl)
            if d == goal:
                path: list[str] = []
                while d != start:
                    d, lbl = parent[d]
                    path.append(lbl)
                path.reverse()
                return path
            queue.append(d)
    return None


def _spanning_trees(g, edges: Sequence[int], root: int):
    """Parent-pointer BFS trees from and to the root over the given edges."""
    fwd: dict[int, tuple[int, int]] = {root: (root, -1)}
    rev: dict[int, tuple[int, int]] = {root: (root, -1)}
    adj: dict[int, list[tuple[int, int]]] = {}
    radj: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        s, _, d = g.edges[e]
        adj.setdefault(s, []).append((d, e))
        radj.setdefault(d, []).append((s, e))
    for tree, nbrs in ((fwd, adj), (rev, radj)):
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for d, e in nbrs.get(v, ()):
                if d not in tree:
                    tree[d] = (v, e)
                    queue.append(d)
    return fwd, rev


def find_lasso(g, comp: Scc, anchor: int, cover_resets: bool = True) -> Lasso:
    """A prefix to the anchor plus a closed walk through it inside the component.

    The walk starts as a cycle through one real (non-tau) edge when the
    component has any.  With cover_resets it then splices in a resetting
    edge for every clock the walk bounds but never resets; pruning
    guarantees such an edge exists, so the final cycle is unblocked.
    """
    if anchor not in comp.nodes:
        raise ValueError("anchor must lie inside the component")
    prefix = _bfs_path(g, range(len(g.edges)), g.initial, anchor)
    if prefix is None:
        raise ValueError("anchor is not reachable from the initial node")
    fwd, rev = _spanning_trees(g, comp.edges, anchor)

    def edges_out(v: int) -> list[int]:
        # tree path anchor -> v, as edge indices
        out = []
        while v != anchor:
            v, e = fwd[v]
            out.append(e)
        out.reverse()
        return out

    def edges_back(v: int) -> list[int]:
        # tree path v -> anchor, as edge indices
        out = []
        while v != anchor:
            v, e = rev[v]
            out.append(e)
        return out

    walk: list[int] = []
    bounded: set[str] = set()
    resets: set[str] = set()

    def splice(e: int) -> None:
        s, _, d = g.edges[e]
        for x in edges_out(s) + [e] + edges_back(d):
            walk.append(x)
            bounded.update(g.edge_info[x].bounded)
            resets.update(g.edge_info[x].resets)

    splice(next((e for e in comp.edges if not g.edge_info[e].is_tau), comp.edges[0]))
    while cover_resets:
        missing = bounded - resets
        if not missing:
            break
        c = min(missing)
        splice(next(e for e in comp.edges if c in g.edge_info[e].resets))
    return Lasso(tuple(prefix), tuple(g.edges[e][1] for e in walk))
