"""Independent ground-truth engines: brute-force SAT, the tick-clock
divergence oracle, direct LBA simulation, and the cross-check report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extrapolation import KINDS, is_lift_safe, resolve_kind
from .generators import Formula, Lba, _check_formula, _check_lba, add_tick_clock
from .liveness import sccs
from .model import TimedAutomaton
from .nonzeno import check_nonzeno, explore_rgzg
from .zeno import check_zeno, explore_szg
from .zonegraph import DEFAULT_NODE_LIMIT, ResourceLimitError, explore

MAX_ENUM_VARS = 20


def sat_enumerate(phi: Formula) -> bool:
    """Brute-force satisfiability over all 2^k assignments."""
    _check_formula(phi)
    if phi.num_vars > MAX_ENUM_VARS:
        raise ValueError(f"refusing to enumerate more than 2^{MAX_ENUM_VARS} assignments")
    for bits in range(1 << phi.num_vars):
        if all(
            any(((bits >> (var - 1)) & 1) == int(pos) for var, pos in clause)
            for clause in phi.clauses
        ):
            return True
    return False


def nonzeno_via_tick(a: TimedAutomaton, node_limit: int = DEFAULT_NODE_LIMIT) -> bool:
    """Decide non-Zenoness without the guessing construction: duplicate
    every edge with a copy that demands and resets a fresh clock at 1,
    then look for a reachable cycle through a tick copy.  A run taking
    tick edges forever spends at least one time unit between ticks, and
    a divergent run can always afford the tick copies."""
    ticked, tick_labels = add_tick_clock(a)
    g = explore(ticked, "m", node_limit)
    for comp in sccs(g):
        if comp.trivial:
            continue
        if any(g.edges[e][1] in tick_labels for e in comp.edges):
            return True
    return False


def simulate_lba(b: Lba, word: tuple[int, ...] | list[int], step_limit: int = 10000) -> str:
    """Run the machine on the word; returns "accept", "reject" or "timeout".

    Rejection covers a missing transition and the head walking off the
    tape, the two ways a deterministic run can halt short of accepting.
    """
    table = _check_lba(b)
    n = len(word)
    if n == 0:
        raise ValueError("the word must be non-empty")
    for s in word:
        if not 1 <= s < b.alphabet_size:
            raise ValueError(f"word symbol {s} out of range")
    tape = list(word)
    head = 1
    state = b.initial
    for _ in range(step_limit):
        if state == b.accepting:
            return "accept"
        t = table.get((state, tape[head - 1]))
        if t is None:
            return "reject"
        tape[head - 1] = t.write
        head += t.move
        state = t.target
        if not 1 <= head <= n:
            return "reject"
    return "accept" if state == b.accepting else "timeout"


@dataclass(frozen=True)
class KindReport:
    kind: str
    verdict: bool | None
    nodes: int | None
    error: str | None = None


@dataclass(frozen=True)
class CrossCheckReport:
    prop: str
    rows: tuple[KindReport, ...]
    agree: bool


def _nodes_explored(a: TimedAutomaton, prop: str, kind: str, node_limit: int) -> int:
    if prop == "nonzeno":
        return len(explore_rgzg(a, kind, node_limit).nodes)
    if is_lift_safe(resolve_kind(kind)):
        return len(explore_szg(a, kind, node_limit).nodes)
    return len(explore(a, kind, node_limit).nodes)


def cross_check(
    a: TimedAutomaton,
    prop: str,
    kinds: list[str] | tuple[str, ...] | None = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> CrossCheckReport:
    """Run one property under several abstractions and compare verdicts.

    For nonzeno the tick oracle is appended as an extra row.  Resource
    limits are recorded per row instead of aborting the report.
    """
    if prop not in ("nonzeno", "zeno"):
        raise ValueError(f"unknown property {prop!r}")
    if kinds is None:
        kinds = list(KINDS)
    rows: list[KindReport] = []
    for kind in kinds:
        resolve_kind(kind)
        try:
            if prop == "nonzeno":
                verdict = check_nonzeno(a, kind, node_limit).answer
            else:
                verdict = check_zeno(a, kind, node_limit).answer
            rows.append(
                KindReport(kind, verdict, _nodes_explored(a, prop, kind, node_limit))
            )
        except ResourceLimitError as exc:
            rows.append(KindReport(kind, None, None, f"node-limit:{exc.limit}"))
    if prop == "nonzeno":
        try:
            ticked, _ = add_tick_clock(a)
            verdict = nonzeno_via_tick(a, node_limit)
            rows.append(
                KindReport("tick", verdict, len(explore(ticked, "m", node_limit).nodes))
            )
        except ResourceLimitError as exc:
            rows.append(KindReport("tick", None, None, f"node-limit:{exc.limit}"))
    verdicts = {r.verdict for r in rows if r.error is None}
    agree = len(verdicts) == 1
    return CrossCheckReport(prop, tuple(rows), agree)


def render_report(report: CrossCheckReport) -> str:
    """Aligned table plus one machine-readable line per row."""
    flag = "yes" if report.agree else "no"
    cells = [("kind", "verdict", "nodes")]
    for r in report.rows:
        if r.error is not None:
            cells.append((r.kind, "error", r.error))
        else:
            cells.append((r.kind, "yes" if r.verdict else "no", str(r.nodes)))
    widths = [max(len(row[i]) for row in cells) for i in range(3)]
    lines = [f"property: {report.prop}"]
    for row in cells:
        lines.append(
            "  ".join(row[i].ljust(widths[i]) for i in range(3)).rstrip()
        )
    lines.append(f"agreement: {flag}")
    lines.append("")
    for r in report.rows:
        if r.error is not None:
            lines.append(f"kind={r.kind} error={r.error}")
        else:
            lines.append(
                f"kind={r.kind} verdict={'yes' if r.verdict else 'no'} nodes={r.nodes}"
            )
    lines.append(f"agree={flag}")
    return "\n".join(lines)
