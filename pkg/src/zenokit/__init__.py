"""Zone-graph toolkit for timed automata: extrapolation operators, the
reduced guessing zone graph for non-Zenoness, the slow zone graph and
W-restriction for Zenoness, plus reduction generators and oracles.
"""

from .dbm import INF, Dbm, canonicalize, decode, is_empty, leq, lt
from .extrapolation import (
    KINDS,
    AbstractionKind,
    extrapolate,
    is_lift_safe,
    is_order_preserving,
    resolve_kind,
)
from .formats import (
    ParseError,
    ValidationError,
    parse_cnf,
    parse_lba,
    parse_ta,
    serialize_ta,
)
from .generators import (
    Formula,
    Lba,
    LbaTransition,
    add_tick_clock,
    gen_lba_automaton,
    gen_nz_automaton,
    gen_z_automaton,
    lba_accepting_states,
    wrap_accept_loops,
)
from .liveness import EdgeLabels, Lasso, Scc, find_lasso, prune_to_unblocked, sccs
from .model import (
    Atom,
    BoundProfile,
    Guard,
    TimedAutomaton,
    Transition,
    compute_bound_profile,
    lifted_clocks,
    make_automaton,
    relevant_clocks,
    validate,
    weaken_zero_checks,
)
from .nonzeno import RgzgNode, check_nonzeno, explore_rgzg, rgzg_successors
from .oracle import (
    CrossCheckReport,
    KindReport,
    cross_check,
    nonzeno_via_tick,
    render_report,
    sat_enumerate,
    simulate_lba,
)
from .zeno import (
    LiftSafetyError,
    SzgNode,
    WNode,
    check_zeno,
    check_zeno_general,
    check_zeno_liftsafe,
    explore_szg,
    szg_successors,
    w_restricted_graph,
)
from .zonegraph import (
    DEFAULT_NODE_LIMIT,
    AnnotatedZoneGraph,
    ResourceLimitError,
    Verdict,
    ZgNode,
    explore,
    initial,
    post,
    profile_for,
)

__all__ = [
    "INF",
    "Dbm",
    "canonicalize",
    "decode",
    "is_empty",
    "leq",
    "lt",
    "KINDS",
    "AbstractionKind",
    "extrapolate",
    "is_lift_safe",
    "is_order_preserving",
    "resolve_kind",
    "ParseError",
    "ValidationError",
    "parse_cnf",
    "parse_lba",
    "parse_ta",
    "serialize_ta",
    "Formula",
    "Lba",
    "LbaTransition",
    "add_tick_clock",
    "gen_lba_automaton",
    "gen_nz_automaton",
    "gen_z_automaton",
    "lba_accepting_states",
    "wrap_accept_loops",
    "EdgeLabels",
    "Lasso",
    "Scc",
    "find_lasso",
    "prune_to_unblocked",
    "sccs",
    "Atom",
    "BoundProfile",
    "Guard",
    "TimedAutomaton",
    "Transition",
    "compute_bound_profile",
    "lifted_clocks",
    "make_automaton",
    "relevant_clocks",
    "validate",
    "weaken_zero_checks",
    "RgzgNode",
    "check_nonzeno",
    "explore_rgzg",
    "rgzg_successors",
    "CrossCheckReport",
    "KindReport",
    "cross_check",
    "nonzeno_via_tick",
    "render_report",
    "sat_enumerate",
    "simulate_lba",
    "LiftSafetyError",
    "SzgNode",
    "WNode",
    "check_zeno",
    "check_zeno_general",
    "check_zeno_liftsafe",
    "explore_szg",
    "szg_successors",
    "w_restricted_graph",
    "DEFAULT_NODE_LIMIT",
    "AnnotatedZoneGraph",
    "ResourceLimitError",
    "Verdict",
    "ZgNode",
    "explore",
    "initial",
    "post",
    "profile_for",
]
