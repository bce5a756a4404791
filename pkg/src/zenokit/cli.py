"""Command-line front end.

Exit codes: 0 completed analysis (the verdict lives on stdout), 1 usage
error, 2 parse or validation error, 3 resource limit.  The environment
variable ZENOKIT_NODE_LIMIT overrides the default exploration limit.
"""

from __future__ import annotations

import argparse
import os
import sys

from .extrapolation import KINDS
from .formats import ParseError, ValidationError, parse_cnf, parse_lba, parse_ta, serialize_ta
from .generators import (
    gen_lba_automaton,
    gen_nz_automaton,
    gen_z_automaton,
    lba_accepting_states,
    wrap_accept_loops,
)
from .model import TimedAutomaton, weaken_zero_checks
from .nonzeno import check_nonzeno, explore_rgzg
from .oracle import cross_check, render_report
from .zeno import LiftSafetyError, check_zeno, explore_szg
from .zonegraph import DEFAULT_NODE_LIMIT, ResourceLimitError, explore


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2; usage errors are exit 1 here
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="zenokit", description="Zeno and non-Zeno run detection on abstract zone graphs.")
    sub = p.add_subparsers(dest="cmd", required=True)

    check = sub.add_parser("check", help="decide a property of one automaton")
    check.add_argument("--property", required=True, choices=("nonzeno", "zeno"))
    check.add_argument("--abstraction", required=True, choices=tuple(KINDS))
    check.add_argument("--node-limit", type=int, default=None)
    check.add_argument("--witness", action="store_true", help="print a lasso witness on YES")
    check.add_argument("file")

    graph = sub.add_parser("graph", help="dump a zone graph as DOT")
    graph.add_argument("--abstraction", required=True, choices=tuple(KINDS))
    graph.add_argument("--annotate", choices=("rgzg", "szg"))
    graph.add_argument("--dot", required=True, metavar="FILE")
    graph.add_argument("file")

    gen = sub.add_parser("gen", help="emit a generated automaton as TA text")
    gsub = gen.add_subparsers(dest="what", required=True)
    for name in ("nz-3sat", "z-3sat"):
        g = gsub.add_parser(name)
        g.add_argument("cnffile")
    glba = gsub.add_parser("lba")
    glba.add_argument("lbafile")
    glba.add_argument("word")
    glba.add_argument("--wrap", choices=("nonzeno", "zeno"))

    cc = sub.add_parser("crosscheck", help="run one property under every abstraction")
    cc.add_argument("--property", required=True, choices=("nonzeno", "zeno"))
    cc.add_argument("--plot", metavar="FILE", help="also render the node counts as a bar chart")
    cc.add_argument("file")

    weaken = sub.add_parser("weaken", help="rewrite zero checks so bound profiles shrink")
    weaken.add_argument("file")
    return p


def _node_limit(args: argparse.Namespace) -> int:
    explicit = getattr(args, "node_limit", None)
    if explicit is not None:
        if explicit < 1:
            raise _UsageError("--node-limit must be positive")
        return explicit
    env = os.environ.get("ZENOKIT_NODE_LIMIT")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise _UsageError(f"ZENOKIT_NODE_LIMIT must be an integer, got {env!r}") from None
        if value < 1:
            raise _UsageError("ZENOKIT_NODE_LIMIT must be positive")
        return value
    return DEFAULT_NODE_LIMIT


def _load_ta(path: str) -> TimedAutomaton:
    with open(path, encoding="utf-8") as fh:
        return parse_ta(fh.read())


def _annotation(node) -> str | None:
    guess = getattr(node, "guess", None)
    if guess is not None:
        return "{" + ",".join(sorted(guess)) + "}" if guess else "∅"
    return getattr(node, "mode", None)


def _render_dot(g, clocks: tuple[str, ...]) -> str:
    names = list(clocks)
    lines = ["digraph zg {", "  rankdir=LR;", "  node [shape=box];"]
    for i, n in enumerate(g.nodes):
        parts = [str(n.state), n.zone.pretty(names)]
        ann = _annotation(n)
        if ann is not None:
            parts.append(ann)
        label = " | ".join(parts).replace("\\", "\\\\").replace('"', '\\"')
        extra = ", peripheries=2" if i == g.initial else ""
        lines.append(f'  n{i} [label="{label}"{extra}];')
    for src, lbl, dst in g.edges:
        label = lbl.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{src} -> n{dst} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _plot_report(report, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    kinds = [r.kind for r in report.rows]
    counts = [r.nodes if r.nodes is not None else 0 for r in report.rows]
    colors = ["tab:red" if r.error is not None else "tab:blue" for r in report.rows]
    fig, ax = plt.subplots(figsize=(7.0, 3.5))
    ax.bar(kinds, counts, color=colors)
    ax.set_ylabel("nodes explored")
    ax.set_title(f"{report.prop} cross-check")
    ax.tick_params(axis="x", rotation=30)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _cmd_check(args: argparse.Namespace) -> int:
    a = _load_ta(args.file)
    limit = _node_limit(args)
    if args.property == "nonzeno":
        verdict = check_nonzeno(a, args.abstraction, limit)
    else:
        verdict = check_zeno(a, args.abstraction, limit)
    print("YES" if verdict.answer else "NO")
    if args.witness and verdict.witness is not None:
        w = verdict.witness
        print("prefix:" + "".join(" " + x for x in w.prefix))
        print("cycle:" + "".join(" " + x for x in w.cycle))
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    a = _load_ta(args.file)
    limit = _node_limit(args)
    if args.annotate == "rgzg":
        g = explore_rgzg(a, args.abstraction, limit)
    elif args.annotate == "szg":
        g = explore_szg(a, args.abstraction, limit)
    else:
        g = explore(a, args.abstraction, limit)
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(_render_dot(g, a.clocks))
    print(f"nodes={len(g.nodes)} edges={len(g.edges)}")
    return 0


def _parse_word(s: str) -> tuple[int, ...]:
    if not s or not s.isdigit() or "0" in s:
        raise _UsageError(f"word must be a string of digits 1-9, got {s!r}")
    return tuple(int(ch) for ch in s)


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.what in ("nz-3sat", "z-3sat"):
        with open(args.cnffile, encoding="utf-8") as fh:
            phi = parse_cnf(fh.read())
        a = gen_nz_automaton(phi) if args.what == "nz-3sat" else gen_z_automaton(phi)
    else:
        with open(args.lbafile, encoding="utf-8") as fh:
            b = parse_lba(fh.read())
        word = _parse_word(args.word)
        a = gen_lba_automaton(b, word)
        if args.wrap:
            a = wrap_accept_loops(a, lba_accepting_states(b, word), args.wrap)
    sys.stdout.write(serialize_ta(a))
    return 0


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    a = _load_ta(args.file)
    report = cross_check(a, args.property, None, _node_limit(args))
    print(render_report(report))
    if args.plot:
        _plot_report(report, args.plot)
    return 0


def _cmd_weaken(args: argparse.Namespace) -> int:
    sys.stdout.write(serialize_ta(weaken_zero_checks(_load_ta(args.file))))
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "graph": _cmd_graph,
    "gen": _cmd_gen,
    "crosscheck": _cmd_crosscheck,
    "weaken": _cmd_weaken,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help prints and exits on its own
        return 0 if exc.code in (None, 0) else 1
    try:
        return _COMMANDS[args.cmd](args)
    except (LiftSafetyError, _UsageError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
