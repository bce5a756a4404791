"""Stress-test generators: 3SAT reductions, an LBA-to-TA compiler, and
the tick/accepting-loop wrappers the oracles build on.

The 3SAT automata share one skeleton: a chain q0..qk picks per variable
which of two clocks to reset (the assignment), a chain r0..rn then
checks one literal per clause, and two guardless edges close the loop.
The non-Zeno flavour checks a chosen literal's clock for zero, the Zeno
flavour requires the negated literal's clock to reach 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Atom, Guard, TimedAutomaton, Transition, validate

Literal = tuple[int, bool]  # (variable index from 1, positive?)


@dataclass(frozen=True)
class Formula:
    """3CNF with num_vars variables and exactly three literals per clause."""

    num_vars: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]


@dataclass(frozen=True)
class LbaTransition:
    source: str
    read: int
    write: int
    move: int  # -1, 0 or +1
    target: str


@dataclass(frozen=True)
class Lba:
    """Deterministic linear bounded automaton over tape symbols 1..alphabet_size-1.

    The value alphabet_size itself acts as the end-of-tape separator and
    never appears in a cell.  The accepting state is a sink.
    """

    states: tuple[str, ...]
    initial: str
    accepting: str
    alphabet_size: int
    transitions: tuple[LbaTransition, ...]


def _check_formula(phi: Formula) -> None:
    if phi.num_vars < 0:
        raise ValueError("negative variable count")
    for clause in phi.clauses:
        if len(clause) != 3:
            raise ValueError("every clause needs exactly 3 literals")
        for var, _pos in clause:
            if not 1 <= var <= phi.num_vars:
                raise ValueError(f"literal variable {var} out of range")


def _lit_clock(var: int, positive: bool) -> str:
    return f"x{var}" if positive else f"xb{var}"


def _sat_skeleton(phi: Formula, clause_guard) -> TimedAutomaton:
    _check_formula(phi)
    k, n = phi.num_vars, len(phi.clauses)
    clocks: list[str] = []
    for i in range(1, k + 1):
        clocks += [f"x{i}", f"xb{i}"]
    states = [f"q{i}" for i in range(k + 1)] + [f"r{m}" for m in range(n + 1)]
    trans: list[Transition] = []
    for i in range(1, k + 1):
        trans.append(
            Transition(f"q{i-1}", Guard(), frozenset({f"x{i}"}), f"q{i}", f"t{i}")
        )
        trans.append(
            Transition(f"q{i-1}", Guard(), frozenset({f"xb{i}"}), f"q{i}", f"f{i}")
        )
    trans.append(Transition(f"q{k}", Guard(), frozenset(), "r0", "chk"))
    for m, clause in enumerate(phi.clauses, start=1):
        for j, lit in enumerate(clause, start=1):
            trans.append(
                Transition(
                    f"r{m-1}", clause_guard(lit), frozenset(), f"r{m}", f"c{m}l{j}"
                )
            )
    trans.append(Transition(f"r{n}", Guard(), frozenset(), "q0", "wrap"))
    return TimedAutomaton(tuple(states), "q0", tuple(clocks), tuple(trans))


def gen_nz_automaton(phi: Formula) -> TimedAutomaton:
    """Automaton with a non-Zeno run iff phi is satisfiable.

    Resetting x_i commits variable i to true (xb_i to false); a clause
    edge checks that its literal's clock is still 0, so passing all
    clauses without delay is possible exactly under a satisfying
    assignment, and only a satisfying loop can let time grow.
    """

    def guard(lit: Literal) -> Guard:
        return Guard((Atom(_lit_clock(*lit), "<=", 0),))

    return _sat_skeleton(phi, guard)


def gen_z_automaton(phi: Formula) -> TimedAutomaton:
    """Automaton with a Zeno run iff phi is satisfiable.

    Clause edges demand the negated literal's clock to reach 1, which a
    time-bounded run can only sustain for clocks it stops resetting.
    """

    def guard(lit: Literal) -> Guard:
        var, pos = lit
        return Guard((Atom(_lit_clock(var, not pos), ">=", 1),))

    return _sat_skeleton(phi, guard)


def _check_lba(b: Lba) -> dict[tuple[str, int], LbaTransition]:
    if b.alphabet_size < 2:
        raise ValueError("alphabet_size must be at least 2")
    if b.initial not in b.states or b.accepting not in b.states:
        raise ValueError("initial and accepting states must be declared")
    table: dict[tuple[str, int], LbaTransition] = {}
    for t in b.transitions:
        if t.source not in b.states or t.target not in b.states:
            raise ValueError(f"transition uses undeclared state {t.source}/{t.target}")
        if t.source == b.accepting:
            raise ValueError("the accepting state must have no outgoing transitions")
        if not (1 <= t.read < b.alphabet_size and 1 <= t.write < b.alphabet_size):
            raise ValueError("tape symbols must lie in 1..alphabet_size-1")
        if t.move not in (-1, 0, 1):
            raise ValueError("move must be -1, 0 or 1")
        if (t.source, t.read) in table:
            raise ValueError(f"two transitions from ({t.source}, {t.read})")
        table[(t.source, t.read)] = t
    return table


def gen_lba_automaton(b: Lba, word: tuple[int, ...] | list[int]) -> TimedAutomaton:
    """Compile an LBA run on `word` into a single-run timed automaton.

    Cell j's symbol is the phase at which clock x_j returns to
    N=(n+1)(k+1): the automaton sweeps the tape once per N time units,
    re-reading every cell with guards x==s && x_j==N and rewriting the
    head cell at a shifted phase via x==g' && x_p==N-g+g'.  State
    (qF, p) is reachable iff the machine accepts, and every sweep costs
    N time units, so the compiled automaton is as non-Zeno as machines
    get: Zeno behaviour can only come from wrapper loops added later.
    """
    table = _check_lba(b)
    n = len(word)
    if n == 0:
        raise ValueError("the word must be non-empty")
    k = b.alphabet_size
    for s in word:
        if not 1 <= s < k:
            raise ValueError(f"word symbol {s} out of range 1..{k - 1}")
    bign = (n + 1) * (k + 1)
    clocks = ("x",) + tuple(f"x{j}" for j in range(1, n + 1))

    states: list[str] = []
    trans: list[Transition] = []

    def add_state(name: str) -> str:
        states.append(name)
        return name

    def add(src: str, atoms, resets, dst: str, label: str) -> None:
        trans.append(
            Transition(src, Guard(tuple(atoms)), frozenset(resets), dst, label)
        )

    def main(q: str, p: int) -> str:
        return f"{q}_p{p}"

    # boot: load word symbol j by resetting x_j at phase w_j of slot j
    for j in range(1, n + 1):
        add_state(f"boot{j}")
        add_state(f"boot{j}_done")
        add(f"boot{j}", [Atom("x", "==", word[j - 1])], {f"x{j}"}, f"boot{j}_done", f"bt_rd{j}")
        nxt = f"boot{j + 1}" if j < n else "boot_sep"
        add(f"boot{j}_done", [Atom("x", "==", k + 1)], {"x"}, nxt, f"bt_pc{j}")
    add_state("boot_sep")
    add_state("boot_sep_done")
    add("boot_sep", [Atom("x", "==", k)], set(), "boot_sep_done", "bt_sep")
    add("boot_sep_done", [Atom("x", "==", k + 1)], {"x"}, main(b.initial, 1), "bt_end")

    for q in b.states:
        for p in range(1, n + 1):
            add_state(main(q, p))
    for q in b.states:
        if q == b.accepting:
            continue
        for p in range(1, n + 1):
            # re-read cells before the head, remembering nothing
            for j in range(1, p):
                cur = main(q, p) if j == 1 else f"{q}_p{p}_r{j}"
                done = add_state(f"{q}_p{p}_b{j}")
                for s in range(1, k):
                    add(
                        cur,
                        [Atom("x", "==", s), Atom(f"x{j}", "==", bign)],
                        {f"x{j}"},
                        done,
                        f"rd_{q}_p{p}_c{j}_s{s}",
                    )
                nxt = add_state(f"{q}_p{p}_r{j + 1}")
                add(done, [Atom("x", "==", k + 1)], {"x"}, nxt, f"pc_{q}_p{p}_j{j}")
            head = main(q, p) if p == 1 else f"{q}_p{p}_r{p}"
            # the head cell: one write edge per machine transition from q
            for ti, t in enumerate(b.transitions):
                if t.source != q or not 1 <= p + t.move <= n:
                    continue
                armed = add_state(f"{q}_p{p}_t{ti}_b{p}")
                add(
                    head,
                    [
                        Atom("x", "==", t.write),
                        Atom(f"x{p}", "==", bign - t.read + t.write),
                    ],
                    {f"x{p}"},
                    armed,
                    f"wr_{q}_p{p}_t{ti}",
                )
                cur = armed
                for j in range(p + 1, n + 1):
                    nxt = add_state(f"{q}_p{p}_t{ti}_r{j}")
                    add(cur, [Atom("x", "==", k + 1)], {"x"}, nxt, f"pc_{q}_p{p}_t{ti}_j{j - 1}")
                    done = add_state(f"{q}_p{p}_t{ti}_b{j}")
                    for s in range(1, k):
                        add(
                            nxt,
                            [Atom("x", "==", s), Atom(f"x{j}", "==", bign)],
                            {f"x{j}"},
                            done,
                            f"rd_{q}_p{p}_t{ti}_c{j}_s{s}",
                        )
                    cur = done
                sep = add_state(f"{q}_p{p}_t{ti}_sep")
                add(cur, [Atom("x", "==", k + 1)], {"x"}, sep, f"pc_{q}_p{p}_t{ti}_j{n}")
                end = add_state(f"{q}_p{p}_t{ti}_end")
                add(sep, [Atom("x", "==", k)], set(), end, f"sp_{q}_p{p}_t{ti}")
                add(
                    end,
                    [Atom("x", "==", k + 1)],
                    {"x"},
                    main(t.target, p + t.move),
                    f"en_{q}_p{p}_t{ti}",
                )

    a = TimedAutomaton(tuple(states), "boot1", clocks, tuple(trans))
    problems = validate(a)
    if problems:
        raise ValueError("generated automaton is malformed: " + "; ".join(problems))
    return a


def lba_accepting_states(b: Lba, word: tuple[int, ...] | list[int]) -> tuple[str, ...]:
    """The compiled automaton's states standing for (accepting, head position)."""
    return tuple(f"{b.accepting}_p{p}" for p in range(1, len(word) + 1))


def _fresh(base: str, used: set[str]) -> str:
    if base not in used:
        return base
    i = 2
    while f"{base}{i}" in used:
        i += 1
    return f"{base}{i}"


def add_tick_clock(a: TimedAutomaton) -> tuple[TimedAutomaton, frozenset[str]]:
    """Duplicate every transition with a copy that requires and resets a
    fresh clock at 1; a run ticking forever must let time diverge."""
    z = _fresh("tk", set(a.clocks))
    used = {t.label for t in a.transitions}
    ticked: list[Transition] = []
    tick_labels: list[str] = []
    for t in a.transitions:
        label = _fresh(f"{t.label}_tick", used)
        used.add(label)
        tick_labels.append(label)
        ticked.append(
            Transition(
                t.source,
                Guard(t.guard.atoms + (Atom(z, ">=", 1),)),
                t.resets | {z},
                t.target,
                label,
            )
        )
    return (
        TimedAutomaton(
            a.states, a.initial, a.clocks + (z,), a.transitions + tuple(ticked)
        ),
        frozenset(tick_labels),
    )


def wrap_accept_loops(
    a: TimedAutomaton, targets, flavor: str
) -> TimedAutomaton:
    """Add self-loops on the target states: time-consuming ones for the
    nonzeno flavor (x>=1, reset x), instant ones for zeno (x<=0)."""
    if flavor not in ("nonzeno", "zeno"):
        raise ValueError(f"unknown flavor {flavor!r}")
    targets = set(targets)
    unknown = targets - set(a.states)
    if unknown:
        raise ValueError(f"unknown target states: {', '.join(sorted(unknown))}")
    if not a.clocks:
        raise ValueError("need at least one clock to wrap")
    clock = a.clocks[0]
    used = {t.label for t in a.transitions}
    extra: list[Transition] = []
    for s in a.states:
        if s not in targets:
            continue
        label = _fresh(f"acc_{s}", used)
        used.add(label)
        if flavor == "nonzeno":
            extra.append(
                Transition(s, Guard((Atom(clock, ">=", 1),)), frozenset({clock}), s, label)
            )
        else:
            extra.append(
                Transition(s, Guard((Atom(clock, "<=", 0),)), frozenset(), s, label)
            )
    return TimedAutomaton(a.states, a.initial, a.clocks, a.transitions + tuple(extra))
