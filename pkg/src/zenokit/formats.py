"""Text formats: the timed-automaton description language, DIMACS CNF,
and the LBA description language.

All three are line oriented with '#' comments.  Parsers report the
offending line number; semantic problems found after parsing surface as
ValidationError.
"""

from __future__ import annotations

import re

from .generators import Formula, Lba, LbaTransition
from .model import Atom, Guard, TimedAutomaton, Transition, validate

_IDENT = re.compile(r"[A-Za-z_]\w*\Z")
_ATOM = re.compile(r"([A-Za-z_]\w*)(<=|>=|==|<|>)(\d+)\Z")
_EQ_TYPO = re.compile(r"[A-Za-z_]\w*=\d+\Z")
_TRANS_HEAD = re.compile(r"([A-Za-z_]\w*)\s*:\s*([A-Za-z_]\w*)\s*->\s*([A-Za-z_]\w*)\Z")
_RESET = re.compile(r"reset\{([^{}]*)\}\Z")


class ParseError(Exception):
    def __init__(self, line: int | None, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ValidationError(ValueError):
    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(problems))


def _lines(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield ln, line


def _parse_guard(ln: int, src: str) -> Guard:
    if "".join(src.split()) == "true":
        return Guard()
    atoms: list[Atom] = []
    for part in src.split("&&"):
        tok = "".join(part.split())
        m = _ATOM.match(tok)
        if not m:
            hint = ": use == for equality" if _EQ_TYPO.match(tok) else ""
            raise ParseError(ln, f"bad guard atom {tok!r}{hint}")
        atoms.append(Atom(m.group(1), m.group(2), int(m.group(3))))
    return Guard(tuple(atoms))


def parse_ta(text: str) -> TimedAutomaton:
    """Parse the TA description language.

    clocks x y z
    state q0 init
    state q1
    trans t1: q0 -> q1 ; x<=2 && y>0 ; reset{x}

    The reset clause may be omitted; the guard `true` means no atoms.
    """
    clocks: list[str] = []
    states: list[str] = []
    initial: str | None = None
    trans: list[Transition] = []
    for ln, line in _lines(text):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "clocks":
            names = rest.split()
            if not names:
                raise ParseError(ln, "clocks line needs at least one name")
            for name in names:
                if not _IDENT.match(name):
                    raise ParseError(ln, f"bad clock name {name!r}")
            clocks.extend(names)
        elif head == "state":
            toks = rest.split()
            if len(toks) not in (1, 2) or not _IDENT.match(toks[0]):
                raise ParseError(ln, "expected `state <name> [init]`")
            if len(toks) == 2:
                if toks[1] != "init":
                    raise ParseError(ln, f"unknown state flag {toks[1]!r}")
                if initial is not None:
                    raise ParseError(ln, "second init state")
                initial = toks[0]
            states.append(toks[0])
        elif head == "trans":
            parts = [p.strip() for p in rest.split(";")]
            if len(parts) not in (2, 3):
                raise ParseError(ln, "expected `trans <label>: q -> q' ; <guard> [; reset{...}]`")
            m = _TRANS_HEAD.match(parts[0])
            if not m:
                raise ParseError(ln, f"bad transition head {parts[0]!r}")
            guard = _parse_guard(ln, parts[1])
            resets: frozenset[str] = frozenset()
            if len(parts) == 3:
                r = _RESET.match("".join(parts[2].split()))
                if not r:
                    raise ParseError(ln, f"bad reset clause {parts[2]!r}")
                names = [p for p in r.group(1).split(",") if p]
                for name in names:
                    if not _IDENT.match(name):
                        raise ParseError(ln, f"bad reset clock name {name!r}")
                resets = frozenset(names)
            trans.append(Transition(m.group(2), guard, resets, m.group(3), m.group(1)))
        else:
            raise ParseError(ln, f"unknown directive {head!r}")
    if initial is None:
        raise ParseError(None, "no initial state declared")
    a = TimedAutomaton(tuple(states), initial, tuple(clocks), tuple(trans))
    problems = validate(a)
    if problems:
        raise ValidationError(problems)
    return a


def serialize_ta(a: TimedAutomaton) -> str:
    """Canonical text for a validated automaton; parse_ta inverts it."""
    problems = validate(a)
    if problems:
        raise ValidationError(problems)
    order = {c: i for i, c in enumerate(a.clocks)}
    lines = ["clocks " + " ".join(a.clocks)]
    for q in a.states:
        lines.append(f"state {q} init" if q == a.initial else f"state {q}")
    for t in a.transitions:
        line = f"trans {t.label}: {t.source} -> {t.target} ; {t.guard}"
        if t.resets:
            line += " ; reset{" + ",".join(sorted(t.resets, key=order.__getitem__)) + "}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_cnf(text: str) -> Formula:
    """DIMACS CNF restricted to width-3 clauses, one clause per line."""
    num_vars: int | None = None
    declared = 0
    clauses: list[tuple[tuple[int, bool], ...]] = []
    for ln, line in _lines(text):
        if line.startswith("c"):
            continue
        if line.startswith("p"):
            toks = line.split()
            if len(toks) != 4 or toks[0] != "p" or toks[1] != "cnf":
                raise ParseError(ln, "expected header `p cnf <vars> <clauses>`")
            if num_vars is not None:
                raise ParseError(ln, "second header line")
            try:
                num_vars, declared = int(toks[2]), int(toks[3])
            except ValueError:
                raise ParseError(ln, "header counts must be integers") from None
            if num_vars < 0 or declared < 0:
                raise ParseError(ln, "header counts must be non-negative")
            continue
        if num_vars is None:
            raise ParseError(ln, "clause before the `p cnf` header")
        try:
            toks = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(ln, f"bad clause line {line!r}") from None
        if not toks or toks[-1] != 0:
            raise ParseError(ln, "clause line must end in 0")
        lits = toks[:-1]
        if len(lits) != 3:
            raise ParseError(ln, f"clause has {len(lits)} literals, need exactly 3")
        for v in lits:
            if v == 0 or abs(v) > num_vars:
                raise ParseError(ln, f"literal {v} out of range")
        clauses.append(tuple((abs(v), v > 0) for v in lits))
    if num_vars is None:
        raise ParseError(None, "missing `p cnf` header")
    if len(clauses) != declared:
        raise ParseError(
            None, f"header declares {declared} clauses, found {len(clauses)}"
        )
    return Formula(num_vars, tuple(clauses))


_MOVES = {"L": -1, "S": 0, "R": 1}


def parse_lba(text: str) -> Lba:
    """LBA description language.

    alphabet 3
    state qa init
    state qf accept
    trans qa 1 -> qf 2 R

    Symbols range over 1..alphabet-1; determinism and the sink property
    of the accepting state are enforced.
    """
    k: int | None = None
    states: list[str] = []
    initial: str | None = None
    accepting: str | None = None
    trans: list[LbaTransition] = []
    seen: set[tuple[str, int]] = set()
    for ln, line in _lines(text):
        toks = line.split()
        if toks[0] == "alphabet":
            if len(toks) != 2 or not toks[1].isdigit():
                raise ParseError(ln, "expected `alphabet <size>`")
            if k is not None:
                raise ParseError(ln, "second alphabet line")
            k = int(toks[1])
            if k < 2:
                raise ParseError(ln, "alphabet size must be at least 2")
        elif toks[0] == "state":
            if len(toks) not in (2, 3) or not _IDENT.match(toks[1]):
                raise ParseError(ln, "expected `state <name> [init|accept|plain]`")
            if toks[1] in states:
                raise ParseError(ln, f"state {toks[1]} declared twice")
            flag = toks[2] if len(toks) == 3 else "plain"
            if flag == "init":
                if initial is not None:
                    raise ParseError(ln, "second init state")
                initial = toks[1]
            elif flag == "accept":
                if accepting is not None:
                    raise ParseError(ln, "a second accepting state is not allowed")
                accepting = toks[1]
            elif flag != "plain":
                raise ParseError(ln, f"unknown state flag {flag!r}")
            states.append(toks[1])
        elif toks[0] == "trans":
            if len(toks) != 7 or toks[3] != "->" or toks[6] not in _MOVES:
                raise ParseError(ln, "expected `trans q g -> q' g' L|R|S`")
            if k is None:
                raise ParseError(ln, "alphabet must be declared before transitions")
            if toks[1] not in states or toks[4] not in states:
                raise ParseError(ln, "states must be declared before transitions")
            if not (toks[2].isdigit() and toks[5].isdigit()):
                raise ParseError(ln, "tape symbols must be integers")
            read, write = int(toks[2]), int(toks[5])
            if not (1 <= read < k and 1 <= write < k):
                raise ParseError(ln, f"tape symbols must lie in 1..{k - 1}")
            if toks[1] == accepting:
                raise ParseError(ln, "the accepting state must have no outgoing transitions")
            if (toks[1], read) in seen:
                raise ParseError(ln, f"two transitions from ({toks[1]}, {read})")
            seen.add((toks[1], read))
            trans.append(LbaTransition(toks[1], read, write, _MOVES[toks[6]], toks[4]))
        else:
            raise ParseError(ln, f"unknown directive {toks[0]!r}")
    if k is None:
        raise ParseError(None, "no alphabet declared")
    if initial is None:
        raise ParseError(None, "no init state declared")
    if accepting is None:
        raise ParseError(None, "no accepting state declared")
    return Lba(tuple(states), initial, accepting, k, tuple(trans))
