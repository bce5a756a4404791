"""Timed-automaton data model, guard analysis and bound profiles.

States and clocks are plain names.  Clock index 0 is reserved for the
zero clock inside DBMs, so declared clocks are numbered from 1 in
declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Mapping

from .dbm import leq, lt

OPS = ("<", "<=", "==", ">=", ">")

# guard constants above this would creep toward the DBM infinity sentinel
MAX_CONST = 1 << 20

PROFILE_KINDS = ("M", "LU", "weakL", "weakU")


@dataclass(frozen=True)
class Atom:
    """A single clock constraint `clock op const`."""

    clock: str
    op: str
    const: int

    def dbm_entries(self, index: Mapping[str, int]) -> tuple[tuple[int, int, int], ...]:
        """The matrix entries (i, j, encoded bound) this atom tightens."""
        i = index[self.clock]
        c = self.const
        if self.op == "<":
            return ((i, 0, lt(c)),)
        if self.op == "<=":
            return ((i, 0, leq(c)),)
        if self.op == ">":
            return ((0, i, lt(-c)),)
        if self.op == ">=":
            return ((0, i, leq(-c)),)
        if self.op == "==":
            return ((i, 0, leq(c)), (0, i, leq(-c)))
        raise ValueError(f"unknown operator {self.op!r}")

    def __str__(self) -> str:
        return f"{self.clock}{self.op}{self.const}"


@dataclass(frozen=True)
class Guard:
    """Conjunction of atoms; the empty conjunction is true."""

    atoms: tuple[Atom, ...] = ()

    def dbm_entries(self, index: Mapping[str, int]) -> tuple[tuple[int, int, int], ...]:
        out: list[tuple[int, int, int]] = []
        for atom in self.atoms:
            out.extend(atom.dbm_entries(index))
        return tuple(out)

    def __str__(self) -> str:
        return " && ".join(str(a) for a in self.atoms) if self.atoms else "true"


@dataclass(frozen=True)
class Transition:
    source: str
    guard: Guard
    resets: frozenset[str]
    target: str
    label: str


@dataclass(frozen=True)
class TimedAutomaton:
    states: tuple[str, ...]
    initial: str
    clocks: tuple[str, ...]
    transitions: tuple[Transition, ...]

    @cached_property
    def clock_index(self) -> dict[str, int]:
        return {name: i + 1 for i, name in enumerate(self.clocks)}

    @property
    def dim(self) -> int:
        return len(self.clocks) + 1

    def outgoing(self, state: str) -> tuple[Transition, ...]:
        return tuple(t for t in self.transitions if t.source == state)


@dataclass(frozen=True)
class BoundProfile:
    """Per-clock lower/upper extrapolation bounds; None stands for -infinity.

    The arrays align with `clocks`; the zero clock is implicitly bounded
    by 0 on both sides.
    """

    kind: str
    clocks: tuple[str, ...]
    lower: tuple[int | None, ...]
    upper: tuple[int | None, ...]

    def lower_of(self, clock: str) -> int | None:
        return self.lower[self.clocks.index(clock)]

    def upper_of(self, clock: str) -> int | None:
        return self.upper[self.clocks.index(clock)]


def validate(a: TimedAutomaton) -> list[str]:
    """Well-formedness diagnostics; an empty list means the automaton is usable."""
    out: list[str] = []
    seen_states = set()
    for s in a.states:
        if s in seen_states:
            out.append(f"state {s} declared twice")
        seen_states.add(s)
    seen_clocks = set()
    for c in a.clocks:
        if c in seen_clocks:
            out.append(f"clock {c} declared twice")
        seen_clocks.add(c)
    if a.initial not in seen_states:
        out.append(f"initial state {a.initial} is not declared")
    labels = set()
    for t in a.transitions:
        where = f"transition {t.label}"
        if t.label in labels:
            out.append(f"duplicate transition label {t.label}")
        labels.add(t.label)
        if t.source not in seen_states:
            out.append(f"{where}: source state {t.source} is not declared")
        if t.target not in seen_states:
            out.append(f"{where}: target state {t.target} is not declared")
        for c in sorted(t.resets):
            if c not in seen_clocks:
                out.append(f"{where}: reset clock {c} is not declared")
        for atom in t.guard.atoms:
            if atom.clock not in seen_clocks:
                out.append(f"{where}: guard clock {atom.clock} is not declared")
            if atom.op not in OPS:
                out.append(f"{where}: unknown operator {atom.op!r}")
            if atom.const < 0:
                out.append(f"{where}: negative guard constant {atom.const}")
            elif atom.const > MAX_CONST:
                out.append(f"{where}: guard constant {atom.const} exceeds 2^20")
    return out


def relevant_clocks(a: TimedAutomaton) -> frozenset[str]:
    """Clocks checked for zero somewhere: an atom x<=0 or x==0 exists."""
    out = set()
    for t in a.transitions:
        for atom in t.guard.atoms:
            if atom.const == 0 and atom.op in ("<=", "=="):
                out.add(atom.clock)
    return frozenset(out)


def lifted_clocks(a: TimedAutomaton) -> frozenset[str]:
    """Clocks with some guard atom forcing x >= 1.

    x>c only counts for c>=1: over dense time x>0 does not imply x>=1.
    """
    out = set()
    for t in a.transitions:
        for atom in t.guard.atoms:
            if atom.op in (">=", "==") and atom.const >= 1:
                out.add(atom.clock)
            elif atom.op == ">" and atom.const >= 1:
                out.add(atom.clock)
    return frozenset(out)


def _guard_bounds(a: TimedAutomaton) -> tuple[dict[str, int], dict[str, int]]:
    lower: dict[str, int] = {}
    upper: dict[str, int] = {}
    for t in a.transitions:
        for atom in t.guard.atoms:
            if atom.op in (">", ">=", "=="):
                lower[atom.clock] = max(lower.get(atom.clock, atom.const), atom.const)
            if atom.op in ("<", "<=", "=="):
                upper[atom.clock] = max(upper.get(atom.clock, atom.const), atom.const)
    return lower, upper


def compute_bound_profile(a: TimedAutomaton, kind: str) -> BoundProfile:
    """Maximal lower/upper guard constants per clock, by profile kind.

    Equality atoms feed both sides.  weakL raises a relevant clock's
    missing lower bound to 0 when an upper bound exists; weakU raises a
    missing upper bound to 1 when the lower bound is at least 1.
    """
    if kind not in PROFILE_KINDS:
        raise ValueError(f"unknown profile kind {kind!r}; expected one of {PROFILE_KINDS}")
    low, up = _guard_bounds(a)
    lower: list[int | None] = [low.get(c) for c in a.clocks]
    upper: list[int | None] = [up.get(c) for c in a.clocks]
    if kind == "M":
        merged = [
            None if lo is None and hi is None else max(x for x in (lo, hi) if x is not None)
            for lo, hi in zip(lower, upper)
        ]
        lower = upper = merged
    elif kind == "weakL":
        rel = relevant_clocks(a)
        lower = [
            0 if c in rel and lo is None and hi is not None else lo
            for c, lo, hi in zip(a.clocks, lower, upper)
        ]
    elif kind == "weakU":
        upper = [
            1 if lo is not None and lo >= 1 and hi is None else hi
            for lo, hi in zip(lower, upper)
        ]
    return BoundProfile(kind, a.clocks, tuple(lower), tuple(upper))


def weaken_zero_checks(a: TimedAutomaton) -> TimedAutomaton:
    """Rewrite zero checks: x==0 becomes x<=0 and x>=0 disappears.

    Both forms constrain runs identically (clocks never go negative), so
    the result has the same runs while its bound profiles can shrink.
    """
    new_trans = []
    for t in a.transitions:
        atoms = []
        for atom in t.guard.atoms:
            if atom.op == "==" and atom.const == 0:
                atoms.append(Atom(atom.clock, "<=", 0))
            elif atom.op == ">=" and atom.const == 0:
                continue
            else:
                atoms.append(atom)
        new_trans.append(replace(t, guard=Guard(tuple(atoms))))
    return replace(a, transitions=tuple(new_trans))


def bounded_clocks(guard: Guard) -> frozenset[str]:
    """Clocks the guard bounds from above (x<c, x<=c or x==c, any c)."""
    return frozenset(a.clock for a in guard.atoms if a.op in ("<", "<=", "=="))


def guard_lifted_clocks(guard: Guard) -> frozenset[str]:
    """Clocks this particular guard forces to at least 1."""
    return frozenset(
        a.clock
        for a in guard.atoms
        if (a.op in (">=", "==", ">") and a.const >= 1)
    )


def make_automaton(
    states: Iterable[str],
    initial: str,
    clocks: Iterable[str],
    transitions: Iterable[Transition],
) -> TimedAutomaton:
    return TimedAutomaton(tuple(states), initial, tuple(clocks), tuple(transitions))
