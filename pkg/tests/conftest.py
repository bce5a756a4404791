"""Shared fixtures: the small automata used throughout the tests.

Each fixture automaton is kept as source text so the parser is
exercised on every path into the library.
"""

from __future__ import annotations

import pytest

from zenokit import Formula, parse_ta

# Two states reachable under every coarse abstraction even though the
# concrete zones keep drifting apart: the loop resets x2 every time unit
# while x1 grows without bound.
A_INF = """\
clocks x1 x2
state q0 init
state q1
trans a: q0 -> q1 ; true ; reset{x1,x2}
trans b: q1 -> q1 ; x2==1 ; reset{x2}
"""

# Five-node zone graph: a loop between q0 and q1 plus an escape guarded
# by a large constant.
A_LOOP = """\
clocks x1 x2
state q0 init
state q1
state q2
trans a: q0 -> q1 ; true ; reset{x1}
trans b: q1 -> q0 ; x1<=2
trans c: q0 -> q2 ; x2>5
"""

# Every run is Zeno: each branch checks that the other branch's clock,
# reset one round earlier, is still 0.
A_ZENO = """\
clocks x1 x2
state q0 init
state q1
state q2
trans a: q0 -> q1 ; true ; reset{x1}
trans b: q1 -> q0 ; x2<=0
trans c: q0 -> q2 ; true ; reset{x2}
trans d: q2 -> q0 ; x1<=0
"""

# Non-Zeno despite a zero-check loop: the x==0 self-loop cannot run
# forever once the y-reset edge commits to the 2-3 cycle, where z is
# reset and checked for zero while x grows past 1.
A_GUESS = """\
clocks x y z
state s1 init
state s2
state s3
trans a: s1 -> s1 ; x==0 ; reset{x}
trans b: s1 -> s2 ; true ; reset{y}
trans c: s2 -> s3 ; x>=1 ; reset{z}
trans d: s3 -> s2 ; z==0
"""

# Zeno through the unguarded self-loop only: the round trip via q1 needs
# the x>=1 edge, so a slow suffix cannot take it.
A_SLOW = """\
clocks x
state q0 init
state q1
trans idle: q0 -> q0 ; true
trans go: q0 -> q1 ; true ; reset{x}
trans back: q1 -> q0 ; x>=1
"""

SAT_FORMULA = Formula(
    num_vars=3,
    clauses=(
        ((1, True), (2, False), (3, True)),
        ((1, False), (2, True), (3, True)),
    ),
)

UNSAT_FORMULA = Formula(
    num_vars=1,
    clauses=(
        ((1, True), (1, True), (1, True)),
        ((1, False), (1, False), (1, False)),
    ),
)


@pytest.fixture(scope="session")
def a_inf():
    return parse_ta(A_INF)


@pytest.fixture(scope="session")
def a_loop():
    return parse_ta(A_LOOP)


@pytest.fixture(scope="session")
def a_zeno():
    return parse_ta(A_ZENO)


@pytest.fixture(scope="session")
def a_guess():
    return parse_ta(A_GUESS)


@pytest.fixture(scope="session")
def a_slow():
    return parse_ta(A_SLOW)


@pytest.fixture(scope="session")
def sat_formula():
    return SAT_FORMULA


@pytest.fixture(scope="session")
def unsat_formula():
    return UNSAT_FORMULA


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance.py" not in rep.nodeid:
                continue
            name = rep.nodeid.split("::")[-1]
            verdict = "PASS" if status == "passed" else "FAIL"
            lines.append((name, verdict))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in sorted(lines):
        terminalreporter.write_line(f"{verdict}  {name}")
