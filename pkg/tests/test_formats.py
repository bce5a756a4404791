"""Parsers and the serializer: round trips and error reporting."""

from __future__ import annotations

import pytest

from zenokit import Formula, ParseError, ValidationError, parse_cnf, parse_lba, parse_ta, serialize_ta

from conftest import A_GUESS, A_INF, A_LOOP, A_SLOW, A_ZENO


@pytest.mark.parametrize("text", [A_INF, A_LOOP, A_ZENO, A_GUESS, A_SLOW])
def test_ta_round_trip(text):
    a = parse_ta(text)
    assert parse_ta(serialize_ta(a)) == a


def test_ta_serializer_output(a_slow):
    assert serialize_ta(a_slow) == (
        "clocks x\n"
        "state q0 init\n"
        "state q1\n"
        "trans idle: q0 -> q0 ; true\n"
        "trans go: q0 -> q1 ; true ; reset{x}\n"
        "trans back: q1 -> q0 ; x>=1\n"
    )


def test_ta_comments_and_blanks():
    a = parse_ta("# heading\nclocks x\n\nstate s init  # trailing\ntrans t: s -> s ; x<1\n")
    assert a.states == ("s",)
    assert a.transitions[0].guard.atoms[0].op == "<"


def test_ta_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as e:
        parse_ta("clocks x\nstate s init\ntrans t: s -> s ; x < !\n")
    assert e.value.line == 3
    with pytest.raises(ParseError) as e:
        parse_ta("clocks x\nstate s init\nstate s2 init\n")
    assert e.value.line == 3
    assert "second init" in e.value.message
    with pytest.raises(ParseError) as e:
        parse_ta("bogus directive\n")
    assert e.value.line == 1
    with pytest.raises(ParseError):
        parse_ta("clocks x\nstate s\n")  # no init anywhere


def test_ta_equality_typo_hint():
    with pytest.raises(ParseError) as e:
        parse_ta("clocks x\nstate s init\ntrans t: s -> s ; x=2\n")
    assert "use == for equality" in e.value.message


def test_ta_semantic_errors_are_validation_errors():
    with pytest.raises(ValidationError) as e:
        parse_ta("clocks x\nstate s init\ntrans t: s -> nowhere ; true\n")
    assert any("nowhere" in p for p in e.value.problems)


def test_cnf_round_trip_values():
    f = parse_cnf("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 3 0\n")
    assert f == Formula(
        3,
        (
            ((1, True), (2, False), (3, True)),
            ((1, False), (2, True), (3, True)),
        ),
    )


def test_cnf_errors():
    with pytest.raises(ParseError) as e:
        parse_cnf("p cnf 2 1\n1 2 0\n")
    assert "need exactly 3" in e.value.message
    with pytest.raises(ParseError):
        parse_cnf("1 2 3 0\n")  # clause before header
    with pytest.raises(ParseError):
        parse_cnf("p cnf 2 1\n1 2 3 0\n")  # literal out of range
    with pytest.raises(ParseError):
        parse_cnf("p cnf 3 2\n1 2 3 0\n")  # clause count mismatch
    with pytest.raises(ParseError):
        parse_cnf("p cnf 3 1\n1 2 3\n")  # missing terminator


def test_lba_parse_and_determinism():
    b = parse_lba(
        "alphabet 3\n"
        "state q0 init\n"
        "state qa accept\n"
        "trans q0 1 -> qa 2 R\n"
    )
    assert b.states == ("q0", "qa")
    assert b.alphabet_size == 3
    t = b.transitions[0]
    assert (t.source, t.read, t.write, t.move, t.target) == ("q0", 1, 2, 1, "qa")

    with pytest.raises(ParseError) as e:
        parse_lba(
            "alphabet 3\nstate q0 init\nstate qa accept\n"
            "trans q0 1 -> q0 1 S\ntrans q0 1 -> qa 1 S\n"
        )
    assert "two transitions" in e.value.message
    with pytest.raises(ParseError) as e:
        parse_lba(
            "alphabet 3\nstate q0 init\nstate qa accept\ntrans qa 1 -> q0 1 S\n"
        )
    assert "accepting state" in e.value.message
    with pytest.raises(ParseError):
        parse_lba("alphabet 3\nstate q0 init\nstate qa accept\ntrans q0 7 -> qa 1 S\n")
    with pytest.raises(ParseError):
        parse_lba("alphabet 1\n")
    with pytest.raises(ParseError):
        parse_lba("state q0 init\nstate qa accept\n")  # no alphabet
