import json

import pytest

from costrength_lab.finset import FinSet
from costrength_lab.functors import ID, MAYBE, CompF, ExpF, PowF, ProdF, Reader, Writer, canonical
from costrength_lab.optics import equivalent
from costrength_lab.syntax import (
    ParseError,
    automaton_from_json,
    fun_from_json,
    load_json,
    optic_from_json,
    optic_to_json,
    parse_functor,
    parse_set,
    parse_universe,
)


@pytest.mark.parametrize(
    "text, want",
    [
        ("Id", ID),
        ("Maybe", MAYBE),
        ("Writer(2)", Writer(canonical(2))),
        ("Reader({a,b})", Reader(FinSet(["a", "b"]))),
        ("Prod(Id, Maybe)", ProdF(ID, MAYBE)),
        ("Exp(2, Pow(Id))", ExpF(canonical(2), PowF(ID))),
        ("Comp( Maybe ,\n Id )", CompF(MAYBE, ID)),
    ],
)
def test_functors(text, want):
    assert parse_functor(text) == want


def test_sets_and_universes():
    assert parse_set("1") == canonical(1)
    assert parse_set("{}") == FinSet(())
    assert parse_set("{x, y}").labels == ("x", "y")
    assert [len(S) for S in parse_universe("0,1,{a,b},3")] == [0, 1, 2, 3]


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("Writer(2", 1, 9),
        ("Prod(Id,\n  Foo)", 2, 3),
        ("Id Id", 1, 4),
        ("Reader({a,a})", 1, 11),
        ("", 1, 1),
    ],
)
def test_errors_carry_a_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_functor(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}:")


def test_bad_json_reports_its_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"a": 1,\n "b": }')
    with pytest.raises(ParseError) as info:
        load_json(p)
    assert info.value.line == 2


def test_functions_from_json():
    two = canonical(2)
    f = fun_from_json({"dom": 2, "cod": ["p", "q", "r"], "table": [2, 0]})
    assert f.cod.labels == ("p", "q", "r") and f.table == (2, 0)
    assert fun_from_json([1, 0], two, two).table == (1, 0)
    with pytest.raises(ParseError):
        fun_from_json([1, 0])


def test_automaton_from_json():
    a = automaton_from_json({"states": 2, "alphabet": ["a", "b"], "out": [0, 1], "next": [1, 1]})
    assert len(a.states) == 2 and a.alphabet.labels == ("a", "b")


def test_optic_round_trip():
    data = {"action": "cart", "residual": 2, "boundary": [2, 2, 2, 2], "fwd": [1, 2], "bwd": [0, 1, 1, 0]}
    o = optic_from_json(data)
    again = optic_from_json(json.loads(json.dumps(optic_to_json(o))))
    assert equivalent(o, again)
    with pytest.raises(ParseError):
        optic_from_json({**data, "action": "tensor"})
