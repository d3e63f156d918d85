import contextvars
import json
from pathlib import Path

import pytest

from costrength_lab.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    # limits set by main() stay inside a private context
    code = contextvars.copy_context().run(main, list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_passes_and_a_mutation_fails(capsys):
    assert run(capsys, "check", "Writer(2)", "--construction", "symmetry")[0] == 0
    assert run(capsys, "check", "Writer(2)", "--construction", "symmetry", "--mutate")[0] == 1


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "Maybe", "--json")
    assert code == 0
    assert json.loads(out)["count"] == 0


def test_parse_errors_exit_2_with_position(capsys):
    code, _, err = run(capsys, "check", "Writer(2")
    assert code == 2
    assert "line 1, column 9" in err
    code, _, err = run(capsys, "stream", "behave", str(DATA / "broken.json"))
    assert code == 2 and "line 2" in err


def test_nonpositive_budget_is_a_usage_error(capsys):
    assert run(capsys, "enumerate", "Id", "--budget", "0")[0] == 2


def test_budget_from_the_environment_gives_skipped(capsys, monkeypatch):
    monkeypatch.setenv("COSTRENGTH_BUDGET", "3")
    code, _, err = run(capsys, "enumerate", "Reader(2)")
    assert code == 3
    assert err.startswith("skipped")


def test_suite_json_is_deterministic(capsys):
    first = run(capsys, "suite", "run", "ex-2.8-1a", "--json")
    second = run(capsys, "suite", "run", "ex-2.8-1a", "--json")
    assert first[0] == 0 and first[1] == second[1]
    assert "timing" not in json.loads(first[1])


def test_suite_list_and_unknown_id(capsys):
    code, out, _ = run(capsys, "suite", "list")
    assert code == 0 and "thm-3" in out
    assert run(capsys, "suite", "run", "no-such-suite")[0] == 2


def test_stream_commands(capsys):
    code, out, _ = run(capsys, "stream", "behave", str(DATA / "automaton.json"))
    assert code == 0 and "a | b" in out
    assert run(capsys, "stream", "lift", str(DATA / "automaton.json"), "--functor", "Writer(2)")[0] == 0
    assert run(capsys, "stream", "upto", str(DATA / "upto.json"), "--unique")[0] == 0


def test_optic_commands(capsys):
    code, out, _ = run(capsys, "optic", "compose", str(DATA / "lens_outer.json"), str(DATA / "lens_inner.json"), "--json")
    assert code == 0 and [len(S) for S in json.loads(out)["boundary"]] == [2, 1, 1, 2]
    assert run(capsys, "optic", "nf", str(DATA / "lens_outer.json"))[0] == 0
    assert run(capsys, "optic", "transform", str(DATA / "lens_outer.json"), "--functor", "Writer(2)")[0] == 0


@pytest.mark.parametrize("cmd", [["free", "laws", "--functor", "Writer(1)", "--depth", "2", "--universe", "0,1,2"],
                                 ["graded", "maybe"], ["mate", "--set", "2"], ["phi", "Writer(2)"],
                                 ["psi", "Reader(2)", "--index", "1"]])
def test_other_commands_pass(capsys, cmd):
    assert run(capsys, *cmd)[0] == 0
