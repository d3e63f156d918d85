import pytest

from costrength_lab import finset as fs
from costrength_lab.costrength import Copoint, enumerate_costrengths, writer_costrength
from costrength_lab.finset import FinFun
from costrength_lab.functors import ID, NatFamily, ProdF, Writer, canonical
from costrength_lab.report import LawViolation
from costrength_lab.streams import (
    Lasso,
    NotAMorphism,
    StreamAutomaton,
    UpToSystem,
    all_automata,
    all_lassos,
    bartels_report,
    behavior,
    behavior_lasso,
    extraction_semantics_report,
    lift,
    minimize,
    morphism_preservation_report,
    solve_up_to,
)

TWO = canonical(2)


def test_lasso_is_canonical():
    assert Lasso.canonical([0, 1], [0, 1, 0, 1]) == Lasso.canonical([], [0, 1])
    assert Lasso.canonical([1], [0, 1]) == Lasso((), (1, 0))
    l = Lasso.canonical([0], [1])
    assert l.take(4) == (0, 1, 1, 1)
    assert l.tail() == Lasso((), (1,))


def test_behaviour_and_rendering():
    a = StreamAutomaton.from_tables([0, 1, 1], [1, 2, 1])
    assert behavior(a, 0, 5).outputs == (0, 1, 1, 1, 1)
    assert behavior_lasso(a, 0).render(a.alphabet) == "e0 | e1"
    assert str(behavior(a, 0, 3)) == "e0 e1 e1"


def test_json_round_trip():
    a = StreamAutomaton.from_tables([0, 1], [1, 0])
    assert StreamAutomaton.from_json(a.to_json()) == a


def test_minimize_merges_equal_behaviour():
    a = StreamAutomaton.from_tables([0, 1, 1], [1, 2, 1])
    m, h = minimize(a)
    assert len(m.states) == 2
    assert [behavior_lasso(m, h.table[q]) for q in range(3)] == all_lassos(a)


def test_lifting_along_the_symmetry(default):
    a = StreamAutomaton.from_tables([0, 1], [1, 0])
    w = writer_costrength(TWO, default)
    lifted = lift(a, w)
    assert len(lifted.states) == 4
    assert extraction_semantics_report(a, w, n=7).passed


def test_lift_rejects_a_broken_costrength(default):
    a = StreamAutomaton.from_tables([0, 1], [1, 0])
    with pytest.raises(LawViolation):
        lift(a, writer_costrength(TWO, default).mutated(TWO, TWO))


def test_extraction_over_all_small_automata(default):
    (w,) = enumerate_costrengths(Writer(TWO), universe=default)
    for k in (1, 2, 3):
        for a in all_automata(k, 2):
            assert extraction_semantics_report(a, w, validate=False).ok


def test_morphisms_are_preserved(default):
    a = StreamAutomaton.from_tables([0, 1, 1], [1, 2, 1])
    m, h = minimize(a)
    w = writer_costrength(TWO, default)
    assert morphism_preservation_report(a, m, h, w).passed
    with pytest.raises(NotAMorphism):
        morphism_preservation_report(a, m, fs.mutate(h, 0), w)


def _system(proj):
    FF = ProdF(ID, ID)
    X, M = canonical(3), TWO
    FX = fs.product(X, X)
    eps = NatFamily(FF, ID, rule=lambda Y: proj(Y, Y))
    return UpToSystem(X, M, FF, Copoint(FF, eps), FinFun(X, fs.product(M, FX), [5, 11, 15]))


@pytest.mark.parametrize("proj", [fs.pi1, fs.pi2], ids=["first", "second"])
def test_up_to_solution_is_unique(proj):
    sol, rep = solve_up_to(_system(proj), uniqueness=True)
    assert rep.passed, rep.render()
    assert rep.find("uniqueness over all automata on the carrier").counts["solutions"] == 1


def test_a_wrong_behaviour_fails_the_diagram():
    s = _system(fs.pi1)
    sol, _ = solve_up_to(s)
    wrong = StreamAutomaton(sol.states, sol.alphabet, fs.mutate(sol.out, 0), sol.next)
    assert not bartels_report(s, all_lassos(wrong)).ok


def test_up_to_rejects_a_non_natural_copoint():
    FF = ProdF(ID, ID)
    X = canonical(3)
    eps = NatFamily(FF, ID, rule=lambda Y: fs.pi1(Y, Y) if len(Y) != 2 else fs.pi2(Y, Y))
    s = UpToSystem(X, TWO, FF, Copoint(FF, eps), FinFun(X, fs.product(TWO, fs.product(X, X)), [5, 11, 15]))
    with pytest.raises(LawViolation):
        solve_up_to(s)
