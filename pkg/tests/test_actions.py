from costrength_lab.actions import (
    ACTIONS,
    CART,
    COCART,
    OP_EXP,
    check_action_coherence,
    check_graded_laws,
    colax_search_report,
    curry_iso,
    identity_graded_monad,
    maybe_graded_monad,
    with_corrupted_associator,
)
from costrength_lab import finset as fs
from costrength_lab.functors import canonical

TWO = canonical(2)


def test_registry_names():
    assert set(ACTIONS) == {"cart", "cocart", "op-exp"}


def test_coherence_of_all_actions(small):
    for a in (CART, COCART, OP_EXP):
        rep = check_action_coherence(a, small, small)
        assert rep.passed, rep.render()


def test_corrupted_associator_breaks_the_pentagon(small):
    for a in (CART, COCART, OP_EXP):
        rep = check_action_coherence(with_corrupted_associator(a, TWO, TWO, TWO), small, small)
        assert not rep.ok
        assert "pentagon" in str(rep.counterexample)


def test_curry_iso_is_invertible():
    X = canonical(3)
    k = curry_iso(TWO, TWO, X)
    assert fs.is_bijection(k)


def test_graded_maybe_is_lax(small):
    rep = check_graded_laws(maybe_graded_monad(), small)
    assert rep.passed, rep.render()
    assert rep.counts["iso"]["m*f"] is False
    assert "m*f" in rep.counts["non_iso"]


def test_graded_maybe_has_no_colax_structure(small):
    rep = colax_search_report(maybe_graded_monad(), small)
    assert rep.passed
    assert rep.counts["solutions"] == 0
    assert rep.counts["candidates"]["m*f"] == 2


def test_colax_search_finds_the_trivial_structure(small):
    rep = colax_search_report(identity_graded_monad(), small)
    assert rep.counts["solutions"] == 1
