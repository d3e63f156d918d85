import pytest

from costrength_lab import finset as fs
from costrength_lab.costrength import writer_costrength
from costrength_lab.finset import FinSet
from costrength_lab.free_monad import (
    TruncatedMonad,
    build_terms,
    free_costrength,
    free_costrength_family,
    free_monad_law_report,
    term_functor,
)
from costrength_lab.functors import MAYBE, Universe, Writer, canonical

X = FinSet(["x"])
S = FinSet(["s"])


def test_depth_one_terms():
    assert build_terms(Writer(S), X, 1).labels == ("inl x", "inr (s,x)")


def test_maybe_terms_of_depth_two():
    # x, nothing, just x, just nothing, just just x
    assert len(build_terms(MAYBE, X, 2)) == 5


def test_depth_zero_is_the_identity():
    assert build_terms(MAYBE, X, 0) == X
    with pytest.raises(ValueError):
        term_functor(MAYBE, -1)


def test_costrength_moves_the_residual_through_an_operation():
    M = FinSet(["m"])
    F = Writer(S)
    u = Universe((M, X, S))
    c = writer_costrength(S, u)
    cst = free_costrength(F, c, M, X, 1)
    T1MX = build_terms(F, fs.product(M, X), 1)
    src = T1MX.index("inr (s,(m,x))")
    got = cst.cod.label(cst.table[src])
    assert got == "(m,inr (s,x))"
    assert cst.cod.label(cst.table[T1MX.index("inl (m,x)")]) == "(m,inl x)"


def test_unit_and_multiplication_at_low_depth():
    T = TruncatedMonad(Writer(canonical(2)), 3)
    Xs = canonical(2)
    eta = T.unit(Xs)
    assert fs.compose(T.mult(Xs, 1, 0), T.unit(Xs, 1)) == T.include(Xs, 0, 1)
    assert eta.cod == T.terms(Xs, 1)


@pytest.mark.parametrize("n", [1, 2])
def test_laws(n):
    u = Universe.of_sizes((0, 1, 2))
    F = Writer(canonical(n))
    rep = free_monad_law_report(F, writer_costrength(canonical(n), u), u, d_max=3)
    assert rep.passed, rep.render()
    assert rep.all_skipped()


def test_a_broken_lift_is_caught():
    from costrength_lab.costrength import check_costrength

    u = Universe.of_sizes((0, 1, 2))
    TWO = canonical(2)
    c = writer_costrength(TWO, u)
    lifted = free_costrength_family(c, 2)
    assert check_costrength(lifted).passed
    assert not check_costrength(lifted.mutated(TWO, TWO, 5)).ok
