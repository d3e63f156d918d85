import pytest

from costrength_lab import finset as fs
from costrength_lab.actions import COCART
from costrength_lab.catalogue import (
    check_comonad_laws,
    cofree_copointed,
    comonad_costrength_report,
    const_filter,
    copoint_from_mutation,
    copower_costrength,
    copower_report,
    coproduct_costrong,
    costate_comonad,
    exponential_mate_costrength,
    filtrable_costrength,
    injections,
    maybe_filter,
    op_exponential_costrength,
    powerset_cocart_costrength,
    powerset_filter,
    writer_cocart_costrength,
    writer_comonad,
)
from costrength_lab.costrength import (
    check_costrength,
    check_costrong_nat,
    enumerate_costrengths,
    psi,
    writer_costrength,
)
from costrength_lab.finset import ONE
from costrength_lab.functors import ID, MAYBE, POW, ConstF, Reader, Writer, canonical, check_natural

TWO = canonical(2)


def test_powerset_over_coproducts(small):
    c = powerset_cocart_costrength(small)
    assert check_costrength(c).passed
    assert not check_costrength(c.mutated(TWO, TWO)).ok


def test_filtrable_functors(small):
    for F, filt in ((POW, powerset_filter()), (ConstF(TWO), const_filter(TWO)), (MAYBE, maybe_filter())):
        assert check_natural(filt, small).passed
        assert check_costrength(filtrable_costrength(F, filt, small)).passed
    assert filtrable_costrength(POW, powerset_filter(), small).same_as(powerset_cocart_costrength(small))


def test_filtrable_needs_a_natural_filter(small):
    bad = maybe_filter().with_component(TWO, fs.mutate(maybe_filter().at(TWO), 3))
    with pytest.raises(ValueError):
        check_costrength(filtrable_costrength(MAYBE, bad, small))


def test_writer_over_coproducts(default):
    c = writer_cocart_costrength(TWO, default)
    assert check_costrength(c).passed
    assert not check_costrength(c.mutated(TWO, TWO)).ok


@pytest.mark.parametrize("F", [ID, Writer(TWO), Reader(TWO), MAYBE, POW])
def test_exponential_formula_agrees_with_the_mate(F, small):
    c = op_exponential_costrength(F, small)
    assert check_costrength(c).passed
    assert c.same_as(exponential_mate_costrength(F, small))


def test_copower_family(small):
    rep = copower_report(TWO, [ID, MAYBE, POW, Reader(TWO)], small)
    assert rep.ok, rep.render()
    d = copower_costrength(TWO, MAYBE, small)
    assert not check_natural(d.with_component(TWO, fs.mutate(d.at(TWO), 0)), small).ok


def test_coproduct_of_costrong_functors(small):
    w = writer_costrength(TWO, small)
    r = next(iter(enumerate_costrengths(Reader(TWO), universe=small)))
    c = coproduct_costrong(w, r)
    assert check_costrength(c).passed
    left, right = injections(w.functor, r.functor)
    assert check_costrong_nat(left, w, c).passed
    assert check_costrong_nat(right, r, c).passed
    assert not check_costrength(c.mutated(TWO, TWO)).ok


def test_coproduct_rejects_a_broken_summand(small):
    from costrength_lab.report import LawViolation

    w = writer_costrength(TWO, small)
    with pytest.raises(LawViolation):
        coproduct_costrong(w, w.mutated(TWO, TWO))


@pytest.mark.parametrize("F", [MAYBE, ConstF(ONE), POW, Reader(TWO)])
def test_cofree_copointed_is_costrong(F, small):
    G, p = cofree_copointed(F)
    assert check_natural(p.epsilon, small).passed
    assert check_costrength(psi(p, small)).passed


def test_mutated_copoint_is_not_natural(small):
    _, p = cofree_copointed(MAYBE)
    assert not check_natural(copoint_from_mutation(p, TWO).epsilon, small).ok


@pytest.mark.parametrize("w", [writer_comonad(TWO), costate_comonad(TWO)], ids=["writer", "costate"])
def test_comonads_are_costrong(w, small):
    assert check_comonad_laws(w, small).ok
    assert comonad_costrength_report(w, small).ok


def test_cocartesian_costrengths_of_constant_one():
    assert len(list(enumerate_costrengths(ConstF(ONE), COCART))) == 1
