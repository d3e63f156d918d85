from costrength_lab import finset as fs
from costrength_lab.functors import (
    ID,
    MAYBE,
    POW,
    CompF,
    ConstF,
    Costate,
    ExpF,
    NatFamily,
    ProdF,
    Reader,
    Universe,
    Writer,
    apply_obj,
    brute_force_nat,
    canonical,
    check_functor_laws,
    check_natural,
    enumerate_nat,
    horizontal,
    identity_family,
)
from costrength_lab.finset import ONE

TWO = canonical(2)


def test_sizes():
    X = canonical(3)
    assert len(apply_obj(Writer(TWO), X)) == 6
    assert len(apply_obj(Reader(TWO), X)) == 9
    assert len(apply_obj(Costate(TWO), X)) == 18
    assert len(apply_obj(MAYBE, X)) == 4
    assert len(apply_obj(POW, X)) == 8
    assert len(apply_obj(CompF(MAYBE, MAYBE), X)) == 5


def test_functor_laws(small):
    for F in (ID, Writer(TWO), Reader(TWO), Costate(TWO), MAYBE, POW, ExpF(TWO, MAYBE), CompF(POW, MAYBE)):
        assert check_functor_laws(F, small).ok, F


def test_printing_uses_sugar():
    assert str(Writer(TWO)) == "Writer(2)"
    assert str(ProdF(ID, MAYBE)) == "Prod(Id,Maybe)"


def test_enumeration_matches_brute_force():
    u = Universe.of_sizes((0, 1, 2))
    for F, G in ((MAYBE, ID), (ProdF(ID, ID), ID), (ID, MAYBE), (Reader(TWO), ID)):
        fast = [tuple(n.at(X).table for X in u) for n in enumerate_nat(F, G, u)]
        slow = [tuple(n.at(X).table for X in u) for n in brute_force_nat(F, G, u)]
        assert sorted(fast) == sorted(slow), (F, G)


def test_known_counts(default):
    assert len(list(enumerate_nat(ProdF(ID, ID), ID, default))) == 2
    assert len(list(enumerate_nat(MAYBE, ID, default))) == 0
    # Maybe(0) = {nothing} forces the constant family
    assert len(list(enumerate_nat(ConstF(ONE), MAYBE, default))) == 1


def test_naturality_catches_a_broken_component(small):
    good = NatFamily(ProdF(ID, ID), ID, rule=lambda X: fs.pi1(X, X), universe=small)
    assert check_natural(good).ok
    bad = good.with_component(TWO, fs.mutate(good.at(TWO), 1))
    assert not check_natural(bad).ok


def test_horizontal_composite_is_natural(small):
    sw = NatFamily(ProdF(ID, ID), ProdF(ID, ID), rule=lambda X: fs.swap(X, X), universe=small)
    h = horizontal(sw, identity_family(MAYBE, small))
    assert check_natural(h, small).ok
