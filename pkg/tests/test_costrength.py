import pytest

from costrength_lab import finset as fs
from costrength_lab.actions import CART, COCART
from costrength_lab.costrength import (
    Costrength,
    canonical_strength,
    check_costrength,
    check_projection_law,
    check_strength,
    enumerate_copoints,
    enumerate_costrengths,
    enumerate_strengths,
    identity_costrength,
    phi,
    psi,
    roundtrip_report,
    uniqueness_square_report,
    writer_costrength,
)
from costrength_lab.finset import ONE, FinSet
from costrength_lab.functors import ID, MAYBE, ConstF, Costate, ProdF, Reader, Writer, canonical

TWO = canonical(2)


@pytest.mark.parametrize(
    "F, n",
    [(ID, 1), (Writer(TWO), 1), (Reader(TWO), 2), (Costate(TWO), 4), (MAYBE, 0), (ProdF(ID, MAYBE), 2),
     (ConstF(FinSet(["a"])), 0)],
)
def test_cartesian_costrength_counts(F, n, default):
    assert len(list(enumerate_costrengths(F, CART, default))) == n


def test_reader_count_tracks_the_exponent(default):
    S = canonical(3)
    assert len(list(enumerate_costrengths(Reader(S), CART, default))) == 3


@pytest.mark.parametrize("F", [ID, Writer(TWO), Reader(TWO), MAYBE])
def test_strength_is_unique_and_canonical(F, default):
    found = list(enumerate_strengths(F, CART, default))
    assert len(found) == 1
    assert found[0].same_as(canonical_strength(F, default))
    assert check_strength(found[0]).passed


def test_symmetry_is_the_writer_costrength(default):
    (c,) = enumerate_costrengths(Writer(TWO), CART, default)
    assert c.same_as(writer_costrength(TWO, default))


def test_mutants_fail(default):
    w = writer_costrength(TWO, default)
    assert not check_costrength(w.mutated(TWO, TWO)).ok
    st = canonical_strength(Reader(TWO), default)
    assert not check_strength(st.mutated(TWO, TWO)).ok


def test_mutant_counterexample_names_a_diagram(default):
    rep = check_costrength(writer_costrength(TWO, default).mutated(ONE, ONE))
    assert rep.counterexample["in"] in {"naturality in the object", "naturality in the grade", "unit", "associativity"}


@pytest.mark.parametrize("F", [ID, Writer(TWO), Reader(TWO), Costate(TWO), ProdF(ID, MAYBE)])
def test_phi_psi_round_trip(F, default):
    rep = roundtrip_report(F, default)
    assert rep.passed, rep.render()
    assert rep.counts["copoints"] == rep.counts["costrengths"]


def test_phi_of_symmetry_is_second_projection(default):
    eps = phi(writer_costrength(TWO, default))
    for X in default:
        assert eps.at(X) == fs.pi2(TWO, X)


def test_projection_law_on_all_enumerated(default):
    for c in enumerate_costrengths(Costate(TWO), CART, default):
        assert check_projection_law(c).passed


def test_psi_of_each_copoint_is_lawful(default):
    for p in enumerate_copoints(Reader(TWO), default):
        assert check_costrength(psi(p, default)).passed


@pytest.mark.parametrize("F", [Reader(TWO), Costate(TWO), ProdF(ID, MAYBE), MAYBE])
def test_unit_pinning_loses_nothing(F, small):
    def tables(pin):
        found = enumerate_costrengths(F, CART, small, (ONE, TWO), pin_unit=pin)
        return sorted(tuple(c.at(M, X).table for M, X in c.cells()) for c in found)

    assert tables(True) == tables(False)


@pytest.mark.parametrize("F", [Writer(TWO), MAYBE])
def test_unit_pinning_loses_nothing_for_strengths(F, small):
    def tables(pin):
        found = enumerate_strengths(F, CART, small, (ONE, TWO), pin_unit=pin)
        return sorted(tuple(c.at(M, X).table for M, X in c.cells()) for c in found)

    assert tables(True) == tables(False)


def test_identity_costrength_is_lawful(small):
    assert check_costrength(identity_costrength(CART, small)).passed
    assert check_costrength(identity_costrength(COCART, small)).passed


def test_uniqueness_square_holds_and_is_degenerate_for_products(default):
    w = writer_costrength(TWO, default)
    assert uniqueness_square_report(w).passed
    # every map into the terminal unit agrees, so even a broken family passes
    assert uniqueness_square_report(w.mutated(TWO, TWO)).passed


def test_phi_needs_the_cartesian_action(small):
    from costrength_lab.catalogue import writer_cocart_costrength

    with pytest.raises(ValueError):
        phi(writer_cocart_costrength(TWO, small))


def test_costrength_from_a_table():
    X = ONE
    comp = writer_costrength(TWO).at(ONE, X)
    c = Costrength(Writer(TWO), CART, grades=(ONE,), components={(ONE, X): comp})
    assert c.at(ONE, X) == comp
