import pytest

from costrength_lab.adjunction import (
    check_triangles,
    hom_bijection_report,
    identity_adjunction,
    mate_left,
    mate_right,
    transpose_backward,
    transpose_forward,
    writer_reader_adjunction,
)
from costrength_lab.config import limits
from costrength_lab.costrength import (
    canonical_strength,
    check_costrength,
    identity_costrength,
    identity_strength,
    writer_costrength,
)
from costrength_lab.finset import ONE, ZERO
from costrength_lab.functors import Reader, Writer, canonical
from costrength_lab.report import LawViolation

TWO = canonical(2)


def test_triangles(default):
    for S in (ONE, TWO):
        assert check_triangles(writer_reader_adjunction(S), default).passed
    assert check_triangles(identity_adjunction(), default).passed


@pytest.mark.parametrize("S", [ONE, TWO], ids=["1", "2"])
def test_mate_of_reader_strength_is_the_symmetry(S, small):
    adj = writer_reader_adjunction(S)
    st = canonical_strength(Reader(S), small)
    c = mate_left(adj, st)
    assert c.same_as(writer_costrength(S, small))
    assert mate_right(adj, c).same_as(st)


def test_mates_on_the_default_universe_need_a_larger_cap(default):
    adj = writer_reader_adjunction(TWO)
    st = canonical_strength(Reader(TWO), default)
    with limits(max_size=2**14):
        assert mate_left(adj, st).same_as(writer_costrength(TWO, default))


def test_identity_adjunction_mates(small):
    c = mate_left(identity_adjunction(), identity_strength(universe=small))
    assert c.same_as(identity_costrength(universe=small))


def test_mate_validates_its_input(small):
    adj = writer_reader_adjunction(TWO)
    st = canonical_strength(Reader(TWO), small)
    with pytest.raises(LawViolation):
        mate_left(adj, st.mutated(TWO, TWO))
    with pytest.raises(ValueError):
        mate_left(adj, canonical_strength(Writer(TWO), small))


@pytest.mark.parametrize("M0", [ZERO, ONE, TWO], ids=["0", "1", "2"])
@pytest.mark.parametrize("F", [Writer(TWO), Reader(TWO)], ids=str)
def test_hom_bijection(M0, F, default):
    rep = hom_bijection_report(M0, F, default)
    assert rep.passed, rep.render()
    for row in rep.counts["per_costrength"]:
        assert row["costrong_maps"] == row["functions"]


def test_transposes_are_inverse_on_a_point():
    from costrength_lab import finset as fs
    from costrength_lab.functors import apply_obj

    F = Writer(TWO)
    h = fs.FinFun(TWO, apply_obj(F, ONE), [1, 0])
    assert transpose_forward(transpose_backward(h, TWO, F), TWO) == h
