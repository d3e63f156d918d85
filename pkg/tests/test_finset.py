import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from costrength_lab import finset as fs
from costrength_lab.config import SizeLimitExceeded, limits
from costrength_lab.finset import ONE, ZERO, FinFun, FinSet

A = FinSet(["a", "b"])
B = FinSet(["x", "y", "z"])


def test_product_is_first_factor_major():
    P = fs.product(A, B)
    assert P.labels[:4] == ("(a,x)", "(a,y)", "(a,z)", "(b,x)")
    assert fs.pi1(A, B).table == (0, 0, 0, 1, 1, 1)
    assert fs.pi2(A, B).table == (0, 1, 2, 0, 1, 2)


def test_coproduct_labels_and_injections():
    S = fs.coproduct(A, ONE)
    assert S.labels == ("inl a", "inl b", "inr *")
    assert fs.copair(fs.identity(A), fs.constant(ONE, A, 0)).table == (0, 1, 0)


def test_exponential_order_first_position_most_significant():
    E = fs.exponential(A, A)
    assert len(E) == 4
    assert fs.fun_values(A, A, 1) == (0, 1)
    assert fs.fun_index(A, A, (1, 0)) == 2
    assert E.labels[0].startswith("fun{")


def test_powerset_bitmask_order():
    assert fs.powerset(A).labels == ("{}", "{a}", "{b}", "{a,b}")
    f = FinFun(A, ONE, [0, 0])
    assert fs.pow_map(f).table == (0, 1, 1, 1)


def test_labels_must_be_distinct_and_tables_total():
    with pytest.raises(ValueError):
        FinSet(["a", "a"])
    with pytest.raises(ValueError):
        FinFun(A, B, [0, 3])
    with pytest.raises(ValueError):
        FinFun(A, B, [0])


def test_size_cap_is_an_error_not_truncation():
    with limits(max_size=8):
        with pytest.raises(SizeLimitExceeded):
            fs.powerset(FinSet.of_size(4))


def test_empty_set_behaviour():
    assert len(fs.product(ZERO, A)) == 0
    assert len(list(fs.all_functions(ZERO, A))) == 1
    assert len(list(fs.all_functions(A, ZERO))) == 0


def test_inverse_of_bijection():
    s = fs.swap(A, B)
    assert fs.compose(fs.inverse(s), s) == fs.identity(fs.product(A, B))


def tables(dom, cod):
    return st.lists(st.integers(0, len(cod) - 1), min_size=len(dom), max_size=len(dom)).map(
        lambda t: FinFun(dom, cod, t)
    )


@settings(max_examples=60, deadline=None)
@given(tables(A, B), tables(B, A), tables(A, A))
def test_composition_is_associative(f, g, h):
    assert fs.compose(h, fs.compose(g, f)) == fs.compose(fs.compose(h, g), f)
    assert fs.compose(f, fs.identity(A)) == f


@settings(max_examples=60, deadline=None)
@given(tables(fs.product(A, B), A))
def test_curry_uncurry_round_trip(h):
    assert fs.uncurry(fs.curry(h, A, B), B, A) == h


@settings(max_examples=60, deadline=None)
@given(tables(A, B), tables(B, B))
def test_product_map_respects_projections(f, g):
    m = fs.product_map(f, g)
    assert fs.compose(fs.pi1(B, B), m) == fs.compose(f, fs.pi1(A, B))
    assert fs.compose(fs.pi2(B, B), m) == fs.compose(g, fs.pi2(A, B))
