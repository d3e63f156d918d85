import random

import pytest

from costrength_lab import finset as fs
from costrength_lab.actions import CART, COCART, OP_EXP
from costrength_lab.costrength import (
    canonical_strength,
    enumerate_costrengths,
    identity_costrength,
    identity_strength,
    writer_costrength,
)
from costrength_lab.finset import FinFun
from costrength_lab.functors import Universe, Writer, canonical
from costrength_lab.optics import (
    compose_optics,
    equivalent,
    identity_optic,
    lens_boundaries,
    lens_nf,
    make_optic,
    prism_nf,
    random_optic,
    representative_count,
    slide,
    slide_completeness_report,
    slide_completeness_sweep,
    transform_optic,
    transformer_functoriality_report,
)

ONE, TWO, THREE = canonical(1), canonical(2), canonical(3)
RESIDUALS = [canonical(n) for n in range(3)]


@pytest.mark.parametrize("a", [CART, COCART], ids=lambda a: a.name)
def test_identity_is_neutral(a):
    rng = random.Random(1)
    bd = (TWO, TWO, TWO, TWO)
    for _ in range(10):
        o = random_optic(a, bd, TWO, rng)
        assert equivalent(compose_optics(identity_optic(a, TWO, TWO), o), o)
        assert equivalent(compose_optics(o, identity_optic(a, TWO, TWO)), o)


def test_composition_is_associative_up_to_equivalence():
    rng = random.Random(2)
    bd = (TWO, TWO, TWO, TWO)
    for _ in range(10):
        o1, o2, o3 = (random_optic(CART, bd, rng.choice(RESIDUALS[1:]), rng) for _ in range(3))
        assert equivalent(compose_optics(o3, compose_optics(o2, o1)), compose_optics(compose_optics(o3, o2), o1))


def test_lens_normal_form_is_get_and_put():
    # residual M = X', fwd = copy-and-project, bwd = put
    X = TWO
    fwd = fs.pair(fs.identity(X), fs.identity(X))
    put = FinFun(fs.product(X, X), X, [1, 0, 0, 1])
    nf = lens_nf(make_optic(CART, X, fwd, put, X, X))
    assert nf.get == fs.identity(X)
    assert nf.put == put


def test_prism_normal_form():
    o = identity_optic(COCART, TWO, TWO)
    nf = prism_nf(o)
    assert nf.build == fs.identity(TWO)
    assert nf.match == fs.inr(TWO, TWO)


def test_normal_forms_need_the_right_action():
    with pytest.raises(ValueError):
        prism_nf(identity_optic(CART, TWO, TWO))
    with pytest.raises(ValueError):
        lens_nf(identity_optic(OP_EXP, TWO, TWO))


def test_a_slide_relates_equivalent_optics():
    rng = random.Random(3)
    for r in CART.grade_arrows(TWO, THREE):
        f = random_optic(CART, (TWO, TWO, TWO, TWO), TWO, rng).fwd
        b = random_optic(CART, (TWO, TWO, TWO, TWO), THREE, rng).bwd
        left, right = slide(CART, r, f, b, TWO, TWO)
        assert equivalent(left, right)


def test_boundary_mismatch_is_rejected():
    with pytest.raises(ValueError):
        compose_optics(identity_optic(CART, TWO, TWO), identity_optic(CART, THREE, TWO))
    with pytest.raises(ValueError):
        compose_optics(identity_optic(CART, TWO, TWO), identity_optic(COCART, TWO, TWO))


@pytest.mark.parametrize("a", [CART, COCART], ids=lambda a: a.name)
def test_normal_forms_are_complete_on_small_boundaries(a):
    for bd in lens_boundaries((1, 2)):
        rep = slide_completeness_report(a, bd, RESIDUALS)
        assert rep.passed, rep.render()


def test_sweep_skips_boundaries_over_the_cap():
    bds = [(TWO, TWO, TWO, TWO), (THREE, THREE, THREE, THREE)]
    assert representative_count(CART, bds[0], RESIDUALS) <= 1000 < representative_count(CART, bds[1], RESIDUALS)
    rep = slide_completeness_sweep(CART, bds, RESIDUALS, max_representatives=1000)
    assert rep.ok
    assert len(rep.skipped) == 1


def test_identity_transformer_is_the_identity():
    u = Universe.of_sizes((0, 1, 2))
    rng = random.Random(4)
    o = random_optic(CART, (TWO, TWO, TWO, TWO), TWO, rng)
    t = transform_optic(identity_costrength(CART, u), identity_strength(CART, u), o)
    assert equivalent(t, o)


def test_transformer_is_functorial():
    u = Universe.of_sizes((0, 1, 2, 3))
    F = Writer(TWO)
    (cst,) = enumerate_costrengths(F, universe=u)
    st = canonical_strength(F, u)
    rep = transformer_functoriality_report(cst, st, lens_boundaries((1, 2)), RESIDUALS)
    assert rep.passed, rep.render()
    assert rep.find("composition").checked > 0


def test_a_mutated_strength_breaks_the_transformer():
    u = Universe.of_sizes((0, 1, 2, 3))
    F = Writer(TWO)
    cst = writer_costrength(TWO, u)
    st = canonical_strength(F, u).mutated(TWO, TWO, 0)
    rep = transformer_functoriality_report(cst, st, lens_boundaries((1, 2)), RESIDUALS)
    assert not rep.ok
