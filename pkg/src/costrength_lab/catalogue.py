"""Concrete costrengths: cocartesian ones, the exponential formula, copowers,
coproducts of costrong functors, cofree copointed functors and comonads."""

from __future__ import annotations

from typing import Sequence

from . import finset as fs
from .config import SizeLimitExceeded
from .actions import CART, COCART, OP_EXP, _maybe_join
from .costrength import (
    Copoint,
    Costrength,
    canonical_strength,
    check_costrength,
    psi,
)
from .finset import FinFun, FinSet
from .functors import (
    ID,
    MAYBE,
    POW,
    CompF,
    ConstF,
    CoprodF,
    Costate,
    FunctorExpr,
    NatFamily,
    ProdF,
    Universe,
    Writer,
    apply_mor,
    apply_obj,
    check_natural,
    default_universe,
    set_syntax,
)
from .report import LawReport, require


# -- cocartesian action ---------------------------------------------------------


def powerset_cocart_costrength(universe: Universe | None = None, grades=None) -> Costrength:
    """``P(M + X) -> M + P(X)``: keep the ``X`` part and forget every element of ``M``."""

    def rule(M: FinSet, X: FinSet) -> FinFun:
        nm = len(M)
        dom = fs.powerset(fs.coproduct(M, X))
        cod = fs.coproduct(M, fs.powerset(X))
        return FinFun._raw(dom, cod, tuple(nm + (U >> nm) for U in range(len(dom))))

    return Costrength(POW, COCART, universe, grades, rule=rule, name="forget M")


def powerset_filter() -> NatFamily:
    """``P(1 + X) -> P(X)``, dropping the point."""
    F = POW
    return NatFamily(
        CompF(F, MAYBE), F, name="drop nothing",
        rule=lambda X: FinFun._raw(apply_obj(CompF(F, MAYBE), X), fs.powerset(X),
                                   tuple(U >> 1 for U in range(2 ** (len(X) + 1)))),
    )


def const_filter(A: FinSet) -> NatFamily:
    F = ConstF(A)
    return NatFamily(CompF(F, MAYBE), F, rule=lambda X: fs.identity(A), name="id")


def maybe_filter() -> NatFamily:
    return NatFamily(CompF(MAYBE, MAYBE), MAYBE, rule=_maybe_join, name="join")


def filtrable_costrength(F: FunctorExpr, filt: NatFamily, universe: Universe | None = None, grades=None) -> Costrength:
    """``F(M + X) -> F(1 + X) -> F(X) -> M + F(X)`` from a filter ``F . Maybe => F``."""
    u = universe or default_universe()
    if filt.source != CompF(F, MAYBE) or filt.target != F:
        raise ValueError(f"a filter for {F} must be {F} . Maybe => {F}")
    require(check_natural(filt, u))

    def rule(M: FinSet, X: FinSet) -> FinFun:
        collapse = fs.coproduct_map(fs.bang(M), fs.identity(X))
        return fs.compose_all(fs.inr(M, apply_obj(F, X)), filt.at(X), apply_mor(F, collapse))

    return Costrength(F, COCART, u, grades, rule=rule, name=f"filter {filt.name}")


def writer_cocart_costrength(S: FinSet, universe: Universe | None = None, grades=None) -> Costrength:
    """``(s, inl m) -> inl m`` and ``(s, inr x) -> inr (s, x)``."""

    def rule(M: FinSet, X: FinSet) -> FinFun:
        nm, nx = len(M), len(X)
        table = []
        for s in range(len(S)):
            table.extend(range(nm))
            table.extend(nm + s * nx + x for x in range(nx))
        return FinFun._raw(fs.product(S, fs.coproduct(M, X)), fs.coproduct(M, fs.product(S, X)), tuple(table))

    return Costrength(Writer(S), COCART, universe, grades, rule=rule, name="drop S on M")


# -- exponential action of the opposite category ----------------------------


def op_exponential_costrength(F: FunctorExpr, universe: Universe | None = None, grades=None) -> Costrength:
    """``cst(t)(m) = F(ev_m)(t)``."""

    def rule(M: FinSet, X: FinSet) -> FinFun:
        FX = apply_obj(F, X)
        evs = [apply_mor(F, fs.eval_at(M, X, m)).table for m in range(len(M))]
        dom = apply_obj(F, fs.exponential(M, X))
        return FinFun._raw(dom, fs.exponential(M, FX),
                           tuple(fs.fun_index(M, FX, [e[t] for e in evs]) for t in range(len(dom))))

    return Costrength(F, OP_EXP, universe, grades, rule=rule, name="evaluate")


def exponential_mate_costrength(F: FunctorExpr, universe: Universe | None = None, grades=None) -> Costrength:
    """The same costrength, as the transpose of ``F(ev) . st`` under ``M x - -| [M, -]``."""
    st = canonical_strength(F, universe, grades)

    def rule(M: FinSet, X: FinSet) -> FinFun:
        E = fs.exponential(M, X)
        FE, FX = apply_obj(F, E), apply_obj(F, X)
        # M x F[M,X] -> F(M x [M,X]) -> F(X), with ev taking (m, t) to t(m)
        ev = fs.compose(fs.eval_map(M, X), fs.swap(M, E))
        body = fs.compose(apply_mor(F, ev), st.at(M, E))
        nf = len(FE)
        table = tuple(fs.fun_index(M, FX, [body.table[m * nf + t] for m in range(len(M))]) for t in range(nf))
        return FinFun._raw(FE, fs.exponential(M, FX), table)

    return Costrength(F, OP_EXP, universe, grades, rule=rule, name="mate of canonical strength")


# -- copowers -------------------------------------------------------------------


def copower_costrength(S: FinSet, G: FunctorExpr, universe: Universe | None = None) -> NatFamily:
    """``S x G(X) -> G(S x X)``, ``(s, w) -> G(x -> (s, x))(w)``."""
    src = ProdF(ConstF(S), G)
    tgt = CompF(G, Writer(S))

    def rule(X: FinSet) -> FinFun:
        SX = fs.product(S, X)
        nx = len(X)
        table = []
        for s in range(len(S)):
            inj = FinFun._raw(X, SX, tuple(s * nx + x for x in range(nx)))
            table.extend(apply_mor(G, inj).table)
        return FinFun._raw(apply_obj(src, X), apply_obj(tgt, X), tuple(table))

    return NatFamily(src, tgt, rule=rule, universe=universe or default_universe(), name=f"copower {G}")


def copower_report(S: FinSet, functors: Sequence[FunctorExpr], universe: Universe | None = None) -> LawReport:
    """Naturality, compatibility with projection, and compatibility with composing functors.

    ``functors`` is the finite list standing in for all endofunctors; the
    report names it.
    """
    u = universe or default_universe()
    rep = LawReport(f"copower distributive law of {fs_name(S)} over listed functors")
    rep.counts["functors"] = [str(G) for G in functors]
    for G in functors:
        d = copower_costrength(S, G, u)
        rep.add(check_natural(d, u))
        proj = rep.add(LawReport(f"projection compatibility for {G}"))
        for X in u:
            proj.checked += 1
            lhs = fs.compose(apply_mor(G, fs.pi2(S, X)), d.at(X))
            if lhs != fs.pi2(S, apply_obj(G, X)):
                proj.fail(X=str(X))
                break
    for G in functors:
        for H in functors:
            comp = rep.add(LawReport(f"composition compatibility for {G} . {H}"))
            dG, dH, dGH = (copower_costrength(S, K, u) for K in (G, H, CompF(G, H)))
            for X in u:
                try:
                    rhs = fs.compose(apply_mor(G, dH.at(X)), dG.at(apply_obj(H, X)))
                    lhs = dGH.at(X)
                except SizeLimitExceeded as exc:
                    comp.skip(f"X={X}: {exc}")
                    continue
                comp.checked += 1
                if lhs != rhs:
                    comp.fail(X=str(X))
                    break
    return rep


def fs_name(S: FinSet) -> str:
    return set_syntax(S)


# -- coproducts -----------------------------------------------------------------


def coproduct_costrong(c1: Costrength, c2: Costrength, validate: bool = True) -> Costrength:
    """Costrength on ``F + G`` from costrengths on ``F`` and ``G`` over one action."""
    if c1.action.name != c2.action.name:
        raise ValueError("both costrengths must be over the same action")
    if validate:
        for c in (c1, c2):
            require(check_costrength(c))
    a = c1.action
    F, G = c1.functor, c2.functor

    def rule(M: FinSet, X: FinSet) -> FinFun:
        FX, GX = apply_obj(F, X), apply_obj(G, X)
        left = fs.compose(a.act_id(M, fs.inl(FX, GX)), c1.at(M, X))
        right = fs.compose(a.act_id(M, fs.inr(FX, GX)), c2.at(M, X))
        return fs.copair(left, right)

    return Costrength(CoprodF(F, G), a, c1.universe, c1.grades, rule=rule, name=f"{c1.name}+{c2.name}")


def injections(F: FunctorExpr, G: FunctorExpr) -> tuple[NatFamily, NatFamily]:
    S = CoprodF(F, G)
    left = NatFamily(F, S, rule=lambda X: fs.inl(apply_obj(F, X), apply_obj(G, X)), name="inl")
    right = NatFamily(G, S, rule=lambda X: fs.inr(apply_obj(F, X), apply_obj(G, X)), name="inr")
    return left, right


# -- copointed and comonadic functors ---------------------------------------------


def cofree_copointed(F: FunctorExpr) -> tuple[FunctorExpr, Copoint]:
    """``Id x F`` with the first projection."""
    G = ProdF(ID, F, alias=f"Id x {F}")
    eps = NatFamily(G, ID, rule=lambda X: fs.pi1(X, apply_obj(F, X)), universe=default_universe(), name="pi1")
    return G, Copoint(G, eps)


class Comonad:
    def __init__(self, functor: FunctorExpr, counit: NatFamily, comult: NatFamily, name: str):
        self.functor, self.counit, self.comult, self.name = functor, counit, comult, name

    def copoint(self) -> Copoint:
        return Copoint(self.functor, self.counit, name="counit")


def writer_comonad(S: FinSet) -> Comonad:
    F = Writer(S)

    def comult(X: FinSet) -> FinFun:
        SX = fs.product(S, X)
        n = len(SX)
        nx = len(X)
        return FinFun._raw(SX, apply_obj(CompF(F, F), X), tuple((i // nx) * n + i for i in range(n)))

    return Comonad(
        F,
        NatFamily(F, ID, rule=lambda X: fs.pi2(S, X), name="counit"),
        NatFamily(F, CompF(F, F), rule=comult, name="duplicate"),
        name=f"Writer({fs_name(S)})",
    )


def costate_comonad(S: FinSet) -> Comonad:
    F = Costate(S)
    ns = len(S)

    def counit(X: FinSet) -> FinFun:
        E = fs.exponential(S, X)
        table = []
        for s in range(ns):
            for t in range(len(E)):
                table.append(fs.fun_values(S, X, t)[s])
        return FinFun._raw(apply_obj(F, X), X, tuple(table))

    def comult(X: FinSet) -> FinFun:
        FX = apply_obj(F, X)
        E = fs.exponential(S, X)
        ne = len(E)
        inner = fs.exponential(S, FX)
        table = []
        for s in range(ns):
            for t in range(ne):
                k = fs.fun_index(S, FX, [s2 * ne + t for s2 in range(ns)])
                table.append(s * len(inner) + k)
        return FinFun._raw(FX, apply_obj(CompF(F, F), X), tuple(table))

    return Comonad(F, NatFamily(F, ID, rule=counit, name="extract"),
                   NatFamily(F, CompF(F, F), rule=comult, name="duplicate"), name=f"Costate({fs_name(S)})")


def check_comonad_laws(w: Comonad, universe: Universe | None = None) -> LawReport:
    u = universe or default_universe()
    F = w.functor
    rep = LawReport(f"comonad laws for {w.name}")
    rep.add(check_natural(w.counit, u))
    rep.add(check_natural(w.comult, u))
    for X in u:
        FX = apply_obj(F, X)
        d = w.comult.at(X)
        rep.checked += 2
        if fs.compose(w.counit.at(FX), d) != fs.identity(FX):
            return rep.fail(law="left counit", X=str(X))
        if fs.compose(apply_mor(F, w.counit.at(X)), d) != fs.identity(FX):
            return rep.fail(law="right counit", X=str(X))
        try:
            lhs, rhs = fs.compose(w.comult.at(FX), d), fs.compose(apply_mor(F, d), d)
        except SizeLimitExceeded as exc:
            rep.skip(f"coassociativity at X={X}: {exc}")
            continue
        rep.checked += 1
        if lhs != rhs:
            return rep.fail(law="coassociativity", X=str(X))
    return rep


def comonad_costrength_report(w: Comonad, universe: Universe | None = None, grades=None) -> LawReport:
    """The counit as a copoint gives a costrength; counit and comultiplication are costrong for it."""
    from .costrength import check_costrong_nat, compose_costrength, identity_costrength

    u = universe or default_universe()
    rep = LawReport(f"comonad {w.name} is costrong")
    rep.add(check_comonad_laws(w, u))
    c = psi(w.copoint(), u, grades)
    rep.add(check_costrength(c))
    rep.add(check_costrong_nat(w.counit, c, identity_costrength(CART, u, grades)))
    rep.add(check_costrong_nat(w.comult, c, compose_costrength(c, c)))
    return rep


def copoint_from_mutation(p: Copoint, X: FinSet, index: int = 0) -> Copoint:
    """A copoint with one component entry changed; usually no longer natural."""
    return Copoint(p.functor, p.epsilon.with_component(X, fs.mutate(p.at(X), index)), name=f"{p.name}*")


__all__ = [
    "powerset_cocart_costrength", "powerset_filter", "const_filter", "maybe_filter", "filtrable_costrength",
    "writer_cocart_costrength", "op_exponential_costrength", "exponential_mate_costrength",
    "copower_costrength", "copower_report", "coproduct_costrong", "injections", "cofree_copointed",
    "Comonad", "writer_comonad", "costate_comonad", "check_comonad_laws", "comonad_costrength_report",
    "copoint_from_mutation",
]
