"""Adjunctions, mates of (co)strengths, and the free costrong functor on a grade."""

from __future__ import annotations

from dataclasses import dataclass

from . import finset as fs
from .actions import CART
from .costrength import (
    Costrength,
    Strength,
    _compare,
    check_costrength,
    check_costrong_nat,
    check_strength,
    enumerate_costrengths,
    writer_costrength,
)
from .finset import ONE, FinFun, FinSet
from .functors import (
    ID,
    CompF,
    FunctorExpr,
    NatFamily,
    Reader,
    Universe,
    Writer,
    apply_mor,
    apply_obj,
    default_universe,
    enumerate_nat,
    set_syntax,
)
from .report import LawReport, require


@dataclass
class AdjunctionModel:
    left: FunctorExpr
    right: FunctorExpr
    unit: NatFamily  # Id => right . left
    counit: NatFamily  # left . right => Id
    name: str = ""


def writer_reader_adjunction(S: FinSet) -> AdjunctionModel:
    """``S x - -| [S, -]`` with ``eta(x) = s -> (s, x)`` and ``eps(s, g) = g(s)``."""
    L, R = Writer(S), Reader(S)
    ns = len(S)

    def unit(X: FinSet) -> FinFun:
        SX = fs.product(S, X)
        nx = len(X)
        table = tuple(fs.fun_index(S, SX, [s * nx + x for s in range(ns)]) for x in range(nx))
        return FinFun._raw(X, apply_obj(CompF(R, L), X), table)

    def counit(Y: FinSet) -> FinFun:
        E = fs.exponential(S, Y)
        table = tuple(fs.fun_values(S, Y, g)[s] for s in range(ns) for g in range(len(E)))
        return FinFun._raw(apply_obj(CompF(L, R), Y), Y, table)

    return AdjunctionModel(L, R, NatFamily(ID, CompF(R, L), rule=unit, name="eta"),
                           NatFamily(CompF(L, R), ID, rule=counit, name="eps"),
                           name=f"Writer({set_syntax(S)}) -| Reader({set_syntax(S)})")


def identity_adjunction() -> AdjunctionModel:
    ident = NatFamily(ID, CompF(ID, ID), rule=fs.identity, name="id")
    back = NatFamily(CompF(ID, ID), ID, rule=fs.identity, name="id")
    return AdjunctionModel(ID, ID, ident, back, name="Id -| Id")


def check_triangles(adj: AdjunctionModel, universe: Universe | None = None) -> LawReport:
    u = universe or default_universe()
    L, R = adj.left, adj.right
    rep = LawReport(f"triangle identities for {adj.name}")
    for X in u:
        LX = apply_obj(L, X)
        lhs = fs.compose(adj.counit.at(LX), apply_mor(L, adj.unit.at(X)))
        if _compare(rep, lhs, fs.identity(LX), triangle="left", X=X):
            return rep
        RX = apply_obj(R, X)
        lhs = fs.compose(apply_mor(R, adj.counit.at(X)), adj.unit.at(RX))
        if _compare(rep, lhs, fs.identity(RX), triangle="right", X=X):
            return rep
    return rep


def mate_left(adj: AdjunctionModel, st: Strength, validate: bool = True) -> Costrength:
    """A costrength on the left adjoint from a strength on the right adjoint.

    ``L(M.X) -> L(M.RL X) -> L R(M.L X) -> M.L X``.
    """
    if st.functor != adj.right:
        raise ValueError(f"the strength must be on {adj.right}")
    if validate:
        require(check_triangles(adj, st.universe))
        require(check_strength(st))
    a, L = st.action, adj.left

    def rule(M: FinSet, X: FinSet) -> FinFun:
        LX = apply_obj(L, X)
        return fs.compose_all(
            adj.counit.at(a.act_obj(M, LX)),
            apply_mor(L, st.at(M, LX)),
            apply_mor(L, a.act_id(M, adj.unit.at(X))),
        )

    return Costrength(L, a, st.universe, st.grades, rule=rule, name=f"mate({st.name})")


def mate_right(adj: AdjunctionModel, cst: Costrength, validate: bool = True) -> Strength:
    """``M.R Y -> R L(M.R Y) -> R(M.L R Y) -> R(M.Y)``."""
    if cst.functor != adj.left:
        raise ValueError(f"the costrength must be on {adj.left}")
    if validate:
        require(check_triangles(adj, cst.universe))
        require(check_costrength(cst))
    a, R = cst.action, adj.right

    def rule(M: FinSet, Y: FinSet) -> FinFun:
        RY = apply_obj(R, Y)
        return fs.compose_all(
            apply_mor(R, a.act_id(M, adj.counit.at(Y))),
            apply_mor(R, cst.at(M, RY)),
            adj.unit.at(a.act_obj(M, RY)),
        )

    return Strength(R, a, cst.universe, cst.grades, rule=rule, name=f"mate({cst.name})")


# -- M0 x - as the free costrong functor on a point of F(1) ---------------------


def transpose_forward(alpha: NatFamily, M0: FinSet) -> FinFun:
    """``alpha |-> alpha_1 . (m -> (m, *))``."""
    return fs.compose(alpha.at(ONE), fs.inverse(fs.pi1(M0, ONE)))


def transpose_backward(h: FinFun, M0: FinSet, F: FunctorExpr) -> NatFamily:
    """``h |-> ((m, x) -> F(* -> x)(h(m)))``."""

    def rule(X: FinSet) -> FinFun:
        table = []
        for m in range(len(M0)):
            for x in range(len(X)):
                table.append(apply_mor(F, fs.point(X, x)).table[h.table[m]])
        return FinFun._raw(fs.product(M0, X), apply_obj(F, X), tuple(table))

    return NatFamily(Writer(M0), F, rule=rule, name=f"transpose({h.describe()})")


def hom_bijection_report(M0: FinSet, F: FunctorExpr, universe: Universe | None = None, grades=None,
                         budget: int | None = None) -> LawReport:
    """Costrong maps ``(M0 x -, symmetry) => (F, c)`` against functions ``M0 -> F(1)``, per costrength ``c``."""
    u = universe or default_universe()
    rep = LawReport(f"costrong maps from {set_syntax(M0)} x - into {F}")
    sym = writer_costrength(M0, u, grades)
    costrengths = list(enumerate_costrengths(F, CART, u, grades, budget))
    naturals = list(enumerate_nat(Writer(M0), F, u, budget=budget))
    rep.counts.update(costrengths=len(costrengths), natural_maps=len(naturals))
    F1 = apply_obj(F, ONE)
    points = list(fs.all_functions(M0, F1))
    per = []
    for c in costrengths:
        sub = rep.add(LawReport(f"against costrength {c.name}"))
        costrong = [al for al in naturals if check_costrong_nat(al, sym, c).ok]
        sub.counts.update(costrong_maps=len(costrong), functions=len(points))
        per.append({"costrength": c.name, "costrong_maps": len(costrong), "functions": len(points)})
        sub.checked += 1
        if len(costrong) != len(points):
            sub.fail(reason="counts differ", costrong_maps=len(costrong), functions=len(points))
            continue
        for h in points:
            back = transpose_backward(h, M0, F)
            sub.checked += 2
            if not check_costrong_nat(back, sym, c).ok:
                sub.fail(reason="transpose is not costrong", h=h.describe())
                break
            if transpose_forward(back, M0) != h:
                sub.fail(reason="forward . backward is not the identity", h=h.describe())
                break
        for al in costrong:
            sub.checked += 1
            back = transpose_backward(transpose_forward(al, M0), M0, F)
            if not all(back.at(X) == al.at(X) for X in u):
                sub.fail(reason="backward . forward is not the identity", alpha=al.name)
                break
    rep.counts["per_costrength"] = per
    return rep
