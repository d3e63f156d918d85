"""Monoidal actions on finite sets and the graded Maybe monad.

An :class:`ActionModel` bundles the grade tensor, the action on objects and
maps, and the structural isomorphisms.  Grade arrows are always passed as
plain finite functions; for a contravariant grading (the exponential action of
``Set^op``) a grade arrow ``M -> N`` is a function ``N -> M``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterator

from . import finset as fs
from .finset import ONE, ZERO, FinFun, FinSet
from .functors import (
    ID,
    MAYBE,
    ConstF,
    FunctorExpr,
    NatFamily,
    Universe,
    apply_mor,
    apply_obj,
    check_natural,
    enumerate_nat,
    horizontal,
    identity_family,
)
from .report import LawReport

COVARIANT, CONTRAVARIANT = "covariant", "contravariant"


@dataclass(frozen=True)
class ActionModel:
    name: str
    grade_unit: FinSet
    grade_tensor: Callable[[FinSet, FinSet], FinSet]
    grade_tensor_mor: Callable[[FinFun, FinFun], FinFun]
    grade_assoc: Callable[[FinSet, FinSet, FinSet], FinFun]
    grade_lunitor: Callable[[FinSet], FinFun]
    grade_runitor: Callable[[FinSet], FinFun]
    act_obj: Callable[[FinSet, FinSet], FinSet]
    act_mor: Callable[[FinFun, FinFun], FinFun]
    associator: Callable[[FinSet, FinSet, FinSet], FinFun]
    associator_inv: Callable[[FinSet, FinSet, FinSet], FinFun]
    unitor: Callable[[FinSet], FinFun]
    unitor_inv: Callable[[FinSet], FinFun]
    variance: str = COVARIANT
    regular: bool = field(default=False)

    def grade_arrows(self, M: FinSet, N: FinSet) -> Iterator[FinFun]:
        """All grade arrows ``M -> N``, as finite functions."""
        if self.variance == CONTRAVARIANT:
            return fs.all_functions(N, M)
        return fs.all_functions(M, N)

    def grade_source(self, g: FinFun) -> FinSet:
        return g.cod if self.variance == CONTRAVARIANT else g.dom

    def grade_target(self, g: FinFun) -> FinSet:
        return g.dom if self.variance == CONTRAVARIANT else g.cod

    def act_id(self, M: FinSet, f: FinFun) -> FinFun:
        """``id_M . f``."""
        return self.act_mor(fs.identity(M), f)

    def act_grade(self, g: FinFun, X: FinSet) -> FinFun:
        """``g . id_X``."""
        return self.act_mor(g, fs.identity(X))

    def __str__(self) -> str:
        return self.name


def _cartesian() -> ActionModel:
    return ActionModel(
        name="cart",
        grade_unit=ONE,
        grade_tensor=fs.product,
        grade_tensor_mor=fs.product_map,
        grade_assoc=fs.assoc_right,
        grade_lunitor=lambda M: fs.pi2(ONE, M),
        grade_runitor=lambda M: fs.pi1(M, ONE),
        act_obj=fs.product,
        act_mor=fs.product_map,
        associator=fs.assoc_right,
        associator_inv=lambda M, N, X: fs.inverse(fs.assoc_right(M, N, X)),
        unitor=lambda X: fs.pi2(ONE, X),
        unitor_inv=lambda X: fs.inverse(fs.pi2(ONE, X)),
        regular=True,
    )


def _cocartesian() -> ActionModel:
    def unitor(X: FinSet) -> FinFun:
        return fs.copair(fs.initial_arrow(X), fs.identity(X))

    return ActionModel(
        name="cocart",
        grade_unit=ZERO,
        grade_tensor=fs.coproduct,
        grade_tensor_mor=fs.coproduct_map,
        grade_assoc=fs.coassoc_right,
        grade_lunitor=unitor,
        grade_runitor=lambda M: fs.copair(fs.identity(M), fs.initial_arrow(M)),
        act_obj=fs.coproduct,
        act_mor=fs.coproduct_map,
        associator=fs.coassoc_right,
        associator_inv=lambda M, N, X: fs.inverse(fs.coassoc_right(M, N, X)),
        unitor=unitor,
        unitor_inv=lambda X: fs.inverse(unitor(X)),
        regular=True,
    )


def curry_iso(M: FinSet, N: FinSet, X: FinSet) -> FinFun:
    """``[M x N, X] -> [M, [N, X]]``."""
    src = fs.exponential(fs.product(M, N), X)
    inner = fs.exponential(N, X)
    nn = len(N)
    table = []
    for t in range(len(src)):
        vals = fs.fun_values(fs.product(M, N), X, t)
        outer = [fs.fun_index(N, X, vals[m * nn:(m + 1) * nn]) for m in range(len(M))]
        table.append(fs.fun_index(M, inner, outer))
    return FinFun._raw(src, fs.exponential(M, inner), tuple(table))


def _op_exponential() -> ActionModel:
    def unitor(X: FinSet) -> FinFun:
        return fs.eval_at(ONE, X, 0)

    return ActionModel(
        name="op-exp",
        grade_unit=ONE,
        grade_tensor=fs.product,
        grade_tensor_mor=fs.product_map,
        grade_assoc=lambda M, N, P: fs.inverse(fs.assoc_right(M, N, P)),
        grade_lunitor=lambda M: fs.inverse(fs.pi2(ONE, M)),
        grade_runitor=lambda M: fs.inverse(fs.pi1(M, ONE)),
        act_obj=fs.exponential,
        act_mor=fs.hom_map,
        associator=curry_iso,
        associator_inv=lambda M, N, X: fs.inverse(curry_iso(M, N, X)),
        unitor=unitor,
        unitor_inv=lambda X: fs.inverse(unitor(X)),
        variance=CONTRAVARIANT,
    )


CART = _cartesian()
COCART = _cocartesian()
OP_EXP = _op_exponential()
ACTIONS = {a.name: a for a in (CART, COCART, OP_EXP)}


def with_corrupted_associator(a: ActionModel, M: FinSet, N: FinSet, X: FinSet, i: int = 0, j: int = 1) -> ActionModel:
    """The same action with two entries of one associator component swapped."""
    base = a.associator

    def associator(M2: FinSet, N2: FinSet, X2: FinSet) -> FinFun:
        comp = base(M2, N2, X2)
        if (M2, N2, X2) == (M, N, X):
            comp = fs.swap_entries(comp, i, j)
        return comp

    return replace(a, name=f"{a.name}*", associator=associator,
                   associator_inv=lambda M2, N2, X2: fs.inverse(associator(M2, N2, X2)))


def _diff(rep: LawReport, law: str, lhs: FinFun, rhs: FinFun, **where) -> bool:
    rep.checked += 1
    if lhs.table == rhs.table:
        return False
    w = next(i for i, (p, q) in enumerate(zip(lhs.table, rhs.table)) if p != q)
    rep.fail(law=law, element=lhs.dom.labels[w], lhs=lhs.cod.labels[lhs.table[w]],
             rhs=rhs.cod.labels[rhs.table[w]], **{k: str(v) for k, v in where.items()})
    return True


def check_action_coherence(a: ActionModel, universe: Universe, grades: Universe | list[FinSet]) -> LawReport:
    """Associator/unitor invertibility and naturality, pentagon and triangles."""
    gu = list(grades)
    rep = LawReport(f"action coherence for {a.name}")
    I = a.grade_unit
    for X in universe:
        lam, lam_inv = a.unitor(X), a.unitor_inv(X)
        rep.checked += 1
        if not fs.is_bijection(lam) or fs.compose(lam_inv, lam) != fs.identity(lam.dom):
            return rep.fail(law="unitor invertible", X=str(X))
        for Y in universe:
            for f in fs.all_functions(X, Y):
                if _diff(rep, "unitor naturality", fs.compose(f, lam), fs.compose(a.unitor(Y), a.act_id(I, f)), f=f.describe()):
                    return rep
    for M in gu:
        for N in gu:
            MN = a.grade_tensor(M, N)
            for X in universe:
                alpha = a.associator(M, N, X)
                rep.checked += 1
                if not fs.is_bijection(alpha) or fs.compose(a.associator_inv(M, N, X), alpha) != fs.identity(alpha.dom):
                    return rep.fail(law="associator invertible", M=str(M), N=str(N), X=str(X))
                for P in gu:
                    NP = a.grade_tensor(N, P)
                    lhs = fs.compose(a.associator(M, N, a.act_obj(P, X)), a.associator(MN, P, X))
                    rhs = fs.compose_all(
                        a.act_id(M, a.associator(N, P, X)),
                        a.associator(M, NP, X),
                        a.act_grade(a.grade_assoc(M, N, P), X),
                    )
                    if _diff(rep, "pentagon", lhs, rhs, M=M, N=N, P=P, X=X):
                        return rep
            for X in universe:
                lhs = fs.compose(a.act_id(M, a.unitor(X)), a.associator(M, I, X))
                if _diff(rep, "right triangle", lhs, a.act_grade(a.grade_runitor(M), X), M=M, X=X):
                    return rep
                lhs = fs.compose(a.unitor(a.act_obj(M, X)), a.associator(I, M, X))
                if _diff(rep, "left triangle", lhs, a.act_grade(a.grade_lunitor(M), X), M=M, X=X):
                    return rep
    for M in gu:
        for N in gu:
            MN = a.grade_tensor(M, N)
            for X in universe:
                alpha = a.associator(M, N, X)
                for Y in universe:
                    for f in fs.all_functions(X, Y):
                        lhs = fs.compose(a.act_id(M, a.act_id(N, f)), alpha)
                        rhs = fs.compose(a.associator(M, N, Y), a.act_id(MN, f))
                        if _diff(rep, "associator naturality in the object", lhs, rhs, M=M, N=N, f=f.describe()):
                            return rep
                for M2 in gu:
                    for g in a.grade_arrows(M, M2):
                        lhs = fs.compose(a.act_grade(g, a.act_obj(N, X)), alpha)
                        rhs = fs.compose(a.associator(M2, N, X), a.act_grade(a.grade_tensor_mor(g, fs.identity(N)), X))
                        if _diff(rep, "associator naturality in the first grade", lhs, rhs, M=M, N=N, X=X, g=g.describe()):
                            return rep
                for N2 in gu:
                    for h in a.grade_arrows(N, N2):
                        lhs = fs.compose(a.act_id(M, a.act_grade(h, X)), alpha)
                        rhs = fs.compose(a.associator(M, N2, X), a.act_grade(a.grade_tensor_mor(fs.identity(M), h), X))
                        if _diff(rep, "associator naturality in the second grade", lhs, rhs, M=M, N=N, X=X, h=h.describe()):
                            return rep
    return rep


# -- preordered monoids and graded monads ------------------------------------


@dataclass(frozen=True)
class PreorderedMonoid:
    elements: tuple[str, ...]
    leq_pairs: frozenset[tuple[str, str]]
    table: dict[tuple[str, str], str] = field(hash=False)
    unit: str

    def mult(self, x: str, y: str) -> str:
        return self.table[(x, y)]

    def leq(self, x: str, y: str) -> bool:
        return x == y or (x, y) in self.leq_pairs

    def check(self) -> LawReport:
        rep = LawReport("preordered monoid laws")
        E = self.elements
        for x in E:
            rep.checked += 2
            if self.mult(self.unit, x) != x or self.mult(x, self.unit) != x:
                return rep.fail(law="unit", x=x)
            for y in E:
                for z in E:
                    rep.checked += 1
                    if self.mult(self.mult(x, y), z) != self.mult(x, self.mult(y, z)):
                        return rep.fail(law="associativity", x=x, y=y, z=z)
                    if self.leq(x, y) and self.leq(y, z) and not self.leq(x, z):
                        return rep.fail(law="transitivity", x=x, y=y, z=z)
        for x in E:
            for x2 in E:
                for y in E:
                    for y2 in E:
                        if self.leq(x, x2) and self.leq(y, y2):
                            rep.checked += 1
                            if not self.leq(self.mult(x, y), self.mult(x2, y2)):
                                return rep.fail(law="monotonicity", x=x, x2=x2, y=y, y2=y2)
        return rep


@dataclass
class GradedMonad:
    """A lax monoidal functor from a preordered monoid into endofunctors.

    ``mult_cmp(x, y)`` is the multiplication ``T(x) . T(y) => T(x * y)``;
    ``unit_cmp`` is ``Id => T(e)``.
    """

    base: PreorderedMonoid
    at: dict[str, FunctorExpr]
    on_leq: Callable[[str, str], NatFamily]
    unit_cmp: NatFamily
    mult_cmp: Callable[[str, str], NatFamily]
    name: str = "graded monad"


def _maybe_join(X: FinSet) -> FinFun:
    # 1 + (1 + X) -> 1 + X
    n = len(X)
    return FinFun._raw(apply_obj(MAYBE, apply_obj(MAYBE, X)), apply_obj(MAYBE, X), (0, 0) + tuple(1 + i for i in range(n)))


def maybe_graded_monad() -> GradedMonad:
    """Grades failure ``f``, success ``s`` and maybe ``m``; ``T f = 1``, ``T s = Id``, ``T m = Maybe``."""
    E = ("f", "s", "m")
    table = {
        ("f", "f"): "f", ("f", "s"): "f", ("f", "m"): "f",
        ("s", "f"): "f", ("s", "s"): "s", ("s", "m"): "m",
        ("m", "f"): "f", ("m", "s"): "m", ("m", "m"): "m",
    }
    base = PreorderedMonoid(E, frozenset({("f", "m"), ("s", "m")}), table, "s")
    at = {"f": ConstF(ONE), "s": ID, "m": MAYBE}

    def on_leq(x: str, y: str) -> NatFamily:
        if x == y:
            return identity_family(at[x])
        if (x, y) == ("f", "m"):
            return NatFamily(at[x], at[y], rule=lambda X: fs.inl(ONE, X), name="f<=m")
        if (x, y) == ("s", "m"):
            return NatFamily(at[x], at[y], rule=lambda X: fs.inr(ONE, X), name="s<=m")
        raise ValueError(f"{x} is not below {y}")

    def mult_cmp(x: str, y: str) -> NatFamily:
        src = _comp(at[x], at[y])
        tgt = at[table[(x, y)]]
        if x == "f":
            rule = lambda X: fs.identity(ONE)  # noqa: E731
        elif x == "s" or y == "s":
            rule = lambda X: fs.identity(apply_obj(tgt, X))  # noqa: E731
        elif (x, y) == ("m", "f"):
            rule = lambda X: fs.bang(apply_obj(src, X))  # noqa: E731
        else:
            rule = _maybe_join
        return NatFamily(src, tgt, rule=rule, name=f"mu({x},{y})")

    return GradedMonad(base, at, on_leq, identity_family(ID), mult_cmp, name="graded Maybe")


def identity_graded_monad() -> GradedMonad:
    base = PreorderedMonoid(("e",), frozenset(), {("e", "e"): "e"}, "e")
    at = {"e": ID}
    return GradedMonad(
        base, at,
        on_leq=lambda x, y: identity_family(ID),
        unit_cmp=identity_family(ID),
        mult_cmp=lambda x, y: NatFamily(_comp(ID, ID), ID, rule=fs.identity, name="mu"),
        name="identity graded monad",
    )


def _comp(F: FunctorExpr, G: FunctorExpr) -> FunctorExpr:
    from .functors import CompF

    return CompF(F, G)


def check_graded_laws(g: GradedMonad, universe: Universe) -> LawReport:
    """Functoriality of the order action, naturality, lax associativity and unit.

    ``counts['iso']`` records, per pair of grades, whether the multiplication
    is invertible at every universe object.
    """
    rep = LawReport(f"{g.name} laws")
    B = g.base
    rep.add(B.check())
    E = B.elements
    T = g.at
    leq = [(x, y) for x in E for y in E if B.leq(x, y)]

    sub = rep.add(LawReport("order action functoriality"))
    for x in E:
        ident = identity_family(T[x])
        for X in universe:
            sub.checked += 1
            if g.on_leq(x, x).at(X) != ident.at(X):
                sub.fail(grade=x, X=str(X))
    for x, y in leq:
        for y2, z in leq:
            if y2 != y:
                continue
            for X in universe:
                sub.checked += 1
                if fs.compose(g.on_leq(y, z).at(X), g.on_leq(x, y).at(X)) != g.on_leq(x, z).at(X):
                    sub.fail(x=x, y=y, z=z, X=str(X))

    nat = rep.add(LawReport("naturality of structure maps"))
    for x, y in leq:
        nat.add(check_natural(g.on_leq(x, y), universe))
    nat.add(check_natural(g.unit_cmp, universe))
    for x in E:
        for y in E:
            nat.add(check_natural(g.mult_cmp(x, y), universe))

    gn = rep.add(LawReport("multiplication natural in the grades"))
    for x, x2 in leq:
        for y, y2 in leq:
            lhs_leq = g.on_leq(B.mult(x, y), B.mult(x2, y2))
            hor = horizontal(g.on_leq(x, x2), g.on_leq(y, y2))
            for X in universe:
                lhs = fs.compose(lhs_leq.at(X), g.mult_cmp(x, y).at(X))
                rhs = fs.compose(g.mult_cmp(x2, y2).at(X), hor.at(X))
                if _diff(gn, "grade naturality", lhs, rhs, x=x, x2=x2, y=y, y2=y2, X=X):
                    break

    assoc = rep.add(LawReport("lax associativity"))
    for x in E:
        for y in E:
            for z in E:
                xy, yz = B.mult(x, y), B.mult(y, z)
                for X in universe:
                    TzX = apply_obj(T[z], X)
                    lhs = fs.compose(g.mult_cmp(xy, z).at(X), g.mult_cmp(x, y).at(TzX))
                    rhs = fs.compose(g.mult_cmp(x, yz).at(X), apply_mor(T[x], g.mult_cmp(y, z).at(X)))
                    if _diff(assoc, "associativity", lhs, rhs, x=x, y=y, z=z, X=X):
                        break

    unit = rep.add(LawReport("lax unit"))
    e = B.unit
    for x in E:
        for X in universe:
            TxX = apply_obj(T[x], X)
            left = fs.compose(g.mult_cmp(e, x).at(X), g.unit_cmp.at(TxX))
            right = fs.compose(g.mult_cmp(x, e).at(X), apply_mor(T[x], g.unit_cmp.at(X)))
            if _diff(unit, "left unit", left, fs.identity(TxX), x=x, X=X):
                break
            if _diff(unit, "right unit", right, fs.identity(TxX), x=x, X=X):
                break

    iso = {}
    for x in E:
        for y in E:
            iso[f"{x}*{y}"] = all(fs.is_bijection(g.mult_cmp(x, y).at(X)) for X in universe)
    rep.counts["iso"] = iso
    rep.counts["non_iso"] = [k for k, v in iso.items() if not v]
    return rep


def colax_search_report(g: GradedMonad, universe: Universe) -> LawReport:
    """Look for comparisons ``T(x * y) => T(x) . T(y)`` natural in ``X`` and in the grades.

    Every natural candidate is enumerated per pair of grades, then all
    assignments are searched for one compatible with the order.  The report
    passes when no such assignment exists, i.e. the structure can only be lax.
    """
    B, T = g.base, g.at
    E = B.elements
    pairs = [(x, y) for x in E for y in E]
    cands = {p: list(enumerate_nat(T[B.mult(*p)], _comp(T[p[0]], T[p[1]]), universe)) for p in pairs}
    leq = [(x, y) for x in E for y in E if B.leq(x, y)]
    constraints = [((x, y), (x2, y2)) for x, x2 in leq for y, y2 in leq if (x, y) != (x2, y2)]
    rep = LawReport(f"colax comparisons for {g.name}")
    rep.counts["candidates"] = {f"{x}*{y}": len(cands[(x, y)]) for x, y in pairs}

    def compatible(lo, hi, d_lo: NatFamily, d_hi: NatFamily) -> bool:
        (x, y), (x2, y2) = lo, hi
        up = g.on_leq(B.mult(x, y), B.mult(x2, y2))
        hor = horizontal(g.on_leq(x, x2), g.on_leq(y, y2))
        for X in universe:
            rep.checked += 1
            if fs.compose(d_hi.at(X), up.at(X)) != fs.compose(hor.at(X), d_lo.at(X)):
                return False
        return True

    solutions = 0
    chosen: dict = {}

    def search(i: int) -> None:
        nonlocal solutions
        if i == len(pairs):
            solutions += 1
            return
        p = pairs[i]
        for d in cands[p]:
            chosen[p] = d
            if all(compatible(lo, hi, chosen[lo], chosen[hi]) for lo, hi in constraints
                   if p in (lo, hi) and lo in chosen and hi in chosen):
                search(i + 1)
            del chosen[p]

    search(0)
    rep.counts["solutions"] = solutions
    if solutions:
        rep.fail(reason="a colax structure exists", solutions=solutions)
    return rep
