"""Strengths, costrengths and copoints, with exhaustive law checks.

A (co)strength is a family indexed by a grade ``M`` and an object ``X``:

    st_{M,X}  : M.F(X) -> F(M.X)
    cst_{M,X} : F(M.X) -> M.F(X)

Families are either given by a rule (any grade, any object) or by a table of
components on ``grades x universe``.  Table-backed families reach objects
outside the table by naturality, first in the object and then in the grade.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from . import finset as fs
from .actions import CART, ActionModel
from .config import SizeLimitExceeded
from .finset import ONE, FinFun, FinSet
from .functors import (
    ID,
    CompF,
    FunctorExpr,
    MissingComponent,
    NatFamily,
    NaturalityError,
    Universe,
    apply_mor,
    apply_obj,
    check_natural,
    default_universe,
    enumerate_nat,
)
from .report import LawReport
from .search import search_families

Rule = Callable[[FinSet, FinSet], FinFun]


def _grades(grades: Universe | Iterable[FinSet] | None, universe: Universe) -> tuple[FinSet, ...]:
    if grades is None:
        return universe.objects
    return tuple(grades)


class _ActionFamily:
    """Shared machinery for strengths and costrengths."""

    kind = "family"

    def __init__(
        self,
        functor: FunctorExpr,
        action: ActionModel,
        universe: Universe | None = None,
        grades: Iterable[FinSet] | None = None,
        rule: Rule | None = None,
        components: dict[tuple[FinSet, FinSet], FinFun] | None = None,
        name: str = "",
    ):
        if rule is None and components is None:
            raise ValueError("need a rule or components")
        self.functor = functor
        self.action = action
        self.universe = universe or default_universe()
        self.grades = _grades(grades, self.universe)
        self.rule = rule
        self.components = dict(components or {})
        self.name = name
        self._cache: dict[tuple[FinSet, FinSet], FinFun] = {}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name or '?'} for {self.functor} over {self.action.name})"

    # the four maps along which a family is natural
    def source(self, M: FinSet, X: FinSet) -> FinSet:
        raise NotImplementedError

    def target(self, M: FinSet, X: FinSet) -> FinSet:
        raise NotImplementedError

    def src_x(self, M: FinSet, f: FinFun) -> FinFun:
        raise NotImplementedError

    def tgt_x(self, M: FinSet, f: FinFun) -> FinFun:
        raise NotImplementedError

    def src_g(self, g: FinFun, X: FinSet) -> FinFun:
        raise NotImplementedError

    def tgt_g(self, g: FinFun, X: FinSet) -> FinFun:
        raise NotImplementedError

    def at(self, M: FinSet, X: FinSet) -> FinFun:
        key = (M, X)
        hit = self.components.get(key) or self._cache.get(key)
        if hit is not None:
            return hit
        comp = self.rule(M, X) if self.rule is not None else self._extend(M, X)
        if comp.dom != self.source(M, X) or comp.cod != self.target(M, X):
            raise ValueError(f"component of {self!r} at ({M}, {X}) has the wrong type")
        self._cache[key] = comp
        return comp

    __call__ = at

    def _extend(self, M: FinSet, X: FinSet) -> FinFun:
        dom, cod = self.source(M, X), self.target(M, X)
        table: list[int | None] = [None] * len(dom)
        missing = len(table)

        def absorb(comp: FinFun, pt: tuple[int, ...], qt: tuple[int, ...]) -> int:
            nonlocal missing
            for w0, w in enumerate(pt):
                v = qt[comp.table[w0]]
                cur = table[w]
                if cur is None:
                    table[w] = v
                    missing -= 1
                elif cur != v:
                    raise NaturalityError(f"{self!r}: transport to ({M}, {X}) is inconsistent at {dom.labels[w]}")
            return missing

        if M in self.grades:
            for X0 in sorted({x for (m, x) in self.components if m == M}, key=len):
                comp = self.components[(M, X0)]
                for f in fs.all_functions(X0, X):
                    if not absorb(comp, self.src_x(M, f).table, self.tgt_x(M, f).table):
                        break
                if not missing:
                    break
        else:
            for M0 in sorted(self.grades, key=len):
                try:
                    comp = self.at(M0, X)
                except MissingComponent:
                    continue
                for g in self.action.grade_arrows(M0, M):
                    if not absorb(comp, self.src_g(g, X).table, self.tgt_g(g, X).table):
                        break
                if not missing:
                    break
        if missing:
            raise MissingComponent(f"{self!r} has no component at ({M}, {X})")
        return FinFun._raw(dom, cod, tuple(table))  # type: ignore[arg-type]

    def cells(self) -> Iterator[tuple[FinSet, FinSet]]:
        for M in self.grades:
            for X in self.universe:
                yield M, X

    def same_as(self, other: "_ActionFamily") -> bool:
        """Table equality on every grade/object cell of this family."""
        return all(self.at(M, X) == other.at(M, X) for M, X in self.cells())

    def with_component(self, M: FinSet, X: FinSet, comp: FinFun, name: str = "") -> "_ActionFamily":
        base = self

        def rule(M2: FinSet, X2: FinSet) -> FinFun:
            return comp if (M2, X2) == (M, X) else base.at(M2, X2)

        return type(self)(self.functor, self.action, self.universe, self.grades, rule=rule, name=name or f"{self.name}*")

    def mutated(self, M: FinSet | None = None, X: FinSet | None = None, index: int = 0) -> "_ActionFamily":
        """Change one table entry of one component (first cell where that is possible)."""
        cells = [(M, X)] if M is not None and X is not None else list(self.cells())
        for M2, X2 in cells:
            comp = self.at(M2, X2)
            if len(comp.cod) > 1 and len(comp.dom) > index:
                return self.with_component(M2, X2, fs.mutate(comp, index))
        raise ValueError("no component can be mutated")

    def restricted(self, universe: Universe, grades: Iterable[FinSet] | None = None) -> "_ActionFamily":
        """The same family quantified over different universes."""
        return type(self)(self.functor, self.action, universe, _grades(grades, universe), rule=self.at, name=self.name)


class Costrength(_ActionFamily):
    kind = "costrength"

    def source(self, M, X):
        return apply_obj(self.functor, self.action.act_obj(M, X))

    def target(self, M, X):
        return self.action.act_obj(M, apply_obj(self.functor, X))

    def src_x(self, M, f):
        return apply_mor(self.functor, self.action.act_id(M, f))

    def tgt_x(self, M, f):
        return self.action.act_id(M, apply_mor(self.functor, f))

    def src_g(self, g, X):
        return apply_mor(self.functor, self.action.act_grade(g, X))

    def tgt_g(self, g, X):
        return self.action.act_grade(g, apply_obj(self.functor, X))


class Strength(_ActionFamily):
    kind = "strength"

    def source(self, M, X):
        return self.action.act_obj(M, apply_obj(self.functor, X))

    def target(self, M, X):
        return apply_obj(self.functor, self.action.act_obj(M, X))

    def src_x(self, M, f):
        return self.action.act_id(M, apply_mor(self.functor, f))

    def tgt_x(self, M, f):
        return apply_mor(self.functor, self.action.act_id(M, f))

    def src_g(self, g, X):
        return self.action.act_grade(g, apply_obj(self.functor, X))

    def tgt_g(self, g, X):
        return apply_mor(self.functor, self.action.act_grade(g, X))


class Copoint:
    """A functor with a natural family ``F => Id``."""

    def __init__(self, functor: FunctorExpr, epsilon: NatFamily, name: str = ""):
        if epsilon.source != functor or epsilon.target != ID:
            raise ValueError("a copoint is a family F => Id")
        self.functor = functor
        self.epsilon = epsilon
        self.name = name or epsilon.name

    def at(self, X: FinSet) -> FinFun:
        return self.epsilon.at(X)

    __call__ = at

    def __repr__(self) -> str:
        return f"Copoint({self.name or '?'} for {self.functor})"

    def same_as(self, other: "Copoint", objects: Iterable[FinSet]) -> bool:
        return all(self.at(X) == other.at(X) for X in objects)


# -- law checks ---------------------------------------------------------------


def _compare(rep: LawReport, lhs: FinFun, rhs: FinFun, **where) -> bool:
    """Record one diagram instance; return True if it failed."""
    rep.checked += 1
    if lhs.table == rhs.table:
        return False
    w = next(i for i, (p, q) in enumerate(zip(lhs.table, rhs.table)) if p != q)
    rep.fail(element=lhs.dom.labels[w], lhs=lhs.cod.labels[lhs.table[w]], rhs=rhs.cod.labels[rhs.table[w]],
             **{k: (v.describe() if isinstance(v, FinFun) else str(v)) for k, v in where.items()})
    return True


def _guard(rep: LawReport, thunk: Callable[[], bool], what: str) -> bool:
    """Run one instance, turning unreachable components into recorded skips."""
    try:
        return thunk()
    except (MissingComponent, SizeLimitExceeded) as exc:
        rep.skip(f"{what}: {exc}")
        return False
    except NaturalityError as exc:
        rep.fail(reason=str(exc), at=what)
        return True


def _naturality(c: _ActionFamily, universe: Universe, grades: tuple[FinSet, ...]) -> tuple[LawReport, LawReport]:
    a = c.action
    in_x = LawReport("naturality in the object")
    for M in grades:
        for X in universe:
            for Y in universe:
                for f in fs.all_functions(X, Y):
                    def inst(M=M, X=X, Y=Y, f=f):
                        lhs = fs.compose(c.tgt_x(M, f), c.at(M, X))
                        rhs = fs.compose(c.at(M, Y), c.src_x(M, f))
                        return _compare(in_x, lhs, rhs, M=M, f=f)
                    if _guard(in_x, inst, f"M={M} X={X} Y={Y}"):
                        break
                if not in_x.ok:
                    break
    in_m = LawReport("naturality in the grade")
    for M in grades:
        for M2 in grades:
            for g in a.grade_arrows(M, M2):
                for X in universe:
                    def inst(M=M, M2=M2, g=g, X=X):
                        lhs = fs.compose(c.tgt_g(g, X), c.at(M, X))
                        rhs = fs.compose(c.at(M2, X), c.src_g(g, X))
                        return _compare(in_m, lhs, rhs, grade_arrow=g, source_grade=M, target_grade=M2, X=X)
                    if _guard(in_m, inst, f"M={M} M'={M2} X={X}"):
                        break
                if not in_m.ok:
                    break
    return in_x, in_m


def check_costrength(c: Costrength, universe: Universe | None = None, grades: Iterable[FinSet] | None = None) -> LawReport:
    """Naturality in both arguments, the unit triangle and the associativity hexagon."""
    u = universe or c.universe
    gu = _grades(grades, u) if grades is not None or universe is not None else c.grades
    a, F = c.action, c.functor
    rep = LawReport(f"costrength laws for {F} over {a.name}")
    rep.counts["universe"] = u.describe()
    in_x, in_m = _naturality(c, u, gu)
    rep.add(in_x)
    rep.add(in_m)

    unit = rep.add(LawReport("unit"))
    I = a.grade_unit
    for X in u:
        def inst(X=X):
            FX = apply_obj(F, X)
            lhs = fs.compose(a.unitor(FX), c.at(I, X))
            return _compare(unit, lhs, apply_mor(F, a.unitor(X)), X=X)
        if _guard(unit, inst, f"X={X}"):
            break

    assoc = rep.add(LawReport("associativity"))
    for M in gu:
        for N in gu:
            for X in u:
                def inst(M=M, N=N, X=X):
                    FX = apply_obj(F, X)
                    NX = a.act_obj(N, X)
                    lhs = fs.compose_all(a.associator_inv(M, N, FX), a.act_id(M, c.at(N, X)), c.at(M, NX))
                    rhs = fs.compose(c.at(a.grade_tensor(M, N), X), apply_mor(F, a.associator_inv(M, N, X)))
                    return _compare(assoc, lhs, rhs, M=M, N=N, X=X)
                if _guard(assoc, inst, f"M={M} N={N} X={X}"):
                    return rep
    return rep


def check_strength(s: Strength, universe: Universe | None = None, grades: Iterable[FinSet] | None = None) -> LawReport:
    u = universe or s.universe
    gu = _grades(grades, u) if grades is not None or universe is not None else s.grades
    a, F = s.action, s.functor
    rep = LawReport(f"strength laws for {F} over {a.name}")
    rep.counts["universe"] = u.describe()
    in_x, in_m = _naturality(s, u, gu)
    rep.add(in_x)
    rep.add(in_m)

    unit = rep.add(LawReport("unit"))
    I = a.grade_unit
    for X in u:
        def inst(X=X):
            lhs = fs.compose(apply_mor(F, a.unitor(X)), s.at(I, X))
            return _compare(unit, lhs, a.unitor(apply_obj(F, X)), X=X)
        if _guard(unit, inst, f"X={X}"):
            break

    assoc = rep.add(LawReport("associativity"))
    for M in gu:
        for N in gu:
            for X in u:
                def inst(M=M, N=N, X=X):
                    FX = apply_obj(F, X)
                    lhs = fs.compose_all(s.at(M, a.act_obj(N, X)), a.act_id(M, s.at(N, X)), a.associator(M, N, FX))
                    rhs = fs.compose(apply_mor(F, a.associator(M, N, X)), s.at(a.grade_tensor(M, N), X))
                    return _compare(assoc, lhs, rhs, M=M, N=N, X=X)
                if _guard(assoc, inst, f"M={M} N={N} X={X}"):
                    return rep
    return rep


def check(c: _ActionFamily, **kw) -> LawReport:
    return check_strength(c, **kw) if isinstance(c, Strength) else check_costrength(c, **kw)  # type: ignore[arg-type]


def check_costrong_nat(alpha: NatFamily, c_src: Costrength, c_tgt: Costrength,
                       universe: Universe | None = None, grades: Iterable[FinSet] | None = None) -> LawReport:
    """``(id.alpha) . cst_src = cst_tgt . alpha_{M.X}`` for every grade and object."""
    if c_src.action is not c_tgt.action and c_src.action != c_tgt.action:
        raise ValueError("both costrengths must be over the same action")
    u = universe or c_src.universe
    gu = _grades(grades, u) if grades is not None or universe is not None else c_src.grades
    a = c_src.action
    rep = LawReport(f"costrong transformation {alpha.name or '?'}: {alpha.source} => {alpha.target}")
    for M in gu:
        for X in u:
            def inst(M=M, X=X):
                lhs = fs.compose(a.act_id(M, alpha.at(X)), c_src.at(M, X))
                rhs = fs.compose(c_tgt.at(M, X), alpha.at(a.act_obj(M, X)))
                return _compare(rep, lhs, rhs, M=M, X=X)
            if _guard(rep, inst, f"M={M} X={X}"):
                return rep
    return rep


# -- constructions ------------------------------------------------------------


def unitor_pin(F: FunctorExpr, a: ActionModel, X: FinSet, kind: str) -> FinFun:
    """The component at the unit grade forced by the unit law."""
    if kind == "costrength":
        return fs.compose(a.unitor_inv(apply_obj(F, X)), apply_mor(F, a.unitor(X)))
    return fs.compose(apply_mor(F, a.unitor_inv(X)), a.unitor(apply_obj(F, X)))


def _enumerate(cls, F: FunctorExpr, a: ActionModel, universe: Universe | None, grades, budget: int | None,
               pin_unit: bool = True):
    u = universe or default_universe()
    gu = _grades(grades, u)
    probe = cls(F, a, u, gu, rule=lambda M, X: None)  # only used for its shape maps
    cells = [(M, X) for M in gu for X in u]
    index = {cell: i for i, cell in enumerate(cells)}
    psizes = [len(probe.source(M, X)) for M, X in cells]
    qsizes = [len(probe.target(M, X)) for M, X in cells]
    arrows = []
    for M, X in cells:
        for Y in u:
            for f in fs.all_functions(X, Y):
                if X == Y and f == fs.identity(X):
                    continue
                arrows.append((index[(M, X)], index[(M, Y)], probe.src_x(M, f).table, probe.tgt_x(M, f).table))
        for M2 in gu:
            for g in a.grade_arrows(M, M2):
                if M == M2 and g == fs.identity(M):
                    continue
                arrows.append((index[(M, X)], index[(M2, X)], probe.src_g(g, X).table, probe.tgt_g(g, X).table))
    pinned = {}
    if pin_unit and a.grade_unit in gu:
        for X in u:
            pinned[index[(a.grade_unit, X)]] = unitor_pin(F, a, X, cls.kind).table
    label = f"{cls.kind}s of {F} over {a.name}"
    k = 0
    for tables in search_families(psizes, qsizes, arrows, pinned=pinned, budget=budget, label=label):
        comps = {cell: FinFun._raw(probe.source(*cell), probe.target(*cell), tables[i]) for i, cell in enumerate(cells)}
        cand = cls(F, a, u, gu, components=comps, name=f"#{k}")
        checker = check_costrength if cls is Costrength else check_strength
        if checker(cand).ok:
            yield cand
            k += 1


def enumerate_costrengths(F: FunctorExpr, a: ActionModel = CART, universe: Universe | None = None,
                          grades: Iterable[FinSet] | None = None, budget: int | None = None,
                          pin_unit: bool = True) -> Iterator[Costrength]:
    """Every costrength of ``F`` over ``a`` on ``grades x universe``, in a fixed order.

    Candidates are natural families (found by propagation) whose unit-grade
    components are the ones the unit law forces; each is then run through
    :func:`check_costrength`, so only law-abiding families are yielded.
    ``pin_unit=False`` searches the unit-grade cells too (slower; same result).
    """
    return _enumerate(Costrength, F, a, universe, grades, budget, pin_unit)


def enumerate_strengths(F: FunctorExpr, a: ActionModel = CART, universe: Universe | None = None,
                        grades: Iterable[FinSet] | None = None, budget: int | None = None,
                        pin_unit: bool = True) -> Iterator[Strength]:
    return _enumerate(Strength, F, a, universe, grades, budget, pin_unit)


def canonical_strength(F: FunctorExpr, universe: Universe | None = None, grades=None) -> Strength:
    """``st(m, w) = F(x -> (m, x))(w)``, the strength every functor has for the cartesian action."""

    def rule(M: FinSet, X: FinSet) -> FinFun:
        FX = apply_obj(F, X)
        MX = fs.product(M, X)
        nx = len(X)
        table = []
        for m in range(len(M)):
            k = FinFun._raw(X, MX, tuple(m * nx + x for x in range(nx)))
            table.extend(apply_mor(F, k).table)
        return FinFun._raw(fs.product(M, FX), apply_obj(F, MX), tuple(table))

    return Strength(F, CART, universe, grades, rule=rule, name="canonical")


def identity_costrength(a: ActionModel = CART, universe: Universe | None = None, grades=None) -> Costrength:
    return Costrength(ID, a, universe, grades, rule=lambda M, X: fs.identity(a.act_obj(M, X)), name="id")


def identity_strength(a: ActionModel = CART, universe: Universe | None = None, grades=None) -> Strength:
    return Strength(ID, a, universe, grades, rule=lambda M, X: fs.identity(a.act_obj(M, X)), name="id")


def compose_costrength(outer: Costrength, inner: Costrength) -> Costrength:
    """``cst^{F.G} = cst^F_{M,GX} . F(cst^G_{M,X})``."""
    F, G = outer.functor, inner.functor

    def rule(M: FinSet, X: FinSet) -> FinFun:
        return fs.compose(outer.at(M, apply_obj(G, X)), apply_mor(F, inner.at(M, X)))

    return Costrength(CompF(F, G), outer.action, outer.universe, outer.grades, rule=rule,
                      name=f"{outer.name}.{inner.name}")


def writer_costrength(S: FinSet, universe: Universe | None = None, grades=None) -> Costrength:
    """``S x (M x X) -> M x (S x X)``, induced by the symmetry."""
    from .functors import Writer

    def rule(M: FinSet, X: FinSet) -> FinFun:
        MX, SX = fs.product(M, X), fs.product(S, X)
        nm, nx = len(M), len(X)
        table = []
        for s in range(len(S)):
            for m in range(nm):
                for x in range(nx):
                    table.append(m * len(SX) + s * nx + x)
        return FinFun._raw(fs.product(S, MX), fs.product(M, SX), tuple(table))

    return Costrength(Writer(S), CART, universe, grades, rule=rule, name="symmetry")


# -- copoints and the correspondence with cartesian costrengths --------------


def phi(c: Costrength) -> Copoint:
    """``eps_M = pi1 . cst_{M,1} . F(m -> (m, *))``."""
    if c.action.name != CART.name:
        raise ValueError("phi needs a costrength over the cartesian action")
    F = c.functor

    def rule(M: FinSet) -> FinFun:
        rho_inv = fs.inverse(fs.pi1(M, ONE))
        return fs.compose_all(fs.pi1(M, apply_obj(F, ONE)), c.at(M, ONE), apply_mor(F, rho_inv))

    return Copoint(F, NatFamily(F, ID, rule=rule, universe=c.universe, name=f"phi({c.name})"))


def psi(p: Copoint, universe: Universe | None = None, grades=None) -> Costrength:
    """``cst_{M,X} = (eps_M x id) . <F pi1, F pi2>``."""
    F = p.functor

    def rule(M: FinSet, X: FinSet) -> FinFun:
        split = fs.pair(apply_mor(F, fs.pi1(M, X)), apply_mor(F, fs.pi2(M, X)))
        return fs.compose(fs.product_map(p.at(M), fs.identity(apply_obj(F, X))), split)

    return Costrength(F, CART, universe or p.epsilon.universe, grades, rule=rule, name=f"psi({p.name})")


def enumerate_copoints(F: FunctorExpr, universe: Universe | None = None, budget: int | None = None) -> Iterator[Copoint]:
    for fam in enumerate_nat(F, ID, universe or default_universe(), budget=budget):
        yield Copoint(F, fam)


def check_copoint(p: Copoint, universe: Universe | None = None) -> LawReport:
    return check_natural(p.epsilon, universe)


def check_projection_law(c: Costrength) -> LawReport:
    """``pi2 . cst_{M,X} = F(pi2)`` on every cell."""
    F = c.functor
    rep = LawReport(f"second projection commutes with the costrength of {F}")
    for M, X in c.cells():
        lhs = fs.compose(fs.pi2(M, apply_obj(F, X)), c.at(M, X))
        if _compare(rep, lhs, apply_mor(F, fs.pi2(M, X)), M=M, X=X):
            break
    return rep


def roundtrip_report(F: FunctorExpr, universe: Universe | None = None, grades=None, budget: int | None = None) -> LawReport:
    """Enumerate copoints and cartesian costrengths of ``F`` and check that phi and psi are mutually inverse."""
    u = universe or default_universe()
    gu = _grades(grades, u)
    rep = LawReport(f"costrengths and copoints of {F}")
    copoints = list(enumerate_copoints(F, u, budget))
    costrengths = list(enumerate_costrengths(F, CART, u, gu, budget))
    rep.counts.update(copoints=len(copoints), costrengths=len(costrengths), universe=u.describe())

    pp = rep.add(LawReport("phi(psi(p)) = p"))
    for p in copoints:
        c = psi(p, u, gu)
        pp.add(check_costrength(c))
        pp.checked += 1
        if not phi(c).same_as(p, u):
            pp.fail(copoint=p.name)
    cc = rep.add(LawReport("psi(phi(c)) = c"))
    for c in costrengths:
        cc.checked += 1
        back = psi(phi(c), u, gu)
        if not back.same_as(c):
            cc.fail(costrength=c.name)
    proj = rep.add(LawReport("projection law on enumerated costrengths"))
    for c in costrengths:
        proj.add(check_projection_law(c))
    rep.checked += 1
    if len(copoints) != len(costrengths):
        rep.fail(reason="counts differ", copoints=len(copoints), costrengths=len(costrengths))
    return rep


# -- the uniqueness square ------------------------------------------------------


def check_uniqueness_square(c: Costrength, f: FinFun, g: FinFun, Y: FinSet, rep: LawReport | None = None) -> LawReport:
    """``(f . g) . cst_{X,Y} = l^{-1} . g . F(l) . F(f . id)`` for ``f: X -> I`` and ``g: F(Y) -> I``.

    Only meaningful for a regular action, where grades and objects coincide.
    """
    a, F = c.action, c.functor
    if not a.regular:
        raise ValueError(f"{a.name} is not a regular action")
    I = a.grade_unit
    X = f.dom
    FY = apply_obj(F, Y)
    if f.cod != I or g.cod != I or g.dom != FY:
        raise ValueError("need f: X -> I and g: F(Y) -> I")
    rep = rep or LawReport(f"uniqueness square for {F} over {a.name}")
    lhs = fs.compose(a.act_mor(f, g), c.at(X, Y))
    rhs = fs.compose_all(a.unitor_inv(I), g, apply_mor(F, a.unitor(Y)), apply_mor(F, a.act_mor(f, fs.identity(Y))))
    _compare(rep, lhs, rhs, X=X, Y=Y, f=f, g=g)
    return rep


def uniqueness_square_report(c: Costrength, universe: Universe | None = None, grades=None) -> LawReport:
    """The square for every ``f: X -> I`` and ``g: F(Y) -> I`` with ``X`` a grade and ``Y`` an object."""
    u = universe or c.universe
    gu = _grades(grades, u) if grades is not None or universe is not None else c.grades
    a, F = c.action, c.functor
    rep = LawReport(f"uniqueness square for {F} over {a.name}")
    I = a.grade_unit
    for X in gu:
        for Y in u:
            for f in fs.all_functions(X, I):
                for g in fs.all_functions(apply_obj(F, Y), I):
                    try:
                        check_uniqueness_square(c, f, g, Y, rep)
                    except MissingComponent as exc:
                        rep.skip(str(exc))
                    if not rep.ok:
                        return rep
    return rep
