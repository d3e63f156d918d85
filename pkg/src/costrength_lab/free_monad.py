"""Depth-bounded free monads ``T_d(X) = X + F(T_{d-1} X)`` and their costrength.

Terms of depth ``d`` are elements of the finite set ``T_d(X)``; ``inl x``
plays the role of a variable and ``inr w`` of an operation node.  Grafting a
substitution into a depth-``d`` term raises the depth, so the monad laws are
only checkable while every depth involved stays within ``d_max``; instances
beyond that are listed as skipped.
"""

from __future__ import annotations

from functools import lru_cache

from . import finset as fs
from .actions import CART
from .costrength import (
    Copoint,
    Costrength,
    _compare,
    check_costrength,
    check_costrong_nat,
    check_projection_law,
    compose_costrength,
    identity_costrength,
    phi,
)
from .config import SizeLimitExceeded
from .finset import FinFun, FinSet
from .functors import (
    ID,
    CompF,
    CoprodF,
    FunctorExpr,
    NatFamily,
    Universe,
    apply_mor,
    apply_obj,
    check_natural,
)
from .report import LawReport, require

DEFAULT_DEPTH = 3


@lru_cache(maxsize=None)
def term_functor(F: FunctorExpr, d: int) -> FunctorExpr:
    """``T_0 = Id`` and ``T_d = Id + F . T_{d-1}``."""
    if d < 0:
        raise ValueError("depth must be nonnegative")
    if d == 0:
        return ID
    return CoprodF(ID, CompF(F, term_functor(F, d - 1)), alias=f"T{d}[{F}]")


def build_terms(F: FunctorExpr, X: FinSet, d: int) -> FinSet:
    return apply_obj(term_functor(F, d), X)


class TruncatedMonad:
    def __init__(self, F: FunctorExpr, d_max: int = DEFAULT_DEPTH):
        self.F = F
        self.d_max = d_max

    def T(self, d: int) -> FunctorExpr:
        return term_functor(self.F, d)

    def terms(self, X: FinSet, d: int) -> FinSet:
        return build_terms(self.F, X, d)

    def include(self, X: FinSet, d: int, e: int | None = None) -> FinFun:
        """``T_d(X) -> T_e(X)`` for ``d <= e`` (default ``e = d + 1``)."""
        e = d + 1 if e is None else e
        if e < d:
            raise ValueError("can only include into a deeper level")
        if e == d:
            return fs.identity(self.terms(X, d))
        step = self._include_step(X, d)
        return step if e == d + 1 else fs.compose(self.include(X, d + 1, e), step)

    def _include_step(self, X: FinSet, d: int) -> FinFun:
        if d == 0:
            return fs.inl(X, apply_obj(self.F, X))
        return fs.coproduct_map(fs.identity(X), apply_mor(self.F, self._include_step(X, d - 1)))

    def unit(self, X: FinSet, d: int = 1) -> FinFun:
        """``x -> inl x`` in ``T_d(X)``."""
        return fs.identity(X) if d == 0 else fs.inl(X, apply_obj(CompF(self.F, self.T(d - 1)), X))

    def graft(self, sigma: FinFun, Y: FinSet, d: int, e: int) -> FinFun:
        """``T_d(X) -> T_{d+e}(Y)`` substituting ``sigma : X -> T_e(Y)`` for variables."""
        if sigma.cod != self.terms(Y, e):
            raise ValueError(f"substitution must land in depth-{e} terms over {Y}")
        if d == 0:
            return sigma
        var = fs.compose(self.include(Y, e, d + e), sigma)
        inner = apply_mor(self.F, self.graft(sigma, Y, d - 1, e))
        op = fs.compose(fs.inr(Y, apply_obj(CompF(self.F, self.T(d + e - 1)), Y)), inner)
        return fs.copair(var, op)

    def mult(self, X: FinSet, a: int, b: int) -> FinFun:
        """``T_a(T_b X) -> T_{a+b}(X)``."""
        return self.graft(fs.identity(self.terms(X, b)), X, a, b)

    def unit_family(self, d: int = 1) -> NatFamily:
        return NatFamily(ID, self.T(d), rule=lambda X: self.unit(X, d), name=f"eta{d}")

    def mult_family(self, a: int, b: int) -> NatFamily:
        return NatFamily(CompF(self.T(a), self.T(b)), self.T(a + b), rule=lambda X: self.mult(X, a, b), name=f"mu{a},{b}")


def free_costrength(F: FunctorExpr, c: Costrength, M: FinSet, X: FinSet, d: int) -> FinFun:
    """``T_d(M x X) -> M x T_d(X)`` by recursion on depth."""
    if d == 0:
        return fs.identity(fs.product(M, X))
    T1 = term_functor(F, d - 1)
    T1X = apply_obj(T1, X)
    FT1X = apply_obj(F, T1X)
    var = fs.product_map(fs.identity(M), fs.inl(X, FT1X))
    op = fs.compose_all(
        fs.product_map(fs.identity(M), fs.inr(X, FT1X)),
        c.at(M, T1X),
        apply_mor(F, free_costrength(F, c, M, X, d - 1)),
    )
    return fs.copair(var, op)


def free_costrength_family(c: Costrength, d: int, universe: Universe | None = None, grades=None) -> Costrength:
    F = c.functor
    return Costrength(term_functor(F, d), CART, universe or c.universe, grades if grades is not None else c.grades,
                      rule=lambda M, X: free_costrength(F, c, M, X, d), name=f"cst^T{d}")


def leaf_extractor(F: FunctorExpr, eps: Copoint, d: int) -> NatFamily:
    """``T_d => Id``: a variable is itself; an operation node is extracted through ``eps``."""

    def rule(X: FinSet) -> FinFun:
        if d == 0:
            return fs.identity(X)
        below = leaf_extractor(F, eps, d - 1).at(X)
        T1X = apply_obj(term_functor(F, d - 1), X)
        return fs.copair(fs.identity(X), fs.compose(below, eps.at(T1X)))

    return NatFamily(term_functor(F, d), ID, rule=rule, name=f"leaf{d}")


def free_monad_law_report(F: FunctorExpr, c: Costrength, universe: Universe, d_max: int = DEFAULT_DEPTH,
                          grades=None, validate: bool = True) -> LawReport:
    """Monad laws (within depth), costrength laws for every level, costrong unit and
    multiplication, compatibility across levels, the projection law, and the
    induced copoint against the leaf extractor."""
    gu = tuple(grades) if grades is not None else universe.objects
    if validate:
        require(check_costrength(c))
    T = TruncatedMonad(F, d_max)
    rep = LawReport(f"free monad on {F} up to depth {d_max}")
    rep.counts["universe"] = universe.describe()
    rep.counts["sizes"] = {d: [len(T.terms(X, d)) for X in universe] for d in range(d_max + 1)}

    monad = rep.add(LawReport("monad laws"))
    for X in universe:
        for b in range(d_max + 1):
            TbX = T.terms(X, b)
            if b + 1 > d_max:
                monad.skip(f"unit laws at X={X}, depth {b}: needs depth {b + 1}")
                continue
            incl = T.include(X, b, b + 1)
            _compare(monad, fs.compose(T.mult(X, 1, b), T.unit(TbX, 1)), incl, law="left unit", X=X, depth=b)
            _compare(monad, fs.compose(T.mult(X, b, 1), apply_mor(T.T(b), T.unit(X, 1))), incl,
                     law="right unit", X=X, depth=b)
        for a in range(1, d_max + 1):
            for b in range(1, d_max + 1):
                for cc in range(1, d_max + 1):
                    if a + b + cc > d_max:
                        monad.skip(f"associativity at X={X}, depths ({a},{b},{cc}): needs depth {a + b + cc}")
                        continue
                    TcX = T.terms(X, cc)
                    lhs = fs.compose(T.mult(X, a + b, cc), T.mult(TcX, a, b))
                    rhs = fs.compose(T.mult(X, a, b + cc), apply_mor(T.T(a), T.mult(X, b, cc)))
                    _compare(monad, lhs, rhs, law="associativity", X=X, depths=(a, b, cc))
    nat = rep.add(LawReport("naturality of unit and multiplication"))
    for d in range(1, d_max + 1):
        nat.add(check_natural(T.unit_family(d), universe))
    for a in range(1, d_max + 1):
        for b in range(0, d_max + 1 - a):
            try:
                nat.add(check_natural(T.mult_family(a, b), universe))
            except SizeLimitExceeded as exc:
                nat.skip(f"multiplication {a},{b}: {exc}")

    levels = {d: free_costrength_family(c, d, universe, gu) for d in range(d_max + 1)}
    laws = rep.add(LawReport("costrength laws at every depth"))
    for d in range(d_max + 1):
        laws.add(check_costrength(levels[d]))
        laws.add(check_projection_law(levels[d]))

    ident = identity_costrength(CART, universe, gu)
    costrong = rep.add(LawReport("unit and multiplication are costrong"))
    for d in range(1, d_max + 1):
        costrong.add(check_costrong_nat(T.unit_family(d), ident, levels[d]))
    for a in range(1, d_max + 1):
        for b in range(0, d_max + 1 - a):
            src = compose_costrength(levels[a], levels[b])
            costrong.add(check_costrong_nat(T.mult_family(a, b), src, levels[a + b]))

    compat = rep.add(LawReport("compatibility of depth levels"))
    for d in range(1, d_max + 1):
        for M in gu:
            for X in universe:
                lhs = fs.compose(levels[d].at(M, X), T.include(fs.product(M, X), d - 1, d))
                rhs = fs.compose(fs.product_map(fs.identity(M), T.include(X, d - 1, d)), levels[d - 1].at(M, X))
                _compare(compat, lhs, rhs, depth=d, M=M, X=X)

    leaves = rep.add(LawReport("induced copoint reads the leaf"))
    eps = phi(c)
    for d in range(d_max + 1):
        copoint = phi(levels[d])
        ref = leaf_extractor(F, eps, d)
        for X in universe:
            _compare(leaves, copoint.at(X), ref.at(X), depth=d, X=X)
    return rep
