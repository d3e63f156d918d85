"""Syntactic endofunctors on finite sets and natural families between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from . import finset as fs
from .config import check_size
from .finset import ONE, FinFun, FinSet
from .report import LawReport
from .search import search_families


class FunctorExpr:
    """Base class; evaluate with ``F(X)`` on objects and ``F.fmap(f)`` on maps."""

    alias: str | None

    def __call__(self, X: FinSet) -> FinSet:
        return apply_obj(self, X)

    def fmap(self, f: FinFun) -> FinFun:
        return apply_mor(self, f)

    def __str__(self) -> str:
        return self.alias or self.render()

    def render(self) -> str:
        raise NotImplementedError


def set_syntax(A: FinSet) -> str:
    if A == ONE:
        return "1"
    if A == FinSet.of_size(len(A)):
        return str(len(A))
    return "{" + ",".join(A.labels) + "}"


@dataclass(frozen=True)
class ConstF(FunctorExpr):
    value: FinSet
    alias: str | None = field(default=None, compare=False, repr=False, kw_only=True)

    def render(self) -> str:
        return f"Const({set_syntax(self.value)})"


@dataclass(frozen=True)
class IdF(FunctorExpr):
    alias: str | None = field(default=None, compare=False, repr=False, kw_only=True)

    def render(self) -> str:
        return "Id"


@dataclass(frozen=True)
class ProdF(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr
    alias: str | None = field(default=None, compare=False, repr=False, kw_only=True)

    def render(self) -> str:
        return f"Prod({self.left},{self.right})"


@dataclass(frozen=True)
class CoprodF(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr
    alias: str | None = field(default=None, compare=False, repr=False, kw_only=True)

    def render(self) -> str:
        return f"Coprod({self.left},{self.right})"


@dataclass(frozen=True)
class ExpF(FunctorExpr):
    """``X -> [base, body(X)]``."""

    base: FinSet
    body: FunctorExpr
    alias: str | None = field(default=None, compare=False, repr=False, kw_only=True)

    def render(self) -> str:
        return f"Exp({set_syntax(self.base)},{self.body})"


@dataclass(frozen=True)
class PowF(FunctorExpr):
    body: FunctorExpr
    alias: str | None = field(default=None, compare=False, repr=False, kw_only=True)

    def render(self) -> str:
        return f"Pow({self.body})"


@dataclass(frozen=True)
class CompF(FunctorExpr):
    """``outer . inner``."""

    outer: FunctorExpr
    inner: FunctorExpr
    alias: str | None = field(default=None, compare=False, repr=False, kw_only=True)

    def render(self) -> str:
        return f"Comp({self.outer},{self.inner})"


ID = IdF()


def Writer(S: FinSet) -> FunctorExpr:
    return ProdF(ConstF(S), ID, alias=f"Writer({set_syntax(S)})")


def Reader(S: FinSet) -> FunctorExpr:
    return ExpF(S, ID, alias=f"Reader({set_syntax(S)})")


def Costate(S: FinSet) -> FunctorExpr:
    return ProdF(ConstF(S), Reader(S), alias=f"Costate({set_syntax(S)})")


MAYBE = CoprodF(ConstF(ONE), ID, alias="Maybe")
POW = PowF(ID, alias="Pow(Id)")


def cofree_copointed_functor(F: FunctorExpr) -> FunctorExpr:
    """``id x F``."""
    return ProdF(ID, F)


def apply_obj(F: FunctorExpr, X: FinSet) -> FinSet:
    out = _apply_obj(F, X)
    check_size(len(out), f"{F}({len(X)})")
    return out


@lru_cache(maxsize=8192)
def _apply_obj(F: FunctorExpr, X: FinSet) -> FinSet:
    if isinstance(F, IdF):
        return X
    if isinstance(F, ConstF):
        return F.value
    if isinstance(F, ProdF):
        return fs.product(apply_obj(F.left, X), apply_obj(F.right, X))
    if isinstance(F, CoprodF):
        return fs.coproduct(apply_obj(F.left, X), apply_obj(F.right, X))
    if isinstance(F, ExpF):
        return fs.exponential(F.base, apply_obj(F.body, X))
    if isinstance(F, PowF):
        return fs.powerset(apply_obj(F.body, X))
    if isinstance(F, CompF):
        return apply_obj(F.outer, apply_obj(F.inner, X))
    raise TypeError(f"not a functor expression: {F!r}")


def apply_mor(F: FunctorExpr, f: FinFun) -> FinFun:
    return _apply_mor(F, f)


@lru_cache(maxsize=65536)
def _apply_mor(F: FunctorExpr, f: FinFun) -> FinFun:
    if isinstance(F, IdF):
        return f
    if isinstance(F, ConstF):
        return fs.identity(F.value)
    if isinstance(F, ProdF):
        return fs.product_map(apply_mor(F.left, f), apply_mor(F.right, f))
    if isinstance(F, CoprodF):
        return fs.coproduct_map(apply_mor(F.left, f), apply_mor(F.right, f))
    if isinstance(F, ExpF):
        return fs.exp_map(F.base, apply_mor(F.body, f))
    if isinstance(F, PowF):
        return fs.pow_map(apply_mor(F.body, f))
    if isinstance(F, CompF):
        return apply_mor(F.outer, apply_mor(F.inner, f))
    raise TypeError(f"not a functor expression: {F!r}")


def check_functor_laws(F: FunctorExpr, universe: "Universe") -> LawReport:
    """Identity and composition preservation over all maps between universe objects."""
    rep = LawReport(f"functor laws for {F}")
    objs = universe.objects
    for X in objs:
        rep.checked += 1
        if apply_mor(F, fs.identity(X)) != fs.identity(apply_obj(F, X)):
            return rep.fail(law="identity", object=str(X))
    for A in objs:
        for B in objs:
            for f in fs.all_functions(A, B):
                Ff = apply_mor(F, f)
                for C in objs:
                    for g in fs.all_functions(B, C):
                        rep.checked += 1
                        if apply_mor(F, fs.compose(g, f)) != fs.compose(apply_mor(F, g), Ff):
                            return rep.fail(law="composition", f=f.describe(), g=g.describe())
    return rep


@dataclass(frozen=True)
class Universe:
    """The finite list of objects a law is quantified over."""

    objects: tuple[FinSet, ...]

    def __post_init__(self):
        if not self.objects:
            raise ValueError("a universe needs at least one object")
        object.__setattr__(self, "objects", tuple(self.objects))

    @classmethod
    def of_sizes(cls, sizes: Iterable[int]) -> "Universe":
        return cls(tuple(canonical(n) for n in sizes))

    def __iter__(self) -> Iterator[FinSet]:
        return iter(self.objects)

    def __len__(self) -> int:
        return len(self.objects)

    def __contains__(self, X: object) -> bool:
        return X in self.objects

    def describe(self) -> str:
        return "{" + ", ".join(set_syntax(X) for X in self.objects) + "}"


def canonical(n: int) -> FinSet:
    """The object used for size ``n`` in default universes (``1`` is the terminal ``{*}``)."""
    return ONE if n == 1 else FinSet.of_size(n)


def default_universe() -> Universe:
    return Universe.of_sizes((0, 1, 2, 3))


class MissingComponent(LookupError):
    """A table-backed family was asked for a component it cannot supply."""


class NaturalityError(ValueError):
    """Transporting a family along naturality produced two different values."""


class NatFamily:
    """A family of maps ``source(X) -> target(X)``.

    Either given by a ``rule`` computing any component, or by a table of
    ``components`` on a universe.  Table-backed families reach other objects
    by transport along naturality: each element of ``source(Z)`` is the image
    of an element of ``source(A)`` under ``source(f)`` for some universe
    object ``A`` and ``f : A -> Z``, which determines its value.
    """

    def __init__(
        self,
        source: FunctorExpr,
        target: FunctorExpr,
        rule: Callable[[FinSet], FinFun] | None = None,
        components: dict[FinSet, FinFun] | None = None,
        universe: Universe | None = None,
        name: str = "",
    ):
        if rule is None and components is None:
            raise ValueError("need a rule or components")
        self.source = source
        self.target = target
        self.rule = rule
        self.components = dict(components or {})
        self.universe = universe
        self.name = name
        self._cache: dict[FinSet, FinFun] = {}

    def __repr__(self) -> str:
        return f"NatFamily({self.name or '?'}: {self.source} => {self.target})"

    def at(self, X: FinSet) -> FinFun:
        hit = self.components.get(X) or self._cache.get(X)
        if hit is not None:
            return hit
        if self.rule is not None:
            comp = self.rule(X)
        else:
            comp = self._extend(X)
        if comp.dom != apply_obj(self.source, X) or comp.cod != apply_obj(self.target, X):
            raise ValueError(f"component of {self!r} at {X} has the wrong type")
        self._cache[X] = comp
        return comp

    __call__ = at

    def _extend(self, X: FinSet) -> FinFun:
        dom = apply_obj(self.source, X)
        table: list[int | None] = [None] * len(dom)
        missing = len(table)
        for A in sorted(self.components, key=len):
            comp = self.components[A].table
            for f in fs.all_functions(A, X):
                pt = apply_mor(self.source, f).table
                qt = apply_mor(self.target, f).table
                for w0, w in enumerate(pt):
                    v = qt[comp[w0]]
                    cur = table[w]
                    if cur is None:
                        table[w] = v
                        missing -= 1
                    elif cur != v:
                        raise NaturalityError(f"{self!r}: transport to {X} is inconsistent at {dom.labels[w]}")
                if not missing:
                    break
            if not missing:
                break
        if missing:
            raise MissingComponent(f"{self!r} has no component at {X}")
        return FinFun._raw(dom, apply_obj(self.target, X), tuple(table))  # type: ignore[arg-type]

    def with_component(self, X: FinSet, comp: FinFun, name: str = "") -> "NatFamily":
        """A copy with one component replaced (used to build mutants)."""
        base = self

        def rule(Y: FinSet) -> FinFun:
            return comp if Y == X else base.at(Y)

        return NatFamily(self.source, self.target, rule=rule, universe=self.universe, name=name or f"{self.name}*")

    def same_on(self, other: "NatFamily", objects: Iterable[FinSet]) -> bool:
        return all(self.at(X) == other.at(X) for X in objects)


def check_natural(n: NatFamily, universe: Universe | None = None) -> LawReport:
    """Check every naturality square ``target(f) . n_A = n_B . source(f)``."""
    u = universe or n.universe
    if u is None:
        raise ValueError("no universe to check naturality over")
    rep = LawReport(f"naturality of {n.name or 'family'}: {n.source} => {n.target}")
    rep.counts["universe"] = u.describe()
    comps = {}
    for X in u:
        try:
            comps[X] = n.at(X)
        except MissingComponent as exc:
            raise ValueError(f"missing component: {exc}") from exc
    for A in u:
        for B in u:
            na, nb = comps[A], comps[B]
            for f in fs.all_functions(A, B):
                rep.checked += 1
                lhs = fs.compose(apply_mor(n.target, f), na).table
                rhs = fs.compose(nb, apply_mor(n.source, f)).table
                if lhs != rhs:
                    w = next(i for i in range(len(lhs)) if lhs[i] != rhs[i])
                    tgt = apply_obj(n.target, B)
                    return rep.fail(
                        A=str(A), B=str(B), f=f.describe(),
                        element=na.dom.labels[w], lhs=tgt.labels[lhs[w]], rhs=tgt.labels[rhs[w]],
                    )
    return rep


def natural_arrows(F: FunctorExpr, G: FunctorExpr, objects: Sequence[FinSet]):
    arrows = []
    for a, A in enumerate(objects):
        for b, B in enumerate(objects):
            for f in fs.all_functions(A, B):
                if a == b and f.table == tuple(range(len(A))):
                    continue
                arrows.append((a, b, apply_mor(F, f).table, apply_mor(G, f).table))
    return arrows


def enumerate_nat(
    F: FunctorExpr, G: FunctorExpr, universe: Universe, budget: int | None = None
) -> Iterator[NatFamily]:
    """Every natural family ``F => G`` over ``universe``, in a fixed order."""
    objs = universe.objects
    psizes = [len(apply_obj(F, X)) for X in objs]
    qsizes = [len(apply_obj(G, X)) for X in objs]
    arrows = natural_arrows(F, G, objs)
    for k, tables in enumerate(search_families(psizes, qsizes, arrows, budget=budget, label=f"{F} => {G}")):
        comps = {X: FinFun._raw(apply_obj(F, X), apply_obj(G, X), tables[i]) for i, X in enumerate(objs)}
        yield NatFamily(F, G, components=comps, universe=universe, name=f"#{k}")


def brute_force_nat(F: FunctorExpr, G: FunctorExpr, universe: Universe) -> list[NatFamily]:
    """Reference enumeration over the full product of component choices.

    Only feasible for tiny universes; used to validate ``enumerate_nat``.
    """
    from itertools import product as cartesian

    objs = universe.objects
    choices = [list(fs.all_functions(apply_obj(F, X), apply_obj(G, X))) for X in objs]
    found = []
    for combo in cartesian(*choices):
        fam = NatFamily(F, G, components=dict(zip(objs, combo)), universe=universe)
        if check_natural(fam).ok:
            found.append(fam)
    return found


def identity_family(F: FunctorExpr, universe: Universe | None = None) -> NatFamily:
    return NatFamily(F, F, rule=lambda X: fs.identity(apply_obj(F, X)), universe=universe, name="id")


def horizontal(alpha: NatFamily, beta: NatFamily) -> NatFamily:
    """``alpha * beta : F.H => G.K`` for ``alpha : F => G`` and ``beta : H => K``."""
    F, G, H, K = alpha.source, alpha.target, beta.source, beta.target

    def rule(X: FinSet) -> FinFun:
        return fs.compose(apply_mor(G, beta.at(X)), alpha.at(apply_obj(H, X)))

    return NatFamily(CompF(F, H), CompF(G, K), rule=rule, name=f"{alpha.name}*{beta.name}")


def vertical(beta: NatFamily, alpha: NatFamily) -> NatFamily:
    """``beta . alpha``."""
    return NatFamily(
        alpha.source, beta.target, rule=lambda X: fs.compose(beta.at(X), alpha.at(X)),
        name=f"{beta.name}.{alpha.name}",
    )
