"""Mixed optics given by representatives ``(M, fwd, bwd)``.

Two representatives are identified when related by a chain of slides

    (N, (r.X) . f, b)  ~  (M, f, b . (r.Y))      for r : M -> N.

For the cartesian action the lens normal form ``(get, put)`` decides this
equivalence; for the cocartesian action the prism normal form
``(match, build)`` does.  :func:`slide_completeness_report` checks both
claims against the slide relation itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Iterator, Sequence

from . import finset as fs
from .actions import ActionModel
from .costrength import Costrength, Strength, check_costrength, check_strength
from .finset import FinFun, FinSet
from .functors import apply_mor, apply_obj, canonical
from .report import LawReport, require

Boundary = tuple[FinSet, FinSet, FinSet, FinSet]


@dataclass(frozen=True)
class OpticRep:
    action: ActionModel
    residual: FinSet
    fwd: FinFun
    bwd: FinFun
    boundary: Boundary

    def __post_init__(self):
        a, M = self.action, self.residual
        Xp, X, Y, Yp = self.boundary
        if self.fwd.dom != Xp or self.fwd.cod != a.act_obj(M, X):
            raise ValueError(f"fwd must be a function {Xp} -> {M}.{X}")
        if self.bwd.dom != a.act_obj(M, Y) or self.bwd.cod != Yp:
            raise ValueError(f"bwd must be a function {M}.{Y} -> {Yp}")


@dataclass(frozen=True)
class LensNF:
    get: FinFun
    put: FinFun


@dataclass(frozen=True)
class PrismNF:
    match: FinFun
    build: FinFun


def make_optic(a: ActionModel, M: FinSet, fwd: FinFun, bwd: FinFun, X: FinSet, Y: FinSet) -> OpticRep:
    return OpticRep(a, M, fwd, bwd, (fwd.dom, X, Y, bwd.cod))


def identity_optic(a: ActionModel, X: FinSet, Y: FinSet) -> OpticRep:
    return OpticRep(a, a.grade_unit, a.unitor_inv(X), a.unitor(Y), (X, X, Y, Y))


def compose_optics(o2: OpticRep, o1: OpticRep) -> OpticRep:
    """``o2`` outside, ``o1`` inside: ``o1`` must fill the hole of ``o2``."""
    if o2.action.name != o1.action.name:
        raise ValueError("optics over different actions")
    Ap, A, B, Bp = o2.boundary
    A1, X, Y, B1 = o1.boundary
    if A != A1 or B != B1:
        raise ValueError(f"boundary mismatch: ({A}, {B}) against ({A1}, {B1})")
    a = o2.action
    M2, M1 = o2.residual, o1.residual
    fwd = fs.compose_all(a.associator_inv(M2, M1, X), a.act_id(M2, o1.fwd), o2.fwd)
    bwd = fs.compose_all(o2.bwd, a.act_id(M2, o1.bwd), a.associator(M2, M1, Y))
    return OpticRep(a, a.grade_tensor(M2, M1), fwd, bwd, (Ap, X, Y, Bp))


def lens_nf(o: OpticRep) -> LensNF:
    if o.action.name != "cart":
        raise ValueError("lens normal forms need the cartesian action")
    Xp, X, Y, Yp = o.boundary
    M = o.residual
    get = fs.compose(fs.pi2(M, X), o.fwd)
    ny = len(Y)
    put = []
    for xp in range(len(Xp)):
        m = fs.unpair(X, o.fwd.table[xp])[0]
        put.extend(o.bwd.table[m * ny + y] for y in range(ny))
    return LensNF(get, FinFun._raw(fs.product(Xp, Y), Yp, tuple(put)))


def prism_nf(o: OpticRep) -> PrismNF:
    if o.action.name != "cocart":
        raise ValueError("prism normal forms need the cocartesian action")
    Xp, X, Y, Yp = o.boundary
    M = o.residual
    residue = fs.compose_all(fs.inl(Yp, X), o.bwd, fs.inl(M, Y))
    match = fs.compose(fs.copair(residue, fs.inr(Yp, X)), o.fwd)
    build = fs.compose(o.bwd, fs.inr(M, Y))
    return PrismNF(match, build)


def normal_form(o: OpticRep) -> LensNF | PrismNF:
    if o.action.name == "cart":
        return lens_nf(o)
    if o.action.name == "cocart":
        return prism_nf(o)
    raise ValueError(f"no normal form for optics over {o.action.name}")


def equivalent(o1: OpticRep, o2: OpticRep) -> bool:
    return o1.boundary == o2.boundary and normal_form(o1) == normal_form(o2)


def slide(a: ActionModel, r: FinFun, f: FinFun, b: FinFun, X: FinSet, Y: FinSet) -> tuple[OpticRep, OpticRep]:
    """The two sides of one slide: ``(M, f, b . (r.Y))`` and ``(N, (r.X) . f, b)``."""
    M, N = a.grade_source(r), a.grade_target(r)
    left = make_optic(a, M, f, fs.compose(b, a.act_grade(r, Y)), X, Y)
    right = make_optic(a, N, fs.compose(a.act_grade(r, X), f), b, X, Y)
    return left, right


def all_optics(a: ActionModel, boundary: Boundary, residuals: Sequence[FinSet]) -> Iterator[OpticRep]:
    Xp, X, Y, Yp = boundary
    for M in residuals:
        for f in fs.all_functions(Xp, a.act_obj(M, X)):
            for b in fs.all_functions(a.act_obj(M, Y), Yp):
                yield OpticRep(a, M, f, b, boundary)


def representative_count(a: ActionModel, boundary: Boundary, residuals: Sequence[FinSet]) -> int:
    Xp, X, Y, Yp = boundary
    return sum(len(a.act_obj(M, X)) ** len(Xp) * len(Yp) ** len(a.act_obj(M, Y)) for M in residuals)


def slide_completeness_sweep(a: ActionModel, boundaries: Sequence[Boundary], residuals: Sequence[FinSet],
                             max_representatives: int = 10**5) -> LawReport:
    """:func:`slide_completeness_report` on every boundary small enough to enumerate."""
    rep = LawReport(f"normal forms match slide classes over {a.name}")
    done = 0
    for bd in boundaries:
        n = representative_count(a, bd, residuals)
        if n > max_representatives:
            rep.skip(f"boundary {[len(S) for S in bd]}: {n} representatives (limit {max_representatives})")
            continue
        sub = slide_completeness_report(a, bd, residuals)
        done += 1
        if not sub.ok:
            rep.add(sub)
            break
        rep.checked += sub.checked
    rep.counts.update(boundaries=done, residuals=[len(M) for M in residuals])
    return rep


def slide_completeness_report(a: ActionModel, boundary: Boundary, residuals: Sequence[FinSet]) -> LawReport:
    """Normal-form equality coincides with slide-chain reachability.

    Every representative with residual in ``residuals`` is enumerated, every
    slide between them is applied, and the resulting classes are compared
    with the classes of equal normal forms.
    """
    Xp, X, Y, Yp = boundary
    rep = LawReport(f"slide classes against normal forms over {a.name}")
    fwds = {M: list(fs.all_functions(Xp, a.act_obj(M, X))) for M in residuals}
    bwds = {M: list(fs.all_functions(a.act_obj(M, Y), Yp)) for M in residuals}
    f_index = {M: {f.table: i for i, f in enumerate(fwds[M])} for M in residuals}
    b_index = {M: {b.table: i for i, b in enumerate(bwds[M])} for M in residuals}
    # representative (M, i, j) is the integer base[M] + i * |bwds[M]| + j
    base, n_reps = {}, 0
    for M in residuals:
        base[M] = n_reps
        n_reps += len(fwds[M]) * len(bwds[M])
    parent = list(range(n_reps))
    slides = 0
    for M in residuals:
        nbM = len(bwds[M])
        for N in residuals:
            nbN = len(bwds[N])
            for r in a.grade_arrows(M, N):
                rX, rY = a.act_grade(r, X).table, a.act_grade(r, Y).table
                jf = [f_index[N][tuple(rX[v] for v in f.table)] for f in fwds[M]]
                ib = [b_index[M][tuple(b.table[v] for v in rY)] for b in bwds[N]]
                for i, j_f in enumerate(jf):
                    left, right = base[M] + i * nbM, base[N] + j_f * nbN
                    for j, i_b in enumerate(ib):
                        x, y = left + i_b, right + j
                        while parent[x] != x:
                            parent[x] = x = parent[parent[x]]
                        while parent[y] != y:
                            parent[y] = y = parent[parent[y]]
                        if x != y:
                            if x < y:
                                parent[y] = x
                            else:
                                parent[x] = y
                slides += len(jf) * len(ib)

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    classes: dict = {}
    by_nf: dict = {}
    for M in residuals:
        nb = len(bwds[M])
        for i, f in enumerate(fwds[M]):
            for j, b in enumerate(bwds[M]):
                nf = normal_form(OpticRep(a, M, f, b, boundary))
                root = find(base[M] + i * nb + j)
                rep.checked += 1
                if classes.setdefault(root, nf) != nf:
                    return rep.fail(reason="slides relate optics with different normal forms", residual=str(M))
                if by_nf.setdefault(nf, root) != root:
                    return rep.fail(reason="equal normal forms not related by slides", residual=str(M))
    rep.counts.update(representatives=n_reps, slides=slides, classes=len(by_nf))
    return rep


# -- the transformer ---------------------------------------------------------------


def transform_optic(cst: Costrength, st: Strength, o: OpticRep, validate: bool = False) -> OpticRep:
    """``fwd' = cst . F(fwd)`` and ``bwd' = G(bwd) . st``."""
    if cst.action.name != o.action.name or st.action.name != o.action.name:
        raise ValueError("the costrength, strength and optic must share one action")
    if validate:
        require(check_costrength(cst))
        require(check_strength(st))
    F, G = cst.functor, st.functor
    Xp, X, Y, Yp = o.boundary
    M = o.residual
    fwd = fs.compose(cst.at(M, X), apply_mor(F, o.fwd))
    bwd = fs.compose(apply_mor(G, o.bwd), st.at(M, Y))
    return OpticRep(o.action, M, fwd, bwd, (apply_obj(F, Xp), apply_obj(F, X), apply_obj(G, Y), apply_obj(G, Yp)))


def random_optic(a: ActionModel, boundary: Boundary, residual: FinSet, rng: random.Random) -> OpticRep:
    Xp, X, Y, Yp = boundary
    MX, MY = a.act_obj(residual, X), a.act_obj(residual, Y)
    if (len(Xp) and not len(MX)) or (len(MY) and not len(Yp)):
        raise ValueError("no optic with this residual and boundary")
    fwd = FinFun._raw(Xp, MX, tuple(rng.randrange(len(MX)) for _ in range(len(Xp))))
    bwd = FinFun._raw(MY, Yp, tuple(rng.randrange(len(Yp)) for _ in range(len(MY))))
    return OpticRep(a, residual, fwd, bwd, boundary)


def lens_boundaries(sizes: Iterable[int] = (1, 2, 3)) -> list[Boundary]:
    sizes = list(sizes)
    return [tuple(canonical(n) for n in b) for b in cartesian(sizes, repeat=4)]  # type: ignore[misc]


def transformer_functoriality_report(
    cst: Costrength,
    st: Strength,
    boundaries: Sequence[Boundary],
    residuals: Sequence[FinSet],
    samples: int = 2,
    seed: int = 0,
) -> LawReport:
    """Identity, composition and equivalence preservation for ``Optic(F, G)``.

    For every boundary, ``samples`` seeded random optics are drawn per
    residual; composites use an inner optic whose outer boundary is the hole
    of the outer one.  Equivalence preservation is checked on both sides of
    every slide between the sampled representatives.
    """
    a = cst.action
    rng = random.Random(seed)
    rep = LawReport(f"Optic({cst.functor}, {st.functor}) is functorial")
    ident = rep.add(LawReport("identity"))
    comp = rep.add(LawReport("composition"))
    equiv = rep.add(LawReport("equivalence preservation"))
    F, G = cst.functor, st.functor
    sizes = sorted({len(S) for b in boundaries for S in b})
    for bd in boundaries:
        Xp, X, Y, Yp = bd
        ident.checked += 1
        lhs = transform_optic(cst, st, identity_optic(a, X, Y))
        rhs = identity_optic(a, apply_obj(F, X), apply_obj(G, Y))
        if not equivalent(lhs, rhs):
            ident.fail(boundary=[str(S) for S in bd])
        for M in residuals:
            for _ in range(samples):
                try:
                    o2 = random_optic(a, bd, M, rng)
                except ValueError:
                    continue
                inner = (X, canonical(rng.choice(sizes)), canonical(rng.choice(sizes)), Y)
                try:
                    o1 = random_optic(a, inner, rng.choice(list(residuals)), rng)
                except ValueError:
                    continue
                comp.checked += 1
                whole = transform_optic(cst, st, compose_optics(o2, o1))
                parts = compose_optics(transform_optic(cst, st, o2), transform_optic(cst, st, o1))
                if not equivalent(whole, parts) and comp.ok:
                    comp.fail(boundary=[str(S) for S in bd], outer_residual=str(M), inner_residual=str(o1.residual))
                for N in residuals:
                    for r in a.grade_arrows(M, N):
                        b = FinFun._raw(a.act_obj(N, Y), Yp, tuple(rng.randrange(len(Yp)) for _ in range(len(a.act_obj(N, Y))))) \
                            if len(Yp) else None
                        if b is None and len(a.act_obj(N, Y)):
                            continue
                        if b is None:
                            b = FinFun._raw(a.act_obj(N, Y), Yp, ())
                        left, right = slide(a, r, o2.fwd, b, X, Y)
                        equiv.checked += 1
                        if not equivalent(left, right):
                            return rep.fail(reason="slide not respected by the normal form", boundary=[str(S) for S in bd])
                        if not equivalent(transform_optic(cst, st, left), transform_optic(cst, st, right)) and equiv.ok:
                            equiv.fail(boundary=[str(S) for S in bd], source_residual=str(M), target_residual=str(N),
                                       r=r.describe())
    return rep
