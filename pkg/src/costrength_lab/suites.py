"""Named law suites, one per statement id, with a deterministic runner.

Each suite builds a :class:`LawReport` from the library; suites that check a
family of constructions also carry a mutation witness (a deliberately broken
variant that must be rejected) so a pass is never vacuous.
"""

from __future__ import annotations

import fnmatch
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from . import finset as fs
from .actions import (
    CART,
    COCART,
    OP_EXP,
    check_action_coherence,
    check_graded_laws,
    colax_search_report,
    maybe_graded_monad,
    with_corrupted_associator,
)
from .adjunction import (
    check_triangles,
    hom_bijection_report,
    identity_adjunction,
    mate_left,
    mate_right,
    writer_reader_adjunction,
)
from .catalogue import (
    cofree_copointed,
    comonad_costrength_report,
    const_filter,
    copoint_from_mutation,
    copower_costrength,
    copower_report,
    coproduct_costrong,
    costate_comonad,
    exponential_mate_costrength,
    filtrable_costrength,
    injections,
    maybe_filter,
    op_exponential_costrength,
    powerset_cocart_costrength,
    powerset_filter,
    writer_cocart_costrength,
    writer_comonad,
)
from .config import ResourceError, limits
from .costrength import (
    Costrength,
    canonical_strength,
    check_costrength,
    check_costrong_nat,
    check_projection_law,
    check_strength,
    enumerate_costrengths,
    enumerate_strengths,
    identity_costrength,
    identity_strength,
    psi,
    roundtrip_report,
    uniqueness_square_report,
    writer_costrength,
)
from .finset import ONE, FinSet
from .functors import (
    ID,
    MAYBE,
    POW,
    ConstF,
    Costate,
    FunctorExpr,
    ProdF,
    Reader,
    Universe,
    Writer,
    canonical,
    check_natural,
    default_universe,
    set_syntax,
)
from .report import FAIL, PASS, SKIPPED, LawReport

TWO = canonical(2)
SMALL = Universe.of_sizes((0, 1, 2))
DOCTRINAL_MAX_SIZE = 2**14


@dataclass(frozen=True)
class Suite:
    statement_id: str
    statement: str
    runner: Callable[["Context"], LawReport]


@dataclass
class Context:
    """Parameters handed to a suite; ``universe`` overrides the suite's default."""

    params: dict[str, Any] = field(default_factory=dict)
    universe: Universe | None = None
    max_size: int | None = None  # set only when the caller chose a cap explicitly

    def u(self, default: Universe) -> Universe:
        return self.universe or default

    def functors(self, default: list[FunctorExpr]) -> list[FunctorExpr]:
        F = self.params.get("F")
        if F is None:
            return default
        return list(F) if isinstance(F, (list, tuple)) else [F]

    def set(self, key: str, default: FinSet) -> FinSet:
        return self.params.get(key, default)


def _witness(rep: LawReport, what: str, broken: LawReport) -> LawReport:
    """Passes exactly when the broken variant is rejected."""
    w = rep.add(LawReport(f"mutation witness: {what}"))
    w.checked = 1
    if broken.ok:
        w.fail(reason="the mutated structure passed its checks")
    else:
        w.notes.append(f"rejected by: {broken.counterexample}")
    return w


def _expect(rep: LawReport, label: str, got: Any, want: Any) -> bool:
    rep.checked += 1
    if got != want:
        rep.fail(check=label, got=got, expected=want)
        return False
    return True


# -- actions and graded monads ---------------------------------------------------


def _act_coherence(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    rep = LawReport("actions satisfy pentagon, triangles and naturality")
    for a in (CART, COCART, OP_EXP):
        rep.add(check_action_coherence(a, u, u))
        bad = with_corrupted_associator(a, TWO, TWO, TWO)
        _witness(rep, f"corrupted associator of {a.name}", check_action_coherence(bad, u, u))
    return rep


def _graded_maybe(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    g = maybe_graded_monad()
    rep = LawReport("graded Maybe is a lax, not strong, graded monad")
    laws = rep.add(check_graded_laws(g, u))
    rep.counts["non_iso"] = laws.counts["non_iso"]
    marker = rep.add(LawReport("comparison at (m, f) is not invertible"))
    _expect(marker, "m*f invertible", laws.counts["iso"]["m*f"], False)
    rep.add(colax_search_report(g, u))
    return rep


# -- strengths and costrengths of concrete functors ------------------------------


def _unique_strengths(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    rep = LawReport("every functor has exactly one cartesian strength")
    for F in ctx.functors([ID, Writer(TWO), Reader(TWO), MAYBE, POW]):
        sub = rep.add(LawReport(f"strengths of {F}"))
        found = list(enumerate_strengths(F, CART, u))
        sub.counts["strengths"] = len(found)
        if _expect(sub, "number of strengths", len(found), 1):
            _expect(sub, "equals the canonical strength", found[0].same_as(canonical_strength(F, u)), True)
        sub.add(check_strength(canonical_strength(F, u)))
    st = canonical_strength(Reader(TWO), u)
    _witness(rep, "mutated Reader strength", check_strength(st.mutated(TWO, TWO)))
    return rep


def _writer_comonad(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    S = ctx.set("S", TWO)
    rep = LawReport(f"Writer({set_syntax(S)}) has the symmetry as its only costrength")
    w = writer_costrength(S, u)
    rep.add(check_costrength(w))
    found = list(enumerate_costrengths(Writer(S), CART, u))
    rep.counts.update(costrengths=len(found), universe=u.describe())
    if _expect(rep, "number of costrengths", len(found), 1):
        _expect(rep, "equals the symmetry", found[0].same_as(w), True)
    rep.add(comonad_costrength_report(writer_comonad(S), u))
    _witness(rep, "mutated symmetry", check_costrength(w.mutated(TWO, TWO)))
    return rep


def _count_suite(F: FunctorExpr, u: Universe, want: int | None, minimum: int = 0) -> LawReport:
    rep = LawReport(f"cartesian costrengths of {F}")
    found = list(enumerate_costrengths(F, CART, u))
    rep.counts.update(costrengths=len(found), universe=u.describe())
    if want is not None:
        _expect(rep, "number of costrengths", len(found), want)
    else:
        rep.checked += 1
        if len(found) < minimum:
            rep.fail(check="at least", got=len(found), expected=minimum)
    for c in found:
        rep.add(check_costrength(c))
    return rep


def _reader(ctx: Context) -> LawReport:
    S = ctx.set("S", TWO)
    rep = _count_suite(Reader(S), ctx.u(default_universe()), len(S))
    rep.notes.append(f"one costrength per element of {set_syntax(S)}, relative to the universe")
    return rep


def _costate(ctx: Context) -> LawReport:
    S = ctx.set("S", TWO)
    rep = _count_suite(Costate(S), ctx.u(default_universe()), None, minimum=2)
    rep.notes.append("not unique; the count is recorded, not prescribed")
    return rep


def _maybe(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    Fs = ctx.functors([MAYBE])
    if len(Fs) == 1:
        return _count_suite(Fs[0], u, 0)
    rep = LawReport("functors without a cartesian costrength")
    for F in Fs:
        rep.add(_count_suite(F, u, 0))
    return rep


# -- the cocartesian and exponential catalogue ------------------------------------


def _powerset(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    rep = LawReport("powerset is costrong over coproducts")
    c = powerset_cocart_costrength(u)
    rep.add(check_costrength(c))
    _witness(rep, "mutated powerset costrength", check_costrength(c.mutated(TWO, TWO)))
    return rep


def _filtrable(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    rep = LawReport("filtrable functors are costrong over coproducts")
    cases = [(POW, powerset_filter()), (ConstF(TWO), const_filter(TWO)), (MAYBE, maybe_filter())]
    for F, filt in cases:
        rep.add(check_natural(filt, u))
        rep.add(check_costrength(filtrable_costrength(F, filt, u)))
    same = rep.add(LawReport("powerset filter recovers the powerset costrength"))
    _expect(same, "tables agree", filtrable_costrength(POW, powerset_filter(), u).same_as(powerset_cocart_costrength(u)), True)
    c = filtrable_costrength(MAYBE, maybe_filter(), u)
    _witness(rep, "mutated Maybe filter costrength", check_costrength(c.mutated(TWO, TWO)))
    return rep


def _writer_cocart(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    S = ctx.set("S", TWO)
    rep = LawReport(f"Writer({set_syntax(S)}) is costrong over coproducts")
    c = writer_cocart_costrength(S, u)
    rep.add(check_costrength(c))
    _witness(rep, "mutated Writer costrength", check_costrength(c.mutated(TWO, TWO)))
    return rep


def _op_exp(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    rep = LawReport("every functor is costrong for the exponential action")
    for F in ctx.functors([ID, Writer(TWO), Reader(TWO), MAYBE, POW]):
        c = op_exponential_costrength(F, u)
        rep.add(check_costrength(c))
        agree = rep.add(LawReport(f"formula agrees with the mate for {F}"))
        _expect(agree, "tables agree", c.same_as(exponential_mate_costrength(F, u)), True)
    c = op_exponential_costrength(Reader(TWO), u)
    _witness(rep, "mutated exponential costrength", check_costrength(c.mutated(TWO, TWO)))
    return rep


def _copower(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    S = ctx.set("S", TWO)
    rep = copower_report(S, ctx.functors([ID, MAYBE, POW, Reader(TWO)]), u)
    d = copower_costrength(S, MAYBE, u)
    bad = d.with_component(TWO, fs.mutate(d.at(TWO), 0))
    _witness(rep, "mutated copower component", check_natural(bad, u))
    return rep


def _uniqueness(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    rep = LawReport("costrengths satisfy the uniqueness square")
    for S in (ONE, TWO):
        rep.add(uniqueness_square_report(writer_costrength(S, u)))
    for c in enumerate_costrengths(Reader(TWO), CART, u):
        rep.add(uniqueness_square_report(c))
    # Every map into the terminal unit is the same map, so over (Set, x) the square
    # holds for any family of the right type. Record that explicitly.
    w = writer_costrength(TWO, u)
    degenerate = rep.add(LawReport("the square cannot tell a broken family apart"))
    _expect(degenerate, "mutated symmetry passes the square", uniqueness_square_report(w.mutated(TWO, TWO)).ok, True)
    degenerate.notes.append("the unit of (Set, x) is terminal; uniqueness shows up in the enumeration counts instead")
    return rep


# -- costrong = copointed ---------------------------------------------------------


_CORRESPONDENCE_FUNCTORS = [ID, Writer(TWO), Reader(TWO), Costate(TWO), ProdF(ID, MAYBE)]


def _projection(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    rep = LawReport("second projection commutes with every cartesian costrength")
    for F in ctx.functors(_CORRESPONDENCE_FUNCTORS):
        found = list(enumerate_costrengths(F, CART, u))
        sub = rep.add(LawReport(f"costrengths of {F}"))
        sub.counts["costrengths"] = len(found)
        for c in found:
            sub.add(check_projection_law(c))
    w = writer_costrength(TWO, u)
    _witness(rep, "mutated symmetry", check_projection_law(w.with_component(TWO, TWO, fs.mutate(w.at(TWO, TWO), 0, 1))))
    return rep


def _correspondence(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    Fs = ctx.functors(_CORRESPONDENCE_FUNCTORS)
    if len(Fs) == 1:
        return roundtrip_report(Fs[0], u)
    rep = LawReport("cartesian costrengths correspond to copoints")
    for F in Fs:
        sub = rep.add(roundtrip_report(F, u))
        rep.counts[str(F)] = {k: sub.counts[k] for k in ("copoints", "costrengths")}
    return rep


def _comonads(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    rep = LawReport("comonads are costrong through their counit")
    for w in (writer_comonad(TWO), costate_comonad(TWO)):
        rep.add(comonad_costrength_report(w, u))
    return rep


def _cofree(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    rep = LawReport("the cofree copointed functor is costrong")
    for F in ctx.functors([MAYBE, ConstF(ONE), POW, Reader(TWO)]):
        G, p = cofree_copointed(F)
        sub = rep.add(LawReport(f"{G}"))
        sub.add(check_natural(p.epsilon, u))
        sub.add(check_costrength(psi(p, u)))
    G, p = cofree_copointed(MAYBE)
    _witness(rep, "mutated copoint", check_natural(copoint_from_mutation(p, TWO).epsilon, u))
    return rep


# -- optics and streams -----------------------------------------------------------


def _optics(ctx: Context) -> LawReport:
    from .optics import lens_boundaries, slide_completeness_sweep, transformer_functoriality_report

    u = ctx.u(default_universe())
    residuals = list(u)
    rep = LawReport("optics: the Writer transformer and normal forms")
    w, st = writer_costrength(TWO, u), canonical_strength(Writer(TWO), u)
    boundaries = lens_boundaries(ctx.params.get("sizes", (0, 1, 2, 3)))
    rep.add(transformer_functoriality_report(w, st, boundaries, residuals))
    cap = ctx.params.get("max_representatives", 10**5)
    for a in (CART, COCART):
        rep.add(slide_completeness_sweep(a, boundaries, residuals, cap))
    bad = st.mutated(TWO, TWO)
    _witness(rep, "mutated strength", transformer_functoriality_report(w, bad, lens_boundaries((1, 2)), residuals[:3]))
    return rep


_STREAM_STATES = 4


def _stream_extraction(ctx: Context) -> LawReport:
    from .streams import all_automata, extraction_semantics_report

    u = ctx.u(default_universe())
    n_states = ctx.params.get("states", _STREAM_STATES)
    rep = LawReport("lifted automata behave like their extracted state")
    total = 0
    for F in ctx.functors([Writer(TWO), Costate(TWO)]):
        sub = rep.add(LawReport(f"automata lifted along costrengths of {F}"))
        found = list(enumerate_costrengths(F, CART, u))
        for c in found:
            checked = 0
            for k in range(1, n_states + 1):
                for a in all_automata(k, 2):
                    r = extraction_semantics_report(a, c, validate=False)
                    checked += r.checked
                    if not r.ok:
                        sub.add(r)
                        break
            sub.checked += checked
            total += 1
        sub.counts.update(costrengths=len(found), states=f"1..{n_states}", alphabet=2)
    rep.counts["costrengths"] = total
    w = writer_costrength(TWO, u)
    from .streams import StreamAutomaton

    a = StreamAutomaton.from_tables([0, 1], [1, 0])
    _witness(rep, "mutated symmetry", extraction_semantics_report(a, w.mutated(TWO, TWO, 1), validate=False))
    return rep


def _stream_upto(ctx: Context) -> LawReport:
    from .costrength import Copoint
    from .functors import NatFamily
    from .streams import UpToSystem, all_lassos, solve_up_to

    FF = ProdF(ID, ID)
    X, M = canonical(3), TWO
    FX = fs.product(X, X)
    phi_tab = [fs.pair_index(FX, 0, 1 * 3 + 2), fs.pair_index(FX, 1, 0 * 3 + 2), fs.pair_index(FX, 1, 2 * 3 + 0)]
    rep = LawReport("systems up to X x X have exactly one solution")
    for which, proj in (("first", fs.pi1), ("second", fs.pi2)):
        eps = NatFamily(FF, ID, rule=lambda Y, proj=proj: proj(Y, Y), name=f"{which} projection")
        s = UpToSystem(X, M, FF, Copoint(FF, eps), fs.FinFun(X, fs.product(M, FX), phi_tab))
        sol, sub = solve_up_to(s, uniqueness=True)
        sub.law += f" with the {which} projection"
        sub.notes.append("behaviours: " + ", ".join(l.render(M) for l in all_lassos(sol)))
        rep.add(sub)
    eps = NatFamily(FF, ID, rule=lambda Y: fs.pi1(Y, Y), name="first projection")
    s = UpToSystem(X, M, FF, Copoint(FF, eps), fs.FinFun(X, fs.product(M, FX), phi_tab))
    from .streams import StreamAutomaton, bartels_report

    sol, _ = solve_up_to(s)
    wrong = StreamAutomaton(X, M, fs.mutate(sol.out, 0), sol.next)
    _witness(rep, "perturbed solution", bartels_report(s, all_lassos(wrong)))
    return rep


# -- adjunctions and constructions -------------------------------------------


def _hom(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    rep = LawReport("costrong maps out of M0 x - are points of F(1)")
    for M0 in (canonical(0), ONE, TWO):
        for F in ctx.functors([Writer(TWO), Reader(TWO)]):
            rep.add(hom_bijection_report(M0, F, u))
    return rep


def _doctrinal(ctx: Context) -> LawReport:
    u = ctx.u(default_universe())
    rep = LawReport("mates between Reader strengths and Writer costrengths")
    # the Reader(2) mates pass through sets of up to 5832 elements
    with limits(max_size=ctx.max_size or DOCTRINAL_MAX_SIZE):
        for S in (ONE, TWO):
            adj = writer_reader_adjunction(S)
            rep.add(check_triangles(adj, u))
            st = canonical_strength(Reader(S), u)
            c = mate_left(adj, st)
            sub = rep.add(LawReport(f"mates for {adj.name}"))
            _expect(sub, "mate of the Reader strength is the symmetry", c.same_as(writer_costrength(S, u)), True)
            _expect(sub, "round trip on the strength", mate_right(adj, c).same_as(st), True)
            # the reverse round trip passes through [S, S x [S, S x X]]; keep it on small sets
            w = writer_costrength(S, SMALL)
            _expect(sub, "round trip on the costrength", mate_left(adj, mate_right(adj, w)).same_as(w), True)
        ia = identity_adjunction()
        sub = rep.add(LawReport("mates for Id -| Id"))
        _expect(sub, "identity strength to identity costrength",
                mate_left(ia, identity_strength(CART, u)).same_as(identity_costrength(CART, u)), True)
        adj = writer_reader_adjunction(TWO)
        st = canonical_strength(Reader(TWO), u)
        LX = fs.product(TWO, ONE)  # the cell mate_left reads at X = 1
        bad = mate_left(adj, st.with_component(TWO, LX, fs.mutate(st.at(TWO, LX), 1)), validate=False)
        _witness(rep, "mate of a mutated strength", check_costrength(bad))
    return rep


def _coproducts(ctx: Context) -> LawReport:
    u = ctx.u(SMALL)
    rep = LawReport("coproducts of costrong functors")
    w = writer_costrength(TWO, u)
    readers = list(enumerate_costrengths(Reader(TWO), CART, u))
    pairs: list[tuple[Costrength, Costrength]] = [(w, w), (w, readers[0]), (readers[0], identity_costrength(CART, u))]
    for c1, c2 in pairs:
        c = coproduct_costrong(c1, c2)
        rep.add(check_costrength(c))
        left, right = injections(c1.functor, c2.functor)
        rep.add(check_costrong_nat(left, c1, c))
        rep.add(check_costrong_nat(right, c2, c))
    c = coproduct_costrong(w, w)
    _witness(rep, "mutated coproduct costrength", check_costrength(c.mutated(TWO, TWO)))
    return rep


def _free_monad(ctx: Context) -> LawReport:
    from .free_monad import free_costrength_family, free_monad_law_report

    u = ctx.u(SMALL)
    d = ctx.params.get("depth", 3)
    rep = LawReport(f"free monads up to depth {d}")
    for S in (ONE, TWO):
        rep.add(free_monad_law_report(Writer(S), writer_costrength(S, u), u, d))
    w = writer_costrength(TWO, u)
    bad = w.with_component(TWO, TWO, fs.mutate(w.at(TWO, TWO), 0))
    _witness(rep, "mutated costrength lifted to depth 2", check_costrength(free_costrength_family(bad, 2, u)))
    return rep


REGISTRY: dict[str, Suite] = {
    s.statement_id: s
    for s in (
        Suite("act-coherence", "actions of (Set, x), (Set, +) and the exponential action are coherent", _act_coherence),
        Suite("graded-maybe", "graded Maybe is lax but not strong", _graded_maybe),
        Suite("ex-2.6", "every Set functor has a unique cartesian strength", _unique_strengths),
        Suite("ex-2.7", "Writer is a costrong comonad via the symmetry", _writer_comonad),
        Suite("ex-2.8-1a", "Reader(S) costrengths correspond to elements of S", _reader),
        Suite("ex-2.8-1b", "Costate(S) has more than one costrength", _costate),
        Suite("ex-2.8-1c", "Maybe has no cartesian costrength", _maybe),
        Suite("ex-2.8-2a", "powerset is costrong over coproducts", _powerset),
        Suite("ex-2.8-2b", "filtrable functors are costrong over coproducts", _filtrable),
        Suite("ex-2.8-2c", "Writer is costrong over coproducts", _writer_cocart),
        Suite("ex-2.8-3", "every functor is costrong for the exponential action", _op_exp),
        Suite("ex-2.8-4", "copowers distribute over functors", _copower),
        Suite("prop-uniqueness", "the uniqueness square for costrengths", _uniqueness),
        Suite("lemma-3", "second projection commutes with cartesian costrengths", _projection),
        Suite("thm-3", "cartesian costrengths correspond to copoints", _correspondence),
        Suite("cor-3-comonads", "comonads on Set are costrong", _comonads),
        Suite("cor-3-cofree", "the cofree copointed functor is costrong", _cofree),
        Suite("optic-transformer", "costrong/strong pairs act functorially on optics", _optics),
        Suite("stream-extraction", "lifted automata follow the extracted state", _stream_extraction),
        Suite("stream-upto", "coinduction up to a copointed functor", _stream_upto),
        Suite("app-hom-adjunction", "costrong maps out of M0 x - are points of F(1)", _hom),
        Suite("app-doctrinal", "strengths and costrengths are mates", _doctrinal),
        Suite("app-coproducts", "coproducts of costrong functors", _coproducts),
        Suite("app-free-monad", "free monads on costrong functors are costrong", _free_monad),
    )
}


# -- running ----------------------------------------------------------------------


@dataclass
class SuiteResult:
    statement_id: str
    statement: str
    status: str
    report: LawReport | None
    reason: str | None = None
    timing: float = 0.0

    @property
    def counts(self) -> dict:
        return self.report.counts if self.report else {}

    @property
    def counterexample(self):
        return self.report.counterexample if self.report else None

    def to_dict(self, timing: bool = False) -> dict:
        out: dict[str, Any] = {"suite": self.statement_id, "statement": self.statement, "status": self.status}
        if self.reason:
            out["reason"] = self.reason
        if self.report is not None:
            out["law"] = self.report.law
            if self.counts:
                out["counts"] = self.counts
            if self.counterexample is not None:
                out["counterexample"] = self.counterexample
            out["report"] = self.report.to_dict()
        if timing:
            out["timing"] = round(self.timing, 3)
        return out

    def render(self) -> str:
        head = f"[{self.status.upper()}] {self.statement_id}: {self.statement}"
        if self.reason:
            head += f"\n    {self.reason}"
        if self.report is not None:
            head += "\n" + self.report.render(1)
        return head


def run_suite(statement_id: str, params: dict | None = None, universe: Universe | None = None,
              max_size: int | None = None, budget: int | None = None) -> SuiteResult:
    """Run one suite; exceeding a size cap or budget gives ``skipped`` with the reason."""
    try:
        suite = REGISTRY[statement_id]
    except KeyError:
        raise KeyError(f"unknown suite {statement_id!r}; known: {', '.join(REGISTRY)}") from None
    ctx = Context(dict(params or {}), universe, max_size)
    start = time.perf_counter()
    try:
        with limits(max_size=max_size, budget=budget):
            rep = suite.runner(ctx)
    except ResourceError as exc:
        return SuiteResult(statement_id, suite.statement, SKIPPED, None, reason=f"{type(exc).__name__}: {exc}",
                           timing=time.perf_counter() - start)
    return SuiteResult(statement_id, suite.statement, rep.status, rep, timing=time.perf_counter() - start)


def select(pattern: str | None = None) -> list[str]:
    return [k for k in REGISTRY if pattern is None or fnmatch.fnmatchcase(k, pattern)]


def _run_one(args: tuple) -> SuiteResult:
    return run_suite(*args)


@dataclass
class Aggregate:
    results: list[SuiteResult]

    @property
    def status(self) -> str:
        if any(r.status == FAIL for r in self.results):
            return FAIL
        return PASS

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self, timing: bool = False) -> dict:
        tally = {s: sum(r.status == s for r in self.results) for s in (PASS, FAIL, SKIPPED)}
        return {"status": self.status, "counts": tally, "suites": [r.to_dict(timing) for r in self.results]}

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2, default=str)

    def render(self, verbose: bool = False) -> str:
        lines = [r.render() if verbose else r.render().splitlines()[0] for r in self.results]
        tally = self.to_dict()["counts"]
        lines.append(f"{self.status.upper()}: {tally[PASS]} passed, {tally[FAIL]} failed, {tally[SKIPPED]} skipped")
        return "\n".join(lines)


def run_all(pattern: str | None = None, universe: Universe | None = None, max_size: int | None = None,
            budget: int | None = None, jobs: int = 1) -> Aggregate:
    """Run every matching suite; results come back in registry order whatever ``jobs`` is."""
    ids = select(pattern)
    args = [(i, None, universe, max_size, budget) for i in ids]
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, args))
    else:
        results = [_run_one(a) for a in args]
    return Aggregate(results)
