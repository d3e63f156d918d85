"""Stream automata, their behaviours as lassos, lifting along a costrength,
and solving coinductive systems up to a copointed functor.

Behaviours of finite automata are eventually periodic, so a behaviour is
stored exactly as a :class:`Lasso` (a finite prefix followed by a repeated
cycle); comparing lassos compares whole streams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterator

from . import finset as fs
from .costrength import Copoint, Costrength, check_costrength, phi, psi
from .finset import FinFun, FinSet
from .functors import FunctorExpr, Universe, apply_mor, apply_obj, check_natural
from .report import LawReport, LawViolation, require


@dataclass(frozen=True)
class StreamAutomaton:
    states: FinSet
    alphabet: FinSet
    out: FinFun
    next: FinFun

    def __post_init__(self):
        if self.out.dom != self.states or self.out.cod != self.alphabet:
            raise ValueError("out must be a function states -> alphabet")
        if self.next.dom != self.states or self.next.cod != self.states:
            raise ValueError("next must be a function states -> states")

    @classmethod
    def from_tables(cls, out: list[int], nxt: list[int], alphabet: FinSet | int = 2) -> "StreamAutomaton":
        M = FinSet.of_size(alphabet) if isinstance(alphabet, int) else alphabet
        C = FinSet.of_size(len(out))
        return cls(C, M, FinFun(C, M, out), FinFun(C, C, nxt))

    def coalgebra(self) -> FinFun:
        """``<out, next> : C -> M x C``."""
        return fs.pair(self.out, self.next)

    def to_json(self) -> dict:
        return {"states": self.states.to_json(), "alphabet": self.alphabet.to_json(),
                "out": list(self.out.table), "next": list(self.next.table)}

    @classmethod
    def from_json(cls, data: dict) -> "StreamAutomaton":
        C, M = FinSet(data["states"]), FinSet(data["alphabet"])
        return cls(C, M, FinFun(C, M, data["out"]), FinFun(C, C, data["next"]))


@dataclass(frozen=True)
class BehaviorPrefix:
    outputs: tuple[int, ...]
    length: int
    alphabet: FinSet = field(compare=False)

    def __str__(self) -> str:
        return " ".join(self.alphabet.labels[o] for o in self.outputs)


@dataclass(frozen=True)
class Lasso:
    """The stream ``prefix . cycle . cycle . ...`` in canonical form."""

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    @classmethod
    def canonical(cls, prefix, cycle) -> "Lasso":
        prefix, cycle = list(prefix), list(cycle)
        if not cycle:
            raise ValueError("a lasso needs a nonempty cycle")
        n = len(cycle)
        for d in range(1, n + 1):
            if n % d == 0 and cycle == cycle[d:] + cycle[:d]:
                cycle = cycle[:d]
                break
        while prefix and prefix[-1] == cycle[-1]:
            prefix.pop()
            cycle = cycle[-1:] + cycle[:-1]
        return cls(tuple(prefix), tuple(cycle))

    def at(self, i: int) -> int:
        p = len(self.prefix)
        return self.prefix[i] if i < p else self.cycle[(i - p) % len(self.cycle)]

    def take(self, n: int) -> tuple[int, ...]:
        return tuple(self.at(i) for i in range(n))

    def head(self) -> int:
        return self.at(0)

    def tail(self) -> "Lasso":
        if self.prefix:
            return Lasso.canonical(self.prefix[1:], self.cycle)
        return Lasso.canonical((), self.cycle[1:] + self.cycle[:1])

    def render(self, alphabet: FinSet) -> str:
        pre = " ".join(alphabet.labels[o] for o in self.prefix)
        cyc = " ".join(alphabet.labels[o] for o in self.cycle)
        return f"{pre} | {cyc}".strip() if pre else f"| {cyc}"


def behavior(a: StreamAutomaton, c: int, n: int) -> BehaviorPrefix:
    if not 0 <= c < len(a.states):
        raise IndexError(f"no state {c} in an automaton with {len(a.states)} states")
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    outs = []
    for _ in range(n):
        outs.append(a.out.table[c])
        c = a.next.table[c]
    return BehaviorPrefix(tuple(outs), n, a.alphabet)


def behavior_lasso(a: StreamAutomaton, c: int) -> Lasso:
    if not 0 <= c < len(a.states):
        raise IndexError(f"no state {c} in an automaton with {len(a.states)} states")
    seen: dict[int, int] = {}
    orbit = []
    while c not in seen:
        seen[c] = len(orbit)
        orbit.append(c)
        c = a.next.table[c]
    mu = seen[c]
    outs = [a.out.table[q] for q in orbit]
    return Lasso.canonical(outs[:mu], outs[mu:])


def all_lassos(a: StreamAutomaton) -> list[Lasso]:
    return [behavior_lasso(a, c) for c in range(len(a.states))]


def lasso_automaton(lassos: list[Lasso], alphabet: FinSet) -> tuple[StreamAutomaton, dict[Lasso, int]]:
    """The subcoalgebra of streams generated by ``lassos`` (closed under tail)."""
    index: dict[Lasso, int] = {}
    order: list[Lasso] = []
    todo = list(lassos)
    while todo:
        l = todo.pop(0)
        if l in index:
            continue
        index[l] = len(order)
        order.append(l)
        todo.append(l.tail())
    C = FinSet(f"s{i}" for i in range(len(order)))
    out = FinFun(C, alphabet, [l.head() for l in order])
    nxt = FinFun(C, C, [index[l.tail()] for l in order])
    return StreamAutomaton(C, alphabet, out, nxt), index


def lift(a: StreamAutomaton, c: Costrength, validate: bool = True) -> StreamAutomaton:
    """``F(C) -> F(M x C) -> M x F(C)``."""
    F = c.functor
    M, C = a.alphabet, a.states
    if validate:
        require(check_costrength(c))
    step = fs.compose(c.at(M, C), apply_mor(F, a.coalgebra()))
    FC = apply_obj(F, C)
    out = fs.compose(fs.pi1(M, FC), step)
    nxt = fs.compose(fs.pi2(M, FC), step)
    if validate and nxt != apply_mor(F, a.next):
        rep = LawReport("lifted next is F(next)")
        rep.fail(element=FC.labels[next(i for i, (p, q) in enumerate(zip(nxt.table, apply_mor(F, a.next).table)) if p != q)])
        raise LawViolation(rep)
    return StreamAutomaton(FC, M, out, nxt)


def extraction_semantics_report(a: StreamAutomaton, c: Costrength, n: int | None = None,
                                validate: bool = True) -> LawReport:
    """Every ``w`` in ``F(C)`` behaves in the lifted automaton as ``eps(w)`` behaves in ``a``.

    Lassos are compared, so the check covers all prefix lengths; ``n``
    additionally compares explicit prefixes of that length.
    """
    lifted = lift(a, c, validate=validate)
    eps = phi(c).at(a.states)
    rep = LawReport(f"extraction semantics for {c.functor} on {len(a.states)} states")
    base = all_lassos(a)
    for w in range(len(lifted.states)):
        rep.checked += 1
        got, want = behavior_lasso(lifted, w), base[eps.table[w]]
        if got != want:
            return rep.fail(state=lifted.states.labels[w], lifted=got.render(a.alphabet), extracted=want.render(a.alphabet))
        if n is not None and behavior(lifted, w, n) != behavior(a, eps.table[w], n):
            return rep.fail(state=lifted.states.labels[w], prefix_length=n)
    return rep


class NotAMorphism(ValueError):
    pass


def check_morphism(a: StreamAutomaton, b: StreamAutomaton, h: FinFun) -> int | None:
    """The first state where ``h`` fails to be a coalgebra morphism, or None."""
    for q in range(len(a.states)):
        if b.out.table[h.table[q]] != a.out.table[q] or b.next.table[h.table[q]] != h.table[a.next.table[q]]:
            return q
    return None


def morphism_preservation_report(a: StreamAutomaton, b: StreamAutomaton, h: FinFun, c: Costrength) -> LawReport:
    if h.dom != a.states or h.cod != b.states:
        raise ValueError("h must map the states of the first automaton to those of the second")
    bad = check_morphism(a, b, h)
    if bad is not None:
        raise NotAMorphism(f"h is not a coalgebra morphism at state {a.states.labels[bad]}")
    la, lb = lift(a, c), lift(b, c)
    Fh = apply_mor(c.functor, h)
    rep = LawReport(f"lifting along {c.functor} preserves coalgebra morphisms")
    rep.checked += 2
    if fs.compose(lb.out, Fh) != la.out:
        return rep.fail(leg="out")
    if fs.compose(lb.next, Fh) != fs.compose(Fh, la.next):
        return rep.fail(leg="next")
    return rep


def minimize(a: StreamAutomaton) -> tuple[StreamAutomaton, FinFun]:
    """Quotient by behavioural equivalence, with the quotient map."""
    lassos = all_lassos(a)
    classes: dict[Lasso, int] = {}
    for l in lassos:
        classes.setdefault(l, len(classes))
    Q = FinSet.of_size(len(classes))
    h = FinFun(a.states, Q, [classes[l] for l in lassos])
    rep = {cls: q for q, cls in reversed(list(enumerate(h.table)))}
    out = FinFun(Q, a.alphabet, [a.out.table[rep[k]] for k in range(len(Q))])
    nxt = FinFun(Q, Q, [h.table[a.next.table[rep[k]]] for k in range(len(Q))])
    return StreamAutomaton(Q, a.alphabet, out, nxt), h


def all_automata(states: int, alphabet: int) -> Iterator[StreamAutomaton]:
    C, M = FinSet.of_size(states), FinSet.of_size(alphabet)
    for out in cartesian(range(alphabet), repeat=states):
        for nxt in cartesian(range(states), repeat=states):
            yield StreamAutomaton(C, M, FinFun._raw(C, M, out), FinFun._raw(C, C, nxt))


# -- coinduction up to a copointed functor ------------------------------------


@dataclass
class UpToSystem:
    """A system ``phi : X -> M x F(X)`` together with a copoint of ``F``."""

    carrier: FinSet
    alphabet: FinSet
    functor: FunctorExpr
    copoint: Copoint
    phi: FinFun

    def __post_init__(self):
        if self.phi.dom != self.carrier or self.phi.cod != fs.product(self.alphabet, apply_obj(self.functor, self.carrier)):
            raise ValueError("phi must be a function X -> M x F(X)")
        if self.copoint.functor != self.functor:
            raise ValueError("the copoint must be for the system's functor")


def _universe_for(*sets: FinSet) -> Universe:
    seen: list[FinSet] = []
    for S in sets:
        if S not in seen:
            seen.append(S)
    return Universe(tuple(seen))


def bartels_report(s: UpToSystem, b: list[Lasso]) -> LawReport:
    """Check ``<head, tail> . b = (id x alg . F(b)) . phi`` with lassos.

    The algebra ``F(M^w) -> M^w`` is evaluated on the finite subcoalgebra of
    streams generated by the image of ``b``: lift that subcoalgebra along
    ``psi(eps)`` and take behaviours.
    """
    F, M, X = s.functor, s.alphabet, s.carrier
    L, index = lasso_automaton(b, M)
    c = psi(s.copoint, _universe_for(L.states, X), grades=(M,))
    lifted = lift(L, c, validate=False)
    Fb = apply_mor(F, FinFun(X, L.states, [index[l] for l in b]))
    FX = apply_obj(F, X)
    rep = LawReport("solution diagram")
    for x in range(len(X)):
        m, w = fs.unpair(FX, s.phi.table[x])
        rep.checked += 2
        if b[x].head() != m:
            return rep.fail(state=X.labels[x], leg="head", behaviour=b[x].render(M), expected=M.labels[m])
        alg = behavior_lasso(lifted, Fb.table[w])
        if b[x].tail() != alg:
            return rep.fail(state=X.labels[x], leg="tail", tail=b[x].tail().render(M), algebra=alg.render(M))
    return rep


def solve_up_to(s: UpToSystem, uniqueness: bool = False, max_states: int = 3) -> tuple[StreamAutomaton, LawReport]:
    """``out = pi1 . phi``, ``next = eps . pi2 . phi``, with a validity report.

    With ``uniqueness``, every automaton on the carrier is tried and the
    report counts the distinct behaviour maps that also satisfy the diagram.
    """
    F, M, X = s.functor, s.alphabet, s.carrier
    require(check_natural(s.copoint.epsilon, _universe_for(*Universe.of_sizes((0, 1, 2)).objects, X)))
    FX = apply_obj(F, X)
    head = fs.compose(fs.pi1(M, FX), s.phi)
    nxt = fs.compose_all(s.copoint.at(X), fs.pi2(M, FX), s.phi)
    sol = StreamAutomaton(X, M, head, nxt)
    b = all_lassos(sol)
    rep = LawReport(f"solution up to {F}")
    rep.add(bartels_report(s, b))
    if uniqueness:
        uniq = rep.add(LawReport("uniqueness over all automata on the carrier"))
        if len(X) > max_states:
            uniq.mark_skipped(f"carrier has {len(X)} states (limit {max_states})")
        else:
            found = {tuple(b)}
            for cand in _automata_on(X, M):
                bc = all_lassos(cand)
                if tuple(bc) in found:
                    continue
                uniq.checked += 1
                if bartels_report(s, bc).ok:
                    found.add(tuple(bc))
            uniq.counts["solutions"] = len(found)
            if len(found) != 1:
                uniq.fail(reason="more than one behaviour satisfies the diagram", solutions=len(found))
    return sol, rep


def _automata_on(X: FinSet, M: FinSet) -> Iterator[StreamAutomaton]:
    for out in cartesian(range(len(M)), repeat=len(X)):
        for nxt in cartesian(range(len(X)), repeat=len(X)):
            yield StreamAutomaton(X, M, FinFun._raw(X, M, out), FinFun._raw(X, X, nxt))
