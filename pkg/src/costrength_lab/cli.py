"""``costrength-lab``: law checks, enumerations and named suites from the shell.

Exit status: 0 when everything checked passes, 1 on a law failure, 2 on a usage
or parse error, 3 when a single suite was skipped for budget reasons.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import finset as fs
from .actions import ACTIONS, CART, check_graded_laws, colax_search_report, maybe_graded_monad
from .config import ResourceError, set_limits
from .costrength import (
    canonical_strength,
    check_costrength,
    check_strength,
    enumerate_copoints,
    enumerate_costrengths,
    enumerate_strengths,
    phi,
    psi,
    writer_costrength,
)
from .finset import FinFun
from .functors import ConstF, FunctorExpr, IdF, ProdF, Universe, apply_obj, default_universe, set_syntax
from .report import FAIL, PASS, SKIPPED, LawReport, LawViolation
from .syntax import (
    ParseError,
    automaton_from_json,
    fun_from_json,
    load_json,
    optic_from_json,
    optic_to_json,
    parse_functor,
    parse_set,
    parse_universe,
    set_from_json,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_SKIPPED = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# -- output -----------------------------------------------------------------------


def _print(args, payload: Any, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2, default=str))
    else:
        print(text)


def _emit_report(args, rep: LawReport) -> int:
    _print(args, rep.to_dict(), rep.render())
    return EXIT_PASS if rep.ok else EXIT_FAIL


def _universe(args) -> Universe:
    return parse_universe(args.universe) if args.universe else default_universe()


def _writer_set(F: FunctorExpr):
    if isinstance(F, ProdF) and isinstance(F.left, ConstF) and isinstance(F.right, IdF):
        return F.left.value
    raise UsageError(f"{F} is not of the form Writer(S)")


def _pick(items: list, index: int | None, what: str) -> list:
    if index is None:
        return items
    if not 0 <= index < len(items):
        raise UsageError(f"{what} index {index} out of range (found {len(items)})")
    return [items[index]]


def _costrength_for(args, F: FunctorExpr, u: Universe):
    a = ACTIONS[args.action]
    found = list(enumerate_costrengths(F, a, u))
    return _pick(found, getattr(args, "index", None), "costrength")


# -- commands ---------------------------------------------------------------------


def _constructed(name: str, F: FunctorExpr, u: Universe):
    from . import catalogue as cat

    if name == "symmetry":
        return writer_costrength(_writer_set(F), u)
    if name == "writer-cocart":
        return cat.writer_cocart_costrength(_writer_set(F), u)
    if name == "powerset":
        return cat.powerset_cocart_costrength(u)
    if name == "op-exp":
        return cat.op_exponential_costrength(F, u)
    if name == "mate-exp":
        return cat.exponential_mate_costrength(F, u)
    if name == "canonical-strength":
        return canonical_strength(F, u)
    raise UsageError(f"unknown construction {name!r}")


def cmd_check(args) -> int:
    F, u = parse_functor(args.functor), _universe(args)
    if args.construction:
        families = [_constructed(args.construction, F, u)]
    elif args.strength:
        families = _pick(list(enumerate_strengths(F, ACTIONS[args.action], u)), args.index, "strength")
    else:
        families = _costrength_for(args, F, u)
    if args.mutate:
        families = [f.mutated() for f in families]
    rep = LawReport(f"laws for {F} over {args.action}")
    rep.counts["families"] = len(families)
    for fam in families:
        rep.add(check_strength(fam) if fam.kind == "strength" else check_costrength(fam))
    return _emit_report(args, rep)


def cmd_enumerate(args) -> int:
    F, u = parse_functor(args.functor), _universe(args)
    a = ACTIONS[args.action]
    kind = "strengths" if args.strength else "costrengths"
    found = list((enumerate_strengths if args.strength else enumerate_costrengths)(F, a, u))
    payload = {"functor": str(F), "action": a.name, "kind": kind, "count": len(found), "universe": u.describe()}
    text = f"{len(found)} {kind} for {F} over {a.name} on universe {u.describe()}"
    if args.show:
        M, X = parse_set(args.grade), parse_set(args.object)
        comps = [fam.at(M, X).describe() for fam in found]
        payload["components"] = {"grade": set_syntax(M), "object": set_syntax(X), "tables": comps}
        text += "".join(f"\n  #{i} at ({set_syntax(M)}, {set_syntax(X)}): {c}" for i, c in enumerate(comps))
    _print(args, payload, text)
    return EXIT_PASS


def cmd_phi(args) -> int:
    F, u = parse_functor(args.functor), _universe(args)
    args.action = "cart"
    out, lines = [], []
    for i, c in enumerate(_costrength_for(args, F, u)):
        p = phi(c)
        comps = {set_syntax(X): p.at(X).describe() for X in u}
        out.append({"costrength": c.name, "copoint": comps})
        lines.append(f"copoint of costrength {c.name}:")
        lines.extend(f"  eps at {k}: {v}" for k, v in comps.items())
    _print(args, out, "\n".join(lines) or f"{F} has no cartesian costrength on this universe")
    return EXIT_PASS


def cmd_psi(args) -> int:
    F, u = parse_functor(args.functor), _universe(args)
    M, X = parse_set(args.grade), parse_set(args.object)
    copoints = _pick(list(enumerate_copoints(F, u)), args.index, "copoint")
    out, lines = [], []
    for p in copoints:
        c = psi(p, u)
        rep = check_costrength(c)
        comp = c.at(M, X).describe()
        out.append({"copoint": p.name, "status": rep.status, "component": comp})
        lines.append(f"costrength from copoint {p.name} [{rep.status.upper()}] at ({set_syntax(M)}, {set_syntax(X)}): {comp}")
    _print(args, out, "\n".join(lines) or f"{F} has no copoint on this universe")
    return EXIT_PASS if all(o["status"] != FAIL for o in out) else EXIT_FAIL


def cmd_mate(args) -> int:
    from .adjunction import check_triangles, mate_left, mate_right, writer_reader_adjunction
    from .functors import Reader

    # mates of Reader strengths on 0..3 outgrow the default cap; start small
    S = parse_set(args.set)
    u = _universe(args) if args.universe else Universe.of_sizes((0, 1, 2))
    adj = writer_reader_adjunction(S)
    rep = LawReport(f"mates for {adj.name}")
    rep.add(check_triangles(adj, u))
    st = canonical_strength(Reader(S), u)
    c = mate_left(adj, st)
    rep.add(check_costrength(c))
    for label, ok in (("mate of the Reader strength is the symmetry", c.same_as(writer_costrength(S, u))),
                      ("mate round trip is the identity", mate_right(adj, c).same_as(st))):
        rep.checked += 1
        if not ok:
            rep.fail(check=label)
    return _emit_report(args, rep)


def cmd_stream(args) -> int:
    from . import streams as st

    data = load_json(args.file)
    if args.stream_cmd == "behave":
        a = automaton_from_json(data)
        states = range(len(a.states)) if args.state is None else [args.state]
        out = []
        for q in states:
            item = {"state": a.states.labels[q], "lasso": st.behavior_lasso(a, q).render(a.alphabet)}
            if args.length is not None:
                item["prefix"] = str(st.behavior(a, q, args.length))
            out.append(item)
        _print(args, out, "\n".join(f"{o['state']}: {o.get('prefix', o['lasso'])}" for o in out))
        return EXIT_PASS
    if args.stream_cmd == "lift":
        a = automaton_from_json(data)
        F, u = parse_functor(args.functor), _universe(args)
        args.action = "cart"
        cs = _costrength_for(args, F, u)
        if not cs:
            raise UsageError(f"{F} has no cartesian costrength")
        rep = LawReport(f"lifting along {F}")
        for c in cs:
            lifted = st.lift(a, c)
            sub = rep.add(st.extraction_semantics_report(a, c, n=args.length))
            sub.notes.extend(f"{lifted.states.labels[w]}: {st.behavior_lasso(lifted, w).render(a.alphabet)}"
                             for w in range(len(lifted.states)))
        return _emit_report(args, rep)
    # upto
    F = parse_functor(data["functor"])
    X, M = set_from_json(data["carrier"]), set_from_json(data["alphabet"])
    copoints = list(enumerate_copoints(F))
    p = _pick(copoints, data.get("copoint", 0), "copoint")[0]
    system = st.UpToSystem(X, M, F, p, fun_from_json(data["phi"], X, fs.product(M, apply_obj(F, X))))
    sol, rep = st.solve_up_to(system, uniqueness=args.unique)
    rep.notes.extend(f"{X.labels[x]}: {l.render(M)}" for x, l in enumerate(st.all_lassos(sol)))
    rep.counts["solution"] = sol.to_json()
    return _emit_report(args, rep)


def cmd_optic(args) -> int:
    from . import optics as op

    optics = [optic_from_json(load_json(f)) for f in args.files]
    if args.optic_cmd == "compose":
        if len(optics) != 2:
            raise UsageError("compose takes OUTER and INNER optic files")
        o = op.compose_optics(optics[0], optics[1])
        _print(args, optic_to_json(o), json.dumps(optic_to_json(o)))
        return EXIT_PASS
    if args.optic_cmd == "nf":
        out = []
        for o in optics:
            nf = op.normal_form(o)
            out.append({k: getattr(nf, k).describe() for k in nf.__dataclass_fields__})
        _print(args, out, "\n".join(json.dumps(x) for x in out))
        return EXIT_PASS
    F = parse_functor(args.functor)
    (o,) = optics
    u = Universe(tuple(dict.fromkeys((*o.boundary, o.residual, *default_universe().objects))))
    c = _pick(list(enumerate_costrengths(F, o.action, u)), args.index, "costrength")[0]
    t = op.transform_optic(c, canonical_strength(F, u), o)
    _print(args, optic_to_json(t), json.dumps(optic_to_json(t)))
    return EXIT_PASS


def cmd_free(args) -> int:
    from .free_monad import build_terms, free_costrength, free_monad_law_report

    F = parse_functor(args.functor)
    if args.free_cmd == "build":
        T = build_terms(F, parse_set(args.set), args.depth)
        _print(args, T.to_json(), "\n".join(T.labels))
        return EXIT_PASS
    u = _universe(args)
    cs = list(enumerate_costrengths(F, CART, u))
    if not cs:
        raise UsageError(f"{F} has no cartesian costrength on this universe")
    c = _pick(cs, args.index, "costrength")[0]
    if args.free_cmd == "cst":
        M, X = parse_set(args.grade), parse_set(args.set)
        comp = free_costrength(F, c, M, X, args.depth)
        _print(args, comp.describe(), "\n".join(f"{k} -> {v}" for k, v in comp.describe().items()))
        return EXIT_PASS
    return _emit_report(args, free_monad_law_report(F, c, u, args.depth))


def cmd_graded(args) -> int:
    g = maybe_graded_monad()
    u = parse_universe(args.universe) if args.universe else Universe.of_sizes((0, 1, 2))
    rep = LawReport("graded Maybe")
    laws = rep.add(check_graded_laws(g, u))
    rep.counts["non_iso"] = laws.counts["non_iso"]
    rep.add(colax_search_report(g, u))
    return _emit_report(args, rep)


def cmd_suite(args) -> int:
    from .suites import REGISTRY, run_all, run_suite

    u = parse_universe(args.universe) if args.universe else None
    if args.suite_cmd == "list":
        _print(args, {k: s.statement for k, s in REGISTRY.items()},
               "\n".join(f"{k:20} {s.statement}" for k, s in REGISTRY.items()))
        return EXIT_PASS
    if args.suite_cmd == "run":
        params: dict[str, Any] = {}
        if args.functor:
            params["F"] = [parse_functor(t) for t in args.functor]
        if args.set:
            params["S"] = parse_set(args.set)
        try:
            res = run_suite(args.id, params, u, args.max_size, args.budget)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        _print(args, res.to_dict(args.timing), res.render())
        return {PASS: EXIT_PASS, FAIL: EXIT_FAIL, SKIPPED: EXIT_SKIPPED}[res.status]
    agg = run_all(args.pattern, u, args.max_size, args.budget, jobs=args.jobs)
    if args.json:
        print(agg.to_json(args.timing))
    else:
        print(agg.render(verbose=args.verbose))
    return EXIT_PASS if agg.ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-size", type=int, help="largest set any construction may build")
    common.add_argument("--budget", type=int, help="enumeration budget (also COSTRENGTH_BUDGET)")
    common.add_argument("--universe", help="comma-separated sets, e.g. 0,1,2,3 or 0,1,{a,b}")

    p = argparse.ArgumentParser(prog="costrength-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    def functor_cmd(name: str, help: str) -> argparse.ArgumentParser:
        q = sub.add_parser(name, parents=[common], help=help)
        q.add_argument("functor", help="functor expression, e.g. 'Writer(2)'")
        return q

    q = functor_cmd("check", "check the laws of enumerated or constructed (co)strengths")
    q.add_argument("--action", choices=sorted(ACTIONS), default="cart")
    q.add_argument("--strength", action="store_true", help="strengths instead of costrengths")
    q.add_argument("--index", type=int, help="only the enumerated family with this index")
    q.add_argument("--construction", help="symmetry, writer-cocart, powerset, op-exp, mate-exp, canonical-strength")
    q.add_argument("--mutate", action="store_true", help="change one table entry first (should fail)")
    q.set_defaults(run=cmd_check)

    q = functor_cmd("enumerate", "count every (co)strength on the universe")
    q.add_argument("--action", choices=sorted(ACTIONS), default="cart")
    q.add_argument("--strength", action="store_true")
    q.add_argument("--show", action="store_true", help="print the component at --grade, --object")
    q.add_argument("--grade", default="2")
    q.add_argument("--object", default="2")
    q.set_defaults(run=cmd_enumerate)

    q = functor_cmd("phi", "copoints of the cartesian costrengths")
    q.add_argument("--index", type=int)
    q.set_defaults(run=cmd_phi)

    q = functor_cmd("psi", "costrengths of the copoints")
    q.add_argument("--index", type=int)
    q.add_argument("--grade", default="2")
    q.add_argument("--object", default="2")
    q.set_defaults(run=cmd_psi)

    q = sub.add_parser("mate", parents=[common], help="mate of the Reader(S) strength")
    q.add_argument("--set", default="2")
    q.set_defaults(run=cmd_mate)

    q = sub.add_parser("stream", help="stream automata")
    ssub = q.add_subparsers(dest="stream_cmd", required=True)
    r = ssub.add_parser("behave", parents=[common], help="behaviour of each state")
    r.add_argument("file")
    r.add_argument("--state", type=int)
    r.add_argument("--length", type=int, help="print this many outputs instead of the lasso")
    r = ssub.add_parser("lift", parents=[common], help="lift along a costrength and check extraction")
    r.add_argument("file")
    r.add_argument("--functor", required=True)
    r.add_argument("--index", type=int)
    r.add_argument("--length", type=int)
    r = ssub.add_parser("upto", parents=[common], help="solve a system up to a copointed functor")
    r.add_argument("file")
    r.add_argument("--unique", action="store_true", help="search every automaton on the carrier")
    q.set_defaults(run=cmd_stream)

    q = sub.add_parser("optic", help="optics from files")
    osub = q.add_subparsers(dest="optic_cmd", required=True)
    r = osub.add_parser("compose", parents=[common], help="OUTER INNER")
    r.add_argument("files", nargs=2)
    r = osub.add_parser("nf", parents=[common], help="normal forms")
    r.add_argument("files", nargs="+")
    r = osub.add_parser("transform", parents=[common], help="apply Optic(F, F)")
    r.add_argument("files", nargs=1)
    r.add_argument("--functor", required=True)
    r.add_argument("--index", type=int, default=0)
    q.set_defaults(run=cmd_optic)

    q = sub.add_parser("free", help="depth-bounded free monads")
    fsub = q.add_subparsers(dest="free_cmd", required=True)
    for name, help in (("build", "list the terms"), ("cst", "costrength component"), ("laws", "law report")):
        r = fsub.add_parser(name, parents=[common], help=help)
        r.add_argument("--functor", required=True)
        r.add_argument("--depth", type=int, default=2)
        r.add_argument("--set", default="2")
        r.add_argument("--grade", default="2")
        r.add_argument("--index", type=int)
    q.set_defaults(run=cmd_free)

    q = sub.add_parser("graded", help="graded monads")
    gsub = q.add_subparsers(dest="graded_cmd", required=True)
    gsub.add_parser("maybe", parents=[common], help="graded Maybe laws and the lax marker")
    q.set_defaults(run=cmd_graded)

    q = sub.add_parser("suite", help="named suites")
    ssub = q.add_subparsers(dest="suite_cmd", required=True)
    r = ssub.add_parser("run", parents=[common], help="run one suite")
    r.add_argument("id")
    r.add_argument("--functor", action="append", help="override the functors (repeatable)")
    r.add_argument("--set", help="override the parameter set S")
    r.add_argument("--timing", action="store_true", help="include timings in JSON")
    r = ssub.add_parser("all", parents=[common], help="run every suite matching PATTERN")
    r.add_argument("pattern", nargs="?")
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--verbose", action="store_true")
    r.add_argument("--timing", action="store_true")
    ssub.add_parser("list", parents=[common], help="list suite ids")
    q.set_defaults(run=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    budget = args.budget
    if budget is None and os.environ.get("COSTRENGTH_BUDGET"):
        budget = int(os.environ["COSTRENGTH_BUDGET"])
    args.budget = budget
    if (args.max_size is not None and args.max_size <= 0) or (budget is not None and budget <= 0):
        print("error: budgets must be positive", file=sys.stderr)
        return EXIT_USAGE
    set_limits(max_size=args.max_size, budget=budget)
    try:
        return args.run(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LawViolation as exc:
        print(f"error: input violates a law\n{exc.report.render()}", file=sys.stderr)
        return EXIT_FAIL
    except ResourceError as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return EXIT_SKIPPED
    except (OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
