"""Text syntax for sets and functor expressions, and the JSON file formats.

    set     := INT | '{' [label (',' label)*] '}'
    functor := 'Id' | 'Maybe'
             | 'Const(' set ')' | 'Writer(' set ')' | 'Reader(' set ')' | 'Costate(' set ')'
             | 'Prod(' functor ',' functor ')' | 'Coprod(' functor ',' functor ')'
             | 'Exp(' set ',' functor ')' | 'Pow(' functor ')' | 'Comp(' functor ',' functor ')'

The integer ``1`` denotes the terminal set ``{*}``; other integers ``n``
denote ``{e0, ..., e(n-1)}``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .finset import FinFun, FinSet
from .functors import (
    ID,
    MAYBE,
    CompF,
    ConstF,
    CoprodF,
    Costate,
    ExpF,
    FunctorExpr,
    PowF,
    ProdF,
    Reader,
    Universe,
    Writer,
    canonical,
)


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0, line: int | None = None, column: int | None = None):
        if line is None:
            line = text.count("\n", 0, pos) + 1
            column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_'\-]*)|(.))", re.S)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            start = m.start(m.lastindex) if m.lastindex else m.end()
            if m.group(1):
                self.tokens.append(("int", m.group(1), start))
            elif m.group(2):
                self.tokens.append(("name", m.group(2), start))
            elif m.group(3):
                self.tokens.append(("sym", m.group(3), start))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, self.text, self.peek()[2] if pos is None else pos)

    def expect(self, sym: str) -> None:
        kind, val, pos = self.take()
        if kind != "sym" or val != sym:
            raise self.error(f"expected '{sym}', found {val or 'end of input'!r}", pos)

    def finish(self) -> None:
        kind, val, pos = self.peek()
        if kind != "end":
            raise self.error(f"unexpected {val!r}", pos)

    def set_(self) -> FinSet:
        kind, val, pos = self.take()
        if kind == "int":
            return canonical(int(val))
        if kind == "sym" and val == "{":
            labels: list[str] = []
            if self.peek()[:2] == ("sym", "}"):
                self.take()
                return FinSet(())
            while True:
                k, v, p = self.take()
                if k not in ("name", "int") and not (k == "sym" and v == "*"):
                    raise self.error(f"expected an element label, found {v or 'end of input'!r}", p)
                if v in labels:
                    raise self.error(f"duplicate element {v!r}", p)
                labels.append(v)
                k, v, p = self.take()
                if (k, v) == ("sym", "}"):
                    return FinSet(labels)
                if (k, v) != ("sym", ","):
                    raise self.error(f"expected ',' or '}}', found {v or 'end of input'!r}", p)
        raise self.error(f"expected a set (a size or {{labels}}), found {val or 'end of input'!r}", pos)

    def functor(self) -> FunctorExpr:
        kind, val, pos = self.take()
        if kind != "name":
            raise self.error(f"expected a functor, found {val or 'end of input'!r}", pos)
        if val == "Id":
            return ID
        if val == "Maybe":
            return MAYBE
        unary_set = {"Const": ConstF, "Writer": Writer, "Reader": Reader, "Costate": Costate}
        binary = {"Prod": ProdF, "Coprod": CoprodF, "Comp": CompF}
        if val in unary_set:
            self.expect("(")
            S = self.set_()
            self.expect(")")
            return unary_set[val](S)
        if val in binary:
            self.expect("(")
            left = self.functor()
            self.expect(",")
            right = self.functor()
            self.expect(")")
            return binary[val](left, right)
        if val == "Exp":
            self.expect("(")
            S = self.set_()
            self.expect(",")
            body = self.functor()
            self.expect(")")
            return ExpF(S, body)
        if val == "Pow":
            self.expect("(")
            body = self.functor()
            self.expect(")")
            return PowF(body)
        raise self.error(f"unknown functor {val!r}", pos)


def parse_functor(text: str) -> FunctorExpr:
    p = _Parser(text)
    F = p.functor()
    p.finish()
    return F


def parse_set(text: str) -> FinSet:
    p = _Parser(text)
    S = p.set_()
    p.finish()
    return S


def parse_universe(text: str) -> Universe:
    """A comma-separated list of sets, e.g. ``0,1,2,3`` or ``0,1,{a,b}``."""
    p = _Parser(text)
    objs = [p.set_()]
    while p.peek()[:2] == ("sym", ","):
        p.take()
        objs.append(p.set_())
    p.finish()
    return Universe(tuple(objs))


# -- JSON files -------------------------------------------------------------------


def load_json(path: str | Path) -> Any:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None


def set_from_json(data: Any) -> FinSet:
    """A JSON array of labels, a size, or a string in set syntax."""
    if isinstance(data, list):
        return FinSet([str(x) for x in data])
    if isinstance(data, int):
        return canonical(data)
    if isinstance(data, str):
        return parse_set(data)
    raise ParseError(f"cannot read a set from {data!r}", line=0, column=0)


def fun_from_json(data: dict, dom: FinSet | None = None, cod: FinSet | None = None) -> FinFun:
    if isinstance(data, list):
        if dom is None or cod is None:
            raise ParseError("a bare table needs a known domain and codomain", line=0, column=0)
        return FinFun(dom, cod, data)
    return FinFun(set_from_json(data["dom"]) if "dom" in data else dom,
                  set_from_json(data["cod"]) if "cod" in data else cod, data["table"])


def automaton_from_json(data: dict):
    from .streams import StreamAutomaton

    C, M = set_from_json(data["states"]), set_from_json(data["alphabet"])
    return StreamAutomaton(C, M, FinFun(C, M, data["out"]), FinFun(C, C, data["next"]))


def optic_from_json(data: dict):
    """``{"action": "cart", "residual": ..., "boundary": [X', X, Y, Y'], "fwd": [...], "bwd": [...]}``."""
    from .actions import ACTIONS
    from .optics import OpticRep

    try:
        a = ACTIONS[data["action"]]
    except KeyError:
        raise ParseError(f"unknown action {data.get('action')!r}", line=0, column=0) from None
    M = set_from_json(data["residual"])
    Xp, X, Y, Yp = (set_from_json(s) for s in data["boundary"])
    fwd = fun_from_json(data["fwd"], Xp, a.act_obj(M, X))
    bwd = fun_from_json(data["bwd"], a.act_obj(M, Y), Yp)
    return OpticRep(a, M, fwd, bwd, (Xp, X, Y, Yp))


def optic_to_json(o) -> dict:
    return {
        "action": o.action.name,
        "residual": o.residual.to_json(),
        "boundary": [S.to_json() for S in o.boundary],
        "fwd": list(o.fwd.table),
        "bwd": list(o.bwd.table),
    }
