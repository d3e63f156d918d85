"""Exhaustive enumeration of natural families by constraint propagation.

A family assigns to every object ``o`` a function ``P(o) -> Q(o)``.  Each
arrow ``o -> o'`` contributes the naturality equations

    alpha_{o'}(P(f)(w)) = Q(f)(alpha_o(w))        for every w in P(o).

These are functional in the direction of the arrow, so choosing one value
forces many others.  The search assigns variables object by object (smallest
``P`` first), forward-propagates every choice and backtracks on conflict.  The
result is exactly the set of families satisfying all supplied equations; the
pruning only changes the order in which dead branches are discovered.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .config import BudgetExceeded, current

Arrow = tuple[int, int, Sequence[int], Sequence[int]]


def search_families(
    psizes: Sequence[int],
    qsizes: Sequence[int],
    arrows: Sequence[Arrow],
    pinned: dict[int, Sequence[int]] | None = None,
    budget: int | None = None,
    label: str = "",
) -> Iterator[list[tuple[int, ...]]]:
    """Yield every assignment of component tables satisfying ``arrows``.

    ``pinned`` fixes whole components in advance (used for unit laws).
    ``budget`` bounds the number of candidate values tried.
    """
    budget = current().budget if budget is None else budget
    n_obj = len(psizes)
    values: list[list[int | None]] = [[None] * p for p in psizes]
    out: list[list[tuple[int, Sequence[int], Sequence[int]]]] = [[] for _ in range(n_obj)]
    for s, t, pt, qt in arrows:
        out[s].append((t, pt, qt))
    trail: list[tuple[int, int]] = []

    def assign(o: int, i: int, v: int) -> bool:
        stack = [(o, i, v)]
        while stack:
            o, i, v = stack.pop()
            cur = values[o][i]
            if cur is None:
                values[o][i] = v
                trail.append((o, i))
                for t, pt, qt in out[o]:
                    stack.append((t, pt[i], qt[v]))
            elif cur != v:
                return False
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            o, i = trail.pop()
            values[o][i] = None

    for o, table in (pinned or {}).items():
        for i, v in enumerate(table):
            if not assign(o, i, v):
                return

    order = sorted(range(n_obj), key=lambda o: (psizes[o], o))
    variables = [(o, i) for o in order for i in range(psizes[o])]
    nvars = len(variables)

    def advance(pos: int) -> int:
        while pos < nvars:
            o, i = variables[pos]
            if values[o][i] is None:
                return pos
            pos += 1
        return pos

    def candidates(pos: int) -> list[int]:
        o, i = variables[pos]
        cons = []
        for t, pt, qt in out[o]:
            val = values[t][pt[i]]
            if val is not None:
                cons.append((qt, val))
        return [v for v in range(qsizes[o]) if all(qt[v] == val for qt, val in cons)]

    def snapshot() -> list[tuple[int, ...]]:
        return [tuple(vals) for vals in values]  # type: ignore[arg-type]

    trials = 0
    pos = advance(0)
    if pos == nvars:
        yield snapshot()
        return
    frames = [[pos, candidates(pos), 0, len(trail)]]
    while frames:
        frame = frames[-1]
        pos, cands, k, mark = frame
        undo(mark)
        if k >= len(cands):
            frames.pop()
            continue
        frame[2] = k + 1
        trials += 1
        if trials > budget:
            raise BudgetExceeded(
                f"enumeration {label or ''} exceeded budget {budget} "
                f"(component domain sizes {list(psizes)}, codomain sizes {list(qsizes)})"
            )
        o, i = variables[pos]
        if assign(o, i, cands[k]):
            nxt = advance(pos + 1)
            if nxt == nvars:
                yield snapshot()
            else:
                frames.append([nxt, candidates(nxt), 0, len(trail)])
