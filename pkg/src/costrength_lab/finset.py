"""Finite sets and total functions, the base category for every diagram.

Elements are positions ``0..n-1``; labels are presentation only.  Constructed
sets use fixed orders so independently built objects compare equal without
any isomorphism search:

* products are A-major: ``(a, b)`` sits at ``a * |B| + b``;
* coproducts put A first: ``inl a`` at ``a``, ``inr b`` at ``|A| + b``;
* exponentials ``[A, B]`` enumerate functions with the first position of
  ``A`` as the most significant base-``|B|`` digit (``itertools.product``
  order);
* powersets use bitmasks, element ``i`` present iff bit ``i`` is set.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Iterator, Sequence

from .config import check_size


class DomainMismatch(ValueError):
    """Two morphisms do not fit together."""

    def __init__(self, op: str, left: "FinSet", right: "FinSet"):
        super().__init__(f"{op}: {left!s} does not match {right!s}")
        self.left = left
        self.right = right


class FinSet:
    __slots__ = ("labels", "_hash", "_index")

    def __init__(self, labels: Iterable[object]):
        labels = tuple(str(x) for x in labels)
        check_size(len(labels))
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in {labels!r}")
        self.labels = labels
        self._hash = hash(labels)
        self._index = None

    @classmethod
    def of_size(cls, n: int) -> "FinSet":
        return _canonical(n)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self.labels)))

    def index(self, label: str) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def label(self, i: int) -> str:
        return self.labels[i]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinSet):
            return NotImplemented
        return self._hash == other._hash and self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if len(self.labels) > 8:
            return f"FinSet(<{len(self.labels)} elements>)"
        return f"FinSet({list(self.labels)!r})"

    def __str__(self) -> str:
        if len(self.labels) > 8:
            return "{" + ",".join(self.labels[:6]) + f",... ({len(self.labels)})" + "}"
        return "{" + ",".join(self.labels) + "}"

    def to_json(self) -> list[str]:
        return list(self.labels)


@lru_cache(maxsize=None)
def _canonical(n: int) -> FinSet:
    return FinSet(f"e{i}" for i in range(n))


ZERO = FinSet(())
ONE = FinSet(("*",))


class FinFun:
    """A total function ``dom -> cod`` stored as a table of codomain indices."""

    __slots__ = ("dom", "cod", "table", "_hash")

    def __init__(self, dom: FinSet, cod: FinSet, table: Sequence[int]):
        table = tuple(int(v) for v in table)
        if len(table) != len(dom):
            raise ValueError(f"table has {len(table)} entries, domain has {len(dom)}")
        n = len(cod)
        for i, v in enumerate(table):
            if not 0 <= v < n:
                raise ValueError(f"entry {i} -> {v} outside codomain of size {n}")
        self.dom, self.cod, self.table = dom, cod, table
        self._hash = None

    @classmethod
    def _raw(cls, dom: FinSet, cod: FinSet, table: tuple) -> "FinFun":
        f = object.__new__(cls)
        f.dom, f.cod, f.table, f._hash = dom, cod, table, None
        return f

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __matmul__(self, other: "FinFun") -> "FinFun":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinFun):
            return NotImplemented
        return self.table == other.table and self.dom == other.dom and self.cod == other.cod

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.table))
        return self._hash

    def __repr__(self) -> str:
        return f"FinFun({self.dom!s} -> {self.cod!s}, {list(self.table)})"

    def describe(self) -> dict[str, str]:
        return {self.dom.labels[i]: self.cod.labels[v] for i, v in enumerate(self.table)}

    def to_json(self) -> dict:
        return {"dom": self.dom.to_json(), "cod": self.cod.to_json(), "table": list(self.table)}

    @classmethod
    def from_json(cls, data: dict) -> "FinFun":
        return cls(FinSet(data["dom"]), FinSet(data["cod"]), data["table"])


def identity(A: FinSet) -> FinFun:
    return FinFun._raw(A, A, tuple(range(len(A))))


def compose(g: FinFun, f: FinFun) -> FinFun:
    """``g after f``."""
    if f.cod != g.dom:
        raise DomainMismatch("compose", f.cod, g.dom)
    return FinFun._raw(f.dom, g.cod, tuple(map(g.table.__getitem__, f.table)))


def compose_all(*fs: FinFun) -> FinFun:
    """Right-to-left composite ``fs[0] after fs[1] after ...``."""
    out = fs[-1]
    for g in reversed(fs[:-1]):
        out = compose(g, out)
    return out


def from_mapping(dom: FinSet, cod: FinSet, fn) -> FinFun:
    return FinFun._raw(dom, cod, tuple(fn(i) for i in range(len(dom))))


def constant(dom: FinSet, cod: FinSet, value: int) -> FinFun:
    return FinFun(dom, cod, [value] * len(dom))


def is_bijection(f: FinFun) -> bool:
    return len(f.dom) == len(f.cod) and len(set(f.table)) == len(f.table)


def inverse(f: FinFun) -> FinFun:
    if not is_bijection(f):
        raise ValueError(f"{f!r} is not invertible")
    inv = [0] * len(f.table)
    for i, v in enumerate(f.table):
        inv[v] = i
    return FinFun._raw(f.cod, f.dom, tuple(inv))


def mutate(f: FinFun, index: int, value: int | None = None) -> FinFun:
    """Change one table entry (to the next codomain element by default)."""
    if len(f.cod) < 2:
        raise ValueError("cannot mutate a function into a set with fewer than 2 elements")
    table = list(f.table)
    table[index] = (table[index] + 1) % len(f.cod) if value is None else value
    return FinFun(f.dom, f.cod, table)


def swap_entries(f: FinFun, i: int, j: int) -> FinFun:
    table = list(f.table)
    table[i], table[j] = table[j], table[i]
    return FinFun(f.dom, f.cod, table)


# -- products -------------------------------------------------------------


def product(A: FinSet, B: FinSet) -> FinSet:
    check_size(len(A) * len(B), "product")
    return _product(A, B)


@lru_cache(maxsize=4096)
def _product(A: FinSet, B: FinSet) -> FinSet:
    return FinSet(f"({a},{b})" for a in A.labels for b in B.labels)


def pi1(A: FinSet, B: FinSet) -> FinFun:
    nb = len(B)
    return FinFun._raw(product(A, B), A, tuple(i for i in range(len(A)) for _ in range(nb)))


def pi2(A: FinSet, B: FinSet) -> FinFun:
    return FinFun._raw(product(A, B), B, tuple(j for _ in range(len(A)) for j in range(len(B))))


def pair(f: FinFun, g: FinFun) -> FinFun:
    if f.dom != g.dom:
        raise DomainMismatch("pair", f.dom, g.dom)
    nb = len(g.cod)
    return FinFun._raw(f.dom, product(f.cod, g.cod), tuple(a * nb + b for a, b in zip(f.table, g.table)))


def product_map(f: FinFun, g: FinFun) -> FinFun:
    """``f x g : A x B -> A' x B'``."""
    nb = len(g.cod)
    gt = g.table
    table = tuple(a * nb + b for a in f.table for b in gt)
    return FinFun._raw(product(f.dom, g.dom), product(f.cod, g.cod), table)


def pair_index(B: FinSet, a: int, b: int) -> int:
    return a * len(B) + b


def unpair(B: FinSet, i: int) -> tuple[int, int]:
    return divmod(i, len(B))


def assoc_right(A: FinSet, B: FinSet, C: FinSet) -> FinFun:
    """``(A x B) x C -> A x (B x C)``."""
    nb, nc = len(B), len(C)
    table = tuple((i // nb) * nb * nc + (i % nb) * nc + k for i in range(len(A) * nb) for k in range(nc))
    return FinFun._raw(product(product(A, B), C), product(A, product(B, C)), table)


def swap(A: FinSet, B: FinSet) -> FinFun:
    """``A x B -> B x A``."""
    na = len(A)
    table = tuple(b * na + a for a in range(na) for b in range(len(B)))
    return FinFun._raw(product(A, B), product(B, A), table)


def bang(A: FinSet) -> FinFun:
    return FinFun._raw(A, ONE, (0,) * len(A))


def point(X: FinSet, x: int) -> FinFun:
    """The map ``1 -> X`` picking ``x``."""
    return FinFun(ONE, X, (x,))


# -- coproducts -----------------------------------------------------------


def coproduct(A: FinSet, B: FinSet) -> FinSet:
    check_size(len(A) + len(B), "coproduct")
    return _coproduct(A, B)


@lru_cache(maxsize=4096)
def _coproduct(A: FinSet, B: FinSet) -> FinSet:
    return FinSet([f"inl {a}" for a in A.labels] + [f"inr {b}" for b in B.labels])


def inl(A: FinSet, B: FinSet) -> FinFun:
    return FinFun._raw(A, coproduct(A, B), tuple(range(len(A))))


def inr(A: FinSet, B: FinSet) -> FinFun:
    na = len(A)
    return FinFun._raw(B, coproduct(A, B), tuple(na + j for j in range(len(B))))


def copair(f: FinFun, g: FinFun) -> FinFun:
    if f.cod != g.cod:
        raise DomainMismatch("copair", f.cod, g.cod)
    return FinFun._raw(coproduct(f.dom, g.dom), f.cod, f.table + g.table)


def coproduct_map(f: FinFun, g: FinFun) -> FinFun:
    """``f + g : A + B -> A' + B'``."""
    na = len(f.cod)
    return FinFun._raw(coproduct(f.dom, g.dom), coproduct(f.cod, g.cod), f.table + tuple(na + v for v in g.table))


def coassoc_right(A: FinSet, B: FinSet, C: FinSet) -> FinFun:
    """``(A + B) + C -> A + (B + C)``; positions are already aligned."""
    n = len(A) + len(B) + len(C)
    return FinFun._raw(coproduct(coproduct(A, B), C), coproduct(A, coproduct(B, C)), tuple(range(n)))


def initial_arrow(A: FinSet) -> FinFun:
    return FinFun._raw(ZERO, A, ())


# -- exponentials ---------------------------------------------------------


def exponential(A: FinSet, B: FinSet) -> FinSet:
    """``[A, B]``, the set of all functions ``A -> B``."""
    check_size(len(B) ** len(A), "exponential")
    return _exponential(A, B)


@lru_cache(maxsize=4096)
def _exponential(A: FinSet, B: FinSet) -> FinSet:
    labs = []
    for vals in _cartesian(range(len(B)), repeat=len(A)):
        labs.append("fun{" + ",".join(f"{A.labels[k]}:{B.labels[v]}" for k, v in enumerate(vals)) + "}")
    return FinSet(labs)


def fun_index(A: FinSet, B: FinSet, values: Sequence[int]) -> int:
    """Position in ``[A, B]`` of the function with the given value table."""
    idx, nb = 0, len(B)
    for v in values:
        idx = idx * nb + v
    return idx


def fun_values(A: FinSet, B: FinSet, idx: int) -> tuple[int, ...]:
    nb, out = len(B), []
    for _ in range(len(A)):
        idx, r = divmod(idx, nb)
        out.append(r)
    return tuple(reversed(out))


def as_element(f: FinFun) -> int:
    """The position of ``f`` inside ``exponential(f.dom, f.cod)``."""
    return fun_index(f.dom, f.cod, f.table)


def element_as_fun(A: FinSet, B: FinSet, idx: int) -> FinFun:
    return FinFun._raw(A, B, fun_values(A, B, idx))


def eval_at(A: FinSet, B: FinSet, m: int) -> FinFun:
    """``ev_m : [A, B] -> B``."""
    n, nb = len(A), len(B)
    weight = nb ** (n - 1 - m)
    table = tuple((i // weight) % nb for i in range(nb**n))
    return FinFun._raw(exponential(A, B), B, table)


def eval_map(A: FinSet, B: FinSet) -> FinFun:
    """``ev : [A, B] x A -> B``."""
    E = exponential(A, B)
    table = tuple(fun_values(A, B, f)[a] for f in range(len(E)) for a in range(len(A)))
    return FinFun._raw(product(E, A), B, table)


def exp_map(S: FinSet, f: FinFun) -> FinFun:
    """Post-composition ``[S, X] -> [S, Y]``."""
    n, base = len(S), len(f.cod)
    ft = f.table
    table = []
    for vals in _cartesian(range(len(f.dom)), repeat=n):
        idx = 0
        for v in vals:
            idx = idx * base + ft[v]
        table.append(idx)
    return FinFun._raw(exponential(S, f.dom), exponential(S, f.cod), tuple(table))


def precompose(g: FinFun, X: FinSet) -> FinFun:
    """For ``g : M' -> M``, the map ``[M, X] -> [M', X]``, ``t -> t . g``."""
    nx = len(X)
    gt = g.table
    table = []
    for vals in _cartesian(range(nx), repeat=len(g.cod)):
        idx = 0
        for k in gt:
            idx = idx * nx + vals[k]
        table.append(idx)
    return FinFun._raw(exponential(g.cod, X), exponential(g.dom, X), tuple(table))


def hom_map(g: FinFun, f: FinFun) -> FinFun:
    """``[g, f] : [M, X] -> [M', Y]`` for ``g : M' -> M`` and ``f : X -> Y``."""
    return compose(exp_map(g.dom, f), precompose(g, f.dom))


def curry(h: FinFun, Z: FinSet, A: FinSet) -> FinFun:
    """Transpose ``h : Z x A -> B`` into ``Z -> [A, B]``."""
    if h.dom != product(Z, A):
        raise DomainMismatch("curry", h.dom, product(Z, A))
    na = len(A)
    B = h.cod
    table = tuple(fun_index(A, B, h.table[z * na:(z + 1) * na]) for z in range(len(Z)))
    return FinFun._raw(Z, exponential(A, B), table)


def uncurry(k: FinFun, A: FinSet, B: FinSet) -> FinFun:
    """Transpose ``k : Z -> [A, B]`` into ``Z x A -> B``."""
    table = tuple(v for z in k.table for v in fun_values(A, B, z))
    return FinFun._raw(product(k.dom, A), B, table)


# -- powersets ------------------------------------------------------------


def powerset(A: FinSet) -> FinSet:
    check_size(2 ** len(A), "powerset")
    return _powerset(A)


@lru_cache(maxsize=1024)
def _powerset(A: FinSet) -> FinSet:
    n = len(A)
    return FinSet("{" + ",".join(A.labels[i] for i in range(n) if mask >> i & 1) + "}" for mask in range(2**n))


def member(U: int, i: int) -> bool:
    """Is element ``i`` in the subset with bitmask position ``U``?"""
    return bool(U >> i & 1)


def subset_index(elements: Iterable[int]) -> int:
    mask = 0
    for i in elements:
        mask |= 1 << i
    return mask


def pow_map(f: FinFun) -> FinFun:
    """Direct image ``P(X) -> P(Y)``."""
    n = len(f.dom)
    img = [0] * (2**n)
    ft = f.table
    for mask in range(1, 2**n):
        low = (mask & -mask).bit_length() - 1
        img[mask] = img[mask & (mask - 1)] | (1 << ft[low])
    return FinFun._raw(powerset(f.dom), powerset(f.cod), tuple(img))


# -- enumeration ----------------------------------------------------------


def all_functions(A: FinSet, B: FinSet) -> Iterator[FinFun]:
    """Every function ``A -> B`` once, in the canonical exponential order."""
    for vals in _cartesian(range(len(B)), repeat=len(A)):
        yield FinFun._raw(A, B, vals)


def count_functions(A: FinSet, B: FinSet) -> int:
    return len(B) ** len(A)
