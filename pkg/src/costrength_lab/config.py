"""Resource limits shared by every construction and enumeration.

Limits live in a context variable so that callers (tests, the CLI, worker
processes) can scope them::

    with limits(max_size=4096):
        ...
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace

DEFAULT_MAX_SIZE = 4096
DEFAULT_BUDGET = 10**7


class ResourceError(RuntimeError):
    """A size cap or enumeration budget was hit. Never a law failure."""


class SizeLimitExceeded(ResourceError):
    pass


class BudgetExceeded(ResourceError):
    pass


@dataclass(frozen=True)
class Limits:
    max_size: int = DEFAULT_MAX_SIZE
    budget: int = DEFAULT_BUDGET


def _from_env() -> Limits:
    budget = os.environ.get("COSTRENGTH_BUDGET")
    return Limits(budget=int(budget)) if budget else Limits()


_current: ContextVar[Limits | None] = ContextVar("costrength_limits", default=None)


def current() -> Limits:
    lim = _current.get()
    if lim is None:
        lim = _from_env()
        _current.set(lim)
    return lim


@contextmanager
def limits(max_size: int | None = None, budget: int | None = None):
    base = current()
    new = replace(
        base,
        max_size=base.max_size if max_size is None else max_size,
        budget=base.budget if budget is None else budget,
    )
    token = _current.set(new)
    try:
        yield new
    finally:
        _current.reset(token)


def set_limits(max_size: int | None = None, budget: int | None = None) -> Limits:
    """Non-scoped variant, used by the CLI and worker initializers."""
    base = current()
    new = replace(
        base,
        max_size=base.max_size if max_size is None else max_size,
        budget=base.budget if budget is None else budget,
    )
    _current.set(new)
    return new


def check_size(n: int, what: str = "set") -> None:
    cap = current().max_size
    if n > cap:
        raise SizeLimitExceeded(f"{what} would have {n} elements (max_size={cap})")
