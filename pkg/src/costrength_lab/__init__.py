"""Strong and costrong functors on finite sets, checked exhaustively."""

from .actions import ACTIONS, CART, COCART, OP_EXP, ActionModel, check_action_coherence, maybe_graded_monad
from .config import BudgetExceeded, ResourceError, SizeLimitExceeded, limits
from .costrength import (
    Copoint,
    Costrength,
    Strength,
    canonical_strength,
    check_costrength,
    check_projection_law,
    check_strength,
    enumerate_copoints,
    enumerate_costrengths,
    enumerate_strengths,
    phi,
    psi,
    roundtrip_report,
    writer_costrength,
)
from .finset import ONE, ZERO, FinFun, FinSet
from .functors import (
    ID,
    MAYBE,
    POW,
    CompF,
    ConstF,
    CoprodF,
    Costate,
    ExpF,
    FunctorExpr,
    NatFamily,
    PowF,
    ProdF,
    Reader,
    Universe,
    Writer,
    apply_mor,
    apply_obj,
    canonical,
    default_universe,
)
from .report import LawReport, LawViolation
from .syntax import ParseError, parse_functor, parse_set, parse_universe

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
