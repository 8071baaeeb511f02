"""Symmetric elliptic integrals with certified asymptotic enclosures."""

from .errors import ConvergenceError, DomainError, RegimeError, ToleranceError
from .core import (
    MeanStats,
    Scalar,
    Sym3Args,
    Sym4Args,
    agm,
    legendre_e,
    legendre_k,
    r_minus1,
    rc,
    rc_pv,
    rd,
    rf,
    rg,
    rj,
    rj_pv,
)
from .quadrature import oracle, oracle_rj_pv, oracle_with_error
from .asym import (
    CASE_TAGS,
    Enclosure,
    Regime,
    approx_e,
    approx_k,
    approx_rc,
    approx_rd,
    approx_rf,
    approx_rg,
    approx_rj,
    case_ratio,
    enclose,
    theta_recover,
)
from .bounds import INEQ_TAGS, Bracket, bracket, theta_of
from .dispatch import EvalReport, EvalRequest, evaluate, plan

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "RegimeError",
    "ToleranceError",
    "MeanStats",
    "Scalar",
    "Sym3Args",
    "Sym4Args",
    "agm",
    "legendre_e",
    "legendre_k",
    "r_minus1",
    "rc",
    "rc_pv",
    "rd",
    "rf",
    "rg",
    "rj",
    "rj_pv",
    "oracle",
    "oracle_rj_pv",
    "oracle_with_error",
    "CASE_TAGS",
    "Enclosure",
    "Regime",
    "approx_e",
    "approx_k",
    "approx_rc",
    "approx_rd",
    "approx_rf",
    "approx_rg",
    "approx_rj",
    "case_ratio",
    "enclose",
    "theta_recover",
    "INEQ_TAGS",
    "Bracket",
    "bracket",
    "theta_of",
    "EvalReport",
    "EvalRequest",
    "evaluate",
    "plan",
    "__version__",
]
