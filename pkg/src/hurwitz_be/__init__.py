"""Hurwitz zeta monotonicity, polygamma chains and the beta-exponential law."""

from .beta_exponential import BEParams, cumulant, f_be
from .special_functions import (
    ConvergenceError,
    DomainError,
    EvalConfig,
    SeriesValue,
    digamma,
    euler_gamma,
    hurwitz_zeta,
    hurwitz_zeta_diff,
    log_gamma,
    polygamma,
)
from .zeta_monotonicity import Direction, classify_direction, f, polygamma_chain

__version__ = "0.1.0"

__all__ = [
    "BEParams",
    "ConvergenceError",
    "Direction",
    "DomainError",
    "EvalConfig",
    "SeriesValue",
    "classify_direction",
    "cumulant",
    "digamma",
    "euler_gamma",
    "f",
    "f_be",
    "hurwitz_zeta",
    "hurwitz_zeta_diff",
    "log_gamma",
    "polygamma",
    "polygamma_chain",
]
