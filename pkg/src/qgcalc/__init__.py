"""qgcalc: normal ordering and identity verification for the q-deformed
differential calculus on GL_q(2), its subgroups, and the sigma-models
built on those quantum group manifolds."""

from .algebra import (
    AlgebraError,
    NCPoly,
    NonTerminationError,
    Preset,
    RuleGapError,
    commutator,
    confluence_probe,
    grade_split,
    nc_mul,
    normal_order,
    substitute,
)
from .expr_io import ParseError, format_poly, parse
from .presets import preset, preset_names
from .scalars import LAMBDA, ONE, Q, QINV, ZERO, QScalar, qnum, qpow

__all__ = [
    "AlgebraError",
    "NCPoly",
    "NonTerminationError",
    "ParseError",
    "Preset",
    "QScalar",
    "RuleGapError",
    "LAMBDA",
    "ONE",
    "Q",
    "QINV",
    "ZERO",
    "commutator",
    "confluence_probe",
    "format_poly",
    "grade_split",
    "nc_mul",
    "normal_order",
    "parse",
    "preset",
    "preset_names",
    "qnum",
    "qpow",
    "substitute",
]

__version__ = "0.1.0"
