"""Exact q-series toolkit for vertex-algebra characters, MLDEs and Appell-Lerch sums."""

from .qseries import (
    EXACT,
    Equal,
    FirstMismatch,
    InsufficientAccuracy,
    NonInvertibleLeadingCoefficient,
    NonpositiveExponentStep,
    QSeries,
    ZeroLeadingTerm,
    compare,
    product_expand,
)

__version__ = "0.1.0"

__all__ = [
    "EXACT",
    "Equal",
    "FirstMismatch",
    "InsufficientAccuracy",
    "NonInvertibleLeadingCoefficient",
    "NonpositiveExponentStep",
    "QSeries",
    "ZeroLeadingTerm",
    "compare",
    "product_expand",
]
