"""Generalized golden means: exact dyadic series with a certified root oracle.

The heavy lifting lives in the C++ extension ``goldenmean._core``; this
package re-exports its public surface.
"""

from goldenmean._core import (
    AccuracyRow,
    DomainError,
    Dyadic,
    InexactDivision,
    OraclePrecisionInsufficient,
    PrecisionExhausted,
    RatioNotContracting,
    ReferenceValue,
    accuracy_table,
    alpha_ref,
    derived_ref,
    digits_of_accuracy,
    evaluate,
    kbonacci_ratio,
    oracle_digits,
    predicted_accuracy,
    series_digits,
    tail_bound,
    term_bits,
    verify,
)

__all__ = [
    "AccuracyRow",
    "DomainError",
    "Dyadic",
    "InexactDivision",
    "OraclePrecisionInsufficient",
    "PrecisionExhausted",
    "RatioNotContracting",
    "ReferenceValue",
    "accuracy_table",
    "alpha_ref",
    "derived_ref",
    "digits_of_accuracy",
    "evaluate",
    "kbonacci_ratio",
    "oracle_digits",
    "predicted_accuracy",
    "series_digits",
    "tail_bound",
    "term_bits",
    "verify",
]

__version__ = "1.0.0"
