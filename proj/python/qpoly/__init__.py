"""Lattice (quasi-)polynomial functions over finite bounded chains.

Functions are n-ary tables over the chain {0, ..., m-1}, indexed with the
last coordinate varying fastest. All operations take plain (m, n, table)
triples and return plain Python values.
"""

from ._qpoly import (
    __version__,
    axiom_holds,
    axioms,
    canonical_factorization,
    classify,
    count_classes,
    eval_at,
    from_qpf,
    is_polynomial,
    is_quasi_polynomial,
    random_function,
    to_qpf,
    verify,
)

__all__ = [
    "__version__",
    "axiom_holds",
    "axioms",
    "canonical_factorization",
    "classify",
    "count_classes",
    "eval_at",
    "from_qpf",
    "is_polynomial",
    "is_quasi_polynomial",
    "random_function",
    "to_qpf",
    "verify",
]
