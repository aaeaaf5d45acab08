"""Exact symbolic toolkit for the S3-symmetric q-Onsager algebra."""

from ._qonsager import (
    Error,
    Example,
    Matrix,
    ParameterError,
    ParseError,
    PipelineError,
    RationalFunction,
    SingularMatrixError,
    UsageError,
    build_example,
    closure_dimension,
    injera_check,
    kronecker,
    rank_of_span,
    reduced_words,
    relation_names,
    run_suite,
    seeded_params,
)

__all__ = [
    "Error",
    "Example",
    "Matrix",
    "ParameterError",
    "ParseError",
    "PipelineError",
    "RationalFunction",
    "SingularMatrixError",
    "UsageError",
    "build_example",
    "closure_dimension",
    "injera_check",
    "kronecker",
    "rank_of_span",
    "reduced_words",
    "relation_names",
    "run_suite",
    "seeded_params",
]
