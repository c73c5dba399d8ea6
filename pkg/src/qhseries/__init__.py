"""Exact Hilbert series of preprojective and quiver Heisenberg algebras.

Closed forms for the path algebra, the (derived) preprojective algebra
and the (derived) quiver Heisenberg algebra of a connected finite acyclic
quiver, together with a brute-force graded-quotient oracle over Q or F_p
that verifies them from the defining relations.
"""

from .classify import (
    NakayamaData,
    QuiverClass,
    RootData,
    classify,
    is_regular,
    nakayama_matrix,
    root_data,
    tits_form,
)
from .errors import (
    AdamsDegreeNotPositive,
    CycleError,
    DegreeOverflow,
    DisconnectedError,
    DuplicateArrowName,
    InhomogeneousRelation,
    MissingWeight,
    NonInvertibleConstantTerm,
    NonzeroConstantTerm,
    NotAPermutationResidue,
    NotDynkin,
    NotRegular,
    NotSincere,
    ParseError,
    QHSeriesError,
    SizeMismatch,
)
from .fields import QQ, PrimeField, RationalField, WeightVector, is_sincere, parse_field
from .formulas import (
    default_truncation,
    derived_preprojective_series,
    derived_qha_series,
    exact_sequence_residual,
    path_algebra_series,
    preprojective_series,
    qha_series,
)
from .oracle import graded_quotient_dims, infer_nakayama, oracle_series
from .presentation import GradedPresentation, NcElement, PresentationKind, build_presentation
from .quiver import Arrow, Quiver, arrow_matrix, double_and_adjacency, dynkin_quiver, parse_quiver
from .rank import available_backends, default_backend, sparse_rank
from .series import GeneratorSummand, MatrixPowerSeries, generator_series, tensor_algebra_series

__version__ = "0.1.0"

__all__ = [
    "AdamsDegreeNotPositive", "Arrow", "CycleError", "DegreeOverflow",
    "DisconnectedError", "DuplicateArrowName", "GeneratorSummand",
    "GradedPresentation", "InhomogeneousRelation", "MatrixPowerSeries",
    "MissingWeight", "NakayamaData", "NcElement", "NonInvertibleConstantTerm",
    "NonzeroConstantTerm", "NotAPermutationResidue", "NotDynkin", "NotRegular",
    "NotSincere", "ParseError", "PresentationKind", "PrimeField", "QHSeriesError",
    "QQ", "Quiver", "QuiverClass", "RationalField", "RootData", "SizeMismatch",
    "WeightVector", "arrow_matrix", "available_backends", "build_presentation",
    "classify", "default_backend", "default_truncation",
    "derived_preprojective_series", "derived_qha_series", "double_and_adjacency",
    "dynkin_quiver", "exact_sequence_residual", "generator_series",
    "graded_quotient_dims", "infer_nakayama", "is_regular", "is_sincere",
    "nakayama_matrix", "oracle_series", "parse_field", "parse_quiver",
    "path_algebra_series", "preprojective_series", "qha_series", "root_data",
    "sparse_rank", "tensor_algebra_series", "tits_form",
]
