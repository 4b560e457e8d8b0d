"""Goppa-code asymmetric quantum codes: constructions and distance certificates."""

from ._core import (
    BudgetError,
    DomainError,
    Field,
    InternalError,
    LinearCode,
    SearchFailure,
    UsageError,
    bezzateev_aqc,
    binary_entropy,
    css,
    expanded_grs_aqc,
    goppa_code,
    gv_curves,
    inverse_entropy,
    min_distance,
    primitive_moduli,
    reproduce,
    weight_distribution,
)

__all__ = [
    "BudgetError",
    "DomainError",
    "Field",
    "InternalError",
    "LinearCode",
    "SearchFailure",
    "UsageError",
    "bezzateev_aqc",
    "binary_entropy",
    "css",
    "expanded_grs_aqc",
    "goppa_code",
    "gv_curves",
    "inverse_entropy",
    "min_distance",
    "primitive_moduli",
    "reproduce",
    "weight_distribution",
]
