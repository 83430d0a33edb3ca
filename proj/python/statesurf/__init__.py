"""State surfaces of link diagrams: adequacy, homogeneity and surface invariants."""

from ._core import (
    Diagram,
    ParseError,
    SearchLimitError,
    certify,
    classify,
    decide_split,
    decide_trivial,
    invariants,
    remark_check,
    search,
    surface,
)

__all__ = [
    "Diagram",
    "ParseError",
    "SearchLimitError",
    "certify",
    "classify",
    "decide_split",
    "decide_trivial",
    "invariants",
    "remark_check",
    "search",
    "surface",
]
