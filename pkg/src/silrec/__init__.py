"""silrec: exact reconstruction of surfaces in P^3 from silhouette curves."""

from .mpoly import (
    GREVLEX,
    LEX,
    ContextMismatch,
    MonomialOrder,
    MPoly,
    ParseError,
    PolyError,
    divrem_single,
    format_poly,
    parse_poly,
)

__all__ = [
    "GREVLEX",
    "LEX",
    "ContextMismatch",
    "MonomialOrder",
    "MPoly",
    "ParseError",
    "PolyError",
    "divrem_single",
    "format_poly",
    "parse_poly",
]

__version__ = "0.1.0"
