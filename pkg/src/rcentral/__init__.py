"""Exact r-central factorial numbers with even indices, their identities and distribution."""

from .algebra import PolyR, R, binomial, poly_format, poly_parse
from .triangles import Kind, Triangle, build_triangle, entry

__version__ = "0.1.0"

__all__ = [
    "Kind",
    "PolyR",
    "R",
    "Triangle",
    "binomial",
    "build_triangle",
    "entry",
    "poly_format",
    "poly_parse",
]
