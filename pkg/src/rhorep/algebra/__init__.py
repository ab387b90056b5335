"""Exact coefficient rings and dense linear algebra over them."""

from .cyclo import CycField, CycNum, cyclotomic, make_field
from .laurent import LAURENT, LAURENT_FRACTIONS, LPoly3, LRat
from .linalg import RepMatrix, complete_basis, coordinates, row_reduce, span_contains

__all__ = [
    "CycField",
    "CycNum",
    "cyclotomic",
    "make_field",
    "LAURENT",
    "LAURENT_FRACTIONS",
    "LPoly3",
    "LRat",
    "RepMatrix",
    "complete_basis",
    "coordinates",
    "row_reduce",
    "span_contains",
]
