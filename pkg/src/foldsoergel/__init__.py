"""foldsoergel package initializer

Exact matrix model of the Z/2-equivariantized A1xA1 Hecke category.
"""

from .equiv import EqMor, EqObj, indecomposable, parse_object
from .grring import RingElem, decompose_word, parse_ring

__all__ = [
    "EqMor",
    "EqObj",
    "RingElem",
    "decompose_word",
    "indecomposable",
    "parse_object",
    "parse_ring",
]
