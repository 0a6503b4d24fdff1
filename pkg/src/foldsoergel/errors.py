"""errors.py - exception types shared across foldsoergel

Everything a caller can trigger with bad input is a ValueError subclass, so
`except ValueError` keeps working for code that does not care which one.
"""

from __future__ import annotations


class ParseError(ValueError):
    """Syntax error in polynomial, diagram, object or ring text.

    `offset` is a character index into `text`; the stored offset is in UTF-8 bytes.
    """

    def __init__(self, message: str, offset: int, text: str = ""):
        if text:
            offset = len(text[:offset].encode("utf-8"))
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset
        self.text = text


class ShapeError(ValueError):
    """Boundary mismatch in a composite (composition, sum, block matrix)."""


class InhomogeneousError(ValueError):
    """A matrix has no single degree."""


class NotInvariantError(ValueError):
    """A polynomial that must be tau-invariant is not."""


class UnknownNameError(ValueError):
    """Unknown generator, indecomposable or command name."""


class NoFitError(ValueError):
    """No numerator with nonnegative coefficients fits a graded dimension."""


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder (internal bug)."""
