"""Exception hierarchy shared by geometry/, colorings/, eval/ and cli.py.

Input problems subclass ValueError, internal failures subclass RuntimeError,
and everything derives from ColoringError so the CLI can catch one type.
"""
from __future__ import annotations


class ColoringError(Exception):
    """Root of every error raised by this project."""


# --- galois_field ---

class NotAPrimePower(ColoringError, ValueError):
    pass


class UnsupportedOrder(ColoringError, ValueError):
    pass


class ZeroInverse(ColoringError, ZeroDivisionError):
    pass


class FieldMismatch(ColoringError, ValueError):
    """Operands belong to different FieldContexts."""


# --- representation ---

class SameVertex(ColoringError, ValueError):
    pass


class VertexOutOfRange(ColoringError, ValueError):
    pass


# --- factorizations ---

class OddOrder(ColoringError, ValueError):
    pass


class EvenOrder(ColoringError, ValueError):
    pass


class NotPerfectMatching(ColoringError, ValueError):
    pass


# --- line colorings ---

class ParityMismatch(ColoringError, ValueError):
    pass


class PaletteSizeMismatch(ColoringError, ValueError):
    pass


class SpecialEdgeOutsideHost(ColoringError, ValueError):
    pass


class NotMaximumMatching(ColoringError, ValueError):
    pass


class SpecialVertexInsideHost(ColoringError, ValueError):
    pass


# --- constructions / verifier / search ---

class InternalConstructionFailure(ColoringError, RuntimeError):
    pass


class PartialColoringError(ColoringError, ValueError):
    pass


class TooSmall(ColoringError, ValueError):
    pass


class BudgetExceeded(ColoringError, RuntimeError):
    pass


# --- certificates ---

class CertificateParseError(ColoringError, ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SearchTooLarge(ColoringError, ValueError):
    pass
